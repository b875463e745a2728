"""numba-compiled kernels; same contracts as ``_kernels_numpy``."""

import numpy as np
from numba import njit

from ._bits import n_words

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


@njit(cache=True)
def _matmul_into(a, b, out):
    m = a.shape[0]
    for i in range(m):
        acc = _ZERO
        row = a[i]
        for j in range(m):
            # all-ones mask when bit j of row is set
            acc ^= b[j] & (_ZERO - ((row >> np.uint64(j)) & _ONE))
        out[i] = acc


@njit(cache=True)
def _matmul_batch(a, b):
    k, m = a.shape
    out = np.zeros((k, m), dtype=np.uint64)
    for t in range(k):
        _matmul_into(a[t], b[t], out[t])
    return out


@njit(cache=True)
def _flatten(mats, m, w):
    k = mats.shape[0]
    out = np.zeros((k, w), dtype=np.uint64)
    for t in range(k):
        for i in range(m):
            # an m-bit row (m <= 32) straddles at most two words
            off = i * m
            s = off & 63
            row = mats[t, i]
            out[t, off >> 6] |= row << np.uint64(s)
            if s + m > 64:
                out[t, (off >> 6) + 1] |= row >> np.uint64(64 - s)
    return out


def _c(x):
    # one compiled specialization: C-contiguous, writeable uint64
    return np.require(x, dtype=np.uint64, requirements=["C", "W"])


def matmul_batch(a, b):
    return _matmul_batch(_c(a), _c(b))


def flatten(mats, m):
    return _flatten(_c(mats), m, n_words(m * m))


def unflatten(flat, m):
    return _unflatten(_c(flat), m)


@njit(cache=True)
def _unflatten(flat, m):
    k = flat.shape[0]
    out = np.zeros((k, m), dtype=np.uint64)
    mask = (_ONE << np.uint64(m)) - _ONE
    for t in range(k):
        for i in range(m):
            off = i * m
            s = off & 63
            acc = flat[t, off >> 6] >> np.uint64(s)
            if s + m > 64:
                acc |= flat[t, (off >> 6) + 1] << np.uint64(64 - s)
            out[t, i] = acc & mask
    return out


@njit(cache=True)
def _lowest_bit(v):
    for w in range(v.shape[0]):
        x = v[w]
        if x != _ZERO:
            b = 0
            while (x & _ONE) == _ZERO:
                x >>= _ONE
                b += 1
            return w * 64 + b
    return -1


@njit(cache=True)
def _has_bit(v, p):
    return (v[p >> 6] >> np.uint64(p & 63)) & _ONE


@njit(cache=True)
def _insert_batch(basis, pivots, rank, cands):
    k, w = cands.shape
    cap = basis.shape[0]
    inserted = np.empty(k, dtype=np.int64)
    ni = 0
    v = np.empty(w, dtype=np.uint64)
    for i in range(k):
        if rank >= cap:
            break
        for q in range(w):
            v[q] = cands[i, q]
        for r in range(rank):
            if _has_bit(v, pivots[r]):
                for q in range(w):
                    v[q] ^= basis[r, q]
        p = _lowest_bit(v)
        if p < 0:
            continue
        for r in range(rank):
            if _has_bit(basis[r], p):
                for q in range(w):
                    basis[r, q] ^= v[q]
        for q in range(w):
            basis[rank, q] = v[q]
        pivots[rank] = p
        rank += 1
        inserted[ni] = i
        ni += 1
    return rank, inserted[:ni].copy()


def insert_batch(basis, pivots, rank, cands):
    cands = _c(cands)
    if cands.shape[0] == 0:
        return rank, np.empty(0, dtype=np.int64)
    new_rank, ins = _insert_batch(basis, pivots, rank, cands)
    return int(new_rank), ins


@njit(cache=True)
def _nullspace(y, t):
    k = y.shape[0]
    wy = y.shape[1]
    wt = t.shape[1]
    keep = np.zeros(k, dtype=np.bool_)
    for i in range(k):
        p = _lowest_bit(y[i])
        if p < 0:
            keep[i] = True
            continue
        for j in range(i + 1, k):
            if _has_bit(y[j], p):
                for q in range(wy):
                    y[j, q] ^= y[i, q]
                for q in range(wt):
                    t[j, q] ^= t[i, q]
    return t[keep].copy()


def nullspace(y):
    y = np.array(y, dtype=np.uint64, copy=True)
    k = y.shape[0]
    t = np.zeros((k, n_words(k)), dtype=np.uint64)
    for i in range(k):
        t[i, i >> 6] = np.uint64(1) << np.uint64(i & 63)
    if y.shape[1] == 0:
        return t
    return _nullspace(y, t)


@njit(cache=True)
def _apply(cols, x):
    y = _ZERO
    j = 0
    while x != _ZERO:
        if x & _ONE:
            y ^= cols[j]
        x >>= _ONE
        j += 1
    return y


@njit(cache=True)
def _spin_is_full(cols, d, v, slots, stack):
    # slots[b] holds the basis vector whose highest bit is b
    for b in range(d):
        slots[b] = _ZERO
    g = cols.shape[0]
    rank = 0
    top = 0
    stack[top] = v
    top += 1
    # insert v
    x = v
    for b in range(d - 1, -1, -1):
        if (x >> np.uint64(b)) & _ONE:
            if slots[b] == _ZERO:
                slots[b] = x
                rank += 1
                break
            x ^= slots[b]
    while top > 0:
        top -= 1
        src = stack[top]
        for k in range(g):
            x = _apply(cols[k], src)
            for b in range(d - 1, -1, -1):
                if (x >> np.uint64(b)) & _ONE:
                    if slots[b] == _ZERO:
                        slots[b] = x
                        rank += 1
                        stack[top] = x
                        top += 1
                        break
                    x ^= slots[b]
            if rank == d:
                return True
    return rank == d


@njit(cache=True)
def _first_reducible_vector(cols, d):
    slots = np.zeros(d, dtype=np.uint64)
    stack = np.zeros(d + 1, dtype=np.uint64)
    total = (np.uint64(1) << np.uint64(d)) - _ONE
    v = _ONE
    while v <= total:
        if not _spin_is_full(cols, d, v, slots, stack):
            return v
        v += _ONE
    return _ZERO


def first_reducible_vector(cols, d):
    cols = _c(np.asarray(cols, dtype=np.uint64).reshape(-1, d))
    return int(_first_reducible_vector(cols, d))
