"""Vectorized numpy kernels (fallback backend).

Layout conventions shared with the numba kernels:

* a square matrix of size m <= 32 is a length-m uint64 array, row i holding
  bit j = entry (i, j);
* a flattened matrix is a packed vector of m*m bits, bit i*m + j = entry (i, j);
* packed vectors are little-endian uint64 words, bit b lives in word b // 64.
"""

import numpy as np

from ._bits import identity_combos, n_words, pack, unpack

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


def matmul_batch(a, b):
    """Row-wise product a[k] @ b[k] for stacks of matrices."""
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    k, m = a.shape
    out = np.zeros((k, m), dtype=np.uint64)
    for j in range(m):
        sel = ((a >> np.uint64(j)) & _ONE).astype(bool)
        out ^= np.where(sel, b[:, j : j + 1], _ZERO)
    return out


def flatten(mats, m):
    mats = np.asarray(mats, dtype=np.uint64)
    shifts = np.arange(m, dtype=np.uint64)
    bits = ((mats[:, :, None] >> shifts) & _ONE).astype(np.uint8)
    return pack(bits.reshape(mats.shape[0], m * m), m * m)


def unflatten(flat, m):
    flat = np.asarray(flat, dtype=np.uint64)
    bits = unpack(flat, m * m).astype(np.uint64).reshape(flat.shape[0], m, m)
    weights = np.left_shift(_ONE, np.arange(m, dtype=np.uint64))
    return (bits * weights).sum(axis=2, dtype=np.uint64)


def _bit_mask(col_words, p):
    return ((col_words >> np.uint64(p & 63)) & _ONE).astype(bool)


def _lowest_bit(v):
    nz = np.flatnonzero(v)
    w = int(nz[0])
    x = int(v[w])
    return w * 64 + ((x & -x).bit_length() - 1)


def insert_batch(basis, pivots, rank, cands):
    """Insert candidates one by one into a reduced echelon basis (in place).

    Returns the new rank and the indices of candidates that raised it.
    """
    cap = basis.shape[0]
    c = np.array(cands, dtype=np.uint64, copy=True)
    if c.shape[0] == 0 or rank >= cap:
        return rank, np.empty(0, dtype=np.int64)
    for r in range(rank):
        p = int(pivots[r])
        hit = _bit_mask(c[:, p >> 6], p)
        if hit.any():
            c[hit] ^= basis[r]
    inserted = []
    live = c.any(axis=1)
    while rank < cap:
        nz = np.flatnonzero(live)
        if nz.size == 0:
            break
        i = int(nz[0])
        v = c[i].copy()
        p = _lowest_bit(v)
        if rank:
            hit = np.flatnonzero(_bit_mask(basis[:rank, p >> 6], p))
            basis[hit] ^= v
        basis[rank] = v
        pivots[rank] = p
        rank += 1
        inserted.append(i)
        hit = _bit_mask(c[:, p >> 6], p)
        c[hit] ^= v
        live[hit] = c[hit].any(axis=1)
    return rank, np.asarray(inserted, dtype=np.int64)


def nullspace(y):
    """Packed basis of {c : sum_i c_i y_i = 0} for the rows y_i of ``y``."""
    y = np.array(y, dtype=np.uint64, copy=True)
    k = y.shape[0]
    t = identity_combos(k)
    out = []
    for i in range(k):
        row = y[i]
        if not row.any():
            out.append(t[i].copy())
            continue
        p = _lowest_bit(row)
        below = i + 1 + np.flatnonzero(_bit_mask(y[i + 1 :, p >> 6], p))
        if below.size:
            y[below] ^= row
            t[below] ^= t[i]
    if not out:
        return np.zeros((0, n_words(k)), dtype=np.uint64)
    return np.stack(out)


def _apply(cols, x, d):
    y = np.zeros_like(x)
    for j in range(d):
        y ^= np.where(((x >> np.uint64(j)) & _ONE).astype(bool), cols[j], _ZERO)
    return y


def _xor_insert(slots, y, d):
    changed = False
    for bit in range(d - 1, -1, -1):
        has = ((y >> np.uint64(bit)) & _ONE).astype(bool)
        if not has.any():
            continue
        empty = slots[:, bit] == 0
        place = has & empty
        if place.any():
            slots[place, bit] = y[place]
            y[place] = 0
            changed = True
        red = has & ~empty
        y[red] ^= slots[red, bit]
    return changed


def first_reducible_vector(cols, d, chunk=1 << 15):
    """Smallest nonzero v whose spin under the matrices is a proper subspace, else 0.

    ``cols`` has shape (g, d): cols[k, j] is column j of generator k.
    """
    cols = np.asarray(cols, dtype=np.uint64)
    total = (1 << d) - 1
    for start in range(1, total + 1, chunk):
        v = np.arange(start, min(start + chunk, total + 1), dtype=np.uint64)
        slots = np.zeros((v.size, d), dtype=np.uint64)
        _xor_insert(slots, v.copy(), d)
        changed = True
        while changed:
            changed = False
            for s in range(d):
                src = slots[:, s]
                if not src.any():
                    continue
                for g in range(cols.shape[0]):
                    if _xor_insert(slots, _apply(cols[g], src.copy(), d), d):
                        changed = True
        bad = np.flatnonzero(~(slots != 0).all(axis=1))
        if bad.size:
            return int(v[bad[0]])
    return 0
