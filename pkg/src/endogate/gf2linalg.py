"""Dense linear algebra over GF(2) on packed machine words.

Vectors are packed into uint64 words; square matrices (at most ``MAX_DIM``
rows) keep one word per row, bit j of row i being entry (i, j). Subspaces of
the matrix space use the row-major flattening, so a single echelon engine
serves vectors and matrices alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _bits
from ._backend import kernels
from .config import MAX_DIM


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


class SingularMatrixError(ValueError):
    """A matrix that must be invertible is not."""


class BitVector:
    """A vector in GF(2)^len, packed into uint64 words."""

    __slots__ = ("len", "words")

    def __init__(self, length: int, words=None):
        if length <= 0:
            raise ValueError("vector length must be positive")
        nw = _bits.n_words(length)
        if words is None:
            arr = np.zeros(nw, dtype=np.uint64)
        else:
            arr = np.array(words, dtype=np.uint64).reshape(-1)
            if arr.size != nw:
                raise DimensionError(f"expected {nw} words, got {arr.size}")
            tail = length % 64
            if tail and int(arr[-1]) >> tail:
                raise ValueError("bits set beyond vector length")
        arr.setflags(write=False)
        self.len = length
        self.words = arr

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVector":
        if value < 0 or value >> length:
            raise ValueError(f"value does not fit in {length} bits")
        return cls(length, _bits.int_to_words(value, length))

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        bits = [int(b) & 1 for b in bits]
        return cls(len(bits), _bits.pack(np.array(bits, dtype=np.uint8), len(bits)))

    @classmethod
    def unit(cls, i: int, length: int) -> "BitVector":
        return cls.from_int(1 << i, length)

    def __int__(self) -> int:
        return _bits.words_to_int(self.words)

    def bits(self) -> list[int]:
        return _bits.unpack(self.words, self.len).tolist()

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (int(self.words[i >> 6]) >> (i & 63)) & 1

    def _check(self, other: "BitVector") -> None:
        if not isinstance(other, BitVector):
            raise TypeError("BitVector expected")
        if other.len != self.len:
            raise DimensionError(f"length {self.len} vs {other.len}")

    def __add__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.len, self.words ^ other.words)

    __xor__ = __add__
    __sub__ = __add__

    def weight(self) -> int:
        return int(self).bit_count()

    def is_zero(self) -> bool:
        return not self.words.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and other.len == self.len
            and bool((other.words == self.words).all())
        )

    def __hash__(self) -> int:
        return hash((self.len, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({''.join(map(str, self.bits()))})"


class BitMatrix:
    """Square matrix over GF(2) of size ``dim`` <= MAX_DIM."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows=None):
        if not 0 < dim <= MAX_DIM:
            raise DimensionError(f"matrix dimension must be in 1..{MAX_DIM}, got {dim}")
        if rows is None:
            arr = np.zeros(dim, dtype=np.uint64)
        else:
            arr = np.array(rows, dtype=np.uint64).reshape(-1)
            if arr.size != dim:
                raise DimensionError(f"expected {dim} rows, got {arr.size}")
            if dim < 64 and (arr >> np.uint64(dim)).any():
                raise ValueError("entries beyond column range")
        arr.setflags(write=False)
        self.dim = dim
        self.rows = arr

    @classmethod
    def identity(cls, dim: int) -> "BitMatrix":
        return cls(dim, [1 << i for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "BitMatrix":
        return cls(dim)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        dim = len(entries)
        rows = []
        for row in entries:
            if len(row) != dim:
                raise DimensionError("matrix must be square")
            rows.append(sum((int(b) & 1) << j for j, b in enumerate(row)))
        return cls(dim, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[int], dim: int) -> "BitMatrix":
        """Build from column bitmasks (bit i of column j = entry (i, j))."""
        rows = [0] * dim
        for j, col in enumerate(columns):
            for i in range(dim):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        return cls(dim, rows)

    @classmethod
    def from_flat(cls, vec: BitVector, dim: int) -> "BitMatrix":
        if vec.len != dim * dim:
            raise DimensionError(f"flat vector of length {vec.len} is not {dim}x{dim}")
        return cls(dim, kernels.unflatten(vec.words.reshape(1, -1), dim)[0])

    def to_lists(self) -> list[list[int]]:
        return [[(int(r) >> j) & 1 for j in range(self.dim)] for r in self.rows]

    def columns(self) -> list[int]:
        cols = [0] * self.dim
        for i, r in enumerate(self.rows.tolist()):
            for j in range(self.dim):
                if (r >> j) & 1:
                    cols[j] |= 1 << i
        return cols

    def flatten(self) -> BitVector:
        return BitVector(self.dim * self.dim, kernels.flatten(self.rows.reshape(1, -1), self.dim)[0])

    def _check(self, other: "BitMatrix") -> None:
        if not isinstance(other, BitMatrix):
            raise TypeError("BitMatrix expected")
        if other.dim != self.dim:
            raise DimensionError(f"dimension {self.dim} vs {other.dim}")

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return self.apply(other)
        return mat_mul(self, other)

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        self._check(other)
        return BitMatrix(self.dim, self.rows ^ other.rows)

    __sub__ = __add__

    def apply(self, v: BitVector) -> BitVector:
        if v.len != self.dim:
            raise DimensionError(f"matrix {self.dim} vs vector {v.len}")
        x = int(v)
        out = 0
        for i, r in enumerate(self.rows.tolist()):
            out |= ((r & x).bit_count() & 1) << i
        return BitVector.from_int(out, self.dim)

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.dim, self.columns())

    def inverse(self) -> "BitMatrix":
        m = self.dim
        work = [int(r) | (1 << (m + i)) for i, r in enumerate(self.rows.tolist())]
        for col in range(m):
            piv = next((r for r in range(col, m) if (work[r] >> col) & 1), None)
            if piv is None:
                raise SingularMatrixError("matrix is not invertible over GF(2)")
            work[col], work[piv] = work[piv], work[col]
            for r in range(m):
                if r != col and (work[r] >> col) & 1:
                    work[r] ^= work[col]
        return BitMatrix(m, [w >> m for w in work])

    def is_scalar(self) -> bool:
        return self == BitMatrix.zero(self.dim) or self == BitMatrix.identity(self.dim)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and other.dim == self.dim
            and bool((other.rows == self.rows).all())
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.rows.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join("".join(map(str, row)) for row in self.to_lists())
        return f"BitMatrix[{body}]"


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    a._check(b)
    out = kernels.matmul_batch(a.rows.reshape(1, -1), b.rows.reshape(1, -1))
    return BitMatrix(a.dim, out[0])


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Subspace of GF(2)^ambient_dim held as a reduced row-echelon basis.

    The pivot of a row is its lowest set coordinate; rows are sorted by pivot
    and every pivot column is zero in all other rows, so the basis is a
    canonical form of the subspace.
    """

    ambient_dim: int
    rows: np.ndarray
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    rank = dim

    @property
    def basis(self) -> list[BitVector]:
        return [BitVector(self.ambient_dim, r) for r in self.rows]

    def matrices(self) -> list[BitMatrix]:
        m = _matrix_side(self.ambient_dim)
        if self.dim == 0:
            return []
        return [BitMatrix(m, r) for r in kernels.unflatten(self.rows, m)]

    def contains(self, item) -> bool:
        if isinstance(item, BitMatrix):
            item = item.flatten()
        if item.len != self.ambient_dim:
            raise DimensionError(f"ambient {self.ambient_dim} vs {item.len}")
        v = np.array(item.words, dtype=np.uint64)
        for row, p in zip(self.rows, self.pivots):
            if (int(v[p >> 6]) >> (p & 63)) & 1:
                v ^= row
        return not v.any()

    __contains__ = contains

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and other.ambient_dim == self.ambient_dim
            and other.pivots == self.pivots
            and bool((other.rows == self.rows).all())
        )

    def __repr__(self) -> str:
        return f"SubspaceBasis(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _matrix_side(ambient: int) -> int:
    m = int(round(ambient ** 0.5))
    if m * m != ambient:
        raise DimensionError(f"ambient dimension {ambient} is not a square")
    return m


class _Echelon:
    """Incremental reduced echelon form, used by every subspace computation."""

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.width = _bits.n_words(ambient)
        self.basis = np.zeros((ambient, self.width), dtype=np.uint64)
        self.pivots = np.zeros(ambient, dtype=np.int64)
        self.rank = 0

    @property
    def full(self) -> bool:
        return self.rank == self.ambient

    def add(self, packed: np.ndarray) -> np.ndarray:
        """Insert packed rows in order; return indices of rows that raised the rank."""
        packed = np.asarray(packed, dtype=np.uint64).reshape(-1, self.width)
        self.rank, inserted = kernels.insert_batch(self.basis, self.pivots, self.rank, packed)
        return inserted

    def snapshot(self) -> SubspaceBasis:
        order = np.argsort(self.pivots[: self.rank], kind="stable")
        rows = self.basis[: self.rank][order].copy()
        rows.setflags(write=False)
        return SubspaceBasis(
            self.ambient, rows, tuple(int(p) for p in self.pivots[: self.rank][order])
        )


def echelonize(vectors: Iterable[BitVector], length: int | None = None) -> SubspaceBasis:
    """Reduced row-echelon basis of the span of ``vectors``.

    ``length`` is needed only when ``vectors`` is empty.
    """
    vectors = list(vectors)
    if not vectors:
        if length is None:
            raise ValueError("length required for an empty vector list")
        return _Echelon(length).snapshot()
    n = vectors[0].len
    if length is not None and length != n:
        raise DimensionError(f"length {length} vs vectors of length {n}")
    for v in vectors:
        if v.len != n:
            raise DimensionError("vectors of different lengths")
    ech = _Echelon(n)
    ech.add(np.stack([v.words for v in vectors]))
    return ech.snapshot()


def rank(vectors: Iterable[BitVector], length: int | None = None) -> int:
    return echelonize(vectors, length).dim


def _stack(mats: Sequence[BitMatrix], dim: int) -> np.ndarray:
    for a in mats:
        if a.dim != dim:
            raise DimensionError(f"expected {dim}x{dim}, got {a.dim}x{a.dim}")
    if not mats:
        return np.zeros((0, dim), dtype=np.uint64)
    return np.stack([a.rows for a in mats])


def _resolve_dim(groups: Sequence[Sequence[BitMatrix]], dim: int | None) -> int:
    for mats in groups:
        if mats:
            found = mats[0].dim
            if dim is not None and dim != found:
                raise DimensionError(f"dim={dim} but matrices are {found}x{found}")
            return found
    if dim is None:
        raise ValueError("dim required when no matrices are given")
    return dim


def _commutator_rows(span: np.ndarray, targets: np.ndarray, m: int) -> np.ndarray:
    """Row i = concatenation over targets t of flatten(span_i t + t span_i)."""
    k = span.shape[0]
    parts = []
    for t in targets:
        tt = np.broadcast_to(t, (k, m))
        diff = kernels.matmul_batch(span, tt) ^ kernels.matmul_batch(tt, span)
        parts.append(kernels.flatten(diff, m))
    if not parts:
        return np.zeros((k, 0), dtype=np.uint64)
    return np.concatenate(parts, axis=1)


def _combos_to_matrices(combos: np.ndarray, span: np.ndarray) -> np.ndarray:
    k = span.shape[0]
    bits = _bits.unpack(combos, k).astype(bool)
    out = np.zeros((combos.shape[0], span.shape[1]), dtype=np.uint64)
    for r in range(combos.shape[0]):
        sel = span[bits[r]]
        if sel.shape[0]:
            out[r] = np.bitwise_xor.reduce(sel, axis=0)
    return out


def centralizer_within(
    span: Sequence[BitMatrix], targets: Sequence[BitMatrix], dim: int | None = None
) -> SubspaceBasis:
    """Elements of span(``span``) commuting with every matrix in ``targets``."""
    m = _resolve_dim([span, targets], dim)
    s = _stack(span, m)
    t = _stack(targets, m)
    ech = _Echelon(m * m)
    if s.shape[0]:
        combos = kernels.nullspace(_commutator_rows(s, t, m))
        if combos.shape[0]:
            ech.add(kernels.flatten(_combos_to_matrices(combos, s), m))
    return ech.snapshot()


def commutant(generators: Sequence[BitMatrix], dim: int | None = None) -> SubspaceBasis:
    """Basis of {X : X G = G X for every generator G}.

    Solves the linear system G X - X G = 0 in the m*m entries of X.
    """
    m = _resolve_dim([generators], dim)
    gens = _stack(generators, m)
    ech = _Echelon(m * m)
    if gens.shape[0] == 0:
        ech.add(_bits.identity_combos(m * m))
        return ech.snapshot()
    units = np.zeros((m * m, m), dtype=np.uint64)
    for i in range(m):
        for j in range(m):
            units[i * m + j, i] = np.uint64(1) << np.uint64(j)
    # combos over the matrix units are already flattened matrices
    ech.add(kernels.nullspace(_commutator_rows(units, gens, m)))
    return ech.snapshot()


def closure_with_rounds(
    seeds: Sequence[BitMatrix],
    conjugators: Sequence[BitMatrix],
    dim: int | None = None,
    chunk: int = 4096,
) -> tuple[SubspaceBasis, int]:
    """Unital algebra closure of ``seeds`` under products and conjugation.

    Worklist saturation: every newly independent element is multiplied on
    both sides by the current spanning set and conjugated by each
    conjugator; the loop ends when a round adds nothing. Returns the
    subspace and the number of rounds run.
    """
    m = _resolve_dim([seeds, conjugators], dim)
    seed_rows = _stack(seeds, m)
    conj = _stack(conjugators, m)
    conj_inv = np.stack([BitMatrix(m, u).inverse().rows for u in conj]) if len(conj) else conj

    ech = _Echelon(m * m)
    elems = np.zeros((m * m, m), dtype=np.uint64)
    count = 0

    def feed(cands: np.ndarray) -> int:
        nonlocal count
        if cands.shape[0] == 0 or ech.full:
            return 0
        ins = ech.add(kernels.flatten(cands, m))
        elems[count : count + ins.size] = cands[ins]
        count += ins.size
        return ins.size

    start = np.concatenate([BitMatrix.identity(m).rows.reshape(1, m), seed_rows])
    feed(start)
    lo, hi = 0, count
    rounds = 0
    cap = m * m + 2
    while lo < hi and not ech.full:
        rounds += 1
        if rounds > cap:
            raise RuntimeError(f"closure exceeded {cap} rounds")
        new = elems[lo:hi].copy()
        for u, ui in zip(conj, conj_inv):
            uu = np.broadcast_to(u, new.shape)
            feed(kernels.matmul_batch(kernels.matmul_batch(uu, new), np.broadcast_to(ui, new.shape)))
        # products new x spanning set, both orders, in bounded chunks
        for a in range(new.shape[0]):
            if ech.full:
                break
            upto = count
            for b0 in range(0, upto, chunk):
                b = elems[b0 : min(upto, b0 + chunk)].copy()
                x = np.broadcast_to(new[a], b.shape)
                feed(kernels.matmul_batch(x, b))
                feed(kernels.matmul_batch(b, x))
                if ech.full:
                    break
        lo, hi = hi, count
    return ech.snapshot(), rounds


def algebra_closure(
    seeds: Sequence[BitMatrix], conjugators: Sequence[BitMatrix], dim: int | None = None
) -> SubspaceBasis:
    """Smallest unital subalgebra containing ``seeds`` and stable under u X u^-1."""
    return closure_with_rounds(seeds, conjugators, dim)[0]


def random_matrix(rng: np.random.Generator, dim: int) -> BitMatrix:
    return BitMatrix(dim, rng.integers(0, 1 << dim, size=dim, dtype=np.uint64))
