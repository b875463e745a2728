"""The even-subset space Q_B and the permutation action on it.

B is the label set {0, ..., n-1}. Subsets are bit masks; Q_B is the space
of even-cardinality subsets under symmetric difference. Coordinates are
taken in the basis T_i = {i, n-1}, i = 0..n-2, so a coordinate vector is
the mask with bit n-1 dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .config import MAX_N
from .gf2linalg import BitMatrix, BitVector, DimensionError, echelonize


class ParentMismatch(ValueError):
    """Operands belong to label sets of different size."""


@dataclass(frozen=True)
class LabelSet:
    """The root set B = {0, ..., n-1}.

    The 2-torsion setting needs odd n >= 5; ``allow_even`` admits the even
    degrees handled by the field reduction.
    """

    n: int
    allow_even: bool = False

    def __post_init__(self):
        if not 5 <= self.n <= MAX_N:
            raise ValueError(f"need 5 <= n <= {MAX_N}, got {self.n}")
        if self.n % 2 == 0 and not self.allow_even:
            raise ValueError(f"n must be odd, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def subsets(self) -> Iterable["EvenSubset"]:
        """All 2**(n-1) elements of Q_B, in coordinate order."""
        for v in range(1 << (self.n - 1)):
            yield subset_from_coords(BitVector.from_int(v, self.n - 1), self)


@dataclass(frozen=True)
class EvenSubset:
    mask: int
    parent: LabelSet

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.parent.n:
            raise ValueError(f"mask {self.mask:#x} outside labels 0..{self.parent.n - 1}")
        if self.mask.bit_count() % 2:
            raise ValueError(f"subset {sorted(self.labels())} has odd cardinality")

    @classmethod
    def from_labels(cls, labels: Iterable[int], parent: LabelSet) -> "EvenSubset":
        mask = 0
        for x in labels:
            if not 0 <= x < parent.n:
                raise ValueError(f"label {x} outside 0..{parent.n - 1}")
            mask ^= 1 << x
        return cls(mask, parent)

    @classmethod
    def empty(cls, parent: LabelSet) -> "EvenSubset":
        return cls(0, parent)

    def labels(self) -> list[int]:
        return [i for i in range(self.parent.n) if (self.mask >> i) & 1]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: int) -> bool:
        return bool((self.mask >> label) & 1)

    def __add__(self, other: "EvenSubset") -> "EvenSubset":
        return symdiff(self, other)

    def __repr__(self) -> str:
        return f"EvenSubset({set(self.labels()) or '{}'}, n={self.parent.n})"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}; ``images[i]`` is the image of i.

    Products compose right to left: ``(s * t)(i) == s(t(i))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"cycles overlap: {cycles}")
            seen.update(cyc)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ParentMismatch(f"degree {self.n} vs {other.n}")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest label."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def is_even(self) -> bool:
        return self.sign() == 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def act_mask(self, mask: int) -> int:
        out = 0
        for i in range(self.n):
            if (mask >> i) & 1:
                out |= 1 << self.images[i]
        return out

    def act(self, t: EvenSubset) -> EvenSubset:
        if self.n != t.parent.n:
            raise ParentMismatch(f"permutation of degree {self.n} on subsets of {t.parent.n}")
        return EvenSubset(self.act_mask(t.mask), t.parent)

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({cyc or '()'}, n={self.n})"


def symdiff(t1: EvenSubset, t2: EvenSubset) -> EvenSubset:
    if t1.parent.n != t2.parent.n:
        raise ParentMismatch(f"subsets of {t1.parent.n} and {t2.parent.n} labels")
    return EvenSubset(t1.mask ^ t2.mask, t1.parent)


def coords(t: EvenSubset) -> BitVector:
    """Coordinates of t in the basis {i, n-1}: the mask without bit n-1."""
    n = t.parent.n
    return BitVector.from_int(t.mask & ((1 << (n - 1)) - 1), n - 1)


def subset_from_coords(v: BitVector, parent: LabelSet) -> EvenSubset:
    n = parent.n
    if v.len != n - 1:
        raise DimensionError(f"expected {n - 1} coordinates, got {v.len}")
    mask = int(v)
    if mask.bit_count() % 2:
        mask |= 1 << (n - 1)
    return EvenSubset(mask, parent)


def perm_matrix(s: Permutation) -> BitMatrix:
    """Matrix of s on Q_B: column i is coords(s({i, n-1}))."""
    n = s.n
    if n % 2 == 0 or n < 5:
        raise ValueError(f"Q_B action needs odd n >= 5, got {n}")
    low = (1 << (n - 1)) - 1
    top = s(n - 1)
    cols = [((1 << s(i)) ^ (1 << top)) & low for i in range(n - 1)]
    return BitMatrix.from_columns(cols, n - 1)


def full_perm_matrix(s: Permutation) -> BitMatrix:
    """Matrix of s on the full subset space F_2^B (all subsets)."""
    return BitMatrix.from_columns([1 << s(i) for i in range(s.n)], s.n)


@dataclass(frozen=True)
class SplittingReport:
    n: int
    dim_qb: int
    dim_line: int
    dim_full: int
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def dims(self) -> tuple[int, int, int]:
        return self.dim_qb, self.dim_line, self.dim_full

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dims": list(self.dims),
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def verify_splitting(n: int) -> SplittingReport:
    """Check F_2^B = Q_B + L with L spanned by B itself, for odd n."""
    if n % 2 == 0:
        raise ValueError(f"n must be odd (for even n the full set B lies in Q_B), got {n}")
    labels = LabelSet(n)
    qb_gens = [BitVector.from_int((1 << i) | (1 << (n - 1)), n) for i in range(n - 1)]
    whole = BitVector.from_int(labels.full_mask, n)
    qb = echelonize(qb_gens)
    line = echelonize([whole])
    total = echelonize(qb_gens + [whole])

    # S_n-stability of both summands under generators of S_n
    transposition = Permutation.from_cycles(n, (0, 1))
    ncycle = Permutation(tuple((i + 1) % n for i in range(n)))
    stable_qb = all(
        BitVector.from_int(s.act_mask(int(v)), n) in qb for s in (transposition, ncycle) for v in qb_gens
    )
    stable_line = all(s.act_mask(labels.full_mask) == labels.full_mask for s in (transposition, ncycle))
    checks = {
        "dim_qb_is_n_minus_1": qb.dim == n - 1,
        "full_set_not_in_qb": whole not in qb,
        "intersection_zero": qb.dim + line.dim == total.dim,
        "sum_is_everything": total.dim == n,
        "qb_stable": stable_qb,
        "line_stable": stable_line,
    }
    return SplittingReport(n, qb.dim, line.dim, total.dim, checks)
