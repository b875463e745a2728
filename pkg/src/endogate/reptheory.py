"""Irreducibility and commutant computations for A_n and S_n acting on Q_B."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations as _iter_permutations
from typing import Sequence

import numpy as np

from ._backend import kernels
from .config import SPIN_CAP
from .gf2linalg import BitMatrix, BitVector, commutant, echelonize
from .qspace import EvenSubset, Permutation, full_perm_matrix, perm_matrix

ALTERNATING = "A_n"
SYMMETRIC = "S_n"
CUSTOM = "custom"


@dataclass(frozen=True)
class GroupGenerators:
    """Generators of a permutation group of degree n.

    ``kind`` is ``"A_n"``, ``"S_n"`` or ``"custom"``; the first two are
    checked for the declared parity.
    """

    kind: str
    n: int
    gens: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if self.kind not in (ALTERNATING, SYMMETRIC, CUSTOM):
            raise ValueError(f"unknown group kind {self.kind!r}")
        for s in self.gens:
            if s.n != self.n:
                raise ValueError(f"generator of degree {s.n} in a degree-{self.n} group")
        if self.kind == ALTERNATING and not all(s.is_even() for s in self.gens):
            raise ValueError("A_n generators must be even permutations")
        if self.kind == SYMMETRIC and all(s.is_even() for s in self.gens):
            raise ValueError("S_n generators need an odd permutation")

    def qb_matrices(self) -> list[BitMatrix]:
        return [perm_matrix(s) for s in self.gens]

    def full_matrices(self) -> list[BitMatrix]:
        return [full_perm_matrix(s) for s in self.gens]


def _ncycle(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


def standard_generators(kind: str, n: int) -> GroupGenerators:
    """{(0 1 2), (0 1 ... n-1)} for A_n with odd n; {(0 1), (0 1 ... n-1)} for S_n."""
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    if kind == ALTERNATING:
        if n % 2 == 0:
            raise ValueError(f"the n-cycle is odd for even n={n}; A_n generators need odd n")
        gens = (Permutation.from_cycles(n, (0, 1, 2)), _ncycle(n))
    elif kind == SYMMETRIC:
        gens = (Permutation.from_cycles(n, (0, 1)), _ncycle(n))
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    return GroupGenerators(kind, n, gens)


def trivial_group(n: int) -> GroupGenerators:
    return GroupGenerators(CUSTOM, n, ())


def group_order(gens: Sequence[Permutation], n: int) -> int:
    """Order of the generated group by breadth-first closure (small n only)."""
    start = Permutation.identity(n)
    seen = {start.images}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h.images not in seen:
                seen.add(h.images)
                queue.append(h)
    return len(seen)


def commutant_dimension_on_QB(g: GroupGenerators) -> int:
    """dim End_G(Q_B); equals 1 for A_n and S_n."""
    return commutant(g.qb_matrices(), dim=g.n - 1).dim


def commutant_dimension_on_full(g: GroupGenerators) -> int:
    """dim End_G(F_2^B); equals 2 for every doubly transitive G."""
    return commutant(g.full_matrices(), dim=g.n).dim


def _spin_columns(mats: Sequence[BitMatrix]) -> list[list[int]]:
    return [m.columns() for m in mats]


def spin_counterexample(
    mats: Sequence[BitMatrix], dim: int, cap: int = SPIN_CAP
) -> BitVector | None:
    """Smallest nonzero vector whose spin under ``mats`` is a proper subspace.

    Exhaustive over all 2**dim - 1 nonzero vectors; ``None`` means the
    module is irreducible.
    """
    if dim > cap - 1:
        raise ValueError(f"exhaustive spin is capped at dimension {cap - 1}, got {dim}")
    cols = _spin_columns(mats) if mats else []
    arr = np.array(cols, dtype=np.uint64).reshape(len(cols), dim)
    v = kernels.first_reducible_vector(arr, dim)
    return None if v == 0 else BitVector.from_int(v, dim)


def is_irreducible_by_spin(g: GroupGenerators, cap: int = SPIN_CAP) -> bool:
    """Whether Q_B is an irreducible module, by spinning every nonzero vector."""
    if g.n % 2 == 0:
        raise ValueError(f"Q_B needs odd n, got {g.n}")
    if g.n > cap:
        raise ValueError(f"n={g.n} is above the spin cap {cap}")
    return spin_counterexample(g.qb_matrices(), g.n - 1, cap) is None


def spin(v: BitVector, mats: Sequence[BitMatrix]) -> list[BitVector]:
    """Basis of the smallest subspace containing v and stable under ``mats``."""
    basis = [v]
    queue = [v]
    current = echelonize(basis)
    while queue:
        x = queue.pop()
        for m in mats:
            y = m.apply(x)
            if y not in current:
                basis.append(y)
                queue.append(y)
                current = echelonize(basis)
    return current.basis


def is_absolutely_simple(g: GroupGenerators, cap: int = SPIN_CAP) -> bool:
    """Irreducible with scalar commutant, the two halves of absolute simplicity."""
    return is_irreducible_by_spin(g, cap) and commutant_dimension_on_QB(g) == 1


def _three_cycle(n: int, a: int, b: int, c: int) -> Permutation:
    return Permutation.from_cycles(n, (a, b, c))


def _pair_step(t: EvenSubset) -> Permutation:
    n = t.parent.n
    inside = t.labels()
    outside = [i for i in range(n) if i not in t]
    a = inside[-1]
    b = outside[0]
    c = outside[1] if len(outside) > 1 else inside[0]
    s = _three_cycle(n, a, b, c)
    if len(t + s.act(t)) == 2:
        return s
    # verified fallback over every 3-cycle
    for x, y, z in _iter_permutations(range(n), 3):
        if x < min(y, z):
            s = _three_cycle(n, x, y, z)
            if len(t + s.act(t)) == 2:
                return s
    raise RuntimeError(f"no 3-cycle reduces {t} to a pair")


def reduce_to_pair(t: EvenSubset, g: GroupGenerators | None = None) -> list[tuple[Permutation, EvenSubset]]:
    """Trace from t to a 2-element set inside the A_n-submodule generated by t.

    Each step replaces t by t + s(t) for a 3-cycle s that moves one element
    of t outside t and fixes the rest of t setwise, so t + s(t) is a pair.
    """
    if g is not None and g.kind != ALTERNATING:
        raise ValueError("reduce_to_pair works inside A_n")
    if len(t) == 0:
        raise ValueError("the empty set generates the zero submodule")
    trace = []
    while len(t) > 2:
        s = _pair_step(t)
        nxt = t + s.act(t)
        if not len(nxt) < len(t):
            raise RuntimeError("reduction step did not shrink the subset")
        trace.append((s, nxt))
        t = nxt
    return trace
