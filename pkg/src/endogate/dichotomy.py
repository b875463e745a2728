"""Conjugation-stable unital subalgebras of End(Q_B): scalar or everything.

A trial closes a seed set under products and conjugation by the group
generators and classifies the resulting dimension. For A_n and S_n acting
on Q_B only two outcomes are mathematically possible; anything else is a
``Violation`` and means a bug in this package.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

import numpy as np

from .gf2linalg import (
    BitMatrix,
    DimensionError,
    SubspaceBasis,
    centralizer_within,
    closure_with_rounds,
    commutant,
    random_matrix,
)
from .reptheory import GroupGenerators


class Verdict(str, enum.Enum):
    SCALAR = "Scalar"
    FULL = "Full"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class DichotomyResult:
    verdict: Verdict
    dimension: int
    rounds: int
    n: int

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "dimension": self.dimension,
            "rounds": self.rounds,
            "n": self.n,
        }


def _check_seeds(seeds: Sequence[BitMatrix], g: GroupGenerators) -> int:
    m = g.n - 1
    for s in seeds:
        if s.dim != m:
            raise DimensionError(f"seed is {s.dim}x{s.dim}, group of degree {g.n} acts on dim {m}")
    return m


def closed_algebra_with_rounds(seeds: Sequence[BitMatrix], g: GroupGenerators) -> tuple[SubspaceBasis, int]:
    m = _check_seeds(seeds, g)
    return closure_with_rounds(list(seeds), g.qb_matrices(), dim=m)


def closed_algebra(seeds: Sequence[BitMatrix], g: GroupGenerators) -> SubspaceBasis:
    """Smallest unital subalgebra containing ``seeds`` with u R u^-1 = R for u in G."""
    return closed_algebra_with_rounds(seeds, g)[0]


def classify(dimension: int, n: int) -> Verdict:
    if dimension == 1:
        return Verdict.SCALAR
    if dimension == (n - 1) ** 2:
        return Verdict.FULL
    return Verdict.VIOLATION


def check_dichotomy(seeds: Sequence[BitMatrix], g: GroupGenerators) -> DichotomyResult:
    basis, rounds = closed_algebra_with_rounds(seeds, g)
    return DichotomyResult(classify(basis.dim, g.n), basis.dim, rounds, g.n)


def gl_order(c: int) -> int:
    """|GL(c, F_2)| = prod_{i<c} (2^c - 2^i)."""
    return prod((1 << c) - (1 << i) for i in range(c))


def observation_bound(n: int, c: int) -> bool:
    """Whether c^2 <= n-1 forces every A_n -> GL(c, F_2) to be trivial.

    Checks |GL(c,2)| < 2^(c^2) <= 2^(n-1) < n!/2 in exact integers; vacuously
    true when c^2 > n - 1.
    """
    if n < 5 or c < 1:
        raise ValueError(f"need n >= 5 and c >= 1, got n={n}, c={c}")
    if c * c > n - 1:
        return True
    half = factorial(n) // 2
    gl = gl_order(c)
    return gl < (1 << (c * c)) <= (1 << (n - 1)) < half and gl < half


def observation_sweep(n_max: int = 25) -> dict:
    pairs = [(n, c) for n in range(5, n_max + 1) for c in range(1, n) if c * c <= n - 1]
    failed = [[n, c] for n, c in pairs if not observation_bound(n, c)]
    return {"n_max": n_max, "pairs_checked": len(pairs), "failed": failed, "passed": not failed}


def proof_trace(seeds: Sequence[BitMatrix], g: GroupGenerators) -> dict:
    """Commutant bookkeeping for the closed algebra R.

    E = End_R(Q_B) is the commutant of R; its center (elements of E
    commuting with all of E) must be the scalars, i.e. k = F_2. For a
    simple R = Mat_m(F_2) acting on Q_B = W^d one has dim R * dim E =
    m^2 d^2 = (n-1)^2.
    """
    m = _check_seeds(seeds, g)
    r_basis, rounds = closed_algebra_with_rounds(seeds, g)
    r_mats = r_basis.matrices()
    e_basis = commutant(r_mats, dim=m)
    e_mats = e_basis.matrices()
    center = centralizer_within(e_mats, e_mats, dim=m)
    product_dims = r_basis.dim * e_basis.dim
    return {
        "n": g.n,
        "dim_R": r_basis.dim,
        "dim_E": e_basis.dim,
        "dim_center_E": center.dim,
        "center_is_F2": center.dim == 1,
        "dim_R_times_dim_E": product_dims,
        "target": m * m,
        "product_matches": product_dims == m * m,
        "verdict": classify(r_basis.dim, g.n).value,
        "rounds": rounds,
    }


def random_seed(rng: np.random.Generator, dim: int, nonscalar: bool = True) -> BitMatrix:
    while True:
        a = random_matrix(rng, dim)
        if not (nonscalar and a.is_scalar()):
            return a


@dataclass
class TrialReport:
    n: int
    kind: str
    trials: int
    seed: int
    results: list[DichotomyResult] = field(default_factory=list)

    @property
    def histogram(self) -> dict[str, int]:
        counts = Counter(r.verdict.value for r in self.results)
        return {v.value: counts.get(v.value, 0) for v in Verdict}

    @property
    def violations(self) -> int:
        return self.histogram[Verdict.VIOLATION.value]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "group": self.kind,
            "trials": self.trials,
            "rng_seed": self.seed,
            "histogram": self.histogram,
            "dimensions": sorted({r.dimension for r in self.results}),
            "max_rounds": max((r.rounds for r in self.results), default=0),
        }


def run_trials(
    g: GroupGenerators, trials: int, seed: int, nonscalar: bool = False
) -> TrialReport:
    """Close ``trials`` random single-matrix seeds drawn from ``default_rng(seed)``."""
    rng = np.random.default_rng(seed)
    report = TrialReport(g.n, g.kind, trials, seed)
    for _ in range(trials):
        a = random_seed(rng, g.n - 1, nonscalar=nonscalar)
        report.results.append(check_dichotomy([a], g))
    return report
