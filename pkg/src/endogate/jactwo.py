"""2-torsion of a hyperelliptic Jacobian via divisor classes e_T.

For y^2 = f(x) with deg f = n odd, the Weierstrass set B' consists of the
n points over the roots of f (labels 0..n-1) and the point at infinity
(label n here). An even subset T of B' gives the 2-torsion class of
e_T = sum_{P in T} (P) - #T (inf). Two even subsets give the same class
exactly when they are equal or complementary in B', and e_{T1 + T2} is
equivalent to e_T1 + e_T2. Only classes are modelled, each by its unique
representative avoiding infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .qspace import EvenSubset, LabelSet, ParentMismatch, Permutation
from .reptheory import standard_generators


@dataclass(frozen=True)
class WeierstrassSet:
    roots: LabelSet

    @property
    def n(self) -> int:
        return self.roots.n

    @property
    def infinity(self) -> int:
        return self.roots.n

    @property
    def genus(self) -> int:
        return (self.n - 1) // 2

    @property
    def full_mask(self) -> int:
        """Mask of B' = B plus infinity."""
        return (1 << (self.n + 1)) - 1

    def classes(self) -> list["TwoTorsionClass"]:
        return [TwoTorsionClass(t, self) for t in self.roots.subsets()]

    @classmethod
    def of_degree(cls, n: int) -> "WeierstrassSet":
        return cls(LabelSet(n))


@dataclass(frozen=True)
class TwoTorsionClass:
    """cl(e_T) held by its representative T, a subset of B with even size."""

    rep: EvenSubset
    curve: WeierstrassSet

    def __post_init__(self):
        if self.rep.parent != self.curve.roots:
            raise ParentMismatch("representative and Weierstrass set disagree")

    def __add__(self, other: "TwoTorsionClass") -> "TwoTorsionClass":
        return add(self, other)

    def is_identity(self) -> bool:
        return self.rep.mask == 0

    def divisor(self) -> dict:
        """The divisor e_rep as point multiplicities; infinity keyed as 'inf'."""
        out: dict = {i: 1 for i in self.rep.labels()}
        if self.rep.mask:
            out["inf"] = -len(self.rep)
        return out

    def __repr__(self) -> str:
        return f"cl(e_{set(self.rep.labels()) or '{}'})"


def normalize(points: Iterable[int] | int, curve: WeierstrassSet) -> TwoTorsionClass:
    """Class of e_T for an even T in B'; labels 0..n-1 are roots, n is infinity.

    ``points`` is an iterable of labels or a mask over B'.
    """
    if isinstance(points, int):
        mask = points
    else:
        mask = 0
        for p in points:
            if not 0 <= p <= curve.n:
                raise ValueError(f"label {p} outside B' = 0..{curve.n}")
            mask ^= 1 << p
    if mask < 0 or mask >> (curve.n + 1):
        raise ValueError("mask outside B'")
    if mask.bit_count() % 2:
        raise ValueError("e_T needs T of even cardinality")
    if (mask >> curve.infinity) & 1:
        mask = curve.full_mask ^ mask
    return TwoTorsionClass(EvenSubset(mask, curve.roots), curve)


def add(c1: TwoTorsionClass, c2: TwoTorsionClass) -> TwoTorsionClass:
    if c1.curve != c2.curve:
        raise ParentMismatch("classes on different curves")
    return normalize(c1.rep.mask ^ c2.rep.mask, c1.curve)


def galois_act(s: Permutation, c: TwoTorsionClass) -> TwoTorsionClass:
    """Action of a Galois element through its permutation of the roots (infinity fixed)."""
    if s.n != c.curve.n:
        raise ParentMismatch(f"permutation of degree {s.n} on {c.curve.n} roots")
    return normalize(s.act_mask(c.rep.mask), c.curve)


def iso_to_qb(c: TwoTorsionClass) -> EvenSubset:
    return c.rep


def class_from_qb(t: EvenSubset, curve: WeierstrassSet | None = None) -> TwoTorsionClass:
    curve = curve or WeierstrassSet(t.parent)
    return normalize(t.mask, curve)


def group_table_report(n: int) -> dict:
    """Exhaustive group-law and equivariance checks on all 2^(n-1) classes."""
    curve = WeierstrassSet.of_degree(n)
    classes = curve.classes()
    zero = normalize(0, curve)
    gens = standard_generators("A_n", n).gens + standard_generators("S_n", n).gens
    index = {c.rep.mask: i for i, c in enumerate(classes)}
    table = [[index[add(a, b).rep.mask] for b in classes] for a in classes]
    n_cls = len(classes)
    checks = {
        "class_count_is_2_pow_2g": n_cls == 2 ** (2 * curve.genus),
        "reps_avoid_infinity": all(not (c.rep.mask >> curve.infinity) & 1 for c in classes),
        "identity": all(add(zero, c) == c for c in classes),
        "self_inverse": all(add(c, c) == zero for c in classes),
        "commutative": all(table[i][j] == table[j][i] for i in range(n_cls) for j in range(n_cls)),
        "associative": all(
            table[table[i][j]][k] == table[i][table[j][k]]
            for i in range(n_cls)
            for j in range(n_cls)
            for k in range(n_cls)
        ),
        "complement_rule": all(
            normalize(curve.full_mask ^ c.rep.mask, curve) == c for c in classes
        ),
        "iso_bijective": len({iso_to_qb(c).mask for c in classes}) == n_cls
        and all(class_from_qb(iso_to_qb(c), curve) == c for c in classes),
        "iso_additive": all(
            iso_to_qb(add(a, b)) == iso_to_qb(a) + iso_to_qb(b) for a in classes for b in classes
        ),
        "iso_equivariant": all(
            iso_to_qb(galois_act(s, c)) == s.act(iso_to_qb(c)) for s in gens for c in classes
        ),
    }
    return {
        "n": n,
        "genus": curve.genus,
        "classes": n_cls,
        "checks": checks,
        "passed": all(checks.values()),
    }


def sampled_report(n: int, samples: int, seed: int = 0) -> dict:
    """Randomized version of :func:`group_table_report` for larger n."""
    import numpy as np

    curve = WeierstrassSet.of_degree(n)
    rng = np.random.default_rng(seed)
    gens = standard_generators("A_n", n).gens + standard_generators("S_n", n).gens
    zero = normalize(0, curve)

    def draw() -> TwoTorsionClass:
        # any even subset of B', reduced through the complement rule
        mask = int(rng.integers(0, 1 << (n + 1), dtype=np.uint64))
        if mask.bit_count() % 2:
            mask ^= 1
        return normalize(mask, curve)

    triples = [(draw(), draw(), draw()) for _ in range(samples)]
    checks = {
        "reps_avoid_infinity": all(not (a.rep.mask >> curve.infinity) & 1 for a, _, _ in triples),
        "identity": all(add(zero, a) == a for a, _, _ in triples),
        "self_inverse": all(add(a, a) == zero for a, _, _ in triples),
        "commutative": all(add(a, b) == add(b, a) for a, b, _ in triples),
        "associative": all(add(add(a, b), c) == add(a, add(b, c)) for a, b, c in triples),
        "iso_additive": all(iso_to_qb(add(a, b)) == iso_to_qb(a) + iso_to_qb(b) for a, b, _ in triples),
        "iso_equivariant": all(
            iso_to_qb(galois_act(s, a)) == s.act(iso_to_qb(a)) for s in gens for a, _, _ in triples
        ),
    }
    return {
        "n": n,
        "genus": curve.genus,
        "classes": 2 ** (n - 1),
        "samples": samples,
        "seed": seed,
        "checks": checks,
        "passed": all(checks.values()),
    }
