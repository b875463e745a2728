from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from endogate.jactwo import (
    TwoTorsionClass,
    WeierstrassSet,
    add,
    class_from_qb,
    galois_act,
    group_table_report,
    iso_to_qb,
    normalize,
    sampled_report,
)
from endogate.qspace import EvenSubset, LabelSet, ParentMismatch, Permutation

from .oracles import class_group_by_quotient


def test_normalize_complement_rule():
    c = WeierstrassSet.of_degree(5)
    assert normalize([0, 5], c).rep.labels() == [1, 2, 3, 4]
    assert normalize([0, 1, 2, 3, 4, 5], c).is_identity()
    with pytest.raises(ValueError):
        normalize([0, 1, 2], c)
    with pytest.raises(ValueError):
        normalize([0, 6], c)


def test_divisor():
    c = WeierstrassSet.of_degree(5)
    assert normalize([0, 1], c).divisor() == {0: 1, 1: 1, "inf": -2}
    assert normalize([], c).divisor() == {}


def test_quotient_oracle_n5():
    """Classes built from the e_T rules match (even subsets of B') / {0, B'} with A_5 action."""
    n = 5
    curve = WeierstrassSet.of_degree(n)
    oracle, full = class_group_by_quotient(n)
    assert len(oracle) == 16 == len(curve.classes())

    def to_oracle(cls: TwoTorsionClass):
        return frozenset({cls.rep.mask, full ^ cls.rep.mask})

    # bijection, and additivity against the quotient's own addition
    assert {to_oracle(c) for c in curve.classes()} == set(oracle)
    for a in curve.classes():
        for b in curve.classes():
            m = min(to_oracle(a)) ^ min(to_oracle(b))
            assert to_oracle(add(a, b)) == frozenset({m, full ^ m})
    # every even permutation of the roots (infinity fixed)
    for images in permutations(range(n)):
        s = Permutation(images)
        if not s.is_even():
            continue
        for c in curve.classes():
            m = s.act_mask(min(to_oracle(c)) & ((1 << n) - 1)) | (min(to_oracle(c)) & (1 << n))
            assert to_oracle(galois_act(s, c)) == frozenset({m, full ^ m})
            assert iso_to_qb(galois_act(s, c)) == s.act(iso_to_qb(c))


@pytest.mark.parametrize("n", [5, 7])
def test_group_table(n):
    rep = group_table_report(n)
    assert rep["passed"], rep["checks"]
    assert rep["classes"] == 2 ** (n - 1)


@pytest.mark.parametrize("n", [9, 11, 13])
def test_sampled(n):
    rep = sampled_report(n, 300, seed=n)
    assert rep["passed"], rep["checks"]


@given(st.sampled_from([5, 7, 9, 11, 13]).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (n - 1) - 1))))
def test_iso_roundtrip(case):
    n, v = case
    b = LabelSet(n)
    mask = v | ((v.bit_count() & 1) << (n - 1))
    t = EvenSubset(mask, b)
    assert iso_to_qb(class_from_qb(t)) == t


def test_curve_mismatch():
    a = normalize([0, 1], WeierstrassSet.of_degree(5))
    b = normalize([0, 1], WeierstrassSet.of_degree(7))
    with pytest.raises(ParentMismatch):
        add(a, b)
