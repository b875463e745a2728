from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from endogate.gf2linalg import BitVector
from endogate.qspace import EvenSubset, LabelSet, Permutation, perm_matrix
from endogate.reptheory import (
    GroupGenerators,
    commutant_dimension_on_full,
    commutant_dimension_on_QB,
    group_order,
    is_absolutely_simple,
    is_irreducible_by_spin,
    reduce_to_pair,
    spin,
    spin_counterexample,
    standard_generators,
    trivial_group,
)

from .oracles import dense_commutant_dim, group_order_bfs, invariant_subspaces


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_commutant_dims(n):
    for kind in ("A_n", "S_n"):
        g = standard_generators(kind, n)
        assert commutant_dimension_on_QB(g) == 1
        assert commutant_dimension_on_full(g) == 2


@pytest.mark.parametrize("n", [5, 7])
def test_commutant_dims_dense_oracle(n):
    g = standard_generators("A_n", n)
    assert dense_commutant_dim([m.to_lists() for m in g.qb_matrices()]) == 1
    assert dense_commutant_dim([m.to_lists() for m in g.full_matrices()]) == 2


def test_generated_group_orders():
    for kind, order in (("A_n", 60), ("S_n", 120)):
        g = standard_generators(kind, 5)
        assert group_order(g.gens, 5) == order
        assert group_order_bfs([s.images for s in g.gens]) == order
    assert group_order(standard_generators("A_n", 7).gens, 7) == 2520


def test_qb_has_no_invariant_subspaces_brute_force():
    mats = [m.to_lists() for m in standard_generators("A_n", 5).qb_matrices()]
    subs = invariant_subspaces(mats)
    assert sorted(len(s) for s in subs) == [1, 16]


def test_transposition_brute_force_agrees_with_spin():
    s = Permutation.from_cycles(5, (0, 1))
    mats = [perm_matrix(s)]
    subs = invariant_subspaces([m.to_lists() for m in mats])
    assert len(subs) > 2
    v = spin_counterexample(mats, 4)
    assert v is not None
    orbit_span = spin(v, mats)
    assert len(orbit_span) < 4


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_spin_irreducible(n):
    g = standard_generators("A_n", n)
    assert is_irreducible_by_spin(g)
    assert is_absolutely_simple(g)


def test_trivial_group_reducible():
    g = trivial_group(5)
    assert not is_irreducible_by_spin(g)
    assert commutant_dimension_on_QB(g) == 16


def test_single_transposition_commutant():
    g = GroupGenerators("custom", 5, (Permutation.from_cycles(5, (0, 1)),))
    assert commutant_dimension_on_full(g) == 17


def test_spin_cap():
    with pytest.raises(ValueError):
        is_irreducible_by_spin(standard_generators("A_n", 23))


def test_generator_validation():
    with pytest.raises(ValueError):
        GroupGenerators("A_n", 5, (Permutation.from_cycles(5, (0, 1)),))
    with pytest.raises(ValueError):
        standard_generators("A_n", 6)
    with pytest.raises(ValueError):
        standard_generators("S_n", 4)


def test_pair_reduction_example():
    b = LabelSet(5)
    trace = reduce_to_pair(EvenSubset.from_labels([0, 1, 2, 3], b))
    assert len(trace) == 1
    s, pair = trace[0]
    assert s.is_even() and pair.labels() == [0, 4]


@given(st.sampled_from([5, 7, 9, 11]).flatmap(lambda n: st.tuples(st.just(n), st.data())))
def test_pair_reduction_property(case):
    n, data = case
    size = data.draw(st.sampled_from(list(range(2, n, 2))))
    labels = data.draw(st.permutations(range(n)))[:size]
    t = EvenSubset.from_labels(labels, LabelSet(n))
    trace = reduce_to_pair(t)
    if size == 2:
        assert trace == []
        return
    cur = t
    for s, nxt in trace:
        assert s.is_even()
        assert nxt == cur + s.act(cur)
        cur = nxt
    assert len(cur) == 2


def test_pairs_span_qb():
    n = 7
    b = LabelSet(n)
    pairs = [BitVector.from_int(EvenSubset.from_labels(p, b).mask & ((1 << (n - 1)) - 1), n - 1) for p in combinations(range(n), 2)]
    from endogate.gf2linalg import rank

    assert rank(pairs) == n - 1
