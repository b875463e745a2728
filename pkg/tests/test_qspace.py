import pytest
from hypothesis import given
from hypothesis import strategies as st

from endogate.gf2linalg import BitVector
from endogate.qspace import (
    EvenSubset,
    LabelSet,
    ParentMismatch,
    Permutation,
    coords,
    full_perm_matrix,
    perm_matrix,
    subset_from_coords,
    symdiff,
    verify_splitting,
)

from .oracles import qb_matrix_dense

ODD_N = st.sampled_from([5, 7, 9, 11, 13])


@st.composite
def perm_of(draw, n):
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def even_subset_of(draw, labels):
    mask = draw(st.integers(0, labels.full_mask))
    if mask.bit_count() % 2:
        mask ^= 1
    return EvenSubset(mask, labels)


def test_label_set_bounds():
    with pytest.raises(ValueError):
        LabelSet(3)
    with pytest.raises(ValueError):
        LabelSet(6)
    assert LabelSet(6, allow_even=True).n == 6
    with pytest.raises(ValueError):
        LabelSet(35)


def test_odd_subset_rejected():
    with pytest.raises(ValueError):
        EvenSubset.from_labels([0, 1, 2], LabelSet(5))


def test_symdiff_example():
    b = LabelSet(5)
    t = EvenSubset.from_labels([0, 1], b) + EvenSubset.from_labels([1, 2], b)
    assert t.labels() == [0, 2]
    with pytest.raises(ParentMismatch):
        symdiff(t, EvenSubset.empty(LabelSet(7)))


def test_subset_count():
    assert len(list(LabelSet(7).subsets())) == 64


@given(ODD_N.flatmap(lambda n: st.tuples(st.just(LabelSet(n)), st.data())))
def test_coords_roundtrip_and_linear(case):
    b, data = case
    t1, t2 = data.draw(even_subset_of(b)), data.draw(even_subset_of(b))
    assert subset_from_coords(coords(t1), b) == t1
    assert coords(t1 + t2) == coords(t1) + coords(t2)


@given(ODD_N.flatmap(lambda n: st.tuples(st.just(LabelSet(n)), st.data())))
def test_action_is_linear_and_matrix_agrees(case):
    b, data = case
    s = data.draw(perm_of(b.n))
    t1, t2 = data.draw(even_subset_of(b)), data.draw(even_subset_of(b))
    assert s.act(t1 + t2) == s.act(t1) + s.act(t2)
    assert perm_matrix(s).apply(coords(t1)) == coords(s.act(t1))


@given(ODD_N.flatmap(lambda n: st.tuples(perm_of(n), perm_of(n))))
def test_matrix_is_homomorphism(pair):
    s, t = pair
    assert perm_matrix(s * t) == perm_matrix(s) @ perm_matrix(t)
    assert full_perm_matrix(s * t) == full_perm_matrix(s) @ full_perm_matrix(t)
    assert perm_matrix(s.inverse()) == perm_matrix(s).inverse()


@given(ODD_N.flatmap(perm_of))
def test_matrix_matches_dense_oracle(s):
    assert perm_matrix(s).to_lists() == qb_matrix_dense(list(s.images))


def test_composition_convention():
    n = 5
    s = Permutation.from_cycles(n, (0, 1))
    t = Permutation.from_cycles(n, (1, 2))
    assert all((s * t)(i) == s(t(i)) for i in range(n))


def test_sign_and_cycles():
    s = Permutation.from_cycles(7, (0, 1, 2), (3, 4))
    assert s.sign() == -1
    assert sorted(map(len, s.cycles())) == [2, 3]
    assert (s * s.inverse()).is_identity()


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13, 33])
def test_splitting(n):
    rep = verify_splitting(n)
    assert rep.passed
    assert rep.dims == (n - 1, 1, n)


def test_splitting_rejects_even():
    with pytest.raises(ValueError):
        verify_splitting(6)


def test_coords_length_check():
    with pytest.raises(ValueError):
        subset_from_coords(BitVector.from_int(0, 3), LabelSet(5))
