import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliquedesigns.errors import (
    InvalidOrder,
    NotAPermutationMatrix,
    OrderMismatch,
)
from cliquedesigns.permutations import (
    BoxPartition,
    from_matrix,
    identity,
    is_derangement_of,
    is_disjoint,
    is_s_permutation,
    lex_compare,
    sigma0,
    to_matrix,
    validate_permutation,
)

permutations_st = st.integers(1, 12).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(tuple)


def test_to_matrix_identity():
    assert (to_matrix((1, 2, 3, 4)) == np.eye(4, dtype=int)).all()


def test_to_matrix_cyclic_shift():
    # the order-4 example block carrying symbol 2: rows e2, e3, e4, e1
    expected = np.array(
        [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
    )
    assert (to_matrix((2, 3, 4, 1)) == expected).all()


S04 = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def test_to_matrix_base_s_matrix():
    assert (to_matrix((1, 3, 2, 4)) == S04).all()


def test_from_matrix_examples():
    assert from_matrix(np.eye(5, dtype=int)) == (1, 2, 3, 4, 5)
    assert from_matrix(S04) == (1, 3, 2, 4)
    assert from_matrix(to_matrix((2, 3, 4, 1))) == (2, 3, 4, 1)


@pytest.mark.parametrize(
    "bad",
    [
        np.zeros((3, 3), dtype=int),
        np.ones((2, 2), dtype=int),
        np.array([[1, 0], [1, 0]]),
        np.array([[2, 0], [0, 1]]),
    ],
)
def test_from_matrix_rejects_non_permutation(bad):
    with pytest.raises(NotAPermutationMatrix):
        from_matrix(bad)


@given(permutations_st)
def test_matrix_round_trip(pi):
    assert from_matrix(to_matrix(pi)) == pi


def test_is_disjoint_examples():
    assert is_disjoint((2, 3, 1), (3, 1, 2))
    assert is_disjoint((2, 5, 4, 3, 1), (3, 4, 5, 1, 2))
    assert not is_disjoint((1, 2, 3), (3, 2, 1))


@given(permutations_st)
def test_is_disjoint_irreflexive(pi):
    assert not is_disjoint(pi, pi)


@given(permutations_st, st.randoms(use_true_random=False))
def test_is_disjoint_symmetric(pi, rng):
    other = list(pi)
    rng.shuffle(other)
    other = tuple(other)
    assert is_disjoint(pi, other) == is_disjoint(other, pi)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        is_disjoint((1, 2), (1, 2, 3))
    with pytest.raises(OrderMismatch):
        lex_compare((1, 2), (1, 2, 3))


def test_is_derangement_of():
    assert is_derangement_of((2, 1), identity(2))
    assert not is_derangement_of((1, 3, 2, 4), identity(4))
    # the base S-permutation is not a derangement of the identity
    assert not is_derangement_of(sigma0(2), identity(4))


def test_lex_compare():
    assert lex_compare((2, 5, 4, 3, 1), (3, 4, 5, 1, 2)) == -1
    assert lex_compare((2, 1, 4, 3), (2, 3, 4, 1)) == -1
    assert lex_compare((1, 2, 3), (1, 2, 3)) == 0
    assert lex_compare((3, 1, 2), (2, 3, 1)) == 1


@given(permutations_st)
def test_lex_total_order(pi):
    n = len(pi)
    assert lex_compare(pi, identity(n)) == -lex_compare(identity(n), pi)


def test_box_partition():
    part = BoxPartition(2)
    assert part.n == 4
    assert [part.band(r) for r in range(4)] == [0, 0, 1, 1]
    assert [part.stack(c) for c in range(4)] == [0, 0, 1, 1]
    assert BoxPartition.for_order(9).p == 3
    with pytest.raises(InvalidOrder):
        BoxPartition.for_order(2)
    with pytest.raises(InvalidOrder):
        BoxPartition(0)


def test_is_s_permutation():
    part = BoxPartition(2)
    assert is_s_permutation((1, 3, 2, 4), part)
    assert not is_s_permutation(identity(4), part)
    with pytest.raises(OrderMismatch):
        is_s_permutation((1, 2, 3), part)


def test_sigma0():
    assert sigma0(2) == (1, 3, 2, 4)
    for p in (2, 3):
        assert is_s_permutation(sigma0(p), BoxPartition(p))
    with pytest.raises(InvalidOrder):
        sigma0(1)


def test_sigma0_p3_matches_compact_rule():
    # box (k, m) holds its 1 at within-box position (m, k)
    m = to_matrix(sigma0(3))
    for k in range(3):
        for mm in range(3):
            box = m[k * 3 : (k + 1) * 3, mm * 3 : (mm + 1) * 3]
            assert box[mm, k] == 1 and box.sum() == 1


def test_validate_permutation():
    assert validate_permutation([2, 1]) == (2, 1)
    with pytest.raises(InvalidOrder):
        validate_permutation([1, 1, 3])
