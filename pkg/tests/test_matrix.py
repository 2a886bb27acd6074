import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from linedigraph.matrix import (
    Permutation,
    ZeroOneMatrix,
    direct_sum,
    first_mismatch,
    identity,
    is_permutation_matrix,
    kron,
    matmul,
    ones,
    similarity,
    zeros,
)

from .conftest import SWAP, brute_kron, brute_matmul, permutations, zero_one_matrices


def test_kron_with_j1_is_identity_operation():
    m = ZeroOneMatrix([[0, 1, 1], [1, 0, 0]])
    assert kron(ones(1), m) == m


def test_kron_j2_i2():
    assert kron(ones(2), identity(2)).tolist() == [
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ]


def test_kron_i2_j2_is_block_diagonal():
    assert kron(identity(2), ones(2)) == direct_sum([ones(2), ones(2)])


def test_kron_empty():
    assert kron(zeros(0), ones(3)).shape == (0, 0)


def test_direct_sum_examples():
    one = ZeroOneMatrix([[1]])
    assert direct_sum([one, one]) == identity(2)
    x = ZeroOneMatrix(SWAP)
    assert direct_sum([identity(2), x]).tolist() == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    assert direct_sum([]).shape == (0, 0)


def test_matmul_structured_example():
    a = kron(ones(2), identity(2))
    b = direct_sum([identity(2), ZeroOneMatrix(SWAP)])
    expected = brute_matmul(a.tolist(), b.tolist())
    assert expected == [[1, 0, 0, 1], [0, 1, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0]]
    assert matmul(a, b).tolist() == expected


@given(permutations())
def test_matmul_with_inverse(p):
    assert matmul(p.matrix(), p.inverse().matrix()) == identity(p.size)


def test_matmul_zero_and_mismatch():
    a = ZeroOneMatrix([[1, 1], [0, 1]])
    assert matmul(a, zeros(2)) == zeros(2)
    with pytest.raises(ValueError, match="dimension mismatch"):
        matmul(a, zeros(3))


def test_matmul_keeps_entries_above_one():
    assert matmul(ones(3), ones(3)).tolist() == [[3] * 3] * 3


def test_similarity_examples():
    m = ZeroOneMatrix([[0, 1], [0, 0]])
    assert similarity(Permutation.identity(2), m) == m
    assert similarity(Permutation((1, 0)), m).tolist() == [[0, 0], [1, 0]]
    with pytest.raises(ValueError):
        similarity(Permutation.identity(3), m)


@given(permutations(), st.randoms(use_true_random=False))
def test_similarity_round_trip(p, rnd):
    m = ZeroOneMatrix([[rnd.randint(0, 1) for _ in range(p.size)] for _ in range(p.size)])
    assert similarity(p.inverse(), similarity(p, m)) == m


@given(permutations(), st.randoms(use_true_random=False))
def test_similarity_orientation(p, rnd):
    m = ZeroOneMatrix([[rnd.randint(0, 1) for _ in range(p.size)] for _ in range(p.size)])
    out = similarity(p, m)
    for i in range(p.size):
        for j in range(p.size):
            assert out[p(i), p(j)] == m[i, j]
    # same as P M P^T with P[i, p(i)] = 1 read as a column action
    pm = p.inverse().matrix()
    assert out == matmul(matmul(pm, m), p.matrix())


def test_is_permutation_matrix():
    assert is_permutation_matrix(identity(3))
    assert not is_permutation_matrix(ones(2))
    assert not is_permutation_matrix(zeros(2, 3))
    assert not is_permutation_matrix(ZeroOneMatrix([[2]]))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((0, 0))
    p = Permutation((2, 0, 1))
    assert Permutation.from_matrix(p.matrix()) == p
    assert p.compose(p.inverse()) == Permutation.identity(3)


def test_matrix_rejects_negative_entries():
    with pytest.raises(ValueError):
        ZeroOneMatrix([[0, -1]])


def test_first_mismatch():
    a = ZeroOneMatrix([[1, 0], [0, 1]])
    assert first_mismatch(a, a) is None
    assert first_mismatch(a, ZeroOneMatrix([[1, 0], [1, 1]])) == (1, 0)
    assert first_mismatch(a, identity(3)) == (2, 0)


@given(zero_one_matrices(), zero_one_matrices())
def test_kron_matches_block_definition(a, b):
    out = kron(a, b)
    assert out.shape == (a.rows * b.rows, a.cols * b.cols)
    if a.rows and a.cols and b.rows and b.cols:
        assert out.tolist() == brute_kron(a.tolist(), b.tolist())


@given(st.lists(zero_one_matrices(max_dim=3), max_size=4))
def test_direct_sum_blocks(blocks):
    out = direct_sum(blocks)
    assert out.shape == (sum(b.rows for b in blocks), sum(b.cols for b in blocks))
    r = c = 0
    for b in blocks:
        assert np.array_equal(out.array[r : r + b.rows, c : c + b.cols], b.array)
        r += b.rows
        c += b.cols
    assert out.array.sum() == sum(b.array.sum() for b in blocks)


@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_structured_product_row_and_column_sums(d, n, data):
    perms = [data.draw(permutations(size=n)) for _ in range(d)]
    out = matmul(kron(ones(d), identity(n)), direct_sum([p.matrix() for p in perms]))
    assert out.is_zero_one()
    assert np.all(out.row_sums() == d)
    assert np.all(out.col_sums() == d)
