import numpy as np
import pytest
from hypothesis import strategies as st

from linedigraph import Permutation, ZeroOneMatrix, random_regular_digraph


def brute_kron(a, b):
    """Kronecker product straight from the block definition."""
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = [[0] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def brute_matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@st.composite
def permutations(draw, min_size=1, max_size=6, size=None):
    n = size if size is not None else draw(st.integers(min_size, max_size))
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def zero_one_matrices(draw, max_dim=4, square=False):
    r = draw(st.integers(0, max_dim))
    c = r if square else draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r))
    if r == 0:
        return ZeroOneMatrix(np.zeros((0, c), dtype=np.int64))
    return ZeroOneMatrix(rows)


@st.composite
def regular_digraphs(draw, max_n=12, max_d=4):
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, min(n, max_d)))
    seed = draw(st.integers(0, 2**32 - 1))
    try:
        return random_regular_digraph(n, d, seed)
    except ValueError:
        # d close to n can exhaust the retry budget; fall back to a permutation digraph
        return random_regular_digraph(n, 1, seed)


@pytest.fixture
def k2plus():
    from linedigraph import complete_digraph_with_loops

    return complete_digraph_with_loops(2)


SWAP = [[0, 1], [1, 0]]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
