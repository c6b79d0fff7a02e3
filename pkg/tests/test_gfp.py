import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfext import gfp

PRIMES = [2, 3, 5]


def random_matrix(draw, p, rows, cols):
    data = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return np.array(data, dtype=np.int64).reshape(rows, cols)


matrices = st.integers(0, 2).flatmap(
    lambda pi: st.tuples(st.just(PRIMES[pi]), st.integers(1, 5), st.integers(1, 5))
).flatmap(
    lambda t: st.tuples(
        st.just(t[0]),
        st.lists(st.integers(0, t[0] - 1), min_size=t[1] * t[2], max_size=t[1] * t[2]).map(
            lambda data: np.array(data, dtype=np.int64).reshape(t[1], t[2])
        ),
    )
)


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_rref_idempotent_and_rank(pm):
    p, a = pm
    r, pivots = gfp.rref(a, p)
    assert r.shape[0] == len(pivots)
    r2, pivots2 = gfp.rref(r, p)
    assert np.array_equal(r, r2) and pivots == pivots2
    # pivot columns are unit vectors
    for i, c in enumerate(pivots):
        col = r[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_nullspace_annihilates(pm):
    p, a = pm
    ns = gfp.nullspace(a, p)
    assert ns.shape[0] == a.shape[1] - gfp.rank(a, p)
    if ns.size:
        assert not (a @ ns.T % p).any()


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_solve_row_combination_roundtrip(pm):
    p, a = pm
    basis = gfp.row_space(a, p)
    for row in a:
        c = gfp.solve_row_combination(basis, row, p)
        assert c is not None
        assert np.array_equal(c @ basis % p, row % p)


def test_solve_rejects_outside_span():
    basis = np.array([[1, 0, 0]], dtype=np.int64)
    assert gfp.solve_row_combination(basis, np.array([0, 1, 0]), 2) is None
    assert not gfp.in_row_space(basis, np.array([0, 1, 0]), 2)


def test_intersection_of_planes():
    a = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.int64)
    b = np.array([[0, 1, 0], [0, 0, 1]], dtype=np.int64)
    inter = gfp.intersect_row_spaces(a, b, 3)
    assert inter.shape[0] == 1
    assert gfp.in_row_space(a, inter[0], 3) and gfp.in_row_space(b, inter[0], 3)


@pytest.mark.parametrize("p", PRIMES)
def test_inverse_mod_p(p):
    a = np.array([[p - 1]], dtype=np.int64)
    r, pivots = gfp.rref(a, p)
    assert r[0, 0] == 1 and pivots == [0]
