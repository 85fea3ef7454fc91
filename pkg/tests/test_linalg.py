import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tits3.linalg import Subspace, inverse, kernel, matmul, rank, rref, solve
from tits3.scalars import GF3, GF7, Q, Field


def brute_rank(m, p):
    """Rank over GF(p) by enumerating the row space."""
    m = np.asarray(m) % p
    rows = m.shape[0]
    span = {tuple((np.array(c) @ m) % p) for c in itertools.product(range(p), repeat=rows)}
    return round(np.log(len(span)) / np.log(p))


def test_identity_and_zero():
    I = GF7.identity(4)
    r, piv = rref(I, GF7)
    assert (r == I).all() and piv == (0, 1, 2, 3)
    r, piv = rref(GF7.zeros((3, 4)), GF7)
    assert not r.any() and piv == ()


def test_gf3_rank_one_example():
    m = GF3.array([[1, 2], [2, 1]])
    assert rank(m, GF3) == 1 == brute_rank(m, 3)


def test_rref_over_q():
    m = Q.array([[2, 4, 1], [1, 2, 0]])
    r, piv = rref(m, Q)
    assert piv == (0, 2)
    assert r[0].tolist() == [1, 2, 0] and r[1].tolist() == [0, 0, 1]


def test_solve_examples():
    v = GF7.array([1, 2, 3])
    assert (solve(GF7.identity(3), v, GF7) == v).all()
    assert solve(GF7.zeros((3, 3)), v, GF7) is None


def test_random_invertible_system_gf3():
    rng = np.random.default_rng(0xC3A1)
    while True:
        m = GF3.random_array(rng, (5, 5))
        if rank(m, GF3) == 5:
            break
    rhs = GF3.random_array(rng, 5)
    x = solve(m, rhs, GF3)
    assert (matmul(GF3, m, x) == rhs).all()
    assert (matmul(GF3, m, inverse(m, GF3)) == GF3.identity(5)).all()


matrices = st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32 - 1),
                     st.sampled_from([3, 5, 7]))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_nullity_and_kernel(case):
    rows, cols, seed, p = case
    f = Field(p)
    m = f.random_array(np.random.default_rng(seed), (rows, cols))
    K = kernel(m, f)
    assert rank(m, f) + K.dim == cols
    for v in K.basis:
        assert f.is_zero(matmul(f, m, v))
    if p == 3 and rows <= 4:
        assert rank(m, f) == brute_rank(m, 3)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_span_is_canonical(case):
    rows, cols, seed, p = case
    f = Field(p)
    rng = np.random.default_rng(seed)
    m = f.random_array(rng, (rows, cols))
    S = Subspace.span(f, cols, m)
    # mutual membership with the raw rows
    assert all(S.contains(row) for row in m)
    T = Subspace.span(f, cols, S.basis)
    assert S == T
    # recombined generators span a subspace of S, equal to S when the mix is invertible
    mix = f.random_array(rng, (rows, rows))
    U = Subspace.span(f, cols, matmul(f, mix, m))
    assert S.contains_subspace(U)
    if rank(mix, f) == rows:
        assert U == S
        assert (U.basis == S.basis).all()


def test_subspace_operations():
    f = GF7
    a = Subspace.span(f, 3, [f.array([1, 0, 0]), f.array([0, 1, 0])])
    b = Subspace.span(f, 3, [f.array([0, 1, 0]), f.array([0, 0, 1])])
    assert (a + b).dim == 3
    assert a.intersection(b) == Subspace.span(f, 3, [f.array([0, 1, 0])])
    assert a.annihilator() == Subspace.span(f, 3, [f.array([0, 0, 1])])
    c = a.coords(f.array([3, 5, 0]))
    assert c.tolist() == [3, 5]
    assert a.coords(f.array([0, 0, 1])) is None


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        inverse(GF3.array([[1, 2], [2, 1]]), GF3)
