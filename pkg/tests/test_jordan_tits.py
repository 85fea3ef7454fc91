from fractions import Fraction

import numpy as np
import pytest

from tits3.algebra import (Superalgebra, check_commutative_super, check_super_anticommutativity,
                           check_super_jacobi, is_derivation)
from tits3.altsuper import build_divided_powers
from tits3.composition import KINDS, build_composition, inner_derivation
from tits3.jordan import (build_h3, build_tits, build_tits_char3, check_jordan_identity,
                          check_jordan_trace, check_tits_compatibility, corrupt_trace, inder_jordan,
                          jordan_from_unital, jordan_inner_derivation, magic_square_entry,
                          star_product, tits_construction, trace_split)
from tits3.linalg import Subspace
from tits3.scalars import GF3, GF5, GF7, Q, FieldError


@pytest.fixture(scope="module")
def h3k():
    return build_h3(build_composition("ground-field", GF7))


@pytest.fixture(scope="module")
def h3c(cayley7):
    return build_h3(cayley7)


def test_h3_dims(h3k, h3c):
    assert h3k.dim == 6 and h3c.dim == 27
    assert build_h3(build_composition("matrix2", GF7)).dim == 15


def test_h3_rejects_char3(cayley3):
    with pytest.raises(FieldError):
        build_h3(cayley3)


@pytest.mark.parametrize("kind", KINDS)
def test_h3_is_jordan_with_trace(kind):
    J = build_h3(build_composition(kind, GF7))
    assert J.t(J.unit) == 1
    assert check_commutative_super(J.algebra).passed
    assert check_jordan_trace(J).passed
    assert check_jordan_identity(J).passed
    # the identity matrix is the unit
    for i in range(J.dim):
        e = J.algebra.basis_vector(i)
        assert (J.algebra.multiply(J.unit, e) == e).all()


def test_h3_over_rationals():
    J = build_h3(build_composition("ground-field", Q))
    assert J.t(J.algebra.basis_vector(0)) == Fraction(1, 3)
    assert check_jordan_identity(J).passed


def test_star_product_and_trace(h3k):
    J = h3k
    f = J.field
    assert f.is_zero(star_product(J, J.unit, J.unit))
    rng = np.random.default_rng(11)
    for _ in range(20):
        x, y = f.random_array(rng, J.dim), f.random_array(rng, J.dim)
        assert J.t(star_product(J, x, y)) == 0
        tx, x0 = trace_split(J, x)
        assert J.t(x0) == 0 and (f.reduce(tx * J.unit + x0) == x).all()
    E11 = J.algebra.basis_vector(0)
    assert J.t(E11) == f.inv(f(3))


def test_jordan_inner_derivations(h3c):
    J = h3c
    f = J.field
    rng = np.random.default_rng(2)
    x, y = f.random_array(rng, J.dim), f.random_array(rng, J.dim)
    assert f.is_zero(jordan_inner_derivation(J, J.unit, x).matrix)
    assert f.is_zero(jordan_inner_derivation(J, x, x).matrix)
    assert f.is_zero(jordan_inner_derivation(J, x, y).matrix + jordan_inner_derivation(J, y, x).matrix)
    assert is_derivation(J.algebra, jordan_inner_derivation(J, x, y)).passed


def test_inder_dims(h3k, h3c):
    assert inder_jordan(h3k).dim == 3
    assert inder_jordan(h3c).dim == 52
    k = build_composition("ground-field", GF7).algebra
    Jk = jordan_from_unital(k, Subspace(GF7, 1))
    assert Jk.dim == 1 and inder_jordan(Jk).dim == 0


def test_tits_compatibility(cayley7, h3k):
    assert check_tits_compatibility(cayley7, h3k).passed
    k = build_composition("ground-field", GF7)
    assert check_tits_compatibility(k, h3k).passed
    bad = corrupt_trace(h3k)
    assert bad.t(bad.unit) == 0
    rep = check_tits_compatibility(cayley7, bad)
    assert not rep.passed and rep.counterexample is not None
    with pytest.raises(ValueError):
        build_tits(cayley7, bad)


@pytest.mark.parametrize("c,cp,dim", [("binarion", "binarion", 16), ("matrix2", "ground-field", 21),
                                      ("ground-field", "matrix2", 21), ("split-cayley", "ground-field", 52)])
def test_tits_dims_and_jacobi(c, cp, dim):
    C = build_composition(c, GF7)
    J = build_h3(build_composition(cp, GF7))
    tc = tits_construction(C, J)
    L = tc.algebra
    assert L.dim == dim
    assert L.dim == tc.inder_c.dim + (C.dim - 1) * (J.dim - 1) + tc.inder_j.dim
    assert check_super_anticommutativity(L).passed
    assert check_super_jacobi(L).passed


def test_tits_bracket_components(cayley7, h3k):
    """The D and d parts of [a (x) x, b (x) y] are t_J(xy) D_{a,b} and 2 t(ab) d_{x,y}."""
    tc = tits_construction(cayley7, h3k)
    f = GF7
    L = tc.algebra
    CB, JB = tc.c0.basis, tc.j0.basis
    rD, rM, rd = tc.blocks
    kJ = tc.j0.dim
    for a, b in [(1, 4), (0, 2), (3, 6)]:
        for x, y in [(0, 1), (2, 3), (1, 1)]:
            v = L.multiply(L.basis_vector(rM.start + a * kJ + x), L.basis_vector(rM.start + b * kJ + y))
            xy = h3k.algebra.multiply(JB[x], JB[y])
            D = tc.inder_c.element(v[rD.start:rD.stop])
            want = f.reduce(h3k.t(xy) * inner_derivation(cayley7, CB[a], CB[b]).matrix)
            assert (D == want).all()
            d = tc.inder_j.element(v[rd.start:rd.stop])
            tab = cayley7.trace(cayley7.mul(CB[a], CB[b]))
            want = f.reduce(2 * tab * jordan_inner_derivation(h3k, JB[x], JB[y]).matrix)
            assert (d == want).all()


def test_square_symmetry_small():
    for a, b in [("binarion", "matrix2"), ("ground-field", "binarion")]:
        assert magic_square_entry(a, b, GF5).dim == magic_square_entry(b, a, GF5).dim


# --- char-3 variant --------------------------------------------------------
def test_char3_tits_ground_field(cayley3):
    k = build_composition("ground-field", GF3).algebra
    tc = build_tits_char3(cayley3, k, Subspace(GF3, 1))
    assert tc.algebra.dim == 7
    assert check_super_jacobi(tc.algebra).passed


def test_char3_tits_divided_powers(cayley3):
    G = build_divided_powers(1, GF3).algebra
    A0 = Subspace.span(GF3, 3, [G.basis_vector(1), G.basis_vector(2)])
    tc = build_tits_char3(cayley3, G, A0)
    assert tc.algebra.dim == 7 + 7 * 2 + tc.inder_j.dim
    assert check_super_anticommutativity(tc.algebra).passed
    assert check_super_jacobi(tc.algebra).passed


def test_char3_tits_preconditions(cayley3, cayley7):
    G = build_divided_powers(1, GF3).algebra
    with_unit = Subspace.span(GF3, 3, [G.basis_vector(0), G.basis_vector(1)])
    with pytest.raises(ValueError):
        build_tits_char3(cayley3, G, with_unit)
    with pytest.raises(ValueError):
        build_tits_char3(cayley3, G, Subspace.span(GF3, 3, [G.basis_vector(1)]))
    with pytest.raises(FieldError):
        build_tits_char3(cayley7, G, with_unit)
    nonunital = Superalgebra(GF3, ["a", "b"], {(0, 0): {1: 1}})
    with pytest.raises(ValueError):
        build_tits_char3(cayley3, nonunital, Subspace.span(GF3, 2, [nonunital.basis_vector(1)]))


def test_char3_tits_needs_associators_in_a0(cayley3):
    # unital, commutative, a^2 = b, b^2 = a: the associators span {a, b}
    T = {(0, 0): {0: 1}}
    for i in (1, 2):
        T[(0, i)] = T[(i, 0)] = {i: 1}
    T[(1, 1)] = {2: 1}
    T[(2, 2)] = {1: 1}
    A = Superalgebra(GF3, ["1", "a", "b"], T)
    A0 = Subspace.span(GF3, 3, [A.vector({"a": 1}), A.vector({"1": 1, "b": 1})])
    with pytest.raises(ValueError, match="associator"):
        build_tits_char3(cayley3, A, A0)
