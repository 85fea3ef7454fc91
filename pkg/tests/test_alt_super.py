import pytest

from tits3.algebra import (check_commutative_super, check_grading, check_jacobiA_identity,
                           check_super_alternative, is_derivation, is_invariant, spin_submodule)
from tits3.altsuper import (build_b12, build_b_gamma, build_divided_powers, check_d_simple,
                            d_simplicity_certificate, is_simple_super)
from tits3.jordan import find_unit
from tits3.scalars import GF3, GF7, FieldError


def test_b12(b12):
    v = lambda lab: b12.basis_vector(b12.index(lab))
    assert b12.parity == (0, 1, 1)
    assert (b12.multiply(v("u"), v("v")) == v("1")).all()
    assert (b12.multiply(v("v"), v("u")) == GF3.reduce(-v("1"))).all()
    assert not b12.multiply(v("u"), v("u")).any()
    assert not b12.multiply(v("v"), v("v")).any()
    for check in (check_commutative_super, check_super_alternative, check_jacobiA_identity):
        assert check(b12).passed


def test_char3_only():
    with pytest.raises(FieldError):
        build_b12(GF7)
    with pytest.raises(FieldError):
        build_divided_powers(1, GF7)


def test_divided_powers():
    G = build_divided_powers(1, GF3)
    A = G.algebra
    t = lambda r: A.basis_vector(r)
    assert A.dim == 3 and A.degree == (0, 2, 4)
    assert (A.multiply(t(1), t(1)) == GF3.reduce(2 * t(2))).all()
    assert not A.multiply(t(1), t(2)).any()
    assert (G.D.matrix @ t(2) % 3 == t(1)).all()
    assert not (G.D.matrix @ t(0) % 3).any()
    assert is_derivation(A, G.D).passed
    assert build_divided_powers(2, GF3).dim == 9
    with pytest.raises(ValueError):
        build_divided_powers(0, GF3)


@pytest.mark.parametrize("N", [1, 2])
def test_b_gamma(N):
    B = build_b_gamma(build_divided_powers(N, GF3))
    A = B.algebra
    n = 3 ** N
    assert A.dim == 2 * n
    for check in (check_commutative_super, check_super_alternative, check_jacobiA_identity,
                  check_grading):
        assert check(A).passed
    # (1u)(t1 u) = 1 and t1 (1u) = t1 u
    e = A.basis_vector
    assert (A.multiply(e(B.odd(0)), e(B.odd(1))) == e(B.even(0))).all()
    assert (A.multiply(e(B.even(1)), e(B.odd(0))) == e(B.odd(1))).all()
    # one-dimensional homogeneous components from -1 to 2(3^N - 1)
    degs = sorted(A.degree)
    assert degs == list(range(-1, 2 * (n - 1) + 1))
    unit = find_unit(A)
    assert (unit == e(0)).all()


@pytest.mark.parametrize("N", [1, 2])
def test_canonical_d_simple(N):
    G = build_divided_powers(N, GF3)
    assert check_d_simple(G)
    ops = list(G.algebra.left_ops()) + [G.D.matrix]
    # independent check: every basis vector generates a D-invariant ideal that is everything
    for i in range(G.dim):
        assert spin_submodule(ops, [G.algebra.basis_vector(i)], GF3).dim == G.dim


@pytest.mark.parametrize("N", [1, 2])
def test_zero_derivation_not_d_simple(N):
    G = build_divided_powers(N, GF3)
    Z = G.with_derivation(GF3.zeros((G.dim, G.dim)))
    cert = d_simplicity_certificate(Z)
    assert not cert.irreducible
    ops = list(G.algebra.left_ops())
    assert is_invariant(cert.subspace, ops)
    # the augmentation ideal t^(1), ..., t^(top) is proper and invariant
    rest = [G.algebra.basis_vector(r) for r in range(1, G.dim)]
    aug = spin_submodule(ops, rest, GF3)
    assert aug.dim == G.dim - 1 and not aug.contains(G.algebra.basis_vector(0))


def test_other_nilpotent_maps_not_d_simple():
    G = build_divided_powers(1, GF3)
    m = GF3.zeros((3, 3))
    assert not check_d_simple(G.with_derivation(m))
    m[1, 2] = 1   # t2 -> t1, t1 -> 0
    assert not check_d_simple(G.with_derivation(m))


def test_simplicity(b12):
    assert is_simple_super(b12)
    B = build_b_gamma(build_divided_powers(1, GF3))
    assert is_simple_super(B.algebra)
    assert not is_simple_super(build_divided_powers(1, GF3).algebra)
