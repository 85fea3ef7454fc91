import numpy as np
import pytest

from tits3.algebra import (Superalgebra, check_commutative_super, check_grading,
                           check_super_alternative, check_super_anticommutativity,
                           check_super_jacobi, direct_sum_parts, is_derivation, is_simple,
                           LinearMap, random_tuple_check, supercommutator)
from tits3.altsuper import build_b_gamma, build_divided_powers
from tits3.char3 import (GradedDecomposition, assign_bj_grading, build_char3_superalgebra,
                         check_inner_derivation_data, check_simplicity_criteria, even_part,
                         expected_bj_profile, flip_odd_product, ideal_as_algebra,
                         inner_derivation_superspace, minimal_ideals, recover_coordinate_algebra,
                         recovered_in_original_basis, spot_check_sotimes, verify_bj_profile,
                         verify_dx_delta_formulas, verify_s_action)
from tits3.composition import build_composition
from tits3.linalg import rank
from tits3.scalars import GF3


def ground(field=GF3):
    return build_composition("ground-field", field).algebra


def zero_line():
    return Superalgebra(GF3, ["z"], {}, name="zero")


# --- d_{A,A} -------------------------------------------------------------------
def test_inner_derivations_of_small_algebras(b12):
    assert inner_derivation_superspace(ground()).dim == 0
    data = inner_derivation_superspace(b12)
    assert data.dim == 3
    assert all(op.parity == 0 for op in data.ops.operators)
    assert check_inner_derivation_data(data).passed


@pytest.mark.parametrize("N", [1, 2])
def test_inner_derivations_of_b_gamma(N):
    B = build_b_gamma(build_divided_powers(N, GF3))
    data = inner_derivation_superspace(B.algebra)
    n = 3 ** N
    assert data.dim == 2 * n
    pars = [op.parity for op in data.ops.operators]
    assert pars.count(0) == n and pars.count(1) == n
    assert check_inner_derivation_data(data).passed


def test_phi_is_the_supercommutator_of_multiplications(b12):
    """Phi(d_{a1,a2}) = z -> a1(a2 z) - (-1)^{|a1||a2|} a2(a1 z) on basis pairs."""
    for A in (b12, build_b_gamma(build_divided_powers(1, GF3)).algebra):
        data = inner_derivation_superspace(A)
        f = A.field
        for i in range(A.dim):
            for j in range(A.dim):
                op = data.phi(data.pairs[i, j])
                for k in range(A.dim):
                    z = A.basis_vector(k)
                    a1, a2 = A.basis_vector(i), A.basis_vector(j)
                    sign = -1 if A.parity[i] * A.parity[j] else 1
                    want = f.reduce(A.multiply(a1, A.multiply(a2, z))
                                    - sign * A.multiply(a2, A.multiply(a1, z)))
                    assert (f.reduce(op @ z) == want).all()
                assert is_derivation(A, LinearMap(op, (A.parity[i] + A.parity[j]) % 2)).passed


def test_dx_delta_formulas():
    B = build_b_gamma(build_divided_powers(1, GF3))
    data = inner_derivation_superspace(B.algebra)
    assert verify_dx_delta_formulas(B, data).passed
    G2 = B.base.with_derivation(GF3.reduce(2 * B.base.D.matrix))
    B2 = build_b_gamma(G2)
    assert verify_dx_delta_formulas(B2, inner_derivation_superspace(B2.algebra)).passed
    Bf = flip_odd_product(B)
    rep = verify_dx_delta_formulas(Bf, inner_derivation_superspace(Bf.algebra, check=False))
    assert not rep.passed


# --- g = (s (x) A) + d ----------------------------------------------------------
def test_ground_field_gives_s(s3):
    s, n = s3
    c = build_char3_superalgebra(s, n, ground())
    assert c.g.dim == 7
    assert c.g.table == s.table


def test_bj_structure(bj):
    g = bj.g
    assert g.dim == 24
    assert len(g.even_indices()) == 10 and len(g.odd_indices()) == 14
    assert check_super_anticommutativity(g).passed
    assert check_super_jacobi(g).passed
    assert random_tuple_check(g, "jacobi", 100, 0xC3A1).passed
    assert verify_s_action(bj).passed
    assert spot_check_sotimes(bj).passed


def test_s_action_by_derivations(bj1):
    _, c, _ = bj1
    g = c.g
    for op in c.rho:
        assert is_derivation(g, op).passed
    ops = c.rho.operators
    s = c.s
    f = GF3
    for i in range(s.dim):
        for j in range(s.dim):
            br = s.multiply(s.basis_vector(i), s.basis_vector(j))
            lhs = f.reduce(np.tensordot(br, np.stack([o.matrix for o in ops]), axes=1))
            rhs = supercommutator(f, ops[i], ops[j]).matrix
            assert (lhs == rhs).all()


def test_bj_big_dims(bj1, bj2):
    assert bj1[1].g.dim == 48 and bj2[1].g.dim == 144
    assert bj1[1].data.dim == 6 and bj2[1].data.dim == 18


def test_bj1_suite(bj1):
    _, c, _ = bj1
    assert check_super_anticommutativity(c.g).passed
    assert check_super_jacobi(c.g).passed
    assert verify_s_action(c).passed
    assert spot_check_sotimes(c).passed


# --- simplicity criteria ----------------------------------------------------------
def _criteria(s3, A):
    s, n = s3
    return check_simplicity_criteria(build_char3_superalgebra(s, n, A))


def test_simplicity_criteria_b12(s3, b12):
    crit = _criteria(s3, b12)
    assert crit.as_tuple() == (True, True, True, True) and crit.consistent


def test_simplicity_criteria_zero_line(s3):
    crit = _criteria(s3, zero_line())
    assert crit.as_tuple() == (True, True, False, False) and crit.consistent


def test_simplicity_criteria_gamma(s3):
    crit = _criteria(s3, build_divided_powers(1, GF3).algebra)
    assert not crit.a_simple and not crit.g_simple and crit.consistent


def test_simplicity_criteria_b_gamma(s3):
    crit = _criteria(s3, build_b_gamma(build_divided_powers(1, GF3)).algebra)
    assert crit.as_tuple() == (True, True, True, True)


# --- grading ------------------------------------------------------------------------
@pytest.mark.parametrize("which", ["bj1", "bj2"])
def test_grading_components(which, request):
    B, c, grading = request.getfixturevalue(which)
    N = B.base.N
    top = 2 * 3 ** N - 1
    assert grading.profile == expected_bj_profile(N)
    dset = set(c.d_indices)
    comps = grading.components
    # g_{-2} = k D
    (i,) = comps[-2]
    assert i in dset
    op = c.data.phi(c.g.basis_vector(i)[c.d_indices.start:])
    n = B.base.dim
    both = np.stack([op[:n, :n].reshape(-1), B.base.D.matrix.reshape(-1)])
    assert rank(both, GF3) == 1
    # d_{-1} = 0 = d_{top-1}
    assert not dset & set(comps[-1]) and not dset & set(comps[top - 1])
    # the top component is a single odd element of d
    (t,) = comps[top]
    assert t in dset and c.g.parity[t] == 1


def test_bj_profile_n1(bj1):
    _, c, grading = bj1
    prof = verify_bj_profile(c.g, grading, 1)
    assert prof.report.passed
    assert prof.center_dim == 1 and prof.derived_dim == 7 and prof.derived_simple


def test_bj_profile_rejects_flipped_u(bj1):
    B, c, grading = bj1
    g = c.g
    # move every s (x) t^(r)u from degree 2r - 1 to 2r + 1
    deg = list(grading.degree)
    for i in range(c.sdim):
        for r in range(B.base.dim):
            deg[c.sa(i, B.odd(r))] += 2
    bad = GradedDecomposition.from_degrees(deg)
    assert not verify_bj_profile(g, bad, 1).report.passed


def test_grading_requires_degrees(bj):
    with pytest.raises(ValueError):
        assign_bj_grading(bj)


# --- recovery -----------------------------------------------------------------------
def test_recover_b12(bj, b12):
    rec = recover_coordinate_algebra(bj.g, bj.rho, bj.norm)
    assert rec.A.dim == 3 and rec.d.dim == 3
    assert check_commutative_super(rec.A).passed and check_super_alternative(rec.A).passed
    again = recovered_in_original_basis(bj, rec)
    assert again.table == b12.table and again.parity == b12.parity


def test_recover_ground_field(s3):
    s, n = s3
    c = build_char3_superalgebra(s, n, ground())
    rec = recover_coordinate_algebra(c.g, c.rho, n)
    assert rec.A.dim == 1 and rec.d.dim == 0
    assert rec.A.table == {(0, 0): {0: 1}}


def test_recover_b_gamma(bj1):
    B, c, _ = bj1
    rec = recover_coordinate_algebra(c.g, c.rho, c.norm)
    assert rec.d.dim == 6
    again = recovered_in_original_basis(c, rec)
    assert again.table == B.algebra.table and again.parity == B.algebra.parity


# --- even part of bj ------------------------------------------------------------------
def test_bj_even_part(bj):
    g0 = even_part(bj)
    assert g0.dim == 10
    ideals = minimal_ideals(g0)
    assert sorted(i.dim for i in ideals) == [3, 7]
    assert direct_sum_parts(g0, ideals)
    for I in ideals:
        assert is_simple(ideal_as_algebra(g0, I))
