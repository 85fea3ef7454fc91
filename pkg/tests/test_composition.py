import numpy as np
import pytest

from tits3.algebra import (LinearMap, equivariant_hom_dimension, compute_derivation_algebra,
                           is_derivation, is_invariant, is_simple, quotient, spin_submodule,
                           tensor_action, trivial_ops, center)
from tits3.composition import (KINDS, bracket_algebra, build_composition, check_composition,
                               inder_algebra, inner_derivation, restricted_norm, trace_zero_subspace)
from tits3.linalg import Subspace, matmul
from tits3.scalars import GF3, GF5, GF7, Q, Field, FieldError


@pytest.mark.parametrize("field", [GF3, GF5, GF7, Q], ids=str)
@pytest.mark.parametrize("kind", KINDS)
def test_composition_axioms(kind, field):
    C = build_composition(kind, field)
    assert C.dim in (1, 2, 4, 8)
    assert check_composition(C, samples=40 if field is Q else 100).passed


def test_cayley_table_entries(cayley7):
    C = cayley7
    f = C.field
    assert (C.mul(C.vec("u1"), C.vec("v1")) == f.reduce(-C.vec("e1"))).all()
    assert C.n(C.vec("e1"), C.vec("e2")) == 1
    assert C.trace(C.vec("e1")) == 1
    for j in "123":
        for k in "123":
            assert C.n(C.vec("u" + j), C.vec("v" + k)) == (j == k)


def test_norm_is_symmetric(cayley7):
    m = cayley7.norm_form.matrix
    assert (m == m.T).all()


def test_composition_rejects_char_two():
    with pytest.raises(FieldError):
        build_composition("split-cayley", Field(2))


def test_broken_norm_is_detected(cayley7):
    from dataclasses import replace
    from tits3.algebra import BilinearForm
    m = cayley7.norm_form.matrix.copy()
    m[0, 1] = m[1, 0] = 2
    bad = replace(cayley7, norm_form=BilinearForm(m))
    assert not check_composition(bad).passed


@pytest.mark.parametrize("kind,dim", [("split-cayley", 7), ("ground-field", 0), ("matrix2", 3),
                                      ("binarion", 1)])
def test_trace_zero_dims(kind, dim):
    assert trace_zero_subspace(build_composition(kind, GF7)).dim == dim


def test_bracket_constants(s3):
    s, _ = s3
    f = GF3
    v = lambda lab: s.basis_vector(s.index(lab))
    assert s.labels == ("h", "u1", "u2", "u3", "v1", "v2", "v3")
    assert (s.multiply(v("h"), v("u1")) == f.reduce(2 * v("u1"))).all()
    assert (s.multiply(v("u1"), v("v1")) == f.reduce(-v("h"))).all()
    assert (s.multiply(v("u1"), v("u2")) == f.reduce(2 * v("v3"))).all()


def test_inner_derivation_examples(cayley3, cayley7):
    for C in (cayley3, cayley7):
        f = C.field
        rng = np.random.default_rng(5)
        a, b = f.random_array(rng, 8), f.random_array(rng, 8)
        assert f.is_zero(inner_derivation(C, C.unit, b).matrix)
        assert f.is_zero(inner_derivation(C, a, b).matrix + inner_derivation(C, b, a).matrix)
    C = cayley3
    f = C.field
    for a in C.algebra.labels:
        for b in C.algebra.labels:
            x, y = C.vec(a), C.vec(b)
            ab = C.commutator(x, y)
            ad = f.reduce(C.algebra.left_matrix(ab) - C.algebra.right_matrix(ab))
            assert (inner_derivation(C, x, y).matrix == ad).all()


@pytest.mark.parametrize("kind", KINDS)
def test_dcyclic(kind):
    C = build_composition(kind, GF7)
    f = C.field
    e = [C.algebra.basis_vector(i) for i in range(C.dim)]
    D = lambda x, y: inner_derivation(C, x, y).matrix
    for a in e:
        for b in e:
            for c in e:
                tot = D(C.mul(a, b), c) + D(C.mul(b, c), a) + D(C.mul(c, a), b)
                assert f.is_zero(tot)


def test_abb_identity(s3):
    s, n = s3
    f = GF3
    for i in range(7):
        for j in range(7):
            a, b = s.basis_vector(i), s.basis_vector(j)
            lhs = s.multiply(s.multiply(a, b), b)
            rhs = f.reduce(n(f, b, b) * a - n(f, a, b) * b)
            assert (lhs == rhs).all(), (s.labels[i], s.labels[j])


@pytest.mark.parametrize("field,dim", [(GF5, 14), (GF7, 14), (GF3, 7)], ids=str)
def test_inder_cayley(field, dim):
    C = build_composition("split-cayley", field)
    inder = inder_algebra(C)
    assert inder.dim == dim
    N = C.norm_form.matrix
    for op in inder.operators:
        assert is_derivation(C.algebra, op).passed
        # norm invariance: n(Da, b) + n(a, Db) = 0
        assert field.is_zero(matmul(field, op.matrix.T, N) + matmul(field, N, op.matrix))


def test_inder_matrix2():
    assert inder_algebra(build_composition("matrix2", GF7)).dim == 3


def test_s_is_simple_centerless(s3):
    s, _ = s3
    assert s.dim == 7 and is_simple(s) and center(s).dim == 0


def test_s_tensor_s(s3):
    s, _ = s3
    ad = list(s.left_ops())
    act = tensor_action(GF3, ad, ad)
    u1, v1 = s.basis_vector(s.index("u1")), s.basis_vector(s.index("v1"))
    seed = GF3.reduce(np.kron(u1, v1))
    assert spin_submodule(act, [seed], GF3).dim == 49
    assert equivariant_hom_dimension(act, ad, GF3) == 1
    assert equivariant_hom_dimension(act, trivial_ops(GF3, 7), GF3, tgt_dim=1) == 1


def test_der_cayley_char3(cayley3):
    f = GF3
    C = cayley3
    der = compute_derivation_algebra(C.algebra)
    assert der.dim == 14
    c0 = trace_zero_subspace(C)
    ads = [f.reduce(C.algebra.left_matrix(x) - C.algebra.right_matrix(x)) for x in c0.basis]
    ideal = Subspace.span(f, der.dim, [der.require_coords(m) for m in ads])
    assert ideal.dim == 7
    L = der.algebra
    assert is_invariant(ideal, L.left_ops())
    Q7 = quotient(L, ideal)
    assert Q7.dim == 7 and is_simple(Q7)
