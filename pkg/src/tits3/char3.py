"""The characteristic-3 superalgebras ``g = (s (x) A) + d_{A,A}``.

``s`` is the Lie algebra of trace-zero elements of a split Cayley algebra
in characteristic 3 (a form of psl_3) and ``A`` is a commutative
alternative superalgebra.  The bracket is

    [d, s (x) a] = s (x) d(a)
    [s1 (x) a1, s2 (x) a2] = [s1, s2] (x) a1 a2 + n(s1, s2) d_{a1, a2}

with ``d_{a1, a2} = [l_{a1}, l_{a2}]`` (a supercommutator of left
multiplications) and ``d_{A,A}`` a Lie superalgebra of operators on ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import (DEFAULT_SEED, BilinearForm, LinearMap, OperatorAlgebra, Superalgebra,
                      VerificationReport, _first_nonzero, center, check_commutative_super,
                      check_grading, check_super_alternative, derived_subalgebra,
                      equivariant_homs, ideal_generated, is_derivation, is_simple,
                      multiplication_operators, subalgebra, supercommutator)
from .altsuper import BGammaD
from .linalg import Subspace, kernel, matmul, rank, solve
from .scalars import FieldError


def _sg(p: int) -> int:
    return -1 if p % 2 else 1


def _operator_degree(op: np.ndarray, degree) -> int | None:
    """``delta`` with ``op(A_i) <= A_{i+delta}``, or None when not homogeneous."""
    rows, cols = np.nonzero(op)
    shifts = {degree[r] - degree[c] for r, c in zip(rows, cols)}
    if len(shifts) > 1:
        return None
    return shifts.pop() if shifts else 0


# ---------------------------------------------------------------------------
# d_{A,A}
# ---------------------------------------------------------------------------
@dataclass
class InnerDerivationData:
    """``d_{A,A}`` with the assignment ``(i, j) -> coordinates of d_{b_i, b_j}``."""

    algebra: Superalgebra            # the coordinate algebra A
    ops: OperatorAlgebra             # canonical basis of d_{A,A}; Phi is the inclusion
    pairs: np.ndarray                # (m, m, k) coordinates of d_{b_i, b_j}

    @property
    def dim(self) -> int:
        return self.ops.dim

    @property
    def lie(self) -> Superalgebra:
        return self.ops.algebra

    def phi(self, coords) -> np.ndarray:
        """Operator on ``A`` with the given coordinates."""
        return self.ops.element(coords)

    def d(self, x, y) -> np.ndarray:
        """Coordinates of ``d_{x,y}`` for arbitrary vectors ``x, y``."""
        f = self.algebra.field
        if self.dim == 0:
            return f.zeros(0)
        return _pair_eval(f, self.pairs, x, y)


def _pair_eval(f, pairs, x, y):
    m, _, k = pairs.shape
    xy = f.reduce(np.outer(x, y)).reshape(-1)
    return f.reduce(matmul(f, xy, pairs.reshape(m * m, k)))


def left_supercommutator(A: Superalgebra, i: int, j: int) -> LinearMap:
    """``[l_{b_i}, l_{b_j}] = l_i l_j - (-1)^{|i||j|} l_j l_i``."""
    f = A.field
    li = LinearMap(A.left_ops()[i], A.parity[i])
    lj = LinearMap(A.left_ops()[j], A.parity[j])
    return supercommutator(f, li, lj)


def inner_derivation_superspace(A: Superalgebra, check: bool = True) -> InnerDerivationData:
    """Canonical basis of ``d_{A,A}``; ``A`` must be commutative alternative."""
    if check:
        for rep in (check_commutative_super(A), check_super_alternative(A)):
            if not rep.passed:
                raise ValueError(f"{A.name} fails {rep.identity}: {rep.counterexample}")
    f = A.field
    m = A.dim
    L = A.left_ops()
    par = np.array(A.parity)
    # all supercommutators at once: C[i, j] = L_i L_j - s_ij L_j L_i
    LL = f.reduce(np.einsum("iab,jbc->ijac", L, L))
    sg = np.where(np.outer(par, par) % 2 == 1, -1, 1)[:, :, None, None]
    C = f.reduce(LL - sg * LL.transpose(1, 0, 2, 3))
    gens = [C[i, j] for i in range(m) for j in range(i, m)]
    ops = OperatorAlgebra(f, m, gens, A.parity, name=f"d({A.name})", label_prefix="d")
    k = ops.dim
    pairs = f.zeros((m, m, k))
    if k:
        for i in range(m):
            for j in range(m):
                pairs[i, j] = ops.require_coords(C[i, j])
    return InnerDerivationData(A, ops, pairs)


def check_inner_derivation_data(data: InnerDerivationData) -> VerificationReport:
    """Derivation property, super skew symmetry, cyclic relation and the ``d_{a1,a2}`` formula."""
    A = data.algebra
    f = A.field
    m = A.dim
    name = f"d({A.name})"
    for op in data.ops.operators:
        rep = is_derivation(A, op)
        if not rep.passed:
            return rep
    par = A.parity
    for i in range(m):
        for j in range(m):
            lhs = data.pairs[i, j]
            rhs = f.reduce(-_sg(par[i] * par[j]) * data.pairs[j, i])
            if not f.is_zero(f.reduce(lhs - rhs)):
                return VerificationReport("d_skew", False, i * m + j + 1,
                                          {"indices": [i, j], "labels": [A.labels[i], A.labels[j]],
                                           "lhs": [f.to_str(x) for x in lhs],
                                           "rhs": [f.to_str(x) for x in rhs]}, name)
            # Phi(d_{a1,a2}) z = a1 (a2 z) - (-1)^{|a1||a2|} a2 (a1 z)
            phi = data.phi(data.pairs[i, j]) if data.dim else f.zeros((m, m))
            e = [A.basis_vector(t) for t in (i, j)]
            for z in range(m):
                ez = A.basis_vector(z)
                want = f.reduce(A.multiply(e[0], A.multiply(e[1], ez))
                                - _sg(par[i] * par[j]) * A.multiply(e[1], A.multiply(e[0], ez)))
                got = f.reduce(phi[:, z])
                if not f.is_zero(f.reduce(got - want)):
                    return VerificationReport("d_formula", False, (i * m + j) * m + z + 1,
                                              {"indices": [i, j, z],
                                               "labels": [A.labels[t] for t in (i, j, z)],
                                               "lhs": [f.to_str(x) for x in got],
                                               "rhs": [f.to_str(x) for x in want]}, name)
    if data.dim == 0:
        return VerificationReport("inner_derivations", True, m * m, None, name)
    # cyclic: d_{a1a2,a3} + (-1)^{|a1|(|a2|+|a3|)} d_{a2a3,a1} + (-1)^{|a3|(|a1|+|a2|)} d_{a3a1,a2}
    T = A.tensor()
    k = data.dim
    P = data.pairs
    # d_{e_i e_j, e_l} = sum_c T[i, j, c] P[c, l]
    dprod = f.reduce(matmul(f, T.reshape(m * m, m), P.reshape(m, m * k))).reshape(m, m, m, k)
    p = np.array(par)
    s2 = np.where((p[:, None, None] * (p[None, :, None] + p[None, None, :])) % 2 == 1, -1, 1)
    s3 = np.where((p[None, None, :] * (p[:, None, None] + p[None, :, None])) % 2 == 1, -1, 1)
    total = (dprod
             + s2[..., None] * dprod.transpose(2, 0, 1, 3)   # d_{a2 a3, a1} at (a1, a2, a3)
             + s3[..., None] * dprod.transpose(1, 2, 0, 3))  # d_{a3 a1, a2}
    total = f.reduce(total)
    bad = _first_nonzero(f, total)
    if bad is not None:
        i, j, l = (int(x) for x in bad)
        return VerificationReport("d_cyclic", False, m ** 3,
                                  {"indices": [i, j, l], "labels": [A.labels[t] for t in (i, j, l)],
                                   "lhs": [f.to_str(x) for x in total[i, j, l]],
                                   "rhs": ["0"] * k}, name)
    return VerificationReport("inner_derivations", True, m ** 3, None, name)


# ---------------------------------------------------------------------------
# the d_x / delta_x description for B(Gamma, D, 0)
# ---------------------------------------------------------------------------
def dx_operator(B: BGammaD, x) -> np.ndarray:
    """``d_x``: ``c -> x D(c)`` on Gamma, ``yu -> D(xy) u``."""
    f = B.field
    n = B.base.dim
    G = B.base.algebra
    Dm = B.base.D.matrix
    Lx = G.left_matrix(x)
    op = f.zeros((2 * n, 2 * n))
    op[:n, :n] = matmul(f, Lx, Dm)
    op[n:, n:] = matmul(f, Dm, Lx)
    return f.reduce(op)


def delta_operator(B: BGammaD, x) -> np.ndarray:
    """``delta_x``: zero on Gamma, ``yu -> xy``."""
    f = B.field
    n = B.base.dim
    op = f.zeros((2 * n, 2 * n))
    op[:n, n:] = B.base.algebra.left_matrix(x)
    return op


def verify_dx_delta_formulas(B: BGammaD, data: InnerDerivationData) -> VerificationReport:
    """Check the ``[l_au, l_bu]`` and ``[l_a, l_bu]`` evaluations and the spans.

    The evaluations

        [l_au, l_bu](c) = ab D'(c),  [l_au, l_bu](cu) = D'(abc) u,
        [l_a, l_bu](c) = 0,          [l_a, l_bu](cu) = (D'(a) b) c

    are the expansions for the product ``(au)(bu) = D'(a)b - aD'(b)``.  ``B``
    is built with ``(au)(bu) = aD(b) - D(a)b``, so ``D' = -D`` here.  Since
    ``-D`` is again a derivation making ``Gamma`` D-simple, only signs move;
    the spans of ``d_x`` and ``delta_x`` are unaffected.
    """
    f = B.field
    n = B.base.dim
    A = B.algebra
    G = B.base.algebra
    Dm = f.reduce(-B.base.D.matrix)
    name = f"d({A.name})"
    checked = 0

    def D(v):
        return f.reduce(matmul(f, Dm, v))

    def gm(x, y):
        return G.multiply(x, y)

    def fail(label, idx, got, want):
        return VerificationReport(label, False, checked,
                                  {"indices": list(idx),
                                   "labels": [G.labels[t] for t in idx],
                                   "lhs": [f.to_str(v) for v in got],
                                   "rhs": [f.to_str(v) for v in want]}, name)

    L = A.left_ops()
    for a in range(n):
        for b in range(n):
            lau_lbu = f.reduce(matmul(f, L[n + a], L[n + b]) + matmul(f, L[n + b], L[n + a]))
            la_lbu = f.reduce(matmul(f, L[a], L[n + b]) - matmul(f, L[n + b], L[a]))
            ea, eb = G.basis_vector(a), G.basis_vector(b)
            ab = gm(ea, eb)
            Dab = f.reduce(gm(D(ea), eb))
            for c in range(n):
                checked += 1
                ec = G.basis_vector(c)
                zeros = f.zeros(n)
                # [l_au, l_bu](c) = ab D(c)
                got = lau_lbu[:, c]
                want = np.concatenate([gm(ab, D(ec)), zeros])
                if not f.is_zero(f.reduce(got - want)):
                    return fail("lau_lbu_even", (a, b, c), got, want)
                # [l_au, l_bu](cu) = D(abc) u
                got = lau_lbu[:, n + c]
                want = np.concatenate([zeros, D(gm(ab, ec))])
                if not f.is_zero(f.reduce(got - want)):
                    return fail("lau_lbu_odd", (a, b, c), got, want)
                # [l_a, l_bu](c) = 0 and [l_a, l_bu](cu) = (D(a) b) c
                got = la_lbu[:, c]
                if not f.is_zero(got):
                    return fail("la_lbu_even", (a, b, c), got, f.zeros(2 * n))
                got = la_lbu[:, n + c]
                want = np.concatenate([gm(Dab, ec), zeros])
                if not f.is_zero(f.reduce(got - want)):
                    return fail("la_lbu_odd", (a, b, c), got, want)
    # spans: even part = span{d_x}, odd part = span{delta_x}
    even = Subspace.span(f, 4 * n * n, [dx_operator(B, G.basis_vector(x)).reshape(-1) for x in range(n)])
    odd = Subspace.span(f, 4 * n * n, [delta_operator(B, G.basis_vector(x)).reshape(-1) for x in range(n)])
    ops = data.ops.operators
    ev = Subspace.span(f, 4 * n * n, [o.matrix.reshape(-1) for o in ops if o.parity == 0])
    od = Subspace.span(f, 4 * n * n, [o.matrix.reshape(-1) for o in ops if o.parity == 1])
    rep = VerificationReport("dx_delta", True, checked, None, name)
    if ev != even or od != odd:
        rep = VerificationReport("dx_delta_span", False, checked,
                                 {"indices": [], "labels": [],
                                  "lhs": [str(ev.dim), str(od.dim)],
                                  "rhs": [str(even.dim), str(odd.dim)]}, name)
    return rep


def flip_odd_product(B: BGammaD) -> BGammaD:
    """Same algebra with ``(au)(bu)`` negated (a deliberately broken variant)."""
    f = B.field
    n = B.base.dim
    T = B.algebra.tensor().copy()
    T[n:, n:, :n] = f.reduce(-T[n:, n:, :n])
    A = B.algebra
    alg = Superalgebra.from_tensor(f, A.labels, T, A.parity, A.degree, name=A.name + "~")
    return BGammaD(B.base, alg)


# ---------------------------------------------------------------------------
# g = (s (x) A) + d
# ---------------------------------------------------------------------------
@dataclass
class SAction:
    """``rho(s_i)`` as operators on ``g`` indexed by the ``s`` basis."""

    s: Superalgebra
    operators: list[LinearMap]

    def __iter__(self):
        return iter(self.operators)

    def __len__(self):
        return len(self.operators)


@dataclass
class Char3Superalgebra:
    s: Superalgebra
    norm: BilinearForm
    A: Superalgebra
    data: InnerDerivationData
    g: Superalgebra
    rho: SAction
    notes: list[str] = dc_field(default_factory=list)

    def __iter__(self):
        yield self.g
        yield self.rho

    @property
    def sdim(self) -> int:
        return self.s.dim

    @property
    def adim(self) -> int:
        return self.A.dim

    def sa(self, i: int, a: int) -> int:
        """Index of ``s_i (x) a_a``."""
        return i * self.adim + a

    def dindex(self, e: int) -> int:
        return self.sdim * self.adim + e

    @property
    def d_indices(self) -> range:
        return range(self.sdim * self.adim, self.g.dim)


def build_char3_superalgebra(s: Superalgebra, norm: BilinearForm, A: Superalgebra,
                             data: InnerDerivationData | None = None,
                             name: str | None = None) -> Char3Superalgebra:
    f = s.field
    if f.char != 3:
        raise FieldError("the (s (x) A) + d construction needs characteristic 3")
    if A.field != f:
        raise FieldError("s and A live over different fields")
    if data is None:
        data = inner_derivation_superspace(A)
    n, m, k = s.dim, A.dim, data.dim
    N = n * m + k
    S = s.tensor()
    At = A.tensor()
    Nm = f.reduce(norm.matrix)
    T = f.zeros((N, N, N))
    sm = n * m
    # [s_i (x) a, s_j (x) b] = [s_i, s_j] (x) ab + n(s_i, s_j) d_{a,b}
    T[:sm, :sm, :sm] = f.reduce(np.einsum("ijk,abc->iajbkc", S, At)).reshape(sm, sm, sm)
    if k:
        T[:sm, :sm, sm:] = f.reduce(np.einsum("ij,abe->iajbe", Nm, data.pairs)).reshape(sm, sm, k)
        # [d_e, s_i (x) a] = s_i (x) d_e(a); [s_i (x) a, d_e] = -(-1)^{|e||a|} s_i (x) d_e(a)
        for e, op in enumerate(data.ops.operators):
            M = op.matrix
            for a in range(m):
                sign = -_sg(op.parity * A.parity[a])
                for c in np.flatnonzero(M[:, a] != 0):
                    for i in range(n):
                        T[sm + e, i * m + a, i * m + c] = M[c, a]
                        T[i * m + a, sm + e, i * m + c] = f.reduce(sign * M[c, a])
        for (p, q), row in data.lie.table.items():
            for r, c in row.items():
                T[sm + p, sm + q, sm + r] = c
    labels = [f"{s.labels[i]}@{A.labels[a]}" for i in range(n) for a in range(m)]
    labels += [f"d{e}" for e in range(k)]
    parity = [A.parity[a] for i in range(n) for a in range(m)] + [o.parity for o in data.ops.operators]
    degree = None
    if A.degree is not None:
        ddeg = [_operator_degree(o.matrix, A.degree) for o in data.ops.operators]
        if all(d is not None for d in ddeg):
            degree = [A.degree[a] for i in range(n) for a in range(m)] + ddeg
    g = Superalgebra.from_tensor(f, labels, f.reduce(T), parity=parity, degree=degree,
                                 name=name or f"(s*{A.name})+d")
    # rho(s_i) = ad_s(s_i) (x) id_A on s (x) A, zero on d
    rho_ops = []
    for i in range(n):
        R = f.zeros((N, N))
        R[:sm, :sm] = np.kron(s.left_matrix(s.basis_vector(i)), f.identity(m))
        rho_ops.append(LinearMap(f.reduce(R), 0))
    return Char3Superalgebra(s, norm, A, data, g, SAction(s, rho_ops))


def verify_s_action(c: Char3Superalgebra) -> VerificationReport:
    """Each ``rho(s)`` is a derivation of ``g`` and ``rho`` is a homomorphism."""
    f = c.g.field
    s = c.s
    name = c.g.name
    for i, op in enumerate(c.rho.operators):
        rep = is_derivation(c.g, op)
        if not rep.passed:
            rep.notes.append(f"rho({s.labels[i]})")
            return rep
    ops = np.stack([o.matrix for o in c.rho.operators])
    for i in range(s.dim):
        for j in range(s.dim):
            lhs = f.reduce(np.tensordot(s.tensor()[i, j], ops, axes=1))
            rhs = supercommutator(f, c.rho.operators[i], c.rho.operators[j]).matrix
            if not f.is_zero(f.reduce(lhs - rhs)):
                return VerificationReport("rho_homomorphism", False, i * s.dim + j + 1,
                                          {"indices": [i, j], "labels": [s.labels[i], s.labels[j]],
                                           "lhs": [], "rhs": []}, name)
    return VerificationReport("s_action", True, s.dim * s.dim, None, name)


def spot_check_sotimes(c: Char3Superalgebra, samples: int = 100,
                       seed: int = DEFAULT_SEED) -> VerificationReport:
    """The two cyclic identities on ``s (x) A`` triples, at random homogeneous elements.

    ``sum_cyc n([s1,s2],s3) d_{a1a2,a3} = 0`` and
    ``sum_cyc [[s1,s2],s3] (x) (a1a2)a3 + n(s1,s2) s3 (x) d_{a1,a2}(a3) = 0``,
    the cyclic terms carrying the Koszul signs of the ``a``'s.
    """
    f = c.g.field
    s, A, data = c.s, c.A, c.data
    rng = np.random.default_rng(seed)
    par = np.array(A.parity)
    n, m = s.dim, A.dim

    def nf(x, y):
        return c.norm(f, x, y)

    def rand_a():
        p = int(rng.integers(0, 2)) if par.any() and (1 - par).any() else int(par[0])
        return f.reduce(f.random_array(rng, m) * (par == p)), p

    for t in range(samples):
        ss = [f.random_array(rng, n) for _ in range(3)]
        aa = [rand_a() for _ in range(3)]
        tot_d = f.zeros(data.dim)
        tot_sa = f.zeros((n, m))
        for shift in range(3):
            (s1, s2, s3) = (ss[shift], ss[(shift + 1) % 3], ss[(shift + 2) % 3])
            (a1, p1), (a2, p2), (a3, p3) = (aa[shift], aa[(shift + 1) % 3], aa[(shift + 2) % 3])
            # Koszul sign of moving the first `shift` a's past the rest
            if shift == 0:
                sign = 1
            elif shift == 1:
                sign = _sg(p3 * (p1 + p2))   # (a2, a3, a1) from (a1, a2, a3): a1 moved past a2 a3
            else:
                sign = _sg(p1 * (p2 + p3))   # (a3, a1, a2): a3 moved to the front
            s12 = s.multiply(s1, s2)
            a12 = A.multiply(a1, a2)
            if data.dim:
                tot_d = tot_d + sign * f.reduce(nf(s12, s3) * _pair_eval(f, data.pairs, a12, a3))
            term1 = np.outer(s.multiply(s12, s3), A.multiply(a12, a3))
            dop = data.phi(_pair_eval(f, data.pairs, a1, a2)) if data.dim else f.zeros((m, m))
            term2 = np.outer(f.reduce(nf(s1, s2) * s3), matmul(f, dop, a3))
            tot_sa = tot_sa + sign * f.reduce(term1 + term2)
        if not (f.is_zero(f.reduce(tot_d)) and f.is_zero(f.reduce(tot_sa))):
            return VerificationReport("sotimes_cyclic", False, t + 1,
                                      {"indices": [], "labels": [], "sample": t,
                                       "lhs": [f.to_str(x) for x in f.reduce(tot_d)]
                                       + [f.to_str(x) for x in f.reduce(tot_sa).reshape(-1)],
                                       "rhs": ["0"]}, c.g.name, seed)
    return VerificationReport("sotimes_cyclic", True, samples, None, c.g.name, seed)


# ---------------------------------------------------------------------------
# simplicity criteria
# ---------------------------------------------------------------------------
@dataclass
class SimplicityCriteria:
    phi_injective: bool
    d_spanned: bool
    a_simple: bool
    g_simple: bool

    @property
    def criteria_hold(self) -> bool:
        return self.phi_injective and self.d_spanned and self.a_simple

    @property
    def consistent(self) -> bool:
        """The three criteria hold exactly when ``g`` is simple."""
        return self.criteria_hold == self.g_simple

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.phi_injective, self.d_spanned, self.a_simple, self.g_simple)


def check_simplicity_criteria(c: Char3Superalgebra, seed: int = DEFAULT_SEED) -> SimplicityCriteria:
    f = c.g.field
    data = c.data
    m = c.A.dim
    # Phi is the inclusion of operators: injective iff the basis operators are independent
    if data.dim:
        flat = np.stack([o.matrix.reshape(-1) for o in data.ops.operators])
        phi_inj = rank(flat, f) == data.dim
    else:
        phi_inj = True
    # d = d_{A,A}: the span of the assignment table is everything
    if data.dim:
        d_span = rank(data.pairs.reshape(m * m, data.dim), f) == data.dim
    else:
        d_span = True
    return SimplicityCriteria(bool(phi_inj), bool(d_span), is_simple(c.A, seed), is_simple(c.g, seed))


# ---------------------------------------------------------------------------
# grading
# ---------------------------------------------------------------------------
@dataclass
class GradedDecomposition:
    degree: tuple[int, ...]
    components: dict[int, list[int]]

    @classmethod
    def from_degrees(cls, degree) -> "GradedDecomposition":
        comps: dict[int, list[int]] = {}
        for i, d in enumerate(degree):
            comps.setdefault(int(d), []).append(i)
        return cls(tuple(int(d) for d in degree), dict(sorted(comps.items())))

    @property
    def profile(self) -> dict[int, int]:
        return {d: len(ix) for d, ix in self.components.items()}


def assign_bj_grading(c: Char3Superalgebra) -> GradedDecomposition:
    """``deg t^(r) = 2r``, ``deg u = -1``, ``deg s = 0``, with ``d`` graded by operator degree."""
    if c.A.degree is None:
        raise ValueError("the coordinate algebra carries no grading")
    if c.g.degree is None:
        raise ValueError("d_{A,A} has no homogeneous basis for this grading")
    gr = GradedDecomposition.from_degrees(c.g.degree)
    rep = check_grading(c.g)
    if not rep.passed:
        raise ValueError(f"grading is inconsistent: {rep.counterexample}")
    return gr


def expected_bj_profile(N: int) -> dict[int, int]:
    top = 2 * 3 ** N - 1
    prof = {-2: 1, -1: 7, 0: 8}
    for i in range(1, top - 1):
        prof[i] = 8
    prof[top - 1] = 7
    prof[top] = 1
    return prof


def expected_bj_modules(N: int) -> dict[int, tuple[int, int]]:
    """(adjoint multiplicity, trivial multiplicity) of each component."""
    top = 2 * 3 ** N - 1
    out = {-2: (0, 1), -1: (1, 0)}
    for i in range(0, top - 1):
        out[i] = (1, 1)
    out[top - 1] = (1, 0)
    out[top] = (0, 1)
    return out


@dataclass
class BjProfile:
    report: VerificationReport
    profile: dict[int, int]
    modules: dict[int, tuple[int, int]]
    center_dim: int
    derived_dim: int
    derived_simple: bool


def verify_bj_profile(g: Superalgebra, grading: GradedDecomposition, N: int,
                      seed: int = DEFAULT_SEED) -> BjProfile:
    f = g.field
    name = g.name
    graded = g.with_degree(grading.degree)
    rep = check_grading(graded)
    profile = grading.profile
    empty = BjProfile(rep, profile, {}, -1, -1, False)
    if not rep.passed:
        return empty

    def fail(what, got, want):
        return BjProfile(VerificationReport("bj_profile", False, 0,
                                            {"indices": [], "labels": [what],
                                             "lhs": [str(got)], "rhs": [str(want)]}, name, seed),
                         profile, {}, -1, -1, False)

    want = expected_bj_profile(N)
    if profile != want:
        return fail("profile", profile, want)
    idx0 = grading.components[0]
    g0 = subalgebra(graded, Subspace(f, g.dim, np.stack([g.basis_vector(i) for i in idx0])),
                               name="g0", labels=[g.labels[i] for i in idx0])
    zdim = center(g0).dim
    der = derived_subalgebra(g0)
    der_alg = subalgebra(g0, der, name="[g0,g0]")
    der_simple = der.dim > 0 and is_simple(der_alg, seed)
    if zdim != 1 or der.dim != 7 or not der_simple:
        return BjProfile(VerificationReport("bj_profile", False, 0,
                                            {"indices": [], "labels": ["g0"],
                                             "lhs": [str(zdim), str(der.dim), str(der_simple)],
                                             "rhs": ["1", "7", "True"]}, name, seed),
                         profile, {}, zdim, der.dim, der_simple)
    # ad action of the simple part of g0 on each component
    emb = f.zeros((der.dim, g.dim))
    emb[:, idx0] = der.basis
    ad_g = g.left_ops()
    simple_ops = [f.reduce(np.tensordot(v, ad_g, axes=1)) for v in emb]
    adj_src = [der_alg.left_matrix(der_alg.basis_vector(i)) for i in range(der.dim)]
    modules = {}
    want_mod = expected_bj_modules(N)
    for d, ix in grading.components.items():
        ops = [op[np.ix_(ix, ix)] for op in simple_ops]
        h_adj = equivariant_homs(adj_src, ops, f).dim
        h_triv = equivariant_homs([f.zeros((1, 1))] * der.dim, ops, f).dim
        modules[d] = (h_adj, h_triv)
        a, t = want_mod[d]
        if (h_adj, h_triv) != (a, t) or 7 * a + t != len(ix):
            return BjProfile(VerificationReport("bj_profile", False, 0,
                                                {"indices": [d], "labels": ["module"],
                                                 "lhs": [str(h_adj), str(h_triv)],
                                                 "rhs": [str(a), str(t)]}, name, seed),
                             profile, modules, zdim, der.dim, der_simple)
    checked = sum(profile.values())
    return BjProfile(VerificationReport("bj_profile", True, checked, None, name, seed),
                     profile, modules, zdim, der.dim, der_simple)


# ---------------------------------------------------------------------------
# coordinatization
# ---------------------------------------------------------------------------
class DecompositionError(ValueError):
    pass


@dataclass
class RecoveredCoordinates:
    A: Superalgebra              # A' on the canonical basis of Hom_s(s, g)
    d: Superalgebra              # d' = g^s with the induced bracket
    homs: np.ndarray             # (dim A', dim g, dim s) basis maps
    d_space: Subspace

    def coordinates_of_map(self, F) -> np.ndarray | None:
        f = self.A.field
        sp = Subspace(f, self.homs[0].size if len(self.homs) else 0,
                      self.homs.reshape(len(self.homs), -1))
        return sp.coords(np.asarray(F).reshape(-1))


def _find(labels, name):
    try:
        return labels.index(name)
    except ValueError:
        raise DecompositionError(f"s has no basis element {name!r}") from None


def recover_coordinate_algebra(g: Superalgebra, rho: SAction,
                               norm: BilinearForm | None = None) -> RecoveredCoordinates:
    """Rebuild ``A'`` = Hom_s(s, g) and ``d'`` = g^s from ``g`` and the ``s``-action."""
    f = g.field
    s = rho.s
    n = s.dim
    ops = [o.matrix for o in rho.operators]
    ad_s = [s.left_matrix(s.basis_vector(i)) for i in range(n)]
    # d' = common kernel of rho(s)
    dsp = kernel(np.vstack(ops), f) if ops else Subspace.whole(f, g.dim)
    homsp = equivariant_homs(ad_s, ops, f)
    k = homsp.dim
    homs = homsp.basis.reshape(k, g.dim, n) if k else f.zeros((0, g.dim, n))
    # the adjoint and trivial pieces must fill g
    images = np.concatenate([h.T for h in homs]) if k else f.zeros((0, g.dim))
    adj = Subspace(f, g.dim, images)
    if adj.dim != 7 * k or adj.dim + dsp.dim != g.dim or (adj + dsp).dim != g.dim:
        raise DecompositionError(
            f"g is not adjoint + trivial as an s-module (adjoint {adj.dim}, trivial {dsp.dim}, dim {g.dim})")
    parity = []
    for h in homs:
        rows = np.flatnonzero(np.any(h != 0, axis=1))
        ps = {g.parity[r] for r in rows}
        if len(ps) != 1:
            raise DecompositionError("Hom_s(s, g) has an inhomogeneous basis element")
        parity.append(ps.pop())
    iu, iv, ih = _find(s.labels, "u1"), _find(s.labels, "v1"), _find(s.labels, "h")
    nuv = f(1) if norm is None else norm.matrix[iu, iv]
    if nuv == 0:
        raise DecompositionError("n(u1, v1) vanishes")
    # [u1, v1] = c h in s; solve [phi_i(u1), phi_j(v1)] = phi_{ij}([u1, v1]) + n(u1, v1) d_{ij}
    uv = s.multiply(s.basis_vector(iu), s.basis_vector(iv))
    cols = [matmul(f, h, uv) for h in homs]
    dcount = dsp.dim
    M = np.vstack(cols + list(dsp.basis)) if (k + dcount) else f.zeros((0, g.dim))
    table = {}
    for i in range(k):
        for j in range(k):
            w = g.multiply(homs[i][:, iu], homs[j][:, iv])
            sol = solve(M.T, w, f)
            if sol is None:
                raise DecompositionError("bracket leaves (adjoint image) + g^s")
            nz = {t: sol[t] for t in range(k) if sol[t] != 0}
            if nz:
                table[(i, j)] = nz
    A = Superalgebra(f, [f"a{i}" for i in range(k)], table, parity, name="A'")
    d_alg = subalgebra(g, dsp, name="d'") if dcount else Superalgebra(f, [], {}, name="d'")
    return RecoveredCoordinates(A, d_alg, homs, dsp)


def coordinate_maps(c: Char3Superalgebra) -> np.ndarray:
    """The maps ``s -> s (x) a_j`` for each basis element ``a_j`` of ``A``."""
    f = c.g.field
    n, m = c.sdim, c.adim
    out = f.zeros((m, c.g.dim, n))
    for j in range(m):
        for i in range(n):
            out[j, c.sa(i, j), i] = f.one
    return out


def change_basis(alg: Superalgebra, P, name: str | None = None, labels=None) -> Superalgebra:
    """The algebra on the basis given by the rows of ``P`` (old coordinates)."""
    f = alg.field
    P = f.reduce(np.asarray(P))
    k = P.shape[0]
    table = {}
    for i in range(k):
        for j in range(k):
            sol = solve(P.T, alg.multiply(P[i], P[j]), f)
            if sol is None:
                raise ValueError("rows of P do not span a subalgebra")
            nz = {t: sol[t] for t in range(k) if sol[t] != 0}
            if nz:
                table[(i, j)] = nz
    parity = []
    for i in range(k):
        ps = {alg.parity[t] for t in np.flatnonzero(P[i] != 0)}
        parity.append(ps.pop() if len(ps) == 1 else 0)
    return Superalgebra(f, labels or [f"b{i}" for i in range(k)], table, parity,
                        name=name or alg.name)


def recovered_in_original_basis(c: Char3Superalgebra, rec: RecoveredCoordinates) -> Superalgebra:
    """``A'`` rewritten on the images of ``a -> (s -> s (x) a)``."""
    f = c.g.field
    maps = coordinate_maps(c)
    P = []
    for F in maps:
        co = rec.coordinates_of_map(F)
        if co is None:
            raise DecompositionError("s -> s (x) a is not s-equivariant")
        P.append(co)
    P = np.stack(P) if P else f.zeros((0, 0))
    return change_basis(rec.A, P, name=c.A.name, labels=list(c.A.labels))


# ---------------------------------------------------------------------------
# ideal decompositions
# ---------------------------------------------------------------------------
def minimal_ideals(alg: Superalgebra) -> list[Subspace]:
    """Distinct ideals generated by single basis vectors that contain no smaller such ideal."""
    found: list[Subspace] = []
    for i in range(alg.dim):
        sp = ideal_generated(alg, [alg.basis_vector(i)])
        if sp.dim and all(sp != x for x in found):
            found.append(sp)
    return [x for x in found if not any(y.dim < x.dim and x.contains_subspace(y) for y in found)]


def even_part(c: Char3Superalgebra) -> Superalgebra:
    g = c.g
    idx = g.even_indices()
    sp = Subspace(g.field, g.dim, np.stack([g.basis_vector(i) for i in idx]))
    return subalgebra(g, sp, name=f"{g.name}_0", labels=[g.labels[i] for i in idx])


def ideal_as_algebra(alg: Superalgebra, ideal: Subspace, name: str = "") -> Superalgebra:
    return subalgebra(alg, ideal, name=name)


__all__ = [
    "BjProfile", "Char3Superalgebra", "DecompositionError", "GradedDecomposition",
    "InnerDerivationData", "RecoveredCoordinates", "SAction", "SimplicityCriteria",
    "assign_bj_grading", "build_char3_superalgebra", "change_basis", "check_inner_derivation_data",
    "check_simplicity_criteria", "coordinate_maps", "delta_operator", "dx_operator", "even_part",
    "expected_bj_modules", "expected_bj_profile", "flip_odd_product", "ideal_as_algebra",
    "inner_derivation_superspace", "minimal_ideals", "multiplication_operators",
    "recover_coordinate_algebra", "recovered_in_original_basis", "spot_check_sotimes",
    "verify_bj_profile", "verify_dx_delta_formulas", "verify_s_action",
]
