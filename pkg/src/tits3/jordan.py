"""Jordan algebras with normalized trace and the Tits construction.

``T(C, J) = inder C + (C^0 (x) J^0) + inder J`` with bracket

    [D, a(x)x] = D(a)(x)x,   [d, a(x)x] = a(x)d(x),
    [a(x)x, b(x)y] = t_J(xy) D_{a,b} + [a,b](x)(x*y) + 2 t(ab) d_{x,y}

where ``x*y = xy - t_J(xy) 1`` and ``d_{x,y} = [l_x, l_y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import (LinearMap, _first_nonzero, OperatorAlgebra, Superalgebra, VerificationReport,
                      check_super_jacobi)
from .composition import (CompositionAlgebra, build_composition, inder_algebra,
                          inner_derivation, trace_zero_labels, trace_zero_subspace)
from .linalg import Subspace, kernel, matmul
from .scalars import Field, FieldError

CELLS = ((0, 1), (0, 2), (1, 2))

# row/column order of the magic square
SQUARE_KINDS = ("ground-field", "binarion", "matrix2", "split-cayley")
SQUARE_TYPES = (
    ("A1", "A2", "C3", "F4"),
    ("A2", "A2+A2", "A5", "E6"),
    ("C3", "A5", "D6", "E7"),
    ("F4", "E6", "E7", "E8"),
)


@dataclass
class JordanWithTrace:
    algebra: Superalgebra
    trace: np.ndarray      # row functional t_J
    unit: np.ndarray
    name: str = ""

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def t(self, x):
        f = self.field
        return f.scalar(matmul(f, self.trace, x))

    def zero_part(self) -> Subspace:
        """``J^0 = ker t_J`` in canonical form."""
        return kernel(self.trace.reshape(1, -1), self.field)


def build_h3(Cp: CompositionAlgebra) -> JordanWithTrace:
    """Hermitian 3x3 matrices over ``Cp`` with ``x o y = (xy + yx)/2``."""
    f = Cp.field
    if f.char == 3:
        raise FieldError("H3 with normalized trace needs char != 3; use the char-3 Tits path")
    d = Cp.dim
    unit = Cp.unit
    tr = Cp.trace_row()
    # conjugation a -> t(a) 1 - a
    conj = f.reduce(np.outer(unit, tr) - f.identity(d))
    labels = [f"E{i + 1}" for i in range(3)]
    elems = []
    for i in range(3):
        X = f.zeros((3, 3, d))
        X[i, i] = unit
        elems.append(X)
    for (i, j) in CELLS:
        for b in range(d):
            X = f.zeros((3, 3, d))
            e = f.unit_vector(d, b)
            X[i, j] = e
            X[j, i] = f.reduce(matmul(f, conj, e))
            elems.append(X)
            labels.append(f"x{i + 1}{j + 1}.{Cp.algebra.labels[b]}")
    N = len(elems)
    B = np.stack(elems)                       # (N, 3, 3, d)
    T = Cp.algebra.tensor()                   # (d, d, d)
    # XY[p, q, i, k, :] = sum_j X_p[i, j] * Y_q[j, k] in Cp, reduced after each contraction
    pairs = f.reduce(np.einsum("pija,qjkb->pqikab", B, B))
    XY = f.reduce(np.tensordot(pairs.reshape(N, N, 3, 3, d * d), T.reshape(d * d, d), axes=1))
    half = f.inv(f(2))
    P = f.reduce((XY + XY.transpose(1, 0, 2, 3, 4)) * half)
    # coordinates: diagonal scalars, then upper cells
    k0 = int(np.flatnonzero(unit != 0)[0])
    uinv = f.inv(unit[k0])
    tensor = f.zeros((N, N, N))
    for p_, q_ in product(range(N), repeat=2):
        M = P[p_, q_]
        coords = f.zeros(N)
        for i in range(3):
            alpha = f.mul(M[i, i, k0], uinv)
            if not f.is_zero(f.reduce(M[i, i] - alpha * unit)):
                raise ArithmeticError("diagonal entry is not a scalar")
            coords[i] = alpha
        pos = 3
        for (i, j) in CELLS:
            coords[pos:pos + d] = M[i, j]
            pos += d
        tensor[p_, q_] = coords
    name = f"H3({Cp.algebra.name})"
    alg = Superalgebra.from_tensor(f, labels, tensor, name=name)
    third = f.inv(f(3))
    trace = f.zeros(N)
    trace[:3] = third
    unitJ = f.zeros(N)
    unitJ[:3] = f.one
    return JordanWithTrace(alg, trace, unitJ, name)


def star_product(J: JordanWithTrace, x, y) -> np.ndarray:
    """``x*y = xy - t_J(xy) 1``."""
    f = J.field
    xy = J.algebra.multiply(x, y)
    return f.reduce(xy - J.t(xy) * J.unit)


def trace_split(J: JordanWithTrace, x):
    """``x = t_J(x) 1 + x^0``."""
    f = J.field
    tx = J.t(x)
    return tx, f.reduce(np.asarray(x) - tx * J.unit)


def jordan_inner_derivation(J: JordanWithTrace, x, y) -> LinearMap:
    """``d_{x,y}(z) = x(yz) - y(xz)``."""
    f = J.field
    Lx = J.algebra.left_matrix(x)
    Ly = J.algebra.left_matrix(y)
    return LinearMap(f.reduce(matmul(f, Lx, Ly) - matmul(f, Ly, Lx)), 0)


def inder_jordan(J: JordanWithTrace) -> OperatorAlgebra:
    B = J.zero_part().basis
    mats = [jordan_inner_derivation(J, B[i], B[j]).matrix
            for i in range(len(B)) for j in range(i + 1, len(B))]
    return OperatorAlgebra(J.field, J.dim, mats, J.algebra.parity,
                           name=f"inder({J.name})", label_prefix="d")


def check_jordan_trace(J: JordanWithTrace) -> VerificationReport:
    """``t_J(1) = 1`` and ``t_J((xy)z) = t_J(x(yz))`` on basis triples."""
    f = J.field
    alg = J.algebra
    n = alg.dim
    if J.t(J.unit) != f.one:
        return VerificationReport("jordan_trace", False, 1,
                                  {"indices": [], "labels": ["1"], "lhs": [f.to_str(J.t(J.unit))],
                                   "rhs": ["1"]}, J.name)
    t = alg.tensor()
    tt = f.reduce(matmul(f, t.reshape(-1, n), J.trace)).reshape(n, n)   # t_J(e_i e_j)
    left = f.reduce(matmul(f, t.reshape(-1, n), tt)).reshape(n, n, n)   # t_J((e_i e_j) e_k)
    # t_J(e_i (e_j e_k)) = sum_m tt[i, m] t[j, k, m]
    right = f.reduce(matmul(f, t.reshape(n * n, n), tt.T)).reshape(n, n, n).transpose(2, 0, 1)
    bad = _first_nonzero(f, f.reduce(left - right)[..., None])
    if bad is not None:
        i, j, k = (int(x) for x in bad)
        return VerificationReport("jordan_trace", False, n ** 3,
                                  {"indices": [i, j, k], "labels": [alg.labels[x] for x in (i, j, k)],
                                   "lhs": [f.to_str(left[i, j, k])], "rhs": [f.to_str(right[i, j, k])]},
                                  J.name)
    return VerificationReport("jordan_trace", True, n ** 3, None, J.name)


def check_jordan_identity(J: JordanWithTrace) -> VerificationReport:
    """Linearized Jordan identity over basis quadruples.

    The full linearization of ``(x^2, y, x) = 0`` in ``x`` is
    ``sum over the three choices of c: ((x_a x_b), y, x_c) = 0``.
    """
    f = J.field
    alg = J.algebra
    n = alg.dim
    t = alg.tensor()
    # assoc(u, y, z) = (u y) z - u (y z) as a trilinear tensor, built per first slot
    sq = t  # sq[a, b] = x_a x_b
    checked = 0
    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                terms = f.zeros((n, n))
                for (p, q, r) in ((a, b, c), (b, c, a), (c, a, b)):
                    u = sq[p, q]
                    Lu = alg.left_matrix(u)
                    Rr = alg.right_matrix(alg.basis_vector(r))
                    # (u y) x_r - u (y x_r) for all basis y (columns)
                    terms = terms + matmul(f, Rr, Lu) - matmul(f, Lu, Rr)
                terms = f.reduce(terms)
                checked += n
                if not f.is_zero(terms):
                    y = int(np.flatnonzero(np.any(terms != 0, axis=0))[0])
                    return VerificationReport(
                        "jordan_identity", False, checked,
                        {"indices": [a, b, c, y], "labels": [alg.labels[x] for x in (a, b, c, y)],
                         "lhs": [f.to_str(v) for v in terms[:, y]], "rhs": ["0"] * n}, J.name)
    return VerificationReport("jordan_identity", True, checked, None, J.name)


def jordan_from_unital(A: Superalgebra, A0: Subspace, name: str = "") -> JordanWithTrace:
    """Normalized trace on a unital algebra: ``t(1) = 1`` and ``t(A0) = 0``."""
    f = A.field
    unit = find_unit(A)
    if unit is None:
        raise ValueError("algebra is not unital")
    if A0.dim != A.dim - 1:
        raise ValueError("A0 must have codimension 1")
    if A0.contains(unit):
        raise ValueError("A0 must not contain the unit")
    # t vanishes on A0 and t(1) = 1: solve [A0; 1] t^T = [0; 1]
    from .linalg import solve
    M = np.vstack([A0.basis, unit.reshape(1, -1)])
    rhs = f.zeros(A.dim)
    rhs[-1] = f.one
    tr = solve(M, rhs, f)
    return JordanWithTrace(A, tr, unit, name or A.name)


def find_unit(A: Superalgebra):
    """The two-sided unit, or None."""
    from .linalg import solve
    f = A.field
    n = A.dim
    t = A.tensor()
    # sum_i u_i c[i, j, :] = e_j and sum_i u_i c[j, i, :] = e_j
    M = np.vstack([t.transpose(1, 2, 0).reshape(n * n, n), t.transpose(0, 2, 1).reshape(n * n, n)])
    I = f.identity(n).reshape(-1)
    rhs = np.concatenate([I, I])
    return solve(M, rhs, f)


# ---------------------------------------------------------------------------
# Tits construction
# ---------------------------------------------------------------------------
@dataclass
class TitsConstruction:
    C: CompositionAlgebra
    J: JordanWithTrace
    c0: Subspace
    j0: Subspace
    inder_c: OperatorAlgebra
    inder_j: OperatorAlgebra
    algebra: Superalgebra

    @property
    def blocks(self) -> tuple[range, range, range]:
        a = self.inder_c.dim
        b = a + self.c0.dim * self.j0.dim
        return range(0, a), range(a, b), range(b, b + self.inder_j.dim)


def _c0_data(C: CompositionAlgebra, c0: Subspace):
    f = C.field
    B = c0.basis
    k = c0.dim
    br = np.stack([c0.coords(C.commutator(B[i], B[j])) for i in range(k) for j in range(k)]) \
        if k else f.zeros((0, 0))
    br = br.reshape(k, k, k) if k else f.zeros((0, 0, 0))
    tab = f.zeros((k, k))
    for i in range(k):
        for j in range(k):
            tab[i, j] = C.trace(C.mul(B[i], B[j]))
    return br, tab


def tits_construction(C: CompositionAlgebra, J: JordanWithTrace,
                      check: bool = True) -> TitsConstruction:
    """Build ``T(C, J)``; ``check`` runs the compatibility test first."""
    f = C.field
    if J.field != f:
        raise FieldError("C and J live over different fields")
    if check:
        rep = check_tits_compatibility(C, J)
        if not rep.passed:
            raise ValueError(f"Tits compatibility fails: {rep.counterexample}")
    c0 = trace_zero_subspace(C)
    j0 = J.zero_part()
    iC = inder_algebra(C)
    iJ = inder_jordan(J)
    kC, kJ = c0.dim, j0.dim
    nDC, nDJ = iC.dim, iJ.dim
    CB, JB = c0.basis, j0.basis
    off_m = nDC
    off_d = nDC + kC * kJ
    N = off_d + nDJ
    T = f.zeros((N, N, N))

    def mid(a, x):
        return off_m + a * kJ + x

    br, tab = _c0_data(C, c0)
    # D-part coords of D_{a,b}, d-part coords of d_{x,y}
    Dab = f.zeros((kC, kC, nDC))
    for a in range(kC):
        for b in range(kC):
            Dab[a, b] = iC.require_coords(inner_derivation(C, CB[a], CB[b]).matrix) if nDC else []
    dxy = f.zeros((kJ, kJ, nDJ))
    txy = f.zeros((kJ, kJ))
    star = f.zeros((kJ, kJ, kJ))
    for x in range(kJ):
        for y in range(kJ):
            if nDJ:
                dxy[x, y] = iJ.require_coords(jordan_inner_derivation(J, JB[x], JB[y]).matrix)
            prod = J.algebra.multiply(JB[x], JB[y])
            txy[x, y] = J.t(prod)
            c = j0.coords(f.reduce(prod - txy[x, y] * J.unit))
            if c is None:
                raise ValueError("x*y left J^0")
            star[x, y] = c
    # inder C: Lie subalgebra
    for p, q in iC.algebra.table:
        for r, c in iC.algebra.table[(p, q)].items():
            T[p, q, r] = c
    for p, q in iJ.algebra.table:
        for r, c in iJ.algebra.table[(p, q)].items():
            T[off_d + p, off_d + q, off_d + r] = c
    # [D, a (x) x] = D(a) (x) x
    for p, op in enumerate(iC.operators):
        for a in range(kC):
            img = c0.coords(matmul(f, op.matrix, CB[a]))
            if img is None:
                raise ValueError("inder C does not preserve C^0")
            for x in range(kJ):
                for b in range(kC):
                    if img[b] != 0:
                        T[p, mid(a, x), mid(b, x)] = img[b]
                        T[mid(a, x), p, mid(b, x)] = f.neg(img[b])
    # [d, a (x) x] = a (x) d(x)
    for q, op in enumerate(iJ.operators):
        for x in range(kJ):
            img = j0.coords(matmul(f, op.matrix, JB[x]))
            if img is None:
                raise ValueError("inder J does not preserve J^0")
            for a in range(kC):
                for y in range(kJ):
                    if img[y] != 0:
                        T[off_d + q, mid(a, x), mid(a, y)] = img[y]
                        T[mid(a, x), off_d + q, mid(a, y)] = f.neg(img[y])
    # [a (x) x, b (x) y]
    two = f(2)
    for a in range(kC):
        for x in range(kJ):
            i = mid(a, x)
            for b in range(kC):
                for y in range(kJ):
                    j = mid(b, y)
                    if nDC:
                        T[i, j, :nDC] = f.reduce(T[i, j, :nDC] + txy[x, y] * Dab[a, b])
                    if kC and kJ:
                        blk = f.reduce(np.outer(br[a, b], star[x, y])).reshape(-1)
                        T[i, j, off_m:off_d] = f.reduce(T[i, j, off_m:off_d] + blk)
                    if nDJ:
                        T[i, j, off_d:] = f.reduce(T[i, j, off_d:] + two * tab[a, b] * dxy[x, y])
    clab = trace_zero_labels(C)
    jlab = [_j0_label(J, v) for v in JB]
    labels = ([f"DC{p}" for p in range(nDC)]
              + [f"{clab[a]}@{jlab[x]}" for a in range(kC) for x in range(kJ)]
              + [f"dJ{q}" for q in range(nDJ)])
    name = f"T({C.algebra.name},{J.name})"
    alg = Superalgebra.from_tensor(f, labels, T, name=name)
    return TitsConstruction(C, J, c0, j0, iC, iJ, alg)


def _j0_label(J: JordanWithTrace, v) -> str:
    f = J.field
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        val = int(c) if f.char else c
        if f.char and val > f.char // 2:
            val -= f.char
        lab = J.algebra.labels[i]
        if val == 1:
            terms.append("+" + lab)
        elif val == -1:
            terms.append("-" + lab)
        else:
            terms.append(f"+{val}*{lab}")
    return "".join(terms).lstrip("+")


def build_tits(C: CompositionAlgebra, J: JordanWithTrace) -> Superalgebra:
    return tits_construction(C, J).algebra


def check_tits_compatibility(C: CompositionAlgebra, J: JordanWithTrace) -> VerificationReport:
    """Cyclic conditions (i)-(iii) over all basis triples of ``C^0`` and ``J^0``."""
    f = C.field
    c0 = trace_zero_subspace(C)
    j0 = J.zero_part()
    kC, kJ = c0.dim, j0.dim
    name = f"T({C.algebra.name},{J.name})"
    total = kC ** 3 * kJ ** 3
    if kC == 0 or kJ == 0:
        return VerificationReport("tits_compatibility", True, 0, None, name)
    CB, JB = c0.basis, j0.basis
    nC, nJ = C.dim, J.dim
    Jalg = J.algebra
    # C-side tensors
    comm = np.stack([[C.commutator(CB[i], CB[j]) for j in range(kC)] for i in range(kC)])
    tcomm3 = f.zeros((kC, kC, kC))     # t([a1,a2] a3)
    DC = f.zeros((kC, kC, kC, nC * nC))  # D_{[a1,a2], a3}
    Dvec = f.zeros((kC, kC, kC, nC))     # D_{a1,a2}(a3)
    cc3 = f.zeros((kC, kC, kC, nC))      # [[a1,a2],a3]
    tprod = f.zeros((kC, kC))            # t(a1 a2)
    Dab = [[inner_derivation(C, CB[i], CB[j]).matrix for j in range(kC)] for i in range(kC)]
    for i in range(kC):
        for j in range(kC):
            tprod[i, j] = C.trace(C.mul(CB[i], CB[j]))
            for k in range(kC):
                tcomm3[i, j, k] = C.trace(C.mul(comm[i, j], CB[k]))
                DC[i, j, k] = inner_derivation(C, comm[i, j], CB[k]).matrix.reshape(-1)
                Dvec[i, j, k] = matmul(f, Dab[i][j], CB[k])
                cc3[i, j, k] = C.commutator(comm[i, j], CB[k])
    # J-side tensors
    star2 = np.stack([[star_product(J, JB[i], JB[j]) for j in range(kJ)] for i in range(kJ)])
    tjj = f.zeros((kJ, kJ))              # t_J(x1 x2)
    for i in range(kJ):
        for j in range(kJ):
            tjj[i, j] = J.t(Jalg.multiply(JB[i], JB[j]))
    dJ = f.zeros((kJ, kJ, kJ, nJ * nJ))  # d_{x1*x2, x3}
    tj3 = f.zeros((kJ, kJ, kJ))          # t_J((x1*x2) x3)
    tx3 = f.zeros((kJ, kJ, kJ, nJ))      # t_J(x1 x2) x3
    ss3 = f.zeros((kJ, kJ, kJ, nJ))      # (x1*x2)*x3
    dx3 = f.zeros((kJ, kJ, kJ, nJ))      # d_{x1,x2}(x3)
    dxy = [[jordan_inner_derivation(J, JB[i], JB[j]).matrix for j in range(kJ)] for i in range(kJ)]
    for i in range(kJ):
        for j in range(kJ):
            for k in range(kJ):
                dJ[i, j, k] = jordan_inner_derivation(J, star2[i, j], JB[k]).matrix.reshape(-1)
                tj3[i, j, k] = J.t(Jalg.multiply(star2[i, j], JB[k]))
                tx3[i, j, k] = f.reduce(tjj[i, j] * JB[k])
                ss3[i, j, k] = star_product(J, star2[i, j], JB[k])
                dx3[i, j, k] = matmul(f, dxy[i][j], JB[k])

    def cyc(arr):
        # value at (x1, x2, x3) of each shift is arr at (x1,x2,x3), (x2,x3,x1), (x3,x1,x2)
        rest = tuple(range(3, arr.ndim))
        return arr, arr.transpose(2, 0, 1, *rest), arr.transpose(1, 2, 0, *rest)

    two = f(2)
    checked = 0
    dJc, tjc = cyc(dJ), cyc(tj3)
    txc, ssc, dxc = cyc(tx3), cyc(ss3), cyc(dx3)
    for a1, a2, a3 in product(range(kC), repeat=3):
        # (i): sum_cyc t([a1,a2]a3) d_{x1*x2, x3}
        v1 = f.zeros((kJ, kJ, kJ, nJ * nJ))
        v2 = f.zeros((kJ, kJ, kJ, nC * nC))
        v3 = f.zeros((kJ, kJ, kJ, nC * nJ))
        for c in range(3):
            idx = ((a1, a2, a3), (a2, a3, a1), (a3, a1, a2))[c]
            # the cyclic shift of the C-indices pairs with the same shift of the J-indices
            v1 = v1 + tcomm3[idx] * dJc[c]
            v2 = v2 + tjc[c][..., None] * DC[idx][None, None, None, :]
            t1 = np.einsum("a,ijkb->ijkab", Dvec[idx], txc[c])
            t2 = np.einsum("a,ijkb->ijkab", cc3[idx], ssc[c])
            t3 = np.einsum("a,ijkb->ijkab", two * tprod[idx[0], idx[1]] * CB[idx[2]], dxc[c])
            v3 = v3 + (t1 + t2 + t3).reshape(kJ, kJ, kJ, nC * nJ)
        checked += kJ ** 3
        for cond, v in (("i", v1), ("ii", v2), ("iii", v3)):
            v = f.reduce(v)
            bad = _first_nonzero(f, v)
            if bad is not None:
                x1, x2, x3 = (int(q) for q in bad)
                return VerificationReport(
                    "tits_compatibility", False, checked,
                    {"condition": cond, "indices": [a1, a2, a3, x1, x2, x3],
                     "labels": [f"C0[{a1}]", f"C0[{a2}]", f"C0[{a3}]",
                                f"J0[{x1}]", f"J0[{x2}]", f"J0[{x3}]"],
                     "lhs": [f.to_str(q) for q in v[x1, x2, x3]],
                     "rhs": ["0"] * v.shape[-1]}, name)
    return VerificationReport("tits_compatibility", True, total, None, name)


def corrupt_trace(J: JordanWithTrace) -> JordanWithTrace:
    """Same algebra with a trace killing the unit (negative control)."""
    f = J.field
    tr = f.zeros(J.dim)
    tr[0] = f.one
    tr[1] = f.neg(f.one)
    return JordanWithTrace(J.algebra, tr, J.unit, J.name + "~")


# ---------------------------------------------------------------------------
# magic square
# ---------------------------------------------------------------------------
@dataclass
class SquareEntry:
    row: str
    col: str
    dim: int
    jacobi: bool
    anticommutative: bool
    type_label: str
    parts: tuple[int, int, int]


def magic_square_entry(C_kind: str, Cp_kind: str, field: Field, jacobi: bool = True) -> SquareEntry:
    C = build_composition(C_kind, field)
    Cp = build_composition(Cp_kind, field)
    J = build_h3(Cp)
    tc = tits_construction(C, J, check=False)
    from .algebra import check_super_anticommutativity
    anti = check_super_anticommutativity(tc.algebra).passed
    jac = check_super_jacobi(tc.algebra).passed if jacobi else False
    r, c = SQUARE_KINDS.index(C_kind), SQUARE_KINDS.index(Cp_kind)
    return SquareEntry(C_kind, Cp_kind, tc.algebra.dim, jac, anti, SQUARE_TYPES[r][c],
                       (tc.inder_c.dim, tc.c0.dim * tc.j0.dim, tc.inder_j.dim))


def magic_square(field: Field, jacobi: bool = True, progress=None) -> list[list[SquareEntry]]:
    """All 16 entries ``T(C, H3(C'))``; rows ``C``, columns ``C'``."""
    if field.char in (2, 3):
        raise FieldError("the magic square needs characteristic other than 2 and 3")
    out = []
    for ck in SQUARE_KINDS:
        row = []
        for cpk in SQUARE_KINDS:
            e = magic_square_entry(ck, cpk, field, jacobi)
            if progress:
                progress(e)
            row.append(e)
        out.append(row)
    return out


def build_tits_char3(C: CompositionAlgebra, A: Superalgebra, A0: Subspace) -> TitsConstruction:
    """``T(C, A)`` for a unital commutative alternative ``A`` in characteristic 3."""
    f = C.field
    if f.char != 3:
        raise FieldError("the char-3 Tits variant needs characteristic 3")
    if C.kind != "split-cayley":
        raise ValueError("C must be a Cayley algebra")
    from .algebra import associator_tensor
    unit = find_unit(A)
    if unit is None:
        raise ValueError("A must be unital")
    if A0.contains(unit):
        raise ValueError("A0 must not contain 1")
    if A0.dim != A.dim - 1:
        raise ValueError("A0 must have codimension 1")
    assoc = associator_tensor(A).reshape(-1, A.dim)
    if not A0.contains(assoc):
        raise ValueError("A0 must contain the associator span (A, A, A)")
    J = jordan_from_unital(A, A0, A.name)
    return tits_construction(C, J, check=False)
