"""Unital composition algebras and their inner derivations.

Four split algebras are built: the ground field ``k``, ``k x k``,
``Mat_2(k)`` and the split Cayley algebra ``C(k)`` on the basis
``e1, e2, u1, u2, u3, v1, v2, v3``.  The norm is stored as its
polarization ``n(x, y) = n(x+y) - n(x) - n(y)``, so ``n(x) = n(x, x)/2``
and the trace is ``t(x) = n(x, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import BilinearForm, LinearMap, OperatorAlgebra, Superalgebra
from .linalg import Subspace, kernel, matmul
from .scalars import Field

KINDS = ("ground-field", "binarion", "matrix2", "split-cayley")

# aliases used on the command line
KIND_ALIASES = {
    "k": "ground-field", "ground": "ground-field", "ground-field": "ground-field",
    "kxk": "binarion", "binarion": "binarion",
    "mat2": "matrix2", "matrix2": "matrix2", "quaternion": "matrix2",
    "cayley": "split-cayley", "split-cayley": "split-cayley", "c": "split-cayley",
}


@dataclass
class CompositionAlgebra:
    algebra: Superalgebra
    norm_form: BilinearForm
    unit: np.ndarray
    kind: str

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def n(self, x, y):
        """Polarized norm ``n(x, y)``."""
        f = self.field
        return f.scalar(matmul(f, x, matmul(f, self.norm_form.matrix, y)))

    def norm(self, x):
        f = self.field
        return f.mul(self.n(x, x), f.inv(f(2)))

    def trace(self, x):
        return self.n(x, self.unit)

    def trace_row(self) -> np.ndarray:
        f = self.field
        return f.reduce(matmul(f, self.norm_form.matrix, self.unit))

    def mul(self, x, y):
        return self.algebra.multiply(x, y)

    def commutator(self, x, y):
        f = self.field
        return f.reduce(self.mul(x, y) - self.mul(y, x))

    def associator(self, x, y, z):
        f = self.field
        return f.reduce(self.mul(self.mul(x, y), z) - self.mul(x, self.mul(y, z)))

    def vec(self, label: str) -> np.ndarray:
        return self.algebra.basis_vector(self.algebra.index(label))


def _cayley_table():
    lab = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"]
    ix = {s: i for i, s in enumerate(lab)}
    T: dict = {}

    def put(a, b, c, coef=1):
        T.setdefault((ix[a], ix[b]), {})[ix[c]] = coef

    put("e1", "e1", "e1")
    put("e2", "e2", "e2")
    for j in "123":
        put("e1", "u" + j, "u" + j)
        put("u" + j, "e2", "u" + j)
        put("e2", "v" + j, "v" + j)
        put("v" + j, "e1", "v" + j)
        put("u" + j, "v" + j, "e1", -1)
        put("v" + j, "u" + j, "e2", -1)
    for i, j, k in [("1", "2", "3"), ("2", "3", "1"), ("3", "1", "2")]:
        put("u" + i, "u" + j, "v" + k, 1)
        put("u" + j, "u" + i, "v" + k, -1)
        put("v" + i, "v" + j, "u" + k, 1)
        put("v" + j, "v" + i, "u" + k, -1)
    return lab, T


def build_composition(kind: str, field: Field) -> CompositionAlgebra:
    kind = KIND_ALIASES.get(kind, kind)
    f = field
    if kind == "ground-field":
        labels = ["1"]
        table = {(0, 0): {0: 1}}
        norm = [[2]]
        unit = [1]
    elif kind == "binarion":
        labels = ["e1", "e2"]
        table = {(0, 0): {0: 1}, (1, 1): {1: 1}}
        norm = [[0, 1], [1, 0]]
        unit = [1, 1]
    elif kind == "matrix2":
        # matrix units E11, E12, E21, E22; E_ab E_cd = [b == c] E_ad
        labels = ["E11", "E12", "E21", "E22"]
        pos = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
        table = {}
        for (a, b), i in pos.items():
            for (c, d), j in pos.items():
                if b == c:
                    table[(i, j)] = {pos[(a, d)]: 1}
        # polarized determinant
        norm = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
        unit = [1, 0, 0, 1]
    elif kind == "split-cayley":
        labels, table = _cayley_table()
        norm = np.zeros((8, 8), dtype=np.int64)
        norm[0, 1] = norm[1, 0] = 1
        for j in range(3):
            norm[2 + j, 5 + j] = norm[5 + j, 2 + j] = 1
        unit = [1, 1, 0, 0, 0, 0, 0, 0]
    else:
        raise ValueError(f"unknown composition algebra kind {kind!r}")
    alg = Superalgebra(f, labels, table, name=kind if kind != "split-cayley" else "C")
    return CompositionAlgebra(alg, BilinearForm(f.array(norm)), f.array(unit), kind)


def trace_zero_subspace(C: CompositionAlgebra) -> Subspace:
    """``C^0 = ker t`` in canonical form."""
    return kernel(C.trace_row().reshape(1, -1), C.field)


def _vector_label(C: CompositionAlgebra, v) -> str:
    f = C.field
    labels = C.algebra.labels
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        s = f.to_str(c) if f.char == 0 else (str(int(c)) if int(c) <= f.char // 2 else str(int(c) - f.char))
        if s in ("1", "1/1"):
            terms.append(("+", labels[i]))
        elif s in ("-1", "-1/1"):
            terms.append(("-", labels[i]))
        else:
            terms.append(("+", f"{s}*{labels[i]}"))
    out = "".join(sg + t for sg, t in terms).lstrip("+")
    return "h" if (C.kind == "split-cayley" and out == "e1-e2") else out


def trace_zero_labels(C: CompositionAlgebra) -> list[str]:
    return [_vector_label(C, v) for v in trace_zero_subspace(C).basis]


def bracket_algebra(C: CompositionAlgebra) -> Superalgebra:
    """``(C^0, [., .])`` with the commutator, on the canonical ``C^0`` basis.

    The result is returned even when the Jacobi identity fails (Cayley
    algebras outside characteristic 3), so negative checks can run on it.
    """
    f = C.field
    sp = trace_zero_subspace(C)
    B = sp.basis
    k = sp.dim
    table: dict = {}
    for a in range(k):
        for b in range(k):
            c = sp.coords(C.commutator(B[a], B[b]))
            if c is None:
                raise ValueError("commutator left the trace-zero subspace")
            nz = {t: c[t] for t in range(k) if c[t] != 0}
            if nz:
                table[(a, b)] = nz
    name = "s" if C.kind == "split-cayley" else f"{C.kind}^0"
    return Superalgebra(f, trace_zero_labels(C), table, name=name)


def restricted_norm(C: CompositionAlgebra) -> BilinearForm:
    """The polarized norm on the canonical ``C^0`` basis."""
    f = C.field
    B = trace_zero_subspace(C).basis
    return BilinearForm(f.reduce(matmul(f, B, matmul(f, C.norm_form.matrix, B.T))))


def inner_derivation(C: CompositionAlgebra, a, b) -> LinearMap:
    """``D_{a,b}(c) = [[a,b],c] + 3(a,c,b)`` as a matrix."""
    f = C.field
    alg = C.algebra
    ab = C.commutator(a, b)
    La = alg.left_matrix(a)
    Rb = alg.right_matrix(b)
    ad = f.reduce(alg.left_matrix(ab) - alg.right_matrix(ab))
    # (a, c, b) = (a c) b - a (c b)
    assoc = f.reduce(matmul(f, Rb, La) - matmul(f, La, Rb))
    return LinearMap(f.reduce(ad + 3 * assoc), 0)


def inder_algebra(C: CompositionAlgebra) -> OperatorAlgebra:
    """Span of ``D_{b_i, b_j}``, ``i < j`` over the ``C^0`` basis, as a Lie algebra."""
    B = trace_zero_subspace(C).basis
    mats = [inner_derivation(C, B[i], B[j]).matrix
            for i in range(len(B)) for j in range(i + 1, len(B))]
    return OperatorAlgebra(C.field, C.dim, mats, C.algebra.parity,
                           name=f"inder({C.algebra.name})", label_prefix="D")


def split_s(field: Field) -> tuple[Superalgebra, BilinearForm]:
    """``s = (C^0, [., .])`` for the split Cayley algebra, with its norm."""
    C = build_composition("split-cayley", field)
    return bracket_algebra(C), restricted_norm(C)


def check_composition(C: CompositionAlgebra, samples: int = 100, seed: int = 0xC3A1):
    """``n(ab) = n(a)n(b)`` and ``a^2 - t(a)a + n(a)1 = 0`` on basis and random elements."""
    from .algebra import VerificationReport
    f = C.field
    d = C.dim
    rng = np.random.default_rng(seed)
    basis = [f.unit_vector(d, i) for i in range(d)]
    rand = [f.random_array(rng, d) for _ in range(samples)]
    name = C.algebra.name
    checked = 0
    pairs = [(a, b) for a in basis for b in basis] + list(zip(rand, rand[1:] + rand[:1]))
    for a, b in pairs:
        checked += 1
        lhs, rhs = C.norm(C.mul(a, b)), f.mul(C.norm(a), C.norm(b))
        if lhs != rhs:
            return VerificationReport("norm_multiplicative", False, checked,
                                      {"indices": [], "labels": [], "lhs": [f.to_str(lhs)],
                                       "rhs": [f.to_str(rhs)]}, name, seed)
    for a in basis + rand:
        checked += 1
        v = f.reduce(C.mul(a, a) - C.trace(a) * a + C.norm(a) * C.unit)
        if not f.is_zero(v):
            return VerificationReport("degree_two", False, checked,
                                      {"indices": [], "labels": [],
                                       "lhs": [f.to_str(x) for x in v], "rhs": ["0"] * d},
                                      name, seed)
    return VerificationReport("composition", True, checked, None, name, seed)
