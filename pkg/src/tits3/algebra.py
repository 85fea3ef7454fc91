"""Structure-constant superalgebras and the identity checkers run on them.

A :class:`Superalgebra` is a labeled basis with parities (and optionally
integer degrees) and a sparse table ``(i, j) -> {k: c}`` giving
``e_i e_j = sum_k c e_k``.  Operators are matrices acting on column
vectors, so ``f(e_b)`` is column ``b``.

Sign conventions (Koszul rule, ``|x|`` the parity):

* super-anticommutativity ``[x,y] = -(-1)^{|x||y|} [y,x]``
* super-Jacobi ``(-1)^{|x||z|}[[x,y],z] + (-1)^{|y||x|}[[y,z],x] + (-1)^{|z||y|}[[z,x],y] = 0``
* super-commutativity ``xy = (-1)^{|x||y|} yx``
* super-alternativity ``(x,y,z) = -(-1)^{|x||y|}(y,x,z) = -(-1)^{|y||z|}(x,z,y)``
* signed Leibniz ``d(xy) = d(x)y + (-1)^{|d||x|} x d(y)``
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .linalg import Subspace, kernel, matmul, rank, rref
from .scalars import Field, FieldError

DEFAULT_SEED = 0xC3A1
# dense associator tensors are n**4 vectors of length n
MAX_ASSOC_DIM = 30
# re-verify every spin result (seeds contained, invariance) when set
CHECK_SPINS = bool(os.environ.get("TITS3_TEST_MODE"))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------
@dataclass
class VerificationReport:
    identity: str
    passed: bool
    checked: int
    counterexample: dict | None = None
    algebra: str = ""
    seed: int | None = None
    notes: list[str] = dc_field(default_factory=list)

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.checked = int(self.checked)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "algebra": self.algebra,
            "pass": self.passed,
            "checked": self.checked,
            "seed": self.seed,
            "counterexample": self.counterexample,
        }


def _report(name, alg, checked, bad=None, lhs=None, rhs=None, seed=None):
    if bad is None:
        return VerificationReport(name, True, checked, None, alg.name, seed)
    f = alg.field
    ce = {
        "indices": [int(i) for i in bad],
        "labels": [alg.labels[i] for i in bad],
        "lhs": [f.to_str(x) for x in np.ravel(lhs)],
        "rhs": [f.to_str(x) for x in np.ravel(rhs)],
    }
    return VerificationReport(name, False, checked, ce, alg.name, seed)


def _first_nonzero(field: Field, arr: np.ndarray):
    """Lexicographically first index (over all but the last axis) with a nonzero vector."""
    flat = arr.reshape(-1, arr.shape[-1])
    if field.char:
        rows = np.flatnonzero(np.any(flat % field.char, axis=1))
    else:
        rows = np.array([r for r in range(flat.shape[0]) if any(x != 0 for x in flat[r])])
    if rows.size == 0:
        return None
    return np.unravel_index(int(rows[0]), arr.shape[:-1])


# ---------------------------------------------------------------------------
# the algebra type
# ---------------------------------------------------------------------------
class Superalgebra:
    """Finite-dimensional superalgebra given by sparse structure constants."""

    def __init__(self, field: Field, labels: Sequence[str], table: dict,
                 parity: Sequence[int] | None = None, degree: Sequence[int] | None = None,
                 name: str = ""):
        self.field = field
        self.labels = tuple(str(x) for x in labels)
        self.dim = len(self.labels)
        n = self.dim
        self.parity = tuple(int(x) % 2 for x in parity) if parity is not None else (0,) * n
        if len(self.parity) != n:
            raise ValueError("parity vector has the wrong length")
        self.degree = tuple(int(x) for x in degree) if degree is not None else None
        if self.degree is not None and len(self.degree) != n:
            raise ValueError("degree vector has the wrong length")
        self.name = name
        clean: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), row in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"table index {(i, j)} out of range")
            entries = {}
            for k, c in row.items():
                if not 0 <= k < n:
                    raise IndexError(f"table index {k} out of range")
                c = field(c)
                if c != 0:
                    entries[int(k)] = c
            if entries:
                clean[(int(i), int(j))] = entries
        self.table = clean
        self._tensor = None
        self._csr = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_tensor(cls, field: Field, labels, tensor, parity=None, degree=None, name=""):
        t = field.reduce(np.asarray(tensor))
        n = len(labels)
        if t.shape != (n, n, n):
            raise ValueError("structure tensor has the wrong shape")
        table: dict = {}
        if field.char:
            nz = np.argwhere(t)
        else:
            nz = [idx for idx in np.ndindex(t.shape) if t[idx] != 0]
        for i, j, k in nz:
            table.setdefault((int(i), int(j)), {})[int(k)] = t[i, j, k]
        alg = cls(field, labels, table, parity, degree, name)
        alg._tensor = t.astype(field.dtype) if field.char else t
        return alg

    def with_degree(self, degree) -> "Superalgebra":
        alg = Superalgebra(self.field, self.labels, self.table, self.parity, degree, self.name)
        alg._tensor = self._tensor
        return alg

    def renamed(self, name: str) -> "Superalgebra":
        alg = Superalgebra(self.field, self.labels, self.table, self.parity, self.degree, name)
        alg._tensor = self._tensor
        return alg

    # -- dense / sparse views ------------------------------------------
    def tensor(self) -> np.ndarray:
        """Dense ``(n, n, n)`` structure tensor ``T[i, j, k]``."""
        if self._tensor is None:
            t = self.field.zeros((self.dim,) * 3)
            for (i, j), row in self.table.items():
                for k, c in row.items():
                    t[i, j, k] = c
            self._tensor = t
        return self._tensor

    def csr(self):
        """``(ptr, idx, val)`` arrays indexed by the pair ``i*n + j`` (prime fields)."""
        if not self.field.char:
            raise FieldError("CSR tables are only built over prime fields")
        if self._csr is None:
            n = self.dim
            counts = np.zeros(n * n + 1, dtype=np.int64)
            keys = sorted(self.table)
            for i, j in keys:
                counts[i * n + j + 1] = len(self.table[(i, j)])
            ptr = np.cumsum(counts)
            idx = np.empty(ptr[-1], dtype=np.int64)
            val = np.empty(ptr[-1], dtype=np.int64)
            pos = 0
            for key in keys:
                for k in sorted(self.table[key]):
                    idx[pos] = k
                    val[pos] = self.table[key][k]
                    pos += 1
            self._csr = (ptr, idx, val)
        return self._csr

    @property
    def is_zero_product(self) -> bool:
        return not self.table

    def basis_vector(self, i: int) -> np.ndarray:
        return self.field.unit_vector(self.dim, i)

    def vector(self, coeffs: dict | Sequence) -> np.ndarray:
        """Vector from ``{label_or_index: coeff}`` or a full coefficient list."""
        if isinstance(coeffs, dict):
            v = self.field.zeros(self.dim)
            for key, c in coeffs.items():
                i = self.labels.index(key) if isinstance(key, str) else int(key)
                v[i] = self.field.add(v[i], self.field(c))
            return v
        return self.field.array(list(coeffs))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def _coerce(self, v) -> np.ndarray:
        v = np.asarray(v)
        if v.shape[-1] != self.dim:
            raise ValueError(f"vector of length {v.shape[-1]} for a {self.dim}-dim algebra")
        if v.dtype.kind in "fc" or (v.dtype == object and any(isinstance(x, float) for x in v.flat)):
            raise FieldError("floating-point entries are not exact field elements")
        if self.field.char and v.dtype == object:
            try:
                v = self.field.array(v)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise FieldError("vector entries do not belong to the algebra's field") from exc
        return v

    # -- products -------------------------------------------------------
    def multiply(self, x, y) -> np.ndarray:
        x = self._coerce(x)
        y = self._coerce(y)
        t = self.tensor()
        xy = matmul(self.field, x, t.reshape(self.dim, -1)).reshape(self.dim, self.dim)
        return self.field.reduce(matmul(self.field, y, xy))

    def product(self, i: int, j: int) -> np.ndarray:
        return self.tensor()[i, j].copy()

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        x = self._coerce(x)
        t = self.tensor()
        return matmul(self.field, x, t.reshape(self.dim, -1)).reshape(self.dim, self.dim).T.copy()

    def right_matrix(self, y) -> np.ndarray:
        """Matrix of ``x -> x y``."""
        y = self._coerce(y)
        t = self.tensor()
        m = matmul(self.field, t.transpose(0, 2, 1).reshape(-1, self.dim), y)
        return m.reshape(self.dim, self.dim).T.copy()

    def left_ops(self) -> np.ndarray:
        """Stack ``L[i]`` of left multiplications by basis vectors."""
        return self.tensor().transpose(0, 2, 1).copy()

    def right_ops(self) -> np.ndarray:
        """Stack ``R[j]`` of right multiplications by basis vectors."""
        return self.tensor().transpose(1, 2, 0).copy()

    def sign_matrix(self) -> np.ndarray:
        """``S[i, j] = (-1)^{|e_i||e_j|}`` as integers."""
        p = np.array(self.parity, dtype=np.int64)
        return np.where(np.outer(p, p) % 2 == 1, -1, 1)

    def even_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == 0]

    def odd_indices(self) -> list[int]:
        return [i for i in range(self.dim) if self.parity[i] == 1]

    # -- serialization --------------------------------------------------
    def to_json_obj(self) -> dict:
        f = self.field
        entries = []
        for (i, j) in sorted(self.table):
            row = self.table[(i, j)]
            for k in sorted(row):
                entries.append([i, j, k, f.to_str(row[k])])
        obj = {
            "field": {"char": f.char},
            "dim": self.dim,
            "basis": list(self.labels),
            "parity": list(self.parity),
        }
        if self.degree is not None:
            obj["degree"] = list(self.degree)
        obj["table"] = entries
        return obj

    def to_json(self) -> str:
        obj = self.to_json_obj()
        head = {k: v for k, v in obj.items() if k != "table"}
        parts = [json.dumps(head, ensure_ascii=False)[:-1]]
        rows = ",\n".join(" " + json.dumps(e) for e in obj["table"])
        body = ', "table": [\n' + rows + "\n]}\n" if rows else ', "table": []}\n'
        return parts[0] + body

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "Superalgebra":
        obj = json.loads(text)
        field = Field(int(obj["field"]["char"]))
        n = int(obj["dim"])
        labels = obj["basis"]
        if len(labels) != n:
            raise ValueError("basis length does not match dim")
        table: dict = {}
        for i, j, k, c in obj["table"]:
            table.setdefault((i, j), {})[k] = field.parse(c)
        return cls(field, labels, table, obj.get("parity"), obj.get("degree"), name)

    def __repr__(self):
        return f"Superalgebra({self.name or '?'}, dim={self.dim}, field={self.field})"


@dataclass
class LinearMap:
    """Operator on an algebra's coordinate space, with a parity tag."""

    matrix: np.ndarray
    parity: int = 0

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("linear maps here are square matrices")
        self.matrix = m
        self.parity %= 2

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass
class BilinearForm:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if not np.array_equal(m, m.T):
            raise ValueError("bilinear form must be symmetric")
        self.matrix = m

    def __call__(self, field: Field, x, y):
        return field.reduce(matmul(field, x, matmul(field, self.matrix, y)))


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------
def _signed(field: Field, sign, arr):
    return field.reduce(sign * arr)


def check_super_anticommutativity(alg: Superalgebra) -> VerificationReport:
    t = alg.tensor()
    s = alg.sign_matrix()[:, :, None]
    total = alg.field.reduce(t + s * t.transpose(1, 0, 2))
    bad = _first_nonzero(alg.field, total)
    n = alg.dim
    if bad is None:
        return _report("super_anticommutativity", alg, n * n)
    i, j = bad
    return _report("super_anticommutativity", alg, i * n + j + 1, (i, j),
                   t[i, j], alg.field.reduce(-s[i, j, 0] * t[j, i]))


def check_commutative_super(alg: Superalgebra) -> VerificationReport:
    t = alg.tensor()
    s = alg.sign_matrix()[:, :, None]
    total = alg.field.reduce(t - s * t.transpose(1, 0, 2))
    bad = _first_nonzero(alg.field, total)
    n = alg.dim
    if bad is None:
        return _report("super_commutativity", alg, n * n)
    i, j = bad
    return _report("super_commutativity", alg, i * n + j + 1, (i, j),
                   t[i, j], alg.field.reduce(s[i, j, 0] * t[j, i]))


def _jacobi_generic(alg: Superalgebra):
    """Ordered-triple super-Jacobi sweep with dictionary arithmetic (any field)."""
    f = alg.field
    n = alg.dim
    par = alg.parity
    tab = alg.table

    def br2(a, b, c, sign, acc):
        for m, x in tab.get((a, b), {}).items():
            for k, y in tab.get((m, c), {}).items():
                acc[k] = acc.get(k, f.zero) + sign * x * y

    checked = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                checked += 1
                acc: dict = {}
                br2(i, j, k, -1 if par[i] & par[k] else 1, acc)
                br2(j, k, i, -1 if par[j] & par[i] else 1, acc)
                br2(k, i, j, -1 if par[k] & par[j] else 1, acc)
                if any(f(v) != 0 for v in acc.values()):
                    out = f.zeros(n)
                    for key, v in acc.items():
                        out[key] = f(v)
                    return checked, (i, j, k), out
    return checked, None, None


def check_super_jacobi(alg: Superalgebra) -> VerificationReport:
    """Exhaustive ordered basis-triple super-Jacobi sweep."""
    if alg.field.char:
        ptr, idx, val = alg.csr()
        par = np.array(alg.parity, dtype=np.int64)
        checked, bad, value = kernels.jacobi_sweep(ptr, idx, val, par, alg.field.char)
    else:
        checked, bad, value = _jacobi_generic(alg)
    if bad is None:
        return _report("super_jacobi", alg, checked)
    return _report("super_jacobi", alg, checked, bad, value, alg.field.zeros(alg.dim))


def _chunks(n: int, size: int):
    for a in range(0, n, size):
        yield a, min(n, a + size)


def associator_tensor(alg: Superalgebra, rows: slice | None = None) -> np.ndarray:
    """``A[i, j, k] = (e_i e_j) e_k - e_i (e_j e_k)`` for ``i`` in ``rows``."""
    f = alg.field
    t = alg.tensor()
    n = alg.dim
    rows = rows or slice(0, n)
    ti = t[rows]
    m = ti.shape[0]
    left = matmul(f, ti.reshape(-1, n), t.reshape(n, -1)).reshape(m, n, n, n)
    jk = t.reshape(n * n, n)  # (j,k) -> m'
    # e_i (e_j e_k) = sum_m' c[j,k,m'] c[i,m',:]
    right = np.stack([matmul(f, jk, ti[a]) for a in range(m)])
    right = f.reduce(right).reshape(m, n, n, n)
    return f.reduce(left - right)


def _assoc_sweep(alg: Superalgebra, name: str, combine, chunk: int = 8):
    """Run ``combine(assoc_full, i0, i1)`` over chunks of the first index."""
    n = alg.dim
    f = alg.field
    if n == 0:
        return _report(name, alg, 0)
    A = None
    if n <= MAX_ASSOC_DIM:
        A = associator_tensor(alg)
    for i0, i1 in _chunks(n, chunk):
        vals, lhs, rhs = combine(A, i0, i1)
        bad = _first_nonzero(f, vals)
        if bad is not None:
            i = bad[0] + i0
            idx = (i,) + tuple(int(x) for x in bad[1:])
            return _report(name, alg, i * n * n + idx[1] * n + idx[2] + 1, idx,
                           lhs[bad], rhs[bad])
    return _report(name, alg, n ** 3)


def check_super_alternative(alg: Superalgebra) -> VerificationReport:
    """Associator super-alternating in both adjacent pairs of arguments."""
    if alg.dim > MAX_ASSOC_DIM:
        raise ValueError(f"associator sweeps are limited to dim <= {MAX_ASSOC_DIM}")
    S = alg.sign_matrix()
    f = alg.field

    def combine(A, i0, i1):
        a = A[i0:i1]
        # (x,y,z) + (-1)^{|x||y|} (y,x,z)
        swap_xy = A.transpose(1, 0, 2, 3)[i0:i1]
        v1 = f.reduce(a + S[i0:i1, :, None, None] * swap_xy)
        # (x,y,z) + (-1)^{|y||z|} (x,z,y)
        swap_yz = a.transpose(0, 2, 1, 3)
        v2 = f.reduce(a + S[None, :, :, None] * swap_yz)
        vals = np.concatenate([v1, v2], axis=-1)
        rhs = np.concatenate([f.reduce(-S[i0:i1, :, None, None] * swap_xy),
                              f.reduce(-S[None, :, :, None] * swap_yz)], axis=-1)
        lhs = np.concatenate([a, a], axis=-1)
        return vals, lhs, rhs

    return _assoc_sweep(alg, "super_alternative", combine)


def check_jacobiA_identity(alg: Superalgebra) -> VerificationReport:
    """Koszul-signed cyclic sum ``(a1 a2) a3 + ... = 0``."""
    f = alg.field
    t = alg.tensor()
    n = alg.dim
    if n == 0:
        return _report("jacobiA", alg, 0)
    P = np.array(alg.parity, dtype=np.int64)
    # prod3[i,j,k] = (e_i e_j) e_k
    prod3 = matmul(f, t.reshape(-1, n), t.reshape(n, -1)).reshape(n, n, n, n)
    term1 = prod3
    # (a2 a3) a1 at index (i,j,k) = prod3[j,k,i]
    term2 = prod3.transpose(2, 0, 1, 3)
    term3 = prod3.transpose(1, 2, 0, 3)
    Pi, Pj, Pk = np.ix_(P, P, P)
    s2 = np.where((Pi * (Pj + Pk)) % 2 == 1, -1, 1)[..., None]
    s3 = np.where((Pk * (Pi + Pj)) % 2 == 1, -1, 1)[..., None]
    total = f.reduce(term1 + s2 * term2 + s3 * term3)
    bad = _first_nonzero(f, total)
    if bad is None:
        return _report("jacobiA", alg, n ** 3)
    i, j, k = bad
    return _report("jacobiA", alg, i * n * n + j * n + k + 1, bad, total[bad], f.zeros(n))


def is_derivation(alg: Superalgebra, f_map: LinearMap) -> VerificationReport:
    """Signed Leibniz rule on all basis pairs; also checks ``f`` is homogeneous."""
    fld = alg.field
    n = alg.dim
    F = fld.reduce(np.asarray(f_map.matrix))
    name = "derivation"
    if F.shape != (n, n):
        raise ValueError("operator size does not match the algebra")
    for b in range(n):
        for a in range(n):
            if F[a, b] != 0 and (alg.parity[a] - alg.parity[b] - f_map.parity) % 2:
                return _report(name + "_parity", alg, b * n + a + 1, (a, b),
                               np.array([F[a, b]]), fld.zeros(1))
    t = alg.tensor()
    lhs = matmul(fld, t.reshape(-1, n), F.T).reshape(n, n, n)
    # f(e_i) e_j = sum_a F[a,i] c[a,j,:]
    t1 = matmul(fld, F.T, t.reshape(n, -1)).reshape(n, n, n)
    # e_i f(e_j) = sum_a F[a,j] c[i,a,:]
    t2 = np.stack([matmul(fld, F.T, t[i]) for i in range(n)]) if n else t
    sg = np.where(np.array(alg.parity) * f_map.parity % 2 == 1, -1, 1)[:, None, None]
    rhs = fld.reduce(t1 + sg * t2)
    total = fld.reduce(lhs - rhs)
    bad = _first_nonzero(fld, total)
    if bad is None:
        return _report(name, alg, n * n)
    i, j = bad
    return _report(name, alg, i * n + j + 1, bad, lhs[bad], rhs[bad])


def check_grading(alg: Superalgebra) -> VerificationReport:
    """``[A_i, A_j] <= A_{i+j}`` and ``parity = degree mod 2``."""
    if alg.degree is None:
        raise ValueError("algebra carries no degree vector")
    deg = alg.degree
    for i in range(alg.dim):
        if (deg[i] - alg.parity[i]) % 2:
            return VerificationReport(
                "grading", False, i + 1,
                {"indices": [i], "labels": [alg.labels[i]],
                 "lhs": [str(alg.parity[i])], "rhs": [str(deg[i] % 2)],
                 "reason": "parity differs from degree mod 2"},
                alg.name)
    checked = 0
    for (i, j) in sorted(alg.table):
        for k in sorted(alg.table[(i, j)]):
            checked += 1
            if deg[k] != deg[i] + deg[j]:
                return VerificationReport(
                    "grading", False, checked,
                    {"indices": [i, j, k], "labels": [alg.labels[x] for x in (i, j, k)],
                     "lhs": [str(deg[k])], "rhs": [str(deg[i] + deg[j])],
                     "reason": "product leaves the expected component"},
                    alg.name)
    return VerificationReport("grading", True, checked, None, alg.name)


def random_tuple_check(alg: Superalgebra, identity: str, samples: int = 100,
                       seed: int = DEFAULT_SEED) -> VerificationReport:
    """Evaluate an identity on random homogeneous non-basis tuples.

    Used to confirm that the basis sweeps agree with evaluations on general
    elements.  ``identity`` is one of ``anticommutativity``, ``jacobi``,
    ``commutativity``, ``alternative``, ``jacobiA``.
    """
    f = alg.field
    rng = np.random.default_rng(seed)
    n = alg.dim
    par = np.array(alg.parity)
    mul = alg.multiply

    def rand_homog():
        p = int(rng.integers(0, 2)) if par.any() and (1 - par).any() else int(par[0]) if n else 0
        v = f.random_array(rng, n)
        v = f.reduce(v * (par == p))
        return v, p

    def sgn(a, b):
        return -1 if a * b % 2 else 1

    for s in range(samples):
        (x, px), (y, py), (z, pz) = rand_homog(), rand_homog(), rand_homog()
        if identity == "anticommutativity":
            lhs = mul(x, y)
            rhs = f.reduce(-sgn(px, py) * mul(y, x))
        elif identity == "commutativity":
            lhs = mul(x, y)
            rhs = f.reduce(sgn(px, py) * mul(y, x))
        elif identity == "jacobi":
            lhs = f.reduce(sgn(px, pz) * mul(mul(x, y), z) + sgn(py, px) * mul(mul(y, z), x)
                           + sgn(pz, py) * mul(mul(z, x), y))
            rhs = f.zeros(n)
        elif identity == "jacobiA":
            lhs = f.reduce(mul(mul(x, y), z) + sgn(px, py + pz) * mul(mul(y, z), x)
                           + sgn(pz, px + py) * mul(mul(z, x), y))
            rhs = f.zeros(n)
        elif identity == "alternative":
            def assoc(a, b, c):
                return f.reduce(mul(mul(a, b), c) - mul(a, mul(b, c)))
            lhs = f.reduce(assoc(x, y, z) + sgn(px, py) * assoc(y, x, z))
            lhs2 = f.reduce(assoc(x, y, z) + sgn(py, pz) * assoc(x, z, y))
            lhs = np.concatenate([lhs, lhs2])
            rhs = f.zeros(2 * n)
        else:
            raise ValueError(f"unknown identity {identity!r}")
        if not f.is_zero(f.reduce(lhs - rhs)):
            return VerificationReport(
                f"random_{identity}", False, s + 1,
                {"indices": [], "labels": [], "sample": s,
                 "lhs": [f.to_str(v) for v in lhs], "rhs": [f.to_str(v) for v in rhs]},
                alg.name, seed)
    return VerificationReport(f"random_{identity}", True, samples, None, alg.name, seed)


# ---------------------------------------------------------------------------
# operator spans, derivations
# ---------------------------------------------------------------------------
def supercommutator(field: Field, f: LinearMap, g: LinearMap) -> LinearMap:
    fg = matmul(field, f.matrix, g.matrix)
    gf = matmul(field, g.matrix, f.matrix)
    sign = -1 if f.parity * g.parity else 1
    return LinearMap(field.reduce(fg - sign * gf), (f.parity + g.parity) % 2)


def _operator_parity(mat: np.ndarray, parity: Sequence[int]) -> int:
    par = np.array(parity)
    mask = np.asarray(mat) != 0
    rows, cols = np.nonzero(mask)
    if rows.size == 0:
        return 0
    ps = set(((par[rows] - par[cols]) % 2).tolist())
    if len(ps) != 1:
        raise ValueError("operator is not homogeneous")
    return ps.pop()


class OperatorAlgebra:
    """Span of homogeneous operators closed under the supercommutator.

    The basis is the canonical RREF basis of the flattened operators, so a
    matrix's coordinates are its entries at the pivot positions.
    """

    def __init__(self, field: Field, size: int, operators: Iterable, parity: Sequence[int],
                 name: str = "", label_prefix: str = "D"):
        self.field = field
        self.size = size
        self.space_parity = tuple(parity)
        mats = [field.reduce(np.asarray(getattr(o, "matrix", o))).reshape(-1) for o in operators]
        self.space = Subspace.span(field, size * size, mats)
        self.operators = [
            LinearMap(row.reshape(size, size), _operator_parity(row.reshape(size, size), parity))
            for row in self.space.basis
        ]
        k = len(self.operators)
        labels = [f"{label_prefix}{i}" for i in range(k)]
        table: dict = {}
        for a in range(k):
            for b in range(k):
                c = self.coords(supercommutator(field, self.operators[a], self.operators[b]).matrix)
                if c is None:
                    raise ValueError("operator span is not closed under the supercommutator")
                nz = {int(t): c[t] for t in range(k) if c[t] != 0}
                if nz:
                    table[(a, b)] = nz
        self.algebra = Superalgebra(field, labels, table, [o.parity for o in self.operators],
                                    name=name)

    @property
    def dim(self) -> int:
        return len(self.operators)

    def coords(self, mat) -> np.ndarray | None:
        return self.space.coords(np.asarray(mat).reshape(-1))

    def require_coords(self, mat) -> np.ndarray:
        c = self.coords(mat)
        if c is None:
            raise ValueError("operator lies outside the span")
        return c

    def element(self, coords) -> np.ndarray:
        """Operator matrix with the given coordinates."""
        if self.dim == 0:
            return self.field.zeros((self.size, self.size))
        return matmul(self.field, np.asarray(coords), self.space.basis).reshape(self.size, self.size)


def derivation_space(alg: Superalgebra, parity: int) -> Subspace:
    """All homogeneous derivations of the given parity, flattened row-major."""
    fld = alg.field
    n = alg.dim
    t = alg.tensor()
    I = fld.identity(n)
    par = np.array(alg.parity)
    # unknown F[a, b] (image of e_b along e_a); equation index (i, j, k)
    M = np.einsum("ijb,ka->ijkab", t, I)
    M = M - np.einsum("ajk,bi->ijkab", t, I)
    sg = np.where(par * parity % 2 == 1, -1, 1)[:, None, None, None, None]
    M = M - sg * np.einsum("iak,bj->ijkab", t, I)
    M = fld.reduce(M).reshape(n ** 3, n * n)
    allowed = [a * n + b for a in range(n) for b in range(n) if (par[a] - par[b] - parity) % 2 == 0]
    if not allowed:
        return Subspace(fld, n * n)
    ker = kernel(M[:, allowed], fld)
    full = fld.zeros((ker.dim, n * n))
    if ker.dim:
        full[:, allowed] = ker.basis
    return Subspace(fld, n * n, full)


def compute_derivation_algebra(alg: Superalgebra) -> OperatorAlgebra:
    """Lie superalgebra of all derivations on its canonical basis."""
    n = alg.dim
    mats = []
    for parity in (0, 1):
        sp = derivation_space(alg, parity)
        mats.extend(row.reshape(n, n) for row in sp.basis)
    return OperatorAlgebra(alg.field, n, mats, alg.parity, name=f"der({alg.name})")


# ---------------------------------------------------------------------------
# submodules and irreducibility
# ---------------------------------------------------------------------------
def _as_stack(field: Field, operators) -> np.ndarray:
    mats = [np.asarray(getattr(o, "matrix", o)) for o in operators]
    if not mats:
        return field.zeros((0, 0, 0))
    return field.reduce(np.stack(mats))


def spin_submodule(operators, seeds, field: Field, dim: int | None = None) -> Subspace:
    """Least subspace containing ``seeds`` and invariant under all ``operators``."""
    ops = _as_stack(field, operators)
    seeds = [np.asarray(s).reshape(-1) for s in seeds]
    if dim is None:
        dim = ops.shape[1] if ops.size else (len(seeds[0]) if seeds else 0)
    space = Subspace(field, dim)
    space = space.extend(np.vstack(seeds)) if seeds else space
    frontier = space.basis
    m = ops.shape[0]
    while frontier.shape[0] and m:
        # images of frontier vectors (rows) under every operator
        imgs = matmul(field, frontier, ops.transpose(0, 2, 1).transpose(1, 0, 2).reshape(dim, m * dim))
        imgs = imgs.reshape(frontier.shape[0] * m, dim)
        rest = space.reduce(imgs)
        if field.is_zero(rest):
            break
        nz = rest[np.flatnonzero(np.any(rest % field.char, axis=1))] if field.char else \
            rest[[i for i in range(rest.shape[0]) if any(x != 0 for x in rest[i])]]
        r, piv = rref(nz, field)
        new = r[: len(piv)]
        space = Subspace(field, dim, np.vstack([space.basis, new]))
        frontier = new
        if space.dim == dim:
            break
    if CHECK_SPINS:
        assert all(space.contains(v) for v in seeds), "spin lost a seed"
        assert is_invariant(space, ops), "spin result is not invariant"
    return space


def is_invariant(subspace: Subspace, operators) -> bool:
    field = subspace.field
    if subspace.dim == 0:
        return True
    for o in operators:
        m = np.asarray(getattr(o, "matrix", o))
        if not subspace.contains(matmul(field, subspace.basis, m.T)):
            return False
    return True


@dataclass
class IrreducibilityCertificate:
    irreducible: bool
    subspace: Subspace | None = None
    theta: np.ndarray | None = None
    eigenvalue: int | None = None
    nullity: int | None = None
    attempts: int = 0
    seed: int = DEFAULT_SEED

    def __bool__(self):
        return self.irreducible


def _projective_points(field: Field, basis: np.ndarray):
    """Every nonzero vector of span(basis) up to scalars (prime fields)."""
    d = basis.shape[0]
    p = field.char
    for idx in range(1, p ** d):
        coeffs = []
        x = idx
        for _ in range(d):
            coeffs.append(x % p)
            x //= p
        lead = next(c for c in reversed(coeffs) if c)
        if lead != 1:
            continue
        yield field.reduce(np.array(coeffs[::-1], dtype=np.int64) @ basis)


def is_irreducible_module(operators, dim: int, field: Field, seed: int = DEFAULT_SEED,
                          max_attempts: int = 400, max_enum: int = 64) -> IrreducibilityCertificate:
    """Norton's irreducibility criterion with seeded random algebra elements.

    ``theta`` is a random combination of the operators and of random products
    of them, shifted by each ``lam`` in the field.  When ``phi = theta - lam``
    has a small kernel, every nonzero ``v`` in ``ker phi`` (up to scalars) is
    spun and one ``w`` in ``ker phi^T`` is spun under the transposed
    operators.  Any proper spin proves reducibility; all-full spins prove
    irreducibility.  Kernels with more than ``max_enum`` vectors are skipped
    after one cheap spin.
    """
    if not field.char:
        raise FieldError("irreducibility testing needs a prime field")
    if dim == 0:
        return IrreducibilityCertificate(False, Subspace(field, 0), seed=seed)
    ops = _as_stack(field, operators) if len(operators) else field.zeros((0, dim, dim))
    if dim == 1:
        return IrreducibilityCertificate(True, None, field.zeros((1, 1)), 0, 1, 0, seed)
    rng = np.random.default_rng(seed)
    p = field.char
    opsT = ops.transpose(0, 2, 1)
    m = ops.shape[0]
    if m == 0:
        # every subspace is invariant
        return IrreducibilityCertificate(False, Subspace(field, dim, field.unit_vector(dim, 0)),
                                         field.zeros((dim, dim)), 0, dim, 0, seed)
    words: list[np.ndarray] = []
    pool = 24

    def proper(sp):
        return 0 < sp.dim < dim

    lam_candidates = list(range(p)) if p <= 11 else None
    for attempt in range(1, max_attempts + 1):
        # random product of two operators or earlier words
        src = list(ops) + words
        a = src[int(rng.integers(len(src)))]
        b = ops[int(rng.integers(m))]
        w = matmul(field, a, b)
        if len(words) < pool:
            words.append(w)
        else:
            words[int(rng.integers(pool))] = w
        coeffs = rng.integers(0, p, size=m)
        theta = np.tensordot(coeffs, ops, axes=1)
        for t in rng.choice(len(words), size=min(3, len(words)), replace=False):
            theta = theta + int(rng.integers(1, p)) * words[int(t)]
        theta = field.reduce(theta)
        lams = lam_candidates if lam_candidates is not None else \
            [0] + [int(x) for x in rng.integers(1, p, size=4)]
        for lam in lams:
            phi = field.reduce(theta - lam * np.eye(dim, dtype=np.int64))
            ker = kernel(phi, field)
            if ker.dim == 0:
                continue
            sp = spin_submodule(ops, [ker.basis[0]], field, dim)
            if proper(sp):
                return IrreducibilityCertificate(False, sp, theta, lam, ker.dim, attempt, seed)
            if p ** ker.dim > max_enum:
                continue
            for v in _projective_points(field, ker.basis):
                sp = spin_submodule(ops, [v], field, dim)
                if proper(sp):
                    return IrreducibilityCertificate(False, sp, theta, lam, ker.dim, attempt, seed)
            kerT = kernel(phi.T, field)
            spT = spin_submodule(opsT, [kerT.basis[0]], field, dim)
            if proper(spT):
                return IrreducibilityCertificate(False, spT.annihilator(), theta, lam, ker.dim,
                                                 attempt, seed)
            return IrreducibilityCertificate(True, None, theta, lam, ker.dim, attempt, seed)
    raise RuntimeError(f"Norton test inconclusive after {max_attempts} attempts")


def multiplication_operators(alg: Superalgebra) -> list[np.ndarray]:
    """Left and right multiplications by basis vectors (the ideal-generating family)."""
    return list(alg.left_ops()) + list(alg.right_ops())


def generated_subalgebra(alg: Superalgebra, vectors) -> Subspace:
    """Least subspace containing ``vectors`` and closed under the product."""
    f = alg.field
    n = alg.dim
    t = alg.tensor()
    space = Subspace(f, n).extend(np.atleast_2d(vectors))
    frontier = space.basis
    while frontier.shape[0]:
        B = space.basis
        # products frontier x B and B x frontier
        fx = matmul(f, frontier, t.reshape(n, n * n)).reshape(-1, n, n)     # (k, j, c) = x_k e_j
        left = matmul(f, fx.reshape(-1, n, n).transpose(0, 2, 1).reshape(-1, n), B.T)
        xb = left.reshape(frontier.shape[0], n, B.shape[0]).transpose(0, 2, 1).reshape(-1, n)
        bx = matmul(f, B, t.reshape(n, n * n)).reshape(-1, n, n)
        bx = matmul(f, bx.transpose(0, 2, 1).reshape(-1, n), frontier.T)
        bx = bx.reshape(B.shape[0], n, frontier.shape[0]).transpose(0, 2, 1).reshape(-1, n)
        rest = space.reduce(np.vstack([xb, bx]))
        r, piv = rref(rest, f)
        if not piv:
            break
        new = r[: len(piv)]
        space = Subspace(f, n, np.vstack([space.basis, new]))
        frontier = new
    return space


def algebra_generators(alg: Superalgebra) -> list[int]:
    """Basis indices, chosen greedily, that generate ``alg`` as an algebra."""
    gens: list[int] = []
    sub = Subspace(alg.field, alg.dim)
    for i in range(alg.dim):
        if sub.dim == alg.dim:
            break
        e = alg.basis_vector(i)
        if sub.contains(e):
            continue
        gens.append(i)
        sub = generated_subalgebra(alg, np.vstack([alg.basis_vector(g) for g in gens]))
    return gens


def is_simple(alg: Superalgebra, seed: int = DEFAULT_SEED) -> bool:
    """Nonzero product and no proper nonzero two-sided ideal."""
    return simplicity_certificate(alg, seed).irreducible


def simplicity_certificate(alg: Superalgebra, seed: int = DEFAULT_SEED) -> IrreducibilityCertificate:
    """Norton test on the multiplication operators.

    For Lie superalgebras the multiplications by a generating set already
    generate the same enveloping algebra (``L_[x,y]`` is the supercommutator
    of ``L_x`` and ``L_y``), so only those are used.  A reducibility witness
    found that way is re-checked against every multiplication operator
    before it is reported; irreducibility under a subfamily implies it for
    the whole family.
    """
    if not alg.field.char:
        raise FieldError("simplicity testing needs a prime field")
    if alg.is_zero_product:
        return IrreducibilityCertificate(False, Subspace.whole(alg.field, alg.dim), seed=seed)
    full = multiplication_operators(alg)
    if alg.dim > 24 and check_super_anticommutativity(alg).passed:
        gens = algebra_generators(alg)
        L, R = alg.left_ops(), alg.right_ops()
        small = [L[g] for g in gens] + [R[g] for g in gens]
        cert = is_irreducible_module(small, alg.dim, alg.field, seed)
        if cert.irreducible or is_invariant(cert.subspace, full):
            return cert
    return is_irreducible_module(full, alg.dim, alg.field, seed)


def ideal_generated(alg: Superalgebra, seeds) -> Subspace:
    return spin_submodule(multiplication_operators(alg), seeds, alg.field, alg.dim)


# ---------------------------------------------------------------------------
# derived algebra, center, sub/quotient algebras, hom spaces
# ---------------------------------------------------------------------------
def derived_subalgebra(alg: Superalgebra) -> Subspace:
    n = alg.dim
    return Subspace(alg.field, n, alg.tensor().reshape(n * n, n))


def center(alg: Superalgebra) -> Subspace:
    """Elements annihilated by left and right multiplication with everything."""
    n = alg.dim
    t = alg.tensor()
    rows = np.vstack([t.transpose(1, 2, 0).reshape(n * n, n), t.transpose(0, 2, 1).reshape(n * n, n)])
    return kernel(rows, alg.field)


def _homogeneous_label(field, alg, vec, attr):
    vals = getattr(alg, attr)
    sup = [i for i in range(alg.dim) if vec[i] != 0]
    got = {vals[i] for i in sup}
    return got.pop() if len(got) == 1 else None


def subalgebra(alg: Superalgebra, space: Subspace, name: str = "", labels=None) -> Superalgebra:
    """The subspace as an algebra in its canonical basis (must be closed)."""
    f = alg.field
    B = space.basis
    k = space.dim
    table: dict = {}
    for a in range(k):
        for b in range(k):
            v = alg.multiply(B[a], B[b])
            c = space.coords(v)
            if c is None:
                raise ValueError("subspace is not closed under the product")
            nz = {t: c[t] for t in range(k) if c[t] != 0}
            if nz:
                table[(a, b)] = nz
    parity = []
    for a in range(k):
        pa = _homogeneous_label(f, alg, B[a], "parity")
        if pa is None:
            raise ValueError("subspace basis is not homogeneous")
        parity.append(pa)
    degree = None
    if alg.degree is not None:
        degree = [_homogeneous_label(f, alg, B[a], "degree") for a in range(k)]
        if any(d is None for d in degree):
            degree = None
    if labels is None:
        labels = [f"b{a}" for a in range(k)]
    return Superalgebra(f, labels, table, parity, degree, name or f"sub({alg.name})")


def restrict_to_indices(alg: Superalgebra, idx: Sequence[int], name: str = "") -> Superalgebra:
    """Subalgebra spanned by a set of basis vectors (must be closed)."""
    f = alg.field
    vecs = np.vstack([alg.basis_vector(i) for i in idx]) if idx else f.zeros((0, alg.dim))
    sp = Subspace(f, alg.dim, vecs)
    sub = subalgebra(alg, sp, name, labels=[alg.labels[i] for i in sorted(idx)])
    return sub


def quotient(alg: Superalgebra, ideal: Subspace, name: str = "") -> Superalgebra:
    """``alg / ideal`` on the basis of non-pivot unit vectors."""
    f = alg.field
    comp = ideal.complement_indices()
    t = alg.tensor()
    table: dict = {}
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            r = ideal.reduce(t[i, j].reshape(1, -1))[0]
            nz = {c: r[k] for c, k in enumerate(comp) if r[k] != 0}
            if nz:
                table[(a, b)] = nz
    parity = [alg.parity[i] for i in comp]
    return Superalgebra(f, [alg.labels[i] for i in comp], table, parity,
                        name=name or f"{alg.name}/I")


def adjoint_ops(alg: Superalgebra) -> np.ndarray:
    return alg.left_ops()


def tensor_action(field: Field, ops_a, ops_b) -> list[np.ndarray]:
    """Action ``x -> rho_a(x) (x) 1 + 1 (x) rho_b(x)`` on a tensor product."""
    out = []
    for A, B in zip(ops_a, ops_b):
        A = np.asarray(A)
        B = np.asarray(B)
        out.append(field.reduce(np.kron(A, field.identity(B.shape[0]))
                                + np.kron(field.identity(A.shape[0]), B)))
    return out


def equivariant_homs(src_ops, tgt_ops, field: Field, src_dim: int | None = None,
                     tgt_dim: int | None = None) -> Subspace:
    """Maps ``F`` (tgt x src, flattened row-major) with ``F rho_s(x) = rho_t(x) F``."""
    src = [np.asarray(getattr(o, "matrix", o)) for o in src_ops]
    tgt = [np.asarray(getattr(o, "matrix", o)) for o in tgt_ops]
    if len(src) != len(tgt):
        raise ValueError("operator families must be indexed by the same basis")
    n = src[0].shape[0] if src else src_dim
    m = tgt[0].shape[0] if tgt else tgt_dim
    if not src:
        return Subspace.whole(field, m * n)
    Im = field.identity(m)
    In = field.identity(n)
    blocks = [field.reduce(np.kron(Im, A.T) - np.kron(B, In)) for A, B in zip(src, tgt)]
    return kernel(np.vstack(blocks), field)


def equivariant_hom_dimension(src_ops, tgt_ops, field: Field, src_dim: int | None = None,
                              tgt_dim: int | None = None) -> int:
    return equivariant_homs(src_ops, tgt_ops, field, src_dim, tgt_dim).dim


def trivial_ops(field: Field, count: int, dim: int = 1) -> list[np.ndarray]:
    return [field.zeros((dim, dim)) for _ in range(count)]


def direct_sum_parts(alg: Superalgebra, parts: Sequence[Subspace]) -> bool:
    """True when the parts are ideals whose sum is direct and fills the algebra."""
    total = Subspace(alg.field, alg.dim)
    for sp in parts:
        if not is_invariant(sp, multiplication_operators(alg)):
            return False
        total = total + sp
    return total.dim == alg.dim == sum(sp.dim for sp in parts)


def rank_of(field: Field, m) -> int:
    return rank(m, field)
