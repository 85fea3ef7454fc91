"""Exact linear algebra over a :class:`~tits3.scalars.Field`.

Matrices are numpy arrays (``int64`` residues or ``object`` Fractions).
Subspaces are always kept as the nonzero rows of a reduced row echelon
matrix, which makes subspace equality plain array equality.
"""

from __future__ import annotations

import numpy as np

from .scalars import Field

# float64 BLAS is exact while every partial sum stays below 2**53
_FLOAT_EXACT = float(1 << 52)


def matmul(field: Field, a, b) -> np.ndarray:
    """Exact product ``a @ b`` reduced into ``field``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if field.char == 0:
        return np.dot(a, b)
    p = field.char
    inner = a.shape[-1] if a.ndim else 1
    if inner * (p - 1) ** 2 < _FLOAT_EXACT:
        out = np.dot(a.astype(np.float64), b.astype(np.float64))
        return np.asarray(np.rint(out), dtype=np.int64) % p
    return np.dot(a.astype(np.int64) % p, b.astype(np.int64) % p) % p


def rref(m, field: Field) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Pivots are the first nonzero entry in column order; the output keeps
    the input shape, zero rows last.
    """
    a = field.reduce(np.array(m, dtype=field.dtype, copy=True))
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = a.shape
    pivots: list[int] = []
    p = field.char
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.flatnonzero(col % p if p else np.array([x != 0 for x in col], dtype=bool))
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = field.inv(a[r, c])
        a[r] = field.reduce(a[r] * inv)
        colv = a[:, c].copy()
        colv[r] = 0
        if p:
            hit = np.flatnonzero(colv)
        else:
            hit = np.array([i for i, x in enumerate(colv) if x != 0], dtype=np.intp)
        if hit.size:
            a[hit] = field.reduce(a[hit] - np.outer(colv[hit], a[r]))
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank(m, field: Field) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, field)[1])


class Subspace:
    """Subspace of ``field**ambient`` in canonical RREF form."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis=None, pivots=None, *, canonical=False):
        self.field = field
        self.ambient = ambient
        if basis is None or np.size(basis) == 0:
            self.basis = field.zeros((0, ambient))
            self.pivots: tuple[int, ...] = ()
            return
        basis = np.asarray(basis)
        if basis.ndim == 1:
            basis = basis.reshape(1, -1)
        if basis.shape[1] != ambient:
            raise ValueError("basis vectors have the wrong length")
        if canonical:
            self.basis = basis
            self.pivots = tuple(pivots)
        else:
            r, piv = rref(basis, field)
            self.basis = r[: len(piv)]
            self.pivots = piv

    @classmethod
    def span(cls, field: Field, ambient: int, vectors) -> "Subspace":
        vectors = list(vectors) if not isinstance(vectors, np.ndarray) else vectors
        if len(vectors) == 0:
            return cls(field, ambient)
        return cls(field, ambient, np.vstack([np.asarray(v).reshape(1, -1) for v in vectors]))

    @classmethod
    def whole(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, field.identity(ambient), range(ambient), canonical=True)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"

    def reduce(self, vectors) -> np.ndarray:
        """Remainders of row vectors after eliminating the pivot columns."""
        v = np.asarray(vectors)
        if self.dim == 0:
            return self.field.reduce(v.copy())
        return self.field.reduce(v - matmul(self.field, v[..., list(self.pivots)], self.basis))

    def coords(self, v) -> np.ndarray | None:
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is outside."""
        v = np.asarray(v)
        c = v[..., list(self.pivots)]
        if not self.field.is_zero(self.reduce(v)):
            return None
        return self.field.reduce(c.copy())

    def contains(self, v) -> bool:
        return self.field.is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return other.dim == 0 or self.contains(other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace(self.field, self.ambient, np.vstack([self.basis, other.basis]))

    def extend(self, vectors) -> "Subspace":
        """Span of this subspace and the given row vectors."""
        rest = self.reduce(np.asarray(vectors).reshape(-1, self.ambient))
        keep = [row for row in rest if not self.field.is_zero(row)]
        if not keep:
            return self
        return Subspace(self.field, self.ambient, np.vstack([self.basis] + [np.vstack(keep)]))

    def complement_indices(self) -> list[int]:
        """Non-pivot coordinates: their unit vectors span a complement."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient) if i not in piv]

    def annihilator(self) -> "Subspace":
        """``{w : w . v = 0 for all v in self}`` under the standard pairing."""
        if self.dim == 0:
            return Subspace.whole(self.field, self.ambient)
        return kernel(self.basis, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        return self.annihilator().__add__(other.annihilator()).annihilator()


def kernel(m, field: Field) -> Subspace:
    """Right null space ``{x : m @ x = 0}`` in canonical form."""
    m = np.asarray(m)
    rows, cols = m.shape
    if rows == 0:
        return Subspace.whole(field, cols)
    r, piv = rref(m, field)
    free = [c for c in range(cols) if c not in set(piv)]
    if not free:
        return Subspace(field, cols)
    vecs = field.zeros((len(free), cols))
    for t, f in enumerate(free):
        vecs[t, f] = field.one
        for i, pc in enumerate(piv):
            vecs[t, pc] = field.neg(r[i, f])
    return Subspace(field, cols, vecs)


def solve(m, rhs, field: Field):
    """One solution of ``m @ x = rhs``, or None when the system is inconsistent."""
    m = np.asarray(m)
    rhs = np.asarray(rhs).reshape(-1, 1)
    rows, cols = m.shape
    aug = np.hstack([field.reduce(m.astype(field.dtype)), field.reduce(rhs.astype(field.dtype))])
    r, piv = rref(aug, field)
    if cols in piv:
        return None
    x = field.zeros(cols)
    for i, pc in enumerate(piv):
        x[pc] = r[i, cols]
    return x


def inverse(m, field: Field) -> np.ndarray:
    n = np.asarray(m).shape[0]
    r, piv = rref(np.hstack([np.asarray(m, dtype=field.dtype), field.identity(n)]), field)
    if piv[:n] != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return r[:, n:]
