"""Simple commutative alternative superalgebras in characteristic 3.

Three families are built here:

* ``B(1,2)``: basis ``1, u, v`` with ``u, v`` odd, ``u^2 = v^2 = 0`` and
  ``uv = -vu = 1``;
* the divided power algebra ``O(1;N)`` on ``t^(0), ..., t^(3^N - 1)`` with
  ``t^(r) t^(s) = binom(r+s, r) t^(r+s)`` and the derivation
  ``D: t^(r) -> t^(r-1)``;
* ``B(Gamma, D, 0) = Gamma + Gamma u`` with ``a(bu) = (ab)u = (au)b`` and
  ``(au)(bu) = a D(b) - D(a) b``.

The upper index bound is inclusive (``r <= 3^N - 1``), which gives
``dim Gamma = 3^N``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (DEFAULT_SEED, IrreducibilityCertificate, LinearMap, Superalgebra,
                      is_irreducible_module, is_simple, simplicity_certificate)
from .scalars import Field, FieldError, binomial


def _require_char3(field: Field):
    if field.char != 3:
        raise FieldError(f"this construction needs characteristic 3, got {field}")


def build_b12(field: Field) -> Superalgebra:
    _require_char3(field)
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1},
        (1, 2): {0: 1}, (2, 1): {0: -1},
    }
    return Superalgebra(field, ["1", "u", "v"], table, parity=[0, 1, 1], name="B(1,2)")


@dataclass
class DividedPowerAlgebra:
    N: int
    algebra: Superalgebra
    D: LinearMap

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def with_derivation(self, matrix) -> "DividedPowerAlgebra":
        """Same algebra with another even operator in place of ``D``."""
        return DividedPowerAlgebra(self.N, self.algebra, LinearMap(self.field.reduce(np.asarray(matrix)), 0))


def standard_derivation(field: Field, dim: int) -> np.ndarray:
    """Matrix of ``t^(r) -> t^(r-1)`` (columns are images)."""
    m = field.zeros((dim, dim))
    for r in range(1, dim):
        m[r - 1, r] = field.one
    return m


def build_divided_powers(N: int, field: Field) -> DividedPowerAlgebra:
    _require_char3(field)
    if N < 1:
        raise ValueError("N must be at least 1")
    n = 3 ** N
    table = {}
    for r in range(n):
        for s in range(n - r):
            c = binomial(r, s, field)
            if c != 0:
                table[(r, s)] = {r + s: c}
    labels = [f"t{r}" for r in range(n)]
    alg = Superalgebra(field, labels, table, degree=[2 * r for r in range(n)],
                       name=f"O(1;{N})")
    return DividedPowerAlgebra(N, alg, LinearMap(standard_derivation(field, n), 0))


@dataclass
class BGammaD:
    base: DividedPowerAlgebra
    algebra: Superalgebra

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def even(self, r: int) -> int:
        """Index of ``t^(r)``."""
        return r

    def odd(self, r: int) -> int:
        """Index of ``t^(r) u``."""
        return self.base.dim + r


def build_b_gamma(gamma: DividedPowerAlgebra, name: str | None = None) -> BGammaD:
    """``B(Gamma, D, 0)`` on ``t^(0..n-1), t^(0..n-1)u``, with degrees ``2r`` and ``2r - 1``."""
    f = gamma.field
    n = gamma.dim
    G = gamma.algebra.tensor()
    Dm = gamma.D.matrix
    T = f.zeros((2 * n, 2 * n, 2 * n))
    T[:n, :n, :n] = G
    T[:n, n:, n:] = G          # a (bu) = (ab) u
    T[n:, :n, n:] = G          # (au) b = (ab) u
    # (au)(bu) = a D(b) - D(a) b, with D(e_a) = column a of Dm
    aDb = np.einsum("jm,imk->ijk", Dm.T, G)
    Dab = np.einsum("im,mjk->ijk", Dm.T, G)
    T[n:, n:, :n] = f.reduce(aDb - Dab)
    T = f.reduce(T)
    labels = [f"t{r}" for r in range(n)] + [f"t{r}u" for r in range(n)]
    degree = [2 * r for r in range(n)] + [2 * r - 1 for r in range(n)]
    parity = [0] * n + [1] * n
    alg = Superalgebra.from_tensor(f, labels, T, parity=parity, degree=degree,
                                   name=name or f"B(O(1;{gamma.N}),D,0)")
    return BGammaD(gamma, alg)


def d_simplicity_certificate(gamma: DividedPowerAlgebra,
                             seed: int = DEFAULT_SEED) -> IrreducibilityCertificate:
    ops = list(gamma.algebra.left_ops()) + [gamma.D.matrix]
    return is_irreducible_module(ops, gamma.dim, gamma.field, seed)


def check_d_simple(gamma: DividedPowerAlgebra, seed: int = DEFAULT_SEED) -> bool:
    """No proper nonzero ideal of ``Gamma`` is ``D``-invariant."""
    return d_simplicity_certificate(gamma, seed).irreducible


def is_simple_super(alg: Superalgebra, seed: int = DEFAULT_SEED) -> bool:
    return is_simple(alg, seed)


__all__ = [
    "BGammaD", "DividedPowerAlgebra", "build_b12", "build_b_gamma", "build_divided_powers",
    "check_d_simple", "d_simplicity_certificate", "is_simple_super", "simplicity_certificate",
    "standard_derivation",
]
