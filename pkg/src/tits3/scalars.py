"""Exact scalars: prime fields GF(p) for odd p, and the rationals.

Elements are plain Python values in canonical form: an ``int`` in
``[0, p)`` for GF(p) and a reduced :class:`fractions.Fraction` for Q.
Arrays of scalars are numpy arrays, ``int64`` for GF(p) and ``object``
for Q, so the same numpy code paths serve both fields as long as every
result passes through :meth:`Field.reduce`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# keeps n * p**2 well inside int64 for every accumulation we do
MAX_PRIME = 1 << 24


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    """GF(p) when ``char`` is an odd prime, Q when ``char == 0``."""

    char: int

    def __post_init__(self):
        p = self.char
        if p == 0:
            return
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise FieldError(f"prime {p} too large for int64 kernels")

    # -- identity -------------------------------------------------------
    @property
    def kind(self) -> str:
        return "rationals" if self.char == 0 else "prime-field"

    @property
    def is_prime_field(self) -> bool:
        return self.char != 0

    @property
    def dtype(self):
        return np.int64 if self.char else object

    def __str__(self):
        return "Q" if self.char == 0 else f"GF({self.char})"

    # -- scalars --------------------------------------------------------
    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or Scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        p = self.char
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, p)) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return pow(int(a), -1, self.char) if self.char else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_integer(self, n: int):
        return self(n)

    # -- arrays ---------------------------------------------------------
    def reduce(self, arr):
        """Canonicalize an array (or scalar) produced by ring operations."""
        if self.char:
            return np.asarray(arr, dtype=np.int64) % self.char
        return arr

    def scalar(self, x):
        """Canonical scalar from a 0-d array or a plain number."""
        x = self.reduce(x)
        return x[()] if isinstance(x, np.ndarray) else x

    def array(self, values) -> np.ndarray:
        if self.char:
            a = np.array(values, dtype=object)
            if a.size and any(isinstance(v, (Fraction, str)) for v in a.flat):
                a = np.vectorize(self, otypes=[object])(a)
            return np.asarray(a, dtype=np.int64) % self.char
        a = np.array(values, dtype=object)
        if a.size:
            a = np.vectorize(self, otypes=[object])(a)
        return a

    def zeros(self, shape) -> np.ndarray:
        if self.char:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = self.one
        return v

    def is_zero(self, arr) -> bool:
        a = np.asarray(arr)
        if self.char:
            return not np.any(a % self.char)
        return all(x == 0 for x in a.flat)

    def random_array(self, rng: np.random.Generator, shape, bound: int = 5):
        """Seeded random elements; small numerators/denominators over Q."""
        if self.char:
            return rng.integers(0, self.char, size=shape, dtype=np.int64)
        num = rng.integers(-bound, bound + 1, size=shape)
        den = rng.integers(1, bound + 1, size=shape)
        out = np.empty(np.shape(num), dtype=object)
        for idx in np.ndindex(out.shape):
            out[idx] = Fraction(int(num[idx]), int(den[idx]))
        return out

    # -- serialization --------------------------------------------------
    def to_str(self, x) -> str:
        if self.char:
            return str(int(x) % self.char)
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, s: str):
        s = s.strip()
        if self.char:
            if "/" in s:
                n, d = s.split("/")
                return self(Fraction(int(n), int(d)))
            return int(s) % self.char
        return Fraction(s)


GF3 = Field(3)
GF5 = Field(5)
GF7 = Field(7)
Q = Field(0)


def parse_field(selector: str) -> Field:
    """Field from a CLI selector: ``gf3``, ``gf5``, ``gf7``, ``gfp:<p>`` or ``q``."""
    s = selector.strip().lower()
    if s == "q":
        return Q
    if s.startswith("gfp:"):
        return Field(int(s[4:]))
    if s.startswith("gf") and s[2:].isdigit():
        return Field(int(s[2:]))
    raise FieldError(f"unknown field selector {selector!r}")


def binomial(r: int, s: int, field: Field):
    """C(r+s, r) in ``field``; Lucas' theorem over GF(p)."""
    if r < 0 or s < 0:
        raise ValueError("binomial arguments must be non-negative")
    p = field.char
    if p == 0:
        return Fraction(math.comb(r + s, r))
    n, k = r + s, r
    out = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
        n //= p
        k //= p
    return out
