"""Finite fields F_p and F_{p^k} with vectorised table arithmetic.

Elements are plain integers. An element of F_{p^k} with coefficient vector
(c_0, ..., c_{k-1}) over F_p (modulo a fixed irreducible polynomial) is
encoded as c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so F_p sits inside every
F_{p^k} as the integers 0..p-1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np
from sympy import Poly, isprime, symbols

MAX_ORDER = 4096


class FieldError(ValueError):
    pass


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree k.

    Returned as coefficients (c_0, ..., c_{k-1}) of x^k + c_{k-1}x^{k-1} + ... + c_0;
    the lexicographic order reads c_{k-1} first.
    """
    x = symbols("x")
    for tail in itertools.product(range(p), repeat=k):
        coeffs = [1, *tail]  # highest degree first
        if coeffs[-1] == 0:
            continue
        if Poly(coeffs, x, modulus=p).is_irreducible:
            return tuple(reversed(tail))
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


class GF:
    """The field with q = p^k elements."""

    def __init__(self, p: int, k: int = 1):
        if p < 3 or not isprime(p):
            raise FieldError(f"p must be an odd prime, got {p}")
        if k < 1:
            raise FieldError(f"extension degree must be positive, got {k}")
        q = p**k
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds the supported bound {MAX_ORDER}")
        self.p, self.k, self.q = p, k, q
        self.modulus = smallest_irreducible(p, k) if k > 1 else None
        if k > 1:
            self._build_tables()

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        pw = p ** np.arange(k)
        digits = (np.arange(q)[:, None] // pw) % p
        self._digits = digits
        self._add = ((digits[:, None, :] + digits[None, :, :]) % p) @ pw
        self._neg = ((-digits) % p) @ pw
        comp = np.zeros((k, k), dtype=np.int64)  # multiplication by x
        comp[1:, :-1] = np.eye(k - 1, dtype=np.int64)
        comp[:, -1] = [(-c) % p for c in self.modulus]
        powers = [np.eye(k, dtype=np.int64)]
        for _ in range(k - 1):
            powers.append((comp @ powers[-1]) % p)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            mat = sum(int(c) * m for c, m in zip(digits[a], powers)) % p
            mul[a] = ((digits @ mat.T) % p) @ pw
        self._mul = mul
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = np.argmax(mul[1:] == 1, axis=1)
        self._inv = inv

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    @property
    def is_prime(self) -> bool:
        return self.k == 1

    # elementwise arithmetic on ints or integer arrays

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return self._add[a, b]

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        return self._mul[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return np.asarray(pow_mod_array(a, self.p - 2, self.p)) if np.ndim(a) else pow(int(a), -1, self.p)
        return self._inv[a]

    def power(self, a, e: int):
        """a**e for e >= 0, elementwise."""
        if self.k == 1:
            return pow_mod_array(a, e, self.p) if np.ndim(a) else pow(int(a), e, self.p)
        result = np.ones_like(np.asarray(a))
        base = np.asarray(a)
        while e:
            if e & 1:
                result = self._mul[result, base]
            base = self._mul[base, base]
            e >>= 1
        return result if np.ndim(a) else int(result)

    def frobenius(self, a):
        return self.power(a, self.p)

    def from_int(self, n):
        return np.asarray(n) % self.p if np.ndim(n) else int(n) % self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def coefficients(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0..c_{k-1}) of an encoded element."""
        return tuple((int(a) // self.p**i) % self.p for i in range(self.k))

    def encode(self, coeffs) -> int:
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def element(self, value) -> "FieldElement":
        return FieldElement(self, int(value))

    def random(self, rng: np.random.Generator, size=None):
        return rng.integers(0, self.q, size=size)


def pow_mod_array(a, e: int, p: int):
    a = np.asarray(a, dtype=np.int64) % p
    result = np.ones_like(a)
    while e:
        if e & 1:
            result = (result * a) % p
        a = (a * a) % p
        e >>= 1
    return result


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    """Shared field instance (tables are built once per (p, k))."""
    return GF(p, k)


class FieldElement:
    """A scalar of F_{p^k} with operator overloading."""

    __slots__ = ("F", "value")

    def __init__(self, F: GF, value: int):
        if not 0 <= value < F.q:
            raise FieldError(f"{value} is not an element encoding of {F}")
        self.F = F
        self.value = value

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.F != self.F:
                raise FieldError("mixed fields")
            return other.value
        return self.F.from_int(int(other))

    def __add__(self, other):
        return FieldElement(self.F, int(self.F.add(self.value, self._lift(other))))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.F, int(self.F.neg(self.value)))

    def __sub__(self, other):
        return FieldElement(self.F, int(self.F.sub(self.value, self._lift(other))))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        return FieldElement(self.F, int(self.F.mul(self.value, self._lift(other))))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.F, int(self.F.inv(self.value)))

    def __truediv__(self, other):
        return self * FieldElement(self.F, self._lift(other)).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.F, int(self.F.power(self.value, e)))

    def frobenius(self):
        return self**self.F.p

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.F == other.F and self.value == other.value
        if isinstance(other, int):
            return self.value == self.F.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.F, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.F}({self.value})"
