"""Univariate polynomials, homogeneous binary forms and polynomial matrices.

Univariate polynomials over a GF are integer arrays of coefficients, lowest
degree first, with trailing zeros stripped (the zero polynomial is empty).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GF


def ptrim(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1].copy() if nz.size else a[:0].copy()


def pdeg(a) -> int:
    nz = np.flatnonzero(a)
    return int(nz[-1]) if nz.size else -1


def padd(F: GF, a, b) -> np.ndarray:
    n = max(len(a), len(b))
    x = np.zeros(n, dtype=np.int64)
    y = np.zeros(n, dtype=np.int64)
    x[: len(a)] = a
    y[: len(b)] = b
    return ptrim(F.add(x, y))


def psub(F: GF, a, b) -> np.ndarray:
    return padd(F, a, F.neg(np.asarray(b, dtype=np.int64)))


def pmul(F: GF, a, b) -> np.ndarray:
    a, b = ptrim(a), ptrim(b)
    if not len(a) or not len(b):
        return a[:0]
    if F.is_prime:
        return ptrim(np.convolve(a, b) % F.p)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, c in enumerate(a):
        if c:
            out[i : i + len(b)] = F.add(out[i : i + len(b)], F.mul(int(c), b))
    return ptrim(out)


def pdivmod(F: GF, a, b) -> tuple[np.ndarray, np.ndarray]:
    a, b = ptrim(a), ptrim(b)
    if not len(b):
        raise ZeroDivisionError("polynomial division by zero")
    r = a.copy()
    db = len(b) - 1
    q = np.zeros(max(len(a) - db, 1), dtype=np.int64)
    lc_inv = F.inv(int(b[-1]))
    while len(r) - 1 >= db and len(r):
        shift = len(r) - 1 - db
        f = int(F.mul(int(r[-1]), lc_inv))
        q[shift] = f
        r[shift:] = F.sub(r[shift:], F.mul(f, b))
        r = ptrim(r)
    return ptrim(q), r


def pmonic(F: GF, a) -> np.ndarray:
    a = ptrim(a)
    if not len(a):
        return a
    return F.mul(F.inv(int(a[-1])), a)


def pgcd(F: GF, a, b) -> np.ndarray:
    a, b = ptrim(a), ptrim(b)
    while len(b):
        a, b = b, pdivmod(F, a, b)[1]
    return pmonic(F, a)


def pval(a) -> int:
    """Multiplicity of the root 0 (T-adic valuation); -1 for the zero polynomial."""
    nz = np.flatnonzero(a)
    return int(nz[0]) if nz.size else -1


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous f(s,t) = Σ_k coeffs[k] s^{d-k} t^k of degree d."""

    F: GF
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, F: GF, d: int) -> "BinaryForm":
        return cls(F, (0,) * (d + 1))

    @classmethod
    def from_affine(cls, F: GF, poly, d: int) -> "BinaryForm":
        """The form of degree d whose dehomogenisation at s=1 is poly."""
        poly = ptrim(poly)
        if len(poly) > d + 1:
            raise ValueError(f"polynomial of degree {len(poly) - 1} exceeds form degree {d}")
        c = [0] * (d + 1)
        for i, v in enumerate(poly):
            c[i] = int(v)
        return cls(F, tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def affine(self) -> np.ndarray:
        return ptrim(np.array(self.coeffs, dtype=np.int64))

    def s_multiplicity(self) -> int:
        """Exponent of s dividing the form."""
        return self.degree - pdeg(self.affine())

    def __call__(self, s: int, t: int) -> int:
        F = self.F
        total = 0
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if c:
                term = F.mul(F.mul(c, F.power(s, d - k)), F.power(t, k))
                total = F.add(total, term)
        return int(total)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        prod = pmul(self.F, np.array(self.coeffs), np.array(other.coeffs))
        return BinaryForm.from_affine(self.F, prod, self.degree + other.degree)

    def monic(self) -> "BinaryForm":
        if self.is_zero:
            return self
        lead = next(c for c in self.coeffs if c)
        inv = self.F.inv(lead)
        return BinaryForm(self.F, tuple(int(self.F.mul(inv, c)) for c in self.coeffs))

    def exact_div(self, other: "BinaryForm") -> "BinaryForm":
        """self / other, raising if the division is not exact."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        d = self.degree - other.degree
        if self.is_zero:
            return BinaryForm.zero(self.F, max(d, 0))
        q, r = pdivmod(self.F, self.affine(), other.affine())
        if len(r) or d < 0 or pdeg(q) > d or self.s_multiplicity() < other.s_multiplicity():
            raise ValueError("form division is not exact")
        return BinaryForm.from_affine(self.F, q, d)

    def divides(self, other: "BinaryForm") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True


def form_gcd(forms) -> BinaryForm:
    """Monic gcd of homogeneous binary forms."""
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        raise ValueError("gcd of zero forms is undefined")
    F = nonzero[0].F
    g = np.zeros(0, dtype=np.int64)
    for f in nonzero:
        g = pgcd(F, g, f.affine())
    m = min(f.s_multiplicity() for f in nonzero)
    return BinaryForm.from_affine(F, g, pdeg(g) + m).monic()


# polynomial matrices: integer arrays of shape (rows, cols, D), last axis = coefficients


class SingularPolynomialMatrix(ValueError):
    pass


def polymat_mul(F: GF, P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    D = P.shape[2] + Q.shape[2] - 1
    out = np.zeros((P.shape[0], Q.shape[1], D), dtype=np.int64)
    from .linalg import matmul

    for a in range(P.shape[2]):
        if not P[:, :, a].any():
            continue
        for b in range(Q.shape[2]):
            if Q[:, :, b].any():
                out[:, :, a + b] = F.add(out[:, :, a + b], matmul(F, P[:, :, a], Q[:, :, b]))
    return out


def linear_power(F: GF, A: np.ndarray, B: np.ndarray, j: int) -> np.ndarray:
    """Coefficients of (A + T·B)^j as a polynomial matrix."""
    P = np.stack([A, B], axis=2)
    Y = np.eye(A.shape[0], dtype=np.int64)[:, :, None]
    for _ in range(j):
        Y = polymat_mul(F, Y, P)
    return Y


def _row_degrees(C: np.ndarray) -> np.ndarray:
    nz = C != 0
    has = nz.any(axis=1)
    last = C.shape[1] - 1 - np.argmax(nz[:, ::-1], axis=1)
    return np.where(has, last, -1)


def triangular_pivots(F: GF, P: np.ndarray) -> list[np.ndarray]:
    """Diagonal of a row-echelon form of P over F[T] reached by unimodular row operations.

    For P of full column rank r the product of the returned pivots is the gcd of
    the r×r minors of P up to a unit.
    """
    P = np.array(P, dtype=np.int64, copy=True)
    m, r, D = P.shape
    pivots = []
    for c in range(r):
        while True:
            degs = _row_degrees(P[c:, c, :])
            live = np.flatnonzero(degs >= 0)
            if live.size == 0:
                raise SingularPolynomialMatrix(f"column {c} vanishes below the diagonal")
            best = int(live[np.argmin(degs[live])])
            if best:
                P[[c, c + best]] = P[[c + best, c]]
                degs[[0, best]] = degs[[best, 0]]
            dp = int(degs[0])
            if not np.any(degs[1:] >= 0):
                break
            lc_inv = F.inv(int(P[c, c, dp]))
            while True:
                degs = _row_degrees(P[c + 1 :, c, :])
                rows = np.flatnonzero(degs >= dp)
                if rows.size == 0:
                    break
                shifts = degs[rows] - dp
                top = _row_degrees(P[c, c:, :]).max()
                need = top + int(shifts.max()) + 1
                if need > P.shape[2]:
                    P = np.concatenate([P, np.zeros((m, r, need - P.shape[2]), dtype=np.int64)], axis=2)
                D = P.shape[2]
                lead = P[c + 1 + rows, c, degs[rows]]
                factors = F.mul(lead, lc_inv)
                for s in np.unique(shifts):
                    sel = rows[shifts == s]
                    f = factors[shifts == s]
                    idx = c + 1 + sel
                    block = P[idx, c:, s:]
                    P[idx, c:, s:] = F.sub(block, F.mul(f[:, None, None], P[c, c:, : D - s][None]))
        pivots.append(ptrim(P[c, c, :]))
    return pivots


def maximal_minor_gcd(F: GF, P: np.ndarray) -> np.ndarray:
    """Monic gcd of the maximal minors of a full-column-rank polynomial matrix."""
    g = np.ones(1, dtype=np.int64)
    for piv in triangular_pivots(F, P):
        g = pmul(F, g, piv)
    return pmonic(F, g)
