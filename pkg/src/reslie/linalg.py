"""Dense exact linear algebra over a GF, with canonical subspaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import GF


def asmat(A, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    M = np.array(A, dtype=np.int64)
    if M.ndim == 1 and rows is None:
        M = M.reshape(1, -1) if M.size else np.zeros((0, cols or 0), dtype=np.int64)
    if M.size == 0 and cols is not None:
        M = M.reshape(rows or 0, cols)
    return M


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.is_prime:
        return (A @ B) % F.p
    if A.shape[-1] == 0:
        return np.zeros(A.shape[:-1] + B.shape[-1:], dtype=np.int64)
    out = F.mul(A[..., :, 0:1], B[..., 0:1, :])
    for t in range(1, A.shape[-1]):
        out = F.add(out, F.mul(A[..., :, t : t + 1], B[..., t : t + 1, :]))
    return out


def matvec(F: GF, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return matmul(F, A, v.reshape(-1, 1)).reshape(-1)


def matpow(F: GF, A: np.ndarray, e: int) -> np.ndarray:
    result = identity(A.shape[0])
    base = A
    while e:
        if e & 1:
            result = matmul(F, result, base)
        base = matmul(F, base, base)
        e >>= 1
    return result


def scale(F: GF, c, A: np.ndarray) -> np.ndarray:
    return F.mul(c, A)


def lincomb(F: GF, coeffs, mats) -> np.ndarray:
    """Σ c_i · A_i."""
    out = None
    for c, A in zip(coeffs, mats):
        if c == 0:
            continue
        term = F.mul(int(c), A)
        out = term if out is None else F.add(out, term)
    if out is None:
        return np.zeros_like(np.asarray(mats[0]))
    return out


def rref(F: GF, A) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a matrix")
    rows, cols = R.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = F.mul(F.inv(lead), R[r])
        col = R[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            R[idx] = F.sub(R[idx], F.mul(col[idx, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(F: GF, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return rref(F, A)[1]


def nullspace(F: GF, A) -> np.ndarray:
    """Rows form a basis of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return identity(cols)
    R, r, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    N = zeros(len(free), cols)
    for t, fc in enumerate(free):
        N[t, fc] = 1
        for i, pc in enumerate(pivots):
            N[t, pc] = F.neg(int(R[i, fc]))
    return N


def solve(F: GF, A, b) -> np.ndarray | None:
    """One solution x of A x = b, or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    R, r, pivots = rref(F, np.hstack([A, b]))
    if pivots and pivots[-1] == A.shape[1]:
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, -1]
    return x


def inverse(F: GF, A) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, r, pivots = rref(F, np.hstack([A, identity(n)]))
    if r < n or pivots[n - 1] != n - 1:
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:, n:]


def det(F: GF, A) -> int:
    M = np.array(A, dtype=np.int64, copy=True)
    n = M.shape[0]
    result = 1
    for c in range(n):
        nz = np.flatnonzero(M[c:, c])
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            M[[c, piv]] = M[[piv, c]]
            result = F.neg(result)
        lead = int(M[c, c])
        result = int(F.mul(result, lead))
        below = M[c + 1 :, c]
        idx = np.flatnonzero(below)
        if idx.size:
            f = F.mul(below[idx], F.inv(lead))
            M[c + 1 + idx] = F.sub(M[c + 1 + idx], F.mul(f[:, None], M[c][None, :]))
    return int(result)


def compound(F: GF, A, r: int) -> np.ndarray:
    """r-th compound matrix: r×r minors indexed by lexicographic r-subsets."""
    A = np.asarray(A, dtype=np.int64)
    rows, cols = A.shape
    if not 0 <= r <= min(rows, cols):
        raise ValueError(f"r={r} out of range for a {rows}x{cols} matrix")
    rsets = list(itertools.combinations(range(rows), r))
    csets = list(itertools.combinations(range(cols), r))
    C = zeros(len(rsets), len(csets))
    for a, R in enumerate(rsets):
        sub = A[list(R)]
        for b, S in enumerate(csets):
            C[a, b] = det(F, sub[:, list(S)]) if r else 1
    return C


def is_zero(A) -> bool:
    return not np.any(A)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace of F^n held by its RREF basis."""

    F: GF
    ambient_dim: int
    basis: np.ndarray = dc_field(repr=False)
    pivots: tuple[int, ...] = ()

    @classmethod
    def span(cls, F: GF, vectors, ambient_dim: int | None = None) -> "Subspace":
        V = np.asarray(vectors, dtype=np.int64)
        if ambient_dim is None:
            ambient_dim = V.shape[-1]
        V = V.reshape(-1, ambient_dim)
        if V.shape[0] == 0:
            return cls(F, ambient_dim, zeros(0, ambient_dim), ())
        R, r, pivots = rref(F, V)
        B = R[:r].copy()
        B.setflags(write=False)
        return cls(F, ambient_dim, B, tuple(pivots))

    @classmethod
    def zero(cls, F: GF, n: int) -> "Subspace":
        return cls.span(F, zeros(0, n), n)

    @classmethod
    def whole(cls, F: GF, n: int) -> "Subspace":
        return cls.span(F, identity(n), n)

    @classmethod
    def kernel(cls, F: GF, A) -> "Subspace":
        A = np.asarray(A, dtype=np.int64)
        return cls.span(F, nullspace(F, A), A.shape[1])

    @classmethod
    def image(cls, F: GF, A) -> "Subspace":
        A = np.asarray(A, dtype=np.int64)
        return cls.span(F, A.T, A.shape[0])

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}")
        if self.F != other.F:
            raise ValueError("subspaces over different fields")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.F, np.vstack([self.basis, other.basis]), self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.F, self.ambient_dim)
        # a·U = b·W  ⟺  (a, b) ∈ ker [U^T | -W^T]
        stacked = np.hstack([self.basis.T, self.F.neg(other.basis.T)])
        N = nullspace(self.F, stacked)
        vecs = matmul(self.F, N[:, : self.dim], self.basis)
        return Subspace.span(self.F, vecs, self.ambient_dim)

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        return not np.any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def reduce(self, v) -> np.ndarray:
        """v minus its component along the basis (zero iff v ∈ self)."""
        v = np.asarray(v, dtype=np.int64)
        if self.dim == 0:
            return v.copy()
        c = v[..., list(self.pivots)]
        return self.F.sub(v, matmul(self.F, c.reshape(-1, self.dim), self.basis).reshape(v.shape))

    def coordinates(self, v) -> np.ndarray:
        """Coordinates in the RREF basis; v must lie in the subspace."""
        v = np.asarray(v, dtype=np.int64)
        return v[..., list(self.pivots)]

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def annihilator(self) -> np.ndarray:
        """Rows spanning {y : y·u = 0 for u in self}; so self = ker of this matrix."""
        if self.dim == 0:
            return identity(self.ambient_dim)
        return nullspace(self.F, self.basis)

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def key(self) -> tuple:
        return (self.F.p, self.F.k, self.ambient_dim, tuple(map(tuple, self.basis.tolist())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: "Subspace") -> bool:
        return self.key() < other.key()

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis.tolist()})"


class Echelon:
    """Incrementally grown echelon basis for fast membership tests."""

    def __init__(self, F: GF, n: int):
        self.F = F
        self.n = n
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64).copy()
        for row, pc in zip(self.rows, self.pivots):
            c = int(v[pc])
            if c:
                v = self.F.sub(v, self.F.mul(c, row))
        return v

    def add(self, v) -> bool:
        """Insert v; return True when it was independent."""
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        pc = int(nz[0])
        w = self.F.mul(self.F.inv(int(w[pc])), w)
        self.rows.append(w)
        self.pivots.append(pc)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def batch_rank(F: GF, A) -> np.ndarray:
    """Ranks of a stack of matrices (shape (B, m, n)) by simultaneous elimination."""
    A = np.array(A, dtype=np.int64, copy=True)
    nb, m, n = A.shape
    r = np.zeros(nb, dtype=np.int64)
    rows = np.arange(m)
    for c in range(n):
        mask = (A[:, :, c] != 0) & (rows[None, :] >= r[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        pr = np.argmax(mask[b], axis=1)
        rr = r[b]
        top = A[b, rr].copy()
        A[b, rr] = A[b, pr]
        A[b, pr] = top
        piv_rows = F.mul(F.inv(A[b, rr, c])[:, None], A[b, rr])
        A[b, rr] = piv_rows
        col = np.where(rows[None, :] > rr[:, None], A[b, :, c], 0)
        A[b] = F.sub(A[b], F.mul(col[:, :, None], piv_rows[:, None, :]))
        r[b] += 1
    return r
