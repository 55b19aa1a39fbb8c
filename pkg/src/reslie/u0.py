"""PBW arithmetic in U₀(𝔤) and induced modules."""

from __future__ import annotations

import itertools
import sys
from typing import Mapping

import numpy as np

from .liealg import AlgebraError, LieAlgebra
from .linalg import Subspace, identity, inverse, matmul, rank
from .rep import Module

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Terms = dict  # exponent tuple -> nonzero coefficient


class U0Algebra:
    """U₀(𝔤) in the PBW basis b_1^{a_1}···b_n^{a_n}, 0 ≤ a_i < p."""

    def __init__(self, L: LieAlgebra):
        self.L = L
        self.F = L.F
        self.n = L.dim
        self.p = L.p
        self._memo: dict[tuple[int, tuple[int, ...]], Terms] = {}
        self._nz_struct = {
            (l, i): [(m, int(c)) for m, c in enumerate(L.structure[l, i]) if c] for l in range(self.n) for i in range(self.n)
        }
        self._nz_pmap = [[(m, int(c)) for m, c in enumerate(L.pmap[l]) if c] for l in range(self.n)]

    @property
    def dim(self) -> int:
        return self.p**self.n

    # term arithmetic

    def _acc(self, out: Terms, terms: Mapping, c: int = 1) -> None:
        F = self.F
        for mono, v in terms.items():
            w = int(F.mul(c, v)) if c != 1 else v
            new = int(F.add(out.get(mono, 0), w))
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)

    def gen_times_monomial(self, l: int, a: tuple[int, ...]) -> Terms:
        """Normal form of b_l · b^a."""
        key = (l, a)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        i = next((t for t in range(l) if a[t]), None)
        out: Terms = {}
        if i is None:
            if a[l] + 1 < self.p:
                b = list(a)
                b[l] += 1
                out[tuple(b)] = 1
            else:
                rest = list(a)
                rest[l] = 0
                rest = tuple(rest)
                for m, c in self._nz_pmap[l]:
                    self._acc(out, self.gen_times_monomial(m, rest), c)
        else:
            a1 = list(a)
            a1[i] -= 1
            a1 = tuple(a1)
            inner = self.gen_times_monomial(l, a1)
            self._acc(out, self.gen_times(i, inner))
            for m, c in self._nz_struct[(l, i)]:
                self._acc(out, self.gen_times_monomial(m, a1), c)
        self._memo[key] = out
        return out

    def gen_times(self, l: int, u: Mapping) -> Terms:
        out: Terms = {}
        for mono, c in u.items():
            self._acc(out, self.gen_times_monomial(l, mono), c)
        return out

    def monomial_times(self, a: tuple[int, ...], u: Mapping) -> Terms:
        out = dict(u)
        for l in reversed(range(self.n)):
            for _ in range(a[l]):
                out = self.gen_times(l, out)
        return out

    def multiply_terms(self, u: Mapping, v: Mapping) -> Terms:
        out: Terms = {}
        for mono, c in u.items():
            self._acc(out, self.monomial_times(mono, v), c)
        return out

    # elements

    def one(self) -> "U0Element":
        return U0Element(self, {(0,) * self.n: 1})

    def zero(self) -> "U0Element":
        return U0Element(self, {})

    def gen(self, label_or_index) -> "U0Element":
        i = label_or_index if isinstance(label_or_index, int) else self.L.index(label_or_index)
        mono = [0] * self.n
        mono[i] = 1
        return U0Element(self, {tuple(mono): 1})

    def from_lie(self, x) -> "U0Element":
        terms = {}
        for i, c in enumerate(np.asarray(x).tolist()):
            if c:
                mono = [0] * self.n
                mono[i] = 1
                terms[tuple(mono)] = int(c)
        return U0Element(self, terms)

    def scalar(self, c: int) -> "U0Element":
        c = int(self.F.from_int(c))
        return U0Element(self, {(0,) * self.n: c} if c else {})

    def monomials(self):
        return itertools.product(range(self.p), repeat=self.n)


class U0Element:
    """An element of U₀(𝔤) in PBW normal form."""

    __slots__ = ("U", "terms")

    def __init__(self, U: U0Algebra, terms: Mapping):
        self.U = U
        clean = {}
        for mono, c in terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != U.n or any(not 0 <= e < U.p for e in mono):
                raise AlgebraError(f"monomial {mono} is not in PBW normal form")
            c = int(c) % U.F.q
            if c:
                clean[mono] = c
        self.terms = clean

    def _coerce(self, other) -> "U0Element":
        if isinstance(other, U0Element):
            if other.U is not self.U:
                raise AlgebraError("elements of different enveloping algebras")
            return other
        return self.U.scalar(int(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        self.U._acc(out, other.terms)
        return U0Element(self.U, out)

    __radd__ = __add__

    def __neg__(self):
        return U0Element(self.U, {m: int(self.U.F.neg(c)) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, U0Element):
            other = self._coerce(other)
            return U0Element(self.U, self.U.multiply_terms(self.terms, other.terms))
        c = int(self.U.F.from_int(int(other)))
        return U0Element(self.U, {m: int(self.U.F.mul(c, v)) for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, e: int):
        out = self.U.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (U0Element, int)):
            return self.terms == self._coerce(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        labels = self.U.L.labels
        parts = []
        for mono, c in sorted(self.terms.items()):
            word = "·".join(f"{labels[i]}^{e}" if e > 1 else labels[i] for i, e in enumerate(mono) if e)
            parts.append(f"{c}{'·' + word if word else ''}" if c != 1 or not word else word)
        return " + ".join(parts)

    def act(self, M: Module) -> np.ndarray:
        """The operator u_M = Σ c·ρ(b_1)^{a_1}···ρ(b_n)^{a_n}."""
        F = M.F
        powers = [[identity(M.dim)] for _ in range(self.U.n)]
        out = np.zeros((M.dim, M.dim), dtype=np.int64)
        for mono, c in self.terms.items():
            op = identity(M.dim)
            for i, e in enumerate(mono):
                while len(powers[i]) <= e:
                    powers[i].append(matmul(F, powers[i][-1], M.mats[i]))
                if e:
                    op = matmul(F, op, powers[i][e])
            out = F.add(out, F.mul(c, op))
        return out


def induced_module(
    L: LieAlgebra,
    sub_vectors,
    character,
    complement=None,
    name: str = "induced",
) -> Module:
    """U₀(𝔤) ⊗_{U₀(𝔥)} k_λ for a p-subalgebra 𝔥 = span(sub_vectors) and restricted character λ.

    The module basis is the PBW monomials in a complement basis of 𝔥 (the
    complement is taken from the standard basis, scanning from the end, unless
    given). The subalgebra generators come last in the working basis, so the
    character reduction happens in one pass after normal ordering.
    """
    F = L.F
    p, n = L.p, L.dim
    H = np.asarray(sub_vectors, dtype=np.int64).reshape(-1, n) % p
    lam = [int(c) % p for c in np.asarray(character).reshape(-1).tolist()]
    if len(lam) != H.shape[0]:
        raise AlgebraError("character needs one value per subalgebra generator")
    Hs = Subspace.span(F, H, n)
    if Hs.dim != H.shape[0]:
        raise AlgebraError("subalgebra generators are linearly dependent")
    L1 = L.over(1)
    for a in range(len(H)):
        for b in range(a + 1, len(H)):
            br = L1.bracket(H[a], H[b])
            if not Hs.contains(br):
                raise AlgebraError("generators do not span a subalgebra")
            coords = _coords(F, H, br)
            if sum(c * l for c, l in zip(coords, lam)) % p:
                raise AlgebraError("character does not vanish on brackets")
        pw = L1.p_power(H[a])
        if not Hs.contains(pw):
            raise AlgebraError("subalgebra is not closed under the p-map")
        coords = _coords(F, H, pw)
        if sum(c * l for c, l in zip(coords, lam)) % p != pow(lam[a], p, p):
            raise AlgebraError("character is not restricted: λ(x^[p]) != λ(x)^p")
    if complement is None:
        complement = []
        span = Hs
        for i in reversed(range(n)):
            e = L.basis_vector(i)
            if not span.contains(e):
                complement.append(i)
                span = span + Subspace.span(F, e[None, :], n)
        complement.sort()
    comp_vecs = np.array([L.basis_vector(i) for i in complement], dtype=np.int64).reshape(-1, n)
    B = np.vstack([comp_vecs, H])
    if rank(F, B) < n:
        raise AlgebraError("complement and subalgebra do not span the algebra")
    c = len(complement)
    Lb = L.change_basis(B, labels=[L.labels[i] for i in complement] + [f"h{t}" for t in range(len(H))])
    U = U0Algebra(Lb)
    monos = list(itertools.product(range(p), repeat=c))
    index = {m: t for t, m in enumerate(monos)}
    dim = len(monos)
    lam_pows = [[pow(l, e, p) for e in range(p)] for l in lam]
    new_mats = []
    for l in range(n):
        A = np.zeros((dim, dim), dtype=np.int64)
        for col, mono in enumerate(monos):
            for full, coef in U.gen_times_monomial(l, mono + (0,) * len(H)).items():
                scal = coef
                for t, e in enumerate(full[c:]):
                    if e:
                        scal = scal * lam_pows[t][e] % p
                if scal:
                    row = index[full[:c]]
                    A[row, col] = (A[row, col] + scal) % p
        new_mats.append(A)
    # ρ(b_i) = Σ_l (B^{-T})_{l,i} ρ(v_l), since b_i = Σ_l (B^{-T})_{l i} v_l
    Binv = inverse(F, B.T)
    mats = []
    for i in range(n):
        A = np.zeros((dim, dim), dtype=np.int64)
        for l in range(n):
            coef = int(Binv[l, i])
            if coef:
                A = (A + coef * new_mats[l]) % p
        mats.append(A)
    return Module(L.over(1), mats, name)


def _coords(F, H: np.ndarray, v: np.ndarray) -> list[int]:
    from .linalg import solve

    sol = solve(F, H.T, v)
    return [int(x) for x in sol]


def regular_module(L: LieAlgebra) -> Module:
    """U₀(𝔤) acting on itself by left multiplication."""
    return induced_module(L, np.zeros((0, L.dim), dtype=np.int64), [], complement=list(range(L.dim)), name="U0")


__all__ = ["U0Algebra", "U0Element", "induced_module", "regular_module", "matmul"]
