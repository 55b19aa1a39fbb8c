"""Restricted Lie algebras from structure constants and a basis p-map."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import field
from .linalg import Subspace, inverse, matmul, matpow, rank


class AlgebraError(ValueError):
    """Invalid algebra data or an operation whose preconditions fail."""


@dataclass
class AxiomReport:
    violations: list[tuple[str, tuple[int, ...], str]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, where: tuple[int, ...], detail: str) -> None:
        self.violations.append((kind, where, detail))

    def kinds(self) -> set[str]:
        return {v[0] for v in self.violations}

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"axiom": k, "indices": list(w), "detail": d} for k, w, d in self.violations],
        }


class LieAlgebra:
    """(𝔤, [p]) with [b_i, b_j] = Σ_k c[i,j,k] b_k and b_i^{[p]} = Σ_k pmap[i,k] b_k.

    Structure constants and p-map images live in F_p; the working field
    GF(p, k) only controls which scalars are used for elements.
    """

    def __init__(self, p: int, labels, structure, pmap, name: str = "", k: int = 1, verify: bool = True):
        self.F = field(p, k)
        self.p = p
        self.labels = tuple(str(s) for s in labels)
        n = len(self.labels)
        self.structure = np.asarray(structure, dtype=np.int64).reshape(n, n, n) % p
        self.pmap = np.asarray(pmap, dtype=np.int64).reshape(n, n) % p
        self.name = name or "algebra"
        self.structure.setflags(write=False)
        self.pmap.setflags(write=False)
        # ad_basis[i][:, j] = [b_i, b_j]
        self.ad_basis = np.transpose(self.structure, (0, 2, 1)).copy()
        self._nnz = [(i, j, l, int(c)) for (i, j, l), c in np.ndenumerate(self.structure) if c]
        if verify:
            report = self.verify_axioms()
            if not report.ok:
                raise AlgebraError(f"{self.name}: axioms fail: {report.violations[:3]}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, p={self.p}, dim={self.dim})"

    def over(self, k: int) -> "LieAlgebra":
        """The same algebra with scalars in F_{p^k}."""
        if k == self.F.k:
            return self
        L = LieAlgebra(self.p, self.labels, self.structure, self.pmap, self.name, k=k, verify=False)
        return L

    # elements

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"{self.name} has no basis element {label!r}") from None

    def element(self, spec) -> np.ndarray:
        """Vector from a dict {label: coeff}, a label, or a coefficient sequence."""
        if isinstance(spec, str):
            return self.basis_vector(self.index(spec))
        if isinstance(spec, dict):
            v = self.zero()
            for lab, c in spec.items():
                v[self.index(lab)] = self.F.from_int(c) if isinstance(c, int) else c
            return v
        v = np.asarray(spec, dtype=np.int64)
        if v.shape != (self.dim,):
            raise AlgebraError(f"element must have {self.dim} coordinates")
        return v % self.F.q

    def format(self, v) -> str:
        terms = []
        for c, lab in zip(np.asarray(v).tolist(), self.labels):
            if c == 0:
                continue
            terms.append(lab if c == 1 else f"{c}{lab}" if self.F.is_prime else f"[{c}]{lab}")
        return "+".join(terms) if terms else "0"

    # bracket and ad

    def bracket(self, x, y) -> np.ndarray:
        """[x, y], broadcasting over leading axes."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        F = self.F
        if F.is_prime:
            return np.einsum("...i,...j,ijk->...k", x, y, self.structure) % F.p
        shape = np.broadcast_shapes(x.shape, y.shape)
        out = np.zeros(shape, dtype=np.int64)
        for i, j, l, c in self._nnz:
            term = F.mul(c, F.mul(x[..., i], y[..., j]))
            out[..., l] = F.add(out[..., l], term)
        return out

    def ad(self, x) -> np.ndarray:
        """Matrix of y ↦ [x, y]; batched over leading axes of x."""
        x = np.asarray(x, dtype=np.int64)
        F = self.F
        if F.is_prime:
            return np.einsum("...i,ijk->...jk", x, self.ad_basis) % F.p
        out = np.zeros(x.shape[:-1] + (self.dim, self.dim), dtype=np.int64)
        for i in range(self.dim):
            if np.any(x[..., i]):
                out = F.add(out, F.mul(x[..., i, None, None], self.ad_basis[i]))
        return out

    # p-map

    def p_power(self, x) -> np.ndarray:
        """x^{[p]} via Jacobson's formula, batched over leading axes."""
        x = np.asarray(x, dtype=np.int64)
        single = x.ndim == 1
        X = x.reshape(-1, self.dim)
        F, p = self.F, self.p
        acc = np.zeros_like(X)
        acc_pow = np.zeros_like(X)
        for i in range(self.dim):
            alpha = X[:, i]
            if not alpha.any():
                continue
            b = np.zeros_like(X)
            b[:, i] = alpha
            b_pow = F.mul(F.power(alpha, p)[:, None], self.pmap[i][None, :])
            acc_pow = F.add(acc_pow, b_pow)
            if acc.any():
                acc_pow = F.add(acc_pow, self._jacobson_sum(acc, i, alpha))
            acc = F.add(acc, b)
        return acc_pow[0] if single else acc_pow.reshape(x.shape)

    def _jacobson_sum(self, a: np.ndarray, i: int, alpha: np.ndarray) -> np.ndarray:
        """Σ_{l=1}^{p-1} s_l(a, b) for b = alpha·b_i.

        l·s_l(a, b) is the T^{l-1} coefficient of ad(Ta+b)^{p-1}(a).
        """
        F, p = self.F, self.p
        A = self.ad(a)
        Bt = self.ad_basis[i].T.copy()

        def ad_a(v):
            return matmul(F, A, v[:, :, None])[:, :, 0]

        def ad_b(v):
            return F.mul(alpha[:, None], matmul(F, v, Bt))

        coeffs = [a]
        for _ in range(p - 1):
            nxt = [np.zeros_like(a) for _ in range(len(coeffs) + 1)]
            for d, v in enumerate(coeffs):
                if not v.any():
                    continue
                nxt[d + 1] = F.add(nxt[d + 1], ad_a(v))
                nxt[d] = F.add(nxt[d], ad_b(v))
            coeffs = nxt
        total = np.zeros_like(a)
        for l in range(1, p):
            c = coeffs[l - 1]
            if c.any():
                total = F.add(total, F.mul(F.inv(l), c))
        return total

    # axioms

    def verify_axioms(self) -> AxiomReport:
        report = AxiomReport()
        n, F, p = self.dim, field(self.p), self.p
        c = self.structure
        for i in range(n):
            if c[i, i].any():
                report.add("antisymmetry", (i, i), f"[{self.labels[i]},{self.labels[i]}] != 0")
            for j in range(i + 1, n):
                if np.any((c[i, j] + c[j, i]) % p):
                    report.add("antisymmetry", (i, j), f"[{self.labels[i]},{self.labels[j]}] != -[{self.labels[j]},{self.labels[i]}]")
        ad = self.ad_basis
        for i in range(n):
            for j in range(i + 1, n):
                lhs = (ad[i] @ ad[j] - ad[j] @ ad[i]) % p
                rhs = np.einsum("k,kab->ab", c[i, j], ad) % p
                bad = np.flatnonzero(np.any((lhs - rhs) % p, axis=0))
                if bad.size:
                    l = int(bad[0])
                    report.add("jacobi", (i, j, l), f"Jacobi fails on ({self.labels[i]},{self.labels[j]},{self.labels[l]})")
        for i in range(n):
            lhs = matpow(F, ad[i], p)
            rhs = np.einsum("k,kab->ab", self.pmap[i], ad) % p
            if np.any((lhs - rhs) % p):
                report.add("ad-compatibility", (i,), f"(ad {self.labels[i]})^p != ad({self.labels[i]}^[p])")
        if report.ok:
            L = self.over(1)
            for i in range(n):
                for j in range(i + 1, n):
                    x = L.basis_vector(i) + L.basis_vector(j)
                    if np.any((L.ad(L.p_power(x)) - matpow(F, L.ad(x), p)) % p):
                        report.add("p-consistency", (i, j), f"ad((b_{i}+b_{j})^[p]) != ad(b_{i}+b_{j})^p")
        return report

    # substructures

    def center(self) -> Subspace:
        n = self.dim
        M = np.transpose(self.structure, (1, 2, 0)).reshape(n * n, n)
        return Subspace.kernel(self.F, M)

    def _bracket_columns(self, s) -> np.ndarray:
        """Matrix with column i equal to [b_i, s]."""
        return np.stack([self.bracket(self.basis_vector(i), s) for i in range(self.dim)], axis=1)

    def centralizer(self, vectors) -> Subspace:
        vectors = np.asarray(vectors, dtype=np.int64).reshape(-1, self.dim)
        if vectors.shape[0] == 0:
            return Subspace.whole(self.F, self.dim)
        M = np.vstack([self._bracket_columns(s) for s in vectors])
        return Subspace.kernel(self.F, M)

    def normalizer(self, H: Subspace) -> Subspace:
        Q = H.annihilator()
        if Q.shape[0] == 0 or H.dim == 0:
            return Subspace.whole(self.F, self.dim)
        M = np.vstack([matmul(self.F, Q, self._bracket_columns(h)) for h in H.basis])
        return Subspace.kernel(self.F, M)

    def derived(self) -> Subspace:
        vecs = [self.structure[i, j] for i in range(self.dim) for j in range(i + 1, self.dim)]
        return Subspace.span(self.F, np.array(vecs).reshape(-1, self.dim), self.dim)

    def is_subalgebra(self, S: Subspace) -> bool:
        B = S.basis
        return all(S.contains(self.bracket(B[a], B[b])) for a in range(len(B)) for b in range(a + 1, len(B)))

    def is_ideal(self, S: Subspace) -> bool:
        return all(S.contains(self.bracket(self.basis_vector(i), v)) for i in range(self.dim) for v in S.basis)

    def is_p_closed(self, S: Subspace) -> bool:
        return all(S.contains(self.p_power(v)) for v in S.basis)

    def ideal_generated(self, vectors) -> Subspace:
        S = Subspace.span(self.F, np.asarray(vectors).reshape(-1, self.dim), self.dim)
        while True:
            new = [self.bracket(self.basis_vector(i), v) for i in range(self.dim) for v in S.basis]
            T = S + Subspace.span(self.F, np.array(new).reshape(-1, self.dim), self.dim)
            if T == S:
                return S
            S = T

    def p_ideal_generated(self, vectors) -> Subspace:
        S = self.ideal_generated(vectors)
        while True:
            T = self.ideal_generated(np.vstack([S.basis, np.array([self.p_power(v) for v in S.basis]).reshape(-1, self.dim)]))
            if T == S:
                return S
            S = T

    def change_basis(self, vectors, labels=None, name: str | None = None) -> "LieAlgebra":
        """The same algebra written in a new basis (rows of `vectors`, over F_p)."""
        B = np.asarray(vectors, dtype=np.int64) % self.p
        F = field(self.p)
        n = self.dim
        if B.shape != (n, n) or rank(F, B) < n:
            raise AlgebraError("change of basis needs n independent vectors")
        Binv = inverse(F, B.T)  # coordinates: Binv @ v
        L1 = self.over(1)
        struct = np.zeros((n, n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                struct[a, b] = Binv @ L1.bracket(B[a], B[b]) % self.p
        pm = np.array([Binv @ L1.p_power(B[a]) % self.p for a in range(n)])
        labels = labels or [L1.format(v) for v in B]
        return LieAlgebra(self.p, labels, struct, pm, name or self.name, k=self.F.k, verify=False)

    def subalgebra(self, S: Subspace, labels=None) -> "LieAlgebra":
        """The p-subalgebra on S, in the RREF basis of S."""
        L1 = self.over(1)
        Sp = Subspace.span(L1.F, S.basis, self.dim)
        if not L1.is_subalgebra(Sp):
            raise AlgebraError("subspace is not closed under the bracket")
        if not L1.is_p_closed(Sp):
            raise AlgebraError("subspace is not closed under the p-map")
        d = Sp.dim
        B = Sp.basis
        struct = np.zeros((d, d, d), dtype=np.int64)
        for a in range(d):
            for b in range(d):
                struct[a, b] = Sp.coordinates(L1.bracket(B[a], B[b]))
        pm = np.array([Sp.coordinates(L1.p_power(v)) for v in B]).reshape(d, d)
        labels = labels or [L1.format(v) for v in B]
        return LieAlgebra(self.p, labels, struct, pm, f"sub({self.name})", k=self.F.k)

    def quotient(self, I: Subspace) -> tuple["LieAlgebra", np.ndarray]:
        """𝔤/I with its induced p-map, and the projection matrix."""
        L1 = self.over(1)
        I = Subspace.span(L1.F, I.basis, self.dim)
        if not L1.is_ideal(I):
            raise AlgebraError("quotient requires an ideal")
        for i in range(self.dim):
            bi = L1.basis_vector(i)
            for n_ in I.basis:
                diff = (L1.p_power((bi + n_) % self.p) - L1.p_power(bi)) % self.p
                if not I.contains(diff):
                    raise AlgebraError(f"p-map is not well defined on the quotient (basis {self.labels[i]})")
        for n_ in I.basis:
            if not I.contains(L1.p_power(n_)):
                raise AlgebraError("ideal is not closed under the p-map")
        comp = I.complement_indices()
        d = len(comp)

        def proj(v):
            return I.reduce(v)[comp]

        P = np.array([proj(L1.basis_vector(i)) for i in range(self.dim)]).T.reshape(d, self.dim)
        struct = np.zeros((d, d, d), dtype=np.int64)
        pm = np.zeros((d, d), dtype=np.int64)
        for a, ia in enumerate(comp):
            for b, ib in enumerate(comp):
                struct[a, b] = proj(L1.structure[ia, ib])
            pm[a] = proj(L1.pmap[ia])
        labels = [self.labels[i] for i in comp]
        Q = LieAlgebra(self.p, labels, struct, pm, f"{self.name}/I", k=self.F.k)
        return Q, P

    # serialisation

    def to_json(self) -> dict:
        br = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.structure[i, j].any():
                    br.append([i, j, *self.structure[i, j].tolist()])
        return {"name": self.name, "p": self.p, "basis": list(self.labels), "brackets": br, "pmap": self.pmap.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> "LieAlgebra":
        try:
            p = int(data["p"])
            labels = list(data["basis"])
        except (KeyError, TypeError, ValueError) as exc:
            raise AlgebraError(f"algebra file needs 'p' and 'basis': {exc}") from None
        n = len(labels)
        struct = np.zeros((n, n, n), dtype=np.int64)
        for entry in data.get("brackets", []):
            if len(entry) < 2 or len(entry) > n + 2:
                raise AlgebraError(f"bad bracket entry {entry}")
            i, j, *coeffs = entry
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"bracket index out of range in {entry}")
            v = np.zeros(n, dtype=np.int64)
            v[: len(coeffs)] = coeffs
            struct[i, j] = v % p
            struct[j, i] = (-v) % p
        pm = np.zeros((n, n), dtype=np.int64)
        for i, img in enumerate(data.get("pmap", [])):
            if i >= n or len(img) > n:
                raise AlgebraError("pmap has too many entries")
            pm[i, : len(img)] = img
        return cls(p, labels, struct, pm % p, data.get("name", "file"))


class Automorphism:
    """An invertible linear map φ of 𝔤; column i is φ(b_i)."""

    def __init__(self, L: LieAlgebra, matrix, name: str = "phi"):
        self.L = L
        self.matrix = np.asarray(matrix, dtype=np.int64) % L.F.q
        self.name = name
        if rank(L.F, self.matrix) < L.dim:
            raise AlgebraError(f"{name} is not invertible")

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return matmul(self.L.F, x, self.matrix.T)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.L, inverse(self.L.F, self.matrix), f"{self.name}^-1")

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self ∘ other."""
        return Automorphism(self.L, matmul(self.L.F, self.matrix, other.matrix), f"{self.name}*{other.name}")

    def lie_violations(self) -> list[tuple[int, int]]:
        return lie_automorphism_violations(self.L, self.matrix)

    def p_violations(self) -> list[int]:
        return p_map_violations(self.L, self.matrix)

    def is_lie(self) -> bool:
        return not self.lie_violations()

    def is_restricted(self) -> bool:
        return self.is_lie() and not self.p_violations()


def lie_automorphism_violations(L: LieAlgebra, phi: np.ndarray) -> list[tuple[int, int]]:
    """Basis pairs (i, j) with φ[b_i,b_j] ≠ [φb_i, φb_j]."""
    F = L.F
    images = phi.T  # row i = φ(b_i)
    lhs = matmul(F, L.structure.reshape(-1, L.dim), phi.T).reshape(L.dim, L.dim, L.dim)
    rhs = L.bracket(images[:, None, :], images[None, :, :])
    bad = np.argwhere(np.any(lhs != rhs, axis=2))
    return [(int(i), int(j)) for i, j in bad if i < j]


def p_map_violations(L: LieAlgebra, phi: np.ndarray) -> list[int]:
    """Basis indices i with φ(b_i^{[p]}) ≠ φ(b_i)^{[p]}."""
    F = L.F
    lhs = matmul(F, L.pmap, phi.T)
    rhs = L.p_power(phi.T)
    return [int(i) for i in np.flatnonzero(np.any(lhs != rhs, axis=1))]


def is_automorphism(L: LieAlgebra, phi) -> bool:
    phi = np.asarray(phi, dtype=np.int64)
    return rank(L.F, phi) == L.dim and not lie_automorphism_violations(L, phi)


def is_p_automorphism(L: LieAlgebra, phi) -> bool:
    phi = np.asarray(phi, dtype=np.int64)
    return is_automorphism(L, phi) and not p_map_violations(L, phi)


def direct_sum(*algebras: LieAlgebra, name: str | None = None) -> LieAlgebra:
    p = algebras[0].p
    if any(A.p != p for A in algebras):
        raise AlgebraError("direct sum of algebras over different primes")
    n = sum(A.dim for A in algebras)
    struct = np.zeros((n, n, n), dtype=np.int64)
    pm = np.zeros((n, n), dtype=np.int64)
    labels = []
    off = 0
    for t, A in enumerate(algebras):
        d = A.dim
        struct[off : off + d, off : off + d, off : off + d] = A.structure
        pm[off : off + d, off : off + d] = A.pmap
        labels += [f"{lab}" if len(algebras) == 1 else f"{lab}_{t + 1}" for lab in A.labels]
        off += d
    return LieAlgebra(p, labels, struct, pm, name or "+".join(A.name for A in algebras))


__all__ = [
    "AlgebraError",
    "AxiomReport",
    "Automorphism",
    "LieAlgebra",
    "direct_sum",
    "is_automorphism",
    "is_p_automorphism",
    "lie_automorphism_violations",
    "p_map_violations",
]
