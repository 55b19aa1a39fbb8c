"""Rational points of V(𝔤), 𝒩_i(𝔤), Sw(𝔤) and E(2,𝔤); exponentials and admissibility."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import GF
from .liealg import LieAlgebra, lie_automorphism_violations, p_map_violations
from .linalg import Subspace, identity, matmul, matpow

DEFAULT_PLANE_BOUND = 10**5
DEFAULT_CANDIDATE_BOUND = 2 * 10**6
CHUNK = 20000


class EnumerationRefused(RuntimeError):
    """An enumeration would exceed its configured size bound."""


class NotNilpotent(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A line [x], represented with first nonzero coordinate 1."""

    coords: tuple[int, ...]

    @classmethod
    def of(cls, F: GF, v) -> "ProjPoint":
        return cls(tuple(int(c) for c in normalize(F, v)))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)


def normalize(F: GF, v) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64)
    nz = np.flatnonzero(v)
    if nz.size == 0:
        raise ValueError("the zero vector has no projective class")
    return F.mul(F.inv(int(v[nz[0]])), v)


def projective_count(q: int, n: int) -> int:
    return (q**n - 1) // (q - 1)


def projective_points(F: GF, n: int, bound: int = DEFAULT_CANDIDATE_BOUND) -> np.ndarray:
    """All points of ℙ^{n-1}(F) as rows, grouped by leading position."""
    total = projective_count(F.q, n)
    if total > bound:
        raise EnumerationRefused(f"ℙ^{n - 1}(F_{F.q}) has {total} points, above the bound {bound}")
    blocks = []
    for lead in range(n):
        tail = n - lead - 1
        grid = np.indices((F.q,) * tail).reshape(tail, -1).T if tail else np.zeros((1, 0), dtype=np.int64)
        block = np.zeros((grid.shape[0], n), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = grid
        blocks.append(block)
    return np.vstack(blocks)


def _chunks(X: np.ndarray):
    for start in range(0, X.shape[0], CHUNK):
        yield X[start : start + CHUNK]


def nullcone_array(L: LieAlgebra, k: int = 1, bound: int = DEFAULT_CANDIDATE_BOUND) -> np.ndarray:
    """Rows: canonical representatives of ℙ(V(𝔤))(F_{p^k})."""
    Lk = L.over(k)
    pts = projective_points(Lk.F, L.dim, bound)
    keep = [c[~np.any(Lk.p_power(c), axis=1)] for c in _chunks(pts)]
    return np.vstack(keep) if keep else np.zeros((0, L.dim), dtype=np.int64)


def nullcone_points(L: LieAlgebra, k: int = 1, bound: int = DEFAULT_CANDIDATE_BOUND) -> list[ProjPoint]:
    return [ProjPoint(tuple(r)) for r in nullcone_array(L, k, bound).tolist()]


def _ad_power_zero(L: LieAlgebra, X: np.ndarray, i: int) -> np.ndarray:
    A = L.ad(X)
    P = A
    for _ in range(i - 1):
        P = matmul(L.F, P, A)
    return ~np.any(P.reshape(P.shape[0], -1), axis=1)


def stratum_array(L: LieAlgebra, i: int, k: int = 1, bound: int = DEFAULT_CANDIDATE_BOUND) -> np.ndarray:
    """Rows: points of ℙ(𝒩_i(𝔤)) = {[x] : (ad x)^i = 0}."""
    if not 1 <= i <= L.p:
        raise ValueError(f"stratum index must lie in 1..p, got {i}")
    Lk = L.over(k)
    pts = projective_points(Lk.F, L.dim, bound)
    keep = [c[_ad_power_zero(Lk, c, i)] for c in _chunks(pts)]
    return np.vstack(keep) if keep else np.zeros((0, L.dim), dtype=np.int64)


def stratum_points(L: LieAlgebra, i: int, k: int = 1, bound: int = DEFAULT_CANDIDATE_BOUND) -> list[ProjPoint]:
    return [ProjPoint(tuple(r)) for r in stratum_array(L, i, k, bound).tolist()]


def sandwich_array(L: LieAlgebra, k: int = 1, bound: int = DEFAULT_CANDIDATE_BOUND) -> np.ndarray:
    return stratum_array(L, 2, k, bound)


@dataclass
class SandwichReport:
    points: int
    pairs_checked: int
    exhaustive: bool
    violations: list[tuple[tuple[int, ...], tuple[int, ...]]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "points": self.points,
            "pairs_checked": self.pairs_checked,
            "exhaustive": self.exhaustive,
            "violations": [[list(a), list(b)] for a, b in self.violations],
        }


def sandwich_lie_subset_check(L: LieAlgebra, k: int = 1, max_pairs: int = 250_000, seed: int = 0) -> SandwichReport:
    """Check [s,t] ∈ Sw(𝔤) for sandwich pairs; exhaustive when there are at most max_pairs pairs."""
    Lk = L.over(k)
    S = sandwich_array(L, k)
    n = S.shape[0]
    total = n * (n - 1) // 2
    if total <= max_pairs:
        idx = np.array(list(itertools.combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        idx = rng.integers(0, n, size=(max_pairs, 2))
        exhaustive = False
    report = SandwichReport(n, len(idx), exhaustive)
    for block in _chunks(idx):
        br = Lk.bracket(S[block[:, 0]], S[block[:, 1]])
        ok = _ad_power_zero(Lk, br, 2)
        for a, b in block[~ok]:
            report.violations.append((tuple(S[a].tolist()), tuple(S[b].tolist())))
    return report


def exp_ad(L: LieAlgebra, x) -> np.ndarray:
    """exp(x) = Σ_{i<p} (ad x)^i / i!  as a matrix on 𝔤."""
    F, p = L.F, L.p
    A = L.ad(np.asarray(x, dtype=np.int64))
    if np.any(matpow(F, A, p)):
        raise NotNilpotent("exp needs (ad x)^p = 0")
    out = identity(L.dim)
    P = identity(L.dim)
    for i in range(1, p):
        P = matmul(F, P, A)
        out = F.add(out, F.mul(F.inv(math.factorial(i) % p), P))
    return out


@dataclass
class AdmissibleReport:
    admissible: bool
    n3_points: int
    condition_i: bool
    condition_ii: bool
    witness_i: dict | None = None
    witness_ii: dict | None = None

    def as_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "n3_points": self.n3_points,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "witness_i": self.witness_i,
            "witness_ii": self.witness_ii,
        }


def exp_failure(L: LieAlgebra, x) -> dict | None:
    """Why exp(x) is not in Aut_p(𝔤), or None when it is."""
    phi = exp_ad(L, x)
    lie_bad = lie_automorphism_violations(L, phi)
    p_bad = p_map_violations(L, phi)
    if not lie_bad and not p_bad:
        return None
    i = p_bad[0] if p_bad else lie_bad[0][0]
    return {
        "x": L.format(x),
        "basis": L.labels[i],
        "reason": "p-map not preserved" if p_bad else "bracket not preserved",
        "exp_image": L.format(phi[:, i]),
        "image_of_p_power": L.format(matmul(L.F, phi, L.pmap[i].reshape(-1, 1)).reshape(-1)),
        "p_power_of_image": L.format(L.p_power(phi[:, i])),
    }


def admissible(L: LieAlgebra, k: int = 1) -> AdmissibleReport:
    """Check 𝒩₃(𝔤) ⊆ V(𝔤) and exp(𝒩₃(𝔤)) ⊆ Aut_p(𝔤) on rational points.

    Both conditions are evaluated in full so each gets its own witness.
    """
    Lk = L.over(k)
    N3 = stratum_array(L, 3, k)
    pw = Lk.p_power(N3) if len(N3) else N3
    bad_i = np.flatnonzero(np.any(pw, axis=1))
    witness_i = None
    if bad_i.size:
        witness_i = {"x": Lk.format(N3[bad_i[0]]), "x_p": Lk.format(pw[bad_i[0]])}
    witness_ii = None
    for x in N3:
        witness_ii = exp_failure(Lk, x)
        if witness_ii:
            break
    cond_i, cond_ii = witness_i is None, witness_ii is None
    return AdmissibleReport(cond_i and cond_ii, len(N3), cond_i, cond_ii, witness_i, witness_ii)


def is_elementary_plane(L: LieAlgebra, plane: Subspace) -> bool:
    if plane.dim != 2:
        return False
    a, b = plane.basis
    return not np.any(L.bracket(a, b)) and not np.any(L.p_power(a)) and not np.any(L.p_power(b))


def elementary_planes(
    L: LieAlgebra, k: int = 1, bound: int = DEFAULT_PLANE_BOUND, override: bool = False
) -> list[Subspace]:
    """E(2,𝔤)(F_{p^k}): 2-planes that are abelian and inside V(𝔤), sorted canonically."""
    Lk = L.over(k)
    V = nullcone_array(L, k)
    if V.shape[0] > bound and not override:
        raise EnumerationRefused(f"|ℙ(V)| = {V.shape[0]} exceeds the plane-enumeration bound {bound}")
    planes: dict[tuple, Subspace] = {}
    for i in range(V.shape[0] - 1):
        rest = V[i + 1 :]
        br = Lk.bracket(V[i][None, :], rest)
        for j in np.flatnonzero(~np.any(br, axis=1)):
            plane = Subspace.span(Lk.F, np.vstack([V[i], rest[j]]), L.dim)
            planes.setdefault(plane.key(), plane)
    return [planes[key] for key in sorted(planes)]


def plane_points(F: GF, plane: Subspace) -> np.ndarray:
    """The F-rational points of ℙ(plane), as vectors s·a + t·b."""
    a, b = plane.basis
    pts = projective_points(F, 2)
    return F.add(F.mul(pts[:, :1], a[None, :]), F.mul(pts[:, 1:], b[None, :]))


def format_plane(L: LieAlgebra, plane: Subspace) -> str:
    return "span(" + ", ".join(L.format(v) for v in plane.basis) + ")"
