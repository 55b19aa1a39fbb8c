"""Jordan types, rank profiles, equal images, generic kernels and j-degree functions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import GF, field
from .forms import BinaryForm, form_gcd, linear_power, maximal_minor_gcd, pdeg, pval
from .liealg import Automorphism, LieAlgebra
from .linalg import Subspace, batch_rank, compound, inverse, matmul, rank, rref
from .rep import Module
from .varieties import EnumerationRefused, elementary_planes, format_plane, nullcone_array, projective_points


class NotInNullcone(ValueError):
    pass


class EmptyNullcone(ValueError):
    pass


class NonConstantRank(ValueError):
    """Degree requested on a plane where the j-rank varies; carries the rank profile."""

    def __init__(self, message: str, profile: dict):
        super().__init__(message)
        self.profile = profile


class NotElementary(ValueError):
    pass


# Jordan types


@dataclass(frozen=True)
class JordanType:
    """Block multiplicities a_1..a_p of a nilpotent operator with x^p = 0."""

    blocks: tuple[int, ...]

    @classmethod
    def from_ranks(cls, ranks, dim: int, p: int) -> "JordanType":
        """ranks[i-1] = rk(x^i) for i = 1..p-1."""
        ranks = list(ranks)
        if len(ranks) != p - 1:
            raise ValueError(f"expected {p - 1} ranks, got {len(ranks)}")
        rk = [dim] + ranks + [0, 0]
        a = tuple(rk[i - 1] - 2 * rk[i] + rk[i + 1] for i in range(1, p + 1))
        if any(v < 0 for v in a):
            raise ValueError(f"rank sequence {list(ranks)} is not a Jordan rank sequence")
        return cls(a)

    @property
    def dim(self) -> int:
        return sum(i * a for i, a in enumerate(self.blocks, start=1))

    def ranks(self) -> list[int]:
        """rk(x^i) for i = 1..p-1, rebuilt from the blocks."""
        p = len(self.blocks)
        return [sum(a * max(0, size - i) for size, a in enumerate(self.blocks, start=1)) for i in range(1, p)]

    def __str__(self) -> str:
        parts = [f"{a}[{i}]" for i, a in reversed(list(enumerate(self.blocks, start=1))) if a]
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"blocks": list(self.blocks), "display": str(self)}


def _act_batch(M: Module, X: np.ndarray) -> np.ndarray:
    """Stack of operators ρ(x) for the rows x of X."""
    F = M.F
    X = np.asarray(X, dtype=np.int64).reshape(-1, M.L.dim)
    if F.is_prime:
        return np.tensordot(X, np.stack(M.mats), axes=1) % F.q
    out = np.zeros((X.shape[0], M.dim, M.dim), dtype=np.int64)
    for i, A in enumerate(M.mats):
        out = F.add(out, F.mul(X[:, i, None, None], A[None]))
    return out


def _power_ranks(M: Module, X: np.ndarray, powers) -> np.ndarray:
    """ranks[t, l] = rk(ρ(x_t)^{powers[l]})."""
    F = M.F
    ops = _act_batch(M, X)
    out = np.zeros((ops.shape[0], len(powers)), dtype=np.int64)
    if M.dim == 0 or ops.shape[0] == 0:
        return out
    P = ops
    e = 1
    for l, target in enumerate(sorted(powers)):
        while e < target:
            P = matmul(F, P, ops)
            e += 1
        out[:, powers.index(target)] = batch_rank(F, P)
    return out


def jordan_type(M: Module, x) -> JordanType:
    L = M.L
    x = np.asarray(x, dtype=np.int64) % M.F.q
    if not x.any():
        raise NotInNullcone("x must be nonzero")
    if L.p_power(x).any():
        raise NotInNullcone(f"{L.format(x)} is not in the nullcone")
    ranks = _power_ranks(M, x[None, :], list(range(1, L.p)))[0]
    return JordanType.from_ranks(ranks.tolist(), M.dim, L.p)


# rank profiles and equal images


@dataclass
class RankProfile:
    j: int
    k: int
    points: list[tuple[int, ...]]
    ranks: np.ndarray  # (points, p-1): rk(x^1), …, rk(x^{p-1})

    @property
    def jranks(self) -> list[int]:
        return self.ranks[:, self.j - 1].tolist()

    @property
    def constant(self) -> bool:
        return len(set(self.jranks)) <= 1

    @property
    def generic_rank(self) -> int:
        return max(self.jranks) if self.points else 0

    def multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.jranks:
            out[r] = out.get(r, 0) + 1
        return dict(sorted(out.items()))

    def as_dict(self, L: LieAlgebra | None = None) -> dict:
        fmt = (lambda v: L.over(self.k).format(v)) if L is not None else list
        return {
            "j": self.j,
            "k": self.k,
            "constant": self.constant,
            "rk_j": self.generic_rank,
            "multiset": {str(a): b for a, b in self.multiset().items()},
            "points": [{"x": fmt(pt), "ranks": r} for pt, r in zip(self.points, self.ranks.tolist())],
        }


def _nullcone(M: Module, k: int) -> np.ndarray:
    pts = nullcone_array(M.L, k)
    if pts.shape[0] == 0:
        raise EmptyNullcone(f"ℙ(V({M.L.name}))(F_{M.F.p}^{k}) is empty")
    return pts


def rank_profile(M: Module, j: int, k: int = 1) -> RankProfile:
    L = M.L
    if not 1 <= j <= L.p - 1:
        raise ValueError(f"j must lie in 1..p-1, got {j}")
    Mk = M.over(k)
    pts = _nullcone(M, k)
    ranks = _power_ranks(Mk, pts, list(range(1, L.p)))
    return RankProfile(j, k, [tuple(r) for r in pts.tolist()], ranks)


def image_subspace(F: GF, X: np.ndarray) -> Subspace:
    return Subspace.span(F, X.T, X.shape[0])


def eip_check(M: Module, j: int, k: int = 1, points=None) -> bool:
    """im x^j is the same subspace for every enumerated nullcone point."""
    Mk = M.over(k)
    F = Mk.F
    pts = _nullcone(M, k) if points is None else np.asarray(points, dtype=np.int64)
    ops = _act_batch(Mk, pts)
    P = ops
    for _ in range(j - 1):
        P = matmul(F, P, ops)
    first = image_subspace(F, P[0])
    return all(image_subspace(F, P[t]) == first for t in range(1, P.shape[0]))


def images(M: Module, j: int, points) -> list[Subspace]:
    F = M.F
    ops = _act_batch(M, points)
    P = ops
    for _ in range(j - 1):
        P = matmul(F, P, ops)
    return [image_subspace(F, P[t]) for t in range(P.shape[0])]


def mod_j_membership(M: Module, j: int, k: int = 1) -> bool:
    """x^j acts as zero for every enumerated nullcone point."""
    Mk = M.over(k)
    pts = nullcone_array(M.L, k)
    if pts.shape[0] == 0:
        return True
    ops = _act_batch(Mk, pts)
    P = ops
    for _ in range(j - 1):
        P = matmul(Mk.F, P, ops)
    return not P.any()


# planes


def plane_pair(L: LieAlgebra, plane) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(plane, Subspace):
        if plane.dim != 2:
            raise NotElementary("a plane needs dimension 2")
        return plane.basis[0], plane.basis[1]
    a, b = plane
    return np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)


def _check_elementary(L: LieAlgebra, a, b) -> None:
    if rank(L.F, np.vstack([a, b])) < 2:
        raise NotElementary("plane generators are dependent")
    if L.bracket(a, b).any():
        raise NotElementary("plane is not abelian")
    if L.p_power(a).any() or L.p_power(b).any():
        raise NotElementary("plane is not inside the nullcone")


def plane_points(F: GF, a, b) -> np.ndarray:
    st = projective_points(F, 2)
    return F.add(F.mul(st[:, :1], np.asarray(a)[None, :]), F.mul(st[:, 1:], np.asarray(b)[None, :]))


def plane_ranks(M: Module, a, b, j: int) -> list[int]:
    pts = plane_points(M.F, a, b)
    return _power_ranks(M, pts, [j])[:, 0].tolist()


# degree


def degree(M: Module, plane, j: int, method: str = "minors") -> int:
    """deg^j(M|_𝔢) for the plane 𝔢 = span(a, b), over M's field.

    The j-rank must be constant on the rational points of ℙ(𝔢); otherwise
    NonConstantRank is raised with the observed profile.
    """
    L = M.L
    a, b = plane_pair(L, plane)
    _check_elementary(L, a, b)
    ranks = plane_ranks(M, a, b, j)
    if len(set(ranks)) > 1:
        pts = plane_points(M.F, a, b)
        raise NonConstantRank(
            f"j-rank varies on the plane: {sorted(set(ranks))}",
            {L.format(x): r for x, r in zip(pts, ranks)},
        )
    r = ranks[0]
    if r == 0:
        return 0
    F, A, B = M.F, M.act(a), M.act(b)
    if method == "minors":
        return _degree_minors(F, A, B, j, r)
    if method == "compound":
        return degree_compound(F, A, B, j, r)[0]
    if method == "sections":
        return degree_sections(F, A, B, j, r)
    raise ValueError(f"unknown degree method {method!r}")


def _degree_minors(F: GF, A: np.ndarray, B: np.ndarray, j: int, r: int) -> int:
    """jr minus the degree of the gcd of the r×r minors of r independent columns of (sA+tB)^j.

    Those minors form one column of the compound matrix, i.e. g·v_C·u with u the
    primitive Plücker vector; their gcd is g·v_C, so the remainder has degree deg u.
    The gcd is found in the chart s = 1 by unimodular elimination over F[T],
    and its power of s from the chart t = 1.
    """
    Aj = A
    for _ in range(j - 1):
        Aj = matmul(F, Aj, A)
    _, rk, cols = rref(F, Aj)
    if rk != r:
        raise NonConstantRank("rank at (1:0) differs from the plane rank", {})
    Yt = linear_power(F, A, B, j)[:, cols, :]  # (A + T B)^j
    Ys = linear_power(F, B, A, j)[:, cols, :]  # (B + S A)^j
    g_aff = maximal_minor_gcd(F, Yt)
    g_s = maximal_minor_gcd(F, Ys)
    return j * r - (pdeg(g_aff) + pval(g_s))


COMPOUND_BOUND = 5 * 10**7


def _interpolation_field(F: GF, npts: int) -> GF:
    k = F.k
    while F.p**k < npts:
        k += 1
    return field(F.p, k)


def degree_compound(F: GF, A: np.ndarray, B: np.ndarray, j: int, r: int, column=None) -> tuple[int, list[int]]:
    """Literal exterior-power algorithm, feasible for small modules only.

    W = compound((sA+tB)^j, r) is computed entrywise as forms of degree jr by
    evaluation at jr+1 values of t/s and interpolation; g = gcd of all entries;
    W/g has rank one and the answer is jr − deg g − deg gcd(column). Returns the
    degree from the chosen column and the list of values over all nonzero columns.
    """
    d = j * r
    m = A.shape[0]
    nrow = math.comb(m, r)
    if nrow * nrow * (d + 1) > COMPOUND_BOUND:
        raise EnumerationRefused(f"compound of size C({m},{r}) = {nrow} exceeds the bound; use method 'minors'")
    E = _interpolation_field(F, d + 1)
    vals = np.zeros((d + 1, nrow, nrow), dtype=np.int64)
    Ae, Be = A.copy(), B.copy()  # F_p entries embed verbatim
    for T in range(d + 1):
        Y = E.add(Ae, E.mul(T, Be))
        P = Y
        for _ in range(j - 1):
            P = matmul(E, P, Y)
        vals[T] = compound(E, P, r)
    V = np.array([[int(E.power(T, e)) for e in range(d + 1)] for T in range(d + 1)], dtype=np.int64)
    Vinv = inverse(E, V)
    coeffs = matmul(E, Vinv, vals.reshape(d + 1, -1)).reshape(d + 1, nrow, nrow)
    if F.is_prime and np.any(coeffs >= F.p):
        raise ArithmeticError("interpolated minors left the ground field")
    forms = [[BinaryForm.from_affine(F, coeffs[:, R, C], d) for C in range(nrow)] for R in range(nrow)]
    flat = [f for row in forms for f in row if not f.is_zero]
    g = form_gcd(flat)
    values = []
    for C in range(nrow):
        col = [forms[R][C] for R in range(nrow) if not forms[R][C].is_zero]
        if not col:
            continue
        reduced = [f.exact_div(g) for f in col]
        values.append(d - g.degree - form_gcd(reduced).degree)
    if not values:
        raise ArithmeticError("compound matrix vanishes identically")
    pick = values[0] if column is None else values[column]
    return pick, values


def degree_sections(F: GF, A: np.ndarray, B: np.ndarray, j: int, r: int) -> int:
    """deg u from the Hilbert function of the image bundle E ⊆ O^m.

    For d ≥ j(r+1) every section of E(d) is Y·w with w of degree d − j, and
    h⁰(E(d)) = r(d+1) − deg u.
    """
    m = A.shape[0]
    d = j * (r + 1)
    Y = linear_power(F, A, B, j)  # Y[:, :, i] is the coefficient of s^{j-i} t^i
    cols = []
    for c in range(m):
        for a in range(d - j + 1):
            v = np.zeros((m, d + 1), dtype=np.int64)
            v[:, a : a + j + 1] = Y[:, c, :]
            cols.append(v.reshape(-1))
    R = rank(F, np.array(cols))
    return r * (d + 1) - R


# degree functions


@dataclass
class DegreeReport:
    j: int
    k: int
    values: dict[str, int] = dc_field(default_factory=dict)
    undefined: dict[str, dict] = dc_field(default_factory=dict)

    @property
    def constant(self) -> bool:
        return len(set(self.values.values())) <= 1 and not self.undefined

    def witnesses(self) -> list[tuple[str, int]]:
        if self.constant:
            return []
        seen: dict[int, str] = {}
        for plane, v in self.values.items():
            seen.setdefault(v, plane)
        return [(pl, v) for v, pl in seen.items()]

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "k": self.k,
            "constant": self.constant,
            "degrees": dict(self.values),
            "non_constant_rank": self.undefined,
            "witnesses": [{"plane": pl, "degree": v} for pl, v in self.witnesses()],
        }


def degree_function(M: Module, j: int, k: int = 1, planes=None, method: str = "minors") -> DegreeReport:
    L = M.L
    Mk = M.over(k)
    Lk = Mk.L
    if planes is None:
        planes = elementary_planes(L, k)
    if not planes:
        raise ValueError(f"E(2,{L.name})(F_{L.p}^{k}) is empty")
    report = DegreeReport(j, k)
    for plane in planes:
        key = format_plane(Lk, plane)
        try:
            report.values[key] = degree(Mk, plane, j, method)
        except NonConstantRank as exc:
            report.undefined[key] = exc.profile
    return report


def generic_kernel(M: Module, j: int, plane=None, k: int = 1) -> Subspace:
    """𝔎ʲ: the sum of ker x^j over rational points of ℙ(𝔢), or of ℙ(V(𝔤)) without a plane."""
    Mk = M.over(k)
    F = Mk.F
    if plane is None:
        pts = _nullcone(M, k)
    else:
        a, b = plane_pair(M.L, plane)
        pts = plane_points(F, a, b)
    ops = _act_batch(Mk, pts)
    P = ops
    for _ in range(j - 1):
        P = matmul(F, P, ops)
    total = Subspace.zero(F, M.dim)
    for X in P:
        total = total + Subspace.kernel(F, X)
        if total.dim == M.dim:
            break
    return total


def stable_generic_kernel_dim(M: Module, j: int, plane, max_k: int = 6) -> tuple[int, int]:
    """dim 𝔎ʲ(M|_𝔢) with k raised until two consecutive levels agree; returns (dim, k)."""
    prev = None
    for k in range(1, max_k + 1):
        if M.F.p**k > 4096:
            break
        dim = generic_kernel(M, j, plane, k).dim
        if prev is not None and dim == prev:
            return dim, k
        prev = dim
    return prev, k


def transform_plane(phi: Automorphism, plane) -> Subspace:
    a, b = plane_pair(phi.L, plane)
    return Subspace.span(phi.L.F, np.vstack([phi(a), phi(b)]), phi.L.dim)


@dataclass
class TwistReport:
    j: int
    rows: list[dict]

    @property
    def ok(self) -> bool:
        return all(r["equal"] for r in self.rows)

    def as_dict(self) -> dict:
        return {"j": self.j, "ok": self.ok, "planes": self.rows}


def twist_degree_identity(M: Module, phi: Automorphism, j: int, k: int = 1) -> TwistReport:
    """deg^j of M^{(φ)} at 𝔢 against deg^j of M at φ^{-1}(𝔢), plane by plane."""
    from .modules import twist

    Mk = M.over(k)
    Lk = Mk.L
    phik = Automorphism(Lk, phi.matrix, phi.name)
    Mt = twist(Mk, phik)
    inv = phik.inverse()
    rows = []
    for plane in elementary_planes(M.L, k):
        left = degree(Mt, plane, j)
        pre = transform_plane(inv, plane)
        right = degree(Mk, pre, j)
        rows.append(
            {
                "plane": format_plane(Lk, plane),
                "preimage": format_plane(Lk, pre),
                "twisted": left,
                "original": right,
                "equal": left == right,
            }
        )
    return TwistReport(j, rows)
