"""Module constructors, functors, radical and socle series, Hom spaces and isomorphism tests."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .catalog import witt_derivations
from .liealg import AlgebraError, Automorphism, LieAlgebra
from .linalg import Echelon, Subspace, identity, inverse, matmul, nullspace, rank, rref
from .rep import Module, ModuleError, ModuleReport, verify_module
from .u0 import U0Algebra, U0Element, induced_module

__all__ = [
    "Module",
    "ModuleError",
    "ModuleReport",
    "verify_module",
]


# constructors


def trivial(L: LieAlgebra, dim: int = 1) -> Module:
    return Module(L, [np.zeros((dim, dim), dtype=np.int64)] * L.dim, "k", verify=False)


def adjoint(L: LieAlgebra) -> Module:
    return Module(L, [L.ad_basis[i] for i in range(L.dim)], "adjoint")


def _sl2_indices(L: LieAlgebra) -> tuple[int, int, int, int | None]:
    labels = list(L.labels)
    try:
        e, h, f = labels.index("e"), labels.index("h"), labels.index("f")
    except ValueError:
        raise ModuleError(f"{L.name} has no e, h, f basis") from None
    c0 = labels.index("c0") if "c0" in labels else None
    return e, h, f, c0


def simple_L(L: LieAlgebra, i: int) -> Module:
    """L(i) for sl(2) or sl(2)_s: basis v_0..v_i of h-weights i, i−2, …, −i."""
    p = L.p
    if not 0 <= i < p:
        raise ModuleError(f"L(i) needs 0 <= i <= p-1, got {i}")
    e, h, f, c0 = _sl2_indices(L)
    d = i + 1
    mats = [np.zeros((d, d), dtype=np.int64) for _ in range(L.dim)]
    for k in range(d):
        mats[h][k, k] = (i - 2 * k) % p
        if k + 1 < d:
            mats[f][k + 1, k] = 1
        if k:
            mats[e][k - 1, k] = (k * (i - k + 1)) % p
    return Module(L, mats, f"L({i})")


def _borel(L: LieAlgebra, lower: bool) -> np.ndarray:
    e, h, f, c0 = _sl2_indices(L)
    t = L.basis_vector(h)
    if c0 is not None:
        t = t + L.basis_vector(c0)
    return np.vstack([t, L.basis_vector(f if lower else e)]) % L.p


def baby_verma(L: LieAlgebra, i: int, lower: bool = False) -> Module:
    """Z(i) (induced from k(h+c0) ⊕ ke), or Z′(i) when lower=True (from k(h+c0) ⊕ kf).

    Over sl(2) the torus generator is h itself.
    """
    i %= L.p
    name = f"Z'({i})" if lower else f"Z({i})"
    return induced_module(L, _borel(L, lower), [i, 0], name=name)


def free_module(L: LieAlgebra, rank_: int = 1) -> Module:
    from .u0 import regular_module

    R = regular_module(L)
    return direct_sum(*[R] * rank_) if rank_ != 1 else R


def witt_induced(L: LieAlgebra, lam: int) -> Module:
    """Induced from W(1)_{≥0} = span(e_0, …, e_{p−2}) with e_0 ↦ λ and e_i ↦ 0 for i ≥ 1."""
    p = L.p
    H = np.array([L.basis_vector(t) for t in range(1, L.dim)])
    chi = [lam % p] + [0] * (L.dim - 2)
    return induced_module(L, H, chi, name=f"S({lam % p})")


def witt_top(L: LieAlgebra) -> Module:
    """S(p−1) = k[x]/(x^p) modulo the constants, with W(1) acting by derivations."""
    p = L.p
    D = witt_derivations(p)
    mats = [A[1:, 1:] for A in D]
    return Module(L, mats, f"S({p - 1})")


# functors


def dual(M: Module) -> Module:
    F = M.F
    return Module(M.L, [F.neg(A.T) for A in M.mats], f"{M.name}*", verify=False)


def tensor(M: Module, N: Module) -> Module:
    if M.L is not N.L and M.L.to_json() != N.L.to_json():
        raise ModuleError("tensor product of modules over different algebras")
    F = M.F
    Im, In = identity(M.dim), identity(N.dim)
    mats = [F.add(_kron(F, A, In), _kron(F, Im, B)) for A, B in zip(M.mats, N.mats)]
    return Module(M.L, mats, f"{M.name}⊗{N.name}", verify=False)


def _kron(F, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.is_prime:
        return np.kron(A, B) % F.q
    out = F.mul(A[:, None, :, None], B[None, :, None, :])
    return out.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def twist(M: Module, phi: Automorphism) -> Module:
    """M^{(φ)}: x acts as φ^{-1}(x) does on M."""
    if not phi.is_restricted():
        raise ModuleError(f"{phi.name} is not a restricted automorphism")
    F = M.F
    Pinv = inverse(F, phi.matrix)
    mats = [M.act(Pinv[:, i]) for i in range(M.L.dim)]
    return Module(M.L, mats, f"{M.name}^({phi.name})", verify=False)


def direct_sum(*modules: Module) -> Module:
    L = modules[0].L
    d = sum(M.dim for M in modules)
    mats = []
    for i in range(L.dim):
        A = np.zeros((d, d), dtype=np.int64)
        off = 0
        for M in modules:
            A[off : off + M.dim, off : off + M.dim] = M.mats[i]
            off += M.dim
        mats.append(A)
    return Module(L, mats, "⊕".join(M.name for M in modules), verify=False)


def restrict(M: Module, vectors, labels=None) -> Module:
    """M|_𝔥 for the p-subalgebra 𝔥 spanned by `vectors`, in the given spanning basis."""
    L = M.L
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, L.dim) % L.F.q
    S = Subspace.span(L.F, V, L.dim)
    if S.dim != V.shape[0]:
        raise ModuleError("restriction needs linearly independent vectors")
    H = L.subalgebra(S)
    # rebase the subalgebra onto the given vectors
    coords = np.array([S.coordinates(v) for v in V])
    Hb = H.change_basis(coords, labels=labels or [L.format(v) for v in V], name=f"{L.name}|sub")
    return Module(Hb, [M.act(v) for v in V], f"{M.name}|", verify=False)


def conjugate(M: Module, T) -> Module:
    """The same module in the basis given by the columns of T."""
    F = M.F
    T = np.asarray(T, dtype=np.int64)
    Tinv = inverse(F, T)
    return Module(M.L, [matmul(F, matmul(F, Tinv, A), T) for A in M.mats], M.name, verify=False)


# submodules and quotients


def is_submodule(M: Module, S: Subspace) -> bool:
    if S.dim == 0:
        return True
    return all(S.contains(v) for A in M.mats for v in matmul(M.F, A, S.basis.T).T)


def generated_submodule(M: Module, vectors) -> Subspace:
    """The smallest submodule containing the given vectors (rows)."""
    F = M.F
    ech = Echelon(F, M.dim)
    frontier = []
    for v in np.asarray(vectors, dtype=np.int64).reshape(-1, M.dim):
        if ech.add(v):
            frontier.append(np.asarray(v) % F.q)
    while frontier:
        W = np.array(frontier)
        frontier = []
        for A in M.mats:
            for v in matmul(F, W, A.T):
                if ech.add(v):
                    frontier.append(v)
    return Subspace.span(F, np.array(ech.rows).reshape(-1, M.dim), M.dim)


def submodule(M: Module, S: Subspace, name: str | None = None) -> Module:
    if not is_submodule(M, S):
        raise ModuleError("subspace is not invariant under the action")
    F = M.F
    B = S.basis
    mats = [np.array([S.coordinates(v) for v in matmul(F, B, A.T)]).reshape(S.dim, S.dim).T for A in M.mats]
    return Module(M.L, mats, name or f"sub({M.name})", verify=False)


def quotient(M: Module, S: Subspace, name: str | None = None) -> Module:
    """M/S with basis the standard vectors outside the pivot columns of S."""
    if not is_submodule(M, S):
        raise ModuleError("quotient by a subspace that is not a submodule")
    F = M.F
    comp = S.complement_indices()
    d = len(comp)
    E = np.zeros((d, M.dim), dtype=np.int64)
    E[np.arange(d), comp] = 1
    mats = []
    for A in M.mats:
        images = matmul(F, E, A.T)  # rows: A e_c
        reduced = np.array([S.reduce(v) for v in images]).reshape(d, M.dim)
        mats.append(reduced[:, comp].T.copy())
    return Module(M.L, mats, name or f"{M.name}/N", verify=False)


# radical generators and Loewy structure


def _sl2_radical_words(U: U0Algebra) -> list[U0Element]:
    p = U.p
    e, h, f = U.gen("e"), U.gen("h"), U.gen("f")
    # operator order: (h+1) after e^{p-1}, and f^{p-1} after (h+1); both kill L(p-1)
    return [(h + 1) * e ** (p - 1), f ** (p - 1) * (h + 1)]


def radical_generators(L: LieAlgebra) -> list[U0Element]:
    """Declared generators of the Jacobson radical of U₀(𝔤) for the supported algebras.

    e_r, Heisenberg-type p-nilpotent algebras: the basis (augmentation ideal).
    sl(2): (h+1)e^{p−1}, f^{p−1}(h+1).  sl(2)_s: c0 together with the sl(2) pair.
    """
    U = U0Algebra(L)
    name = L.name.split("|")[0]
    if name == "sl2":
        return _sl2_radical_words(U)
    if name == "sl2s":
        return [U.gen("c0")] + _sl2_radical_words(U)
    if re.fullmatch(r"e\d+|heisenberg|h0", name) and not np.any(L.pmap):
        return [U.gen(i) for i in range(L.dim)]
    if not np.any(L.pmap) and _is_nilpotent(L):
        return [U.gen(i) for i in range(L.dim)]
    raise ModuleError(f"no radical generators declared for {L.name}")


def _is_nilpotent(L: LieAlgebra) -> bool:
    """Lower central series reaches zero."""
    F = L.F
    C = Subspace.whole(F, L.dim)
    while C.dim:
        br = L.bracket(np.eye(L.dim, dtype=np.int64)[:, None, :], C.basis[None, :, :]).reshape(-1, L.dim)
        nxt = Subspace.span(F, br, L.dim)
        if nxt.dim == C.dim:
            return False
        C = nxt
    return True


def _ops(M: Module, G) -> list[np.ndarray]:
    if G is None:
        G = radical_generators(M.L)
    out = []
    for g in G:
        if isinstance(g, U0Element):
            if g.U.L.dim != M.L.dim:
                raise ModuleError("radical generator from another algebra")
            out.append(g.act(M))
        else:
            out.append(np.asarray(g, dtype=np.int64))
    return out


def radical_of(M: Module, N: Subspace, G=None, ops=None) -> Subspace:
    """J·N for the ideal J generated by G, N a submodule."""
    ops = ops if ops is not None else _ops(M, G)
    if N.dim == 0:
        return N
    imgs = np.vstack([matmul(M.F, N.basis, g.T) for g in ops])
    return generated_submodule(M, imgs)


def radical(M: Module, G=None) -> Subspace:
    return radical_of(M, Subspace.whole(M.F, M.dim), G)


def radical_series(M: Module, G=None) -> list[Subspace]:
    """[M, Rad M, Rad² M, …, 0]."""
    ops = _ops(M, G)
    series = [Subspace.whole(M.F, M.dim)]
    while series[-1].dim:
        nxt = radical_of(M, series[-1], ops=ops)
        if nxt.dim == series[-1].dim:
            raise ModuleError("radical series does not terminate: the generators are not nilpotent on this module")
        series.append(nxt)
    return series


def radical_power(M: Module, ell: int, G=None) -> Subspace:
    series = radical_series(M, G)
    return series[min(ell, len(series) - 1)]


def loewy_length(M: Module, G=None) -> int:
    return len(radical_series(M, G)) - 1


def _largest_submodule_in(M: Module, N: Subspace) -> Subspace:
    F = M.F
    while N.dim:
        # {m ∈ N : A m ∈ N for all A}
        ann = N.annihilator()  # rows u with u·N = 0
        if ann.shape[0] == 0:
            return N
        cond = np.vstack([matmul(F, matmul(F, ann, A), N.basis.T) for A in M.mats])
        ker = nullspace(F, cond)
        new = Subspace.span(F, matmul(F, ker, N.basis), M.dim) if ker.shape[0] else Subspace.zero(F, M.dim)
        if new.dim == N.dim:
            return N
        N = new
    return N


def socle(M: Module, G=None) -> Subspace:
    """Largest submodule annihilated by every generator."""
    F = M.F
    N = Subspace.whole(F, M.dim)
    for g in _ops(M, G):
        N = N & Subspace.kernel(F, g)
    return _largest_submodule_in(M, N)


def socle_series(M: Module, G=None) -> list[Subspace]:
    """[0, Soc M, Soc² M, …, M]."""
    F = M.F
    ops = _ops(M, G)
    series = [Subspace.zero(F, M.dim)]
    while series[-1].dim < M.dim:
        prev = series[-1]
        # Soc^{l+1} = {m : g·m ∈ Soc^l for all g}, then the largest submodule inside
        N = Subspace.whole(F, M.dim)
        for g in ops:
            ann = prev.annihilator()
            N = N & Subspace.kernel(F, matmul(F, ann, g)) if ann.shape[0] else N
        nxt = _largest_submodule_in(M, N + prev)
        if nxt.dim == prev.dim:
            raise ModuleError("socle series does not terminate")
        series.append(nxt)
    return series


def top(M: Module, G=None) -> Module:
    return quotient(M, radical(M, G), f"Top({M.name})")


def socle_module(M: Module, G=None) -> Module:
    return submodule(M, socle(M, G), f"Soc({M.name})")


def radical_module(M: Module, G=None) -> Module:
    return submodule(M, radical(M, G), f"Rad({M.name})")


def layers(M: Module, G=None) -> list[Module]:
    """Radical layers Rad^ℓ M / Rad^{ℓ+1} M."""
    series = radical_series(M, G)
    out = []
    for ell in range(len(series) - 1):
        sub = submodule(M, series[ell])
        inner = Subspace.span(M.F, [series[ell].coordinates(v) for v in series[ell + 1].basis], series[ell].dim) if series[
            ell + 1
        ].dim else Subspace.zero(M.F, series[ell].dim)
        out.append(quotient(sub, inner, f"layer{ell}"))
    return out


def is_uniserial(M: Module, G=None) -> bool:
    """Every radical layer is simple.

    Layers are semisimple, so a layer is simple exactly when its endomorphism
    ring is one-dimensional; this assumes the simple modules are absolutely
    simple, which holds for the split algebras shipped here.
    """
    return all(hom_dimension(S, S) == 1 for S in layers(M, G))


def heart(L: LieAlgebra, i: int) -> Module:
    """Ht(i) = Z′(i+2)/Soc Z′(i+2) ⊕ Rad Z(i), with Z′(p) = Z′(0)."""
    Zp = baby_verma(L, (i + 2) % L.p, lower=True)
    A = quotient(Zp, socle(Zp), f"Z'({(i + 2) % L.p})/Soc")
    B = radical_module(baby_verma(L, i))
    out = direct_sum(A, B)
    out.name = f"Ht({i})"
    return out


def heart_selfdual(L: LieAlgebra, i: int) -> Module:
    """Rad Z(i) ⊕ Rad Z(i)^(ω) for the Cartan involution ω.

    Z′(i+2)/Soc turns out to be isomorphic to Rad Z(i) itself, which makes
    heart() twice Rad Z(i) and not self-dual. Replacing the first summand by
    the ω-twist gives a self-dual module (Rad Z(i)* ≅ Rad Z(i)^(ω)).
    """
    from .catalog import cartan_involution

    B = radical_module(baby_verma(L, i))
    out = direct_sum(B, twist(B, cartan_involution(L)))
    out.name = f"Ht*({i})"
    return out


# Hom spaces by spinning


def _spin_basis(M: Module, seed: int = 0):
    """A basis of M built from module generators by applying basis elements.

    Returns (generators, records) where each record is (parent, i): basis vector
    t equals ρ(b_i) applied to basis vector `parent`, or generator number i when
    parent is None.
    """
    F = M.F
    rng = np.random.default_rng(seed)
    ech = Echelon(F, M.dim)
    vectors: list[np.ndarray] = []
    records: list[tuple[int | None, int]] = []
    gens: list[np.ndarray] = []
    while ech.dim < M.dim:
        best = None
        for cand in [F.random(rng, M.dim) for _ in range(3)]:
            gain = generated_submodule(M, np.vstack(vectors + [cand]) if vectors else cand[None, :]).dim
            if best is None or gain > best[0]:
                best = (gain, cand)
        g = best[1]
        if not ech.add(g):
            continue
        gens.append(g)
        vectors.append(g)
        records.append((None, len(gens) - 1))
        queue = [len(vectors) - 1]
        while queue:
            t = queue.pop(0)
            for i, A in enumerate(M.mats):
                w = matmul(F, A, vectors[t][:, None]).reshape(-1)
                if ech.add(w):
                    vectors.append(w)
                    records.append((t, i))
                    queue.append(len(vectors) - 1)
    return gens, records, np.array(vectors, dtype=np.int64).reshape(-1, M.dim)


def hom_space(M: Module, N: Module, seed: int = 0) -> list[np.ndarray]:
    """A basis of Hom_{U₀}(M, N) as dim N × dim M matrices."""
    if M.L.dim != N.L.dim:
        raise ModuleError("modules over different algebras")
    F = M.F
    m, d = M.dim, N.dim
    if m == 0 or d == 0:
        return []
    gens, records, V = _spin_basis(M, seed)
    s = len(gens)
    u = s * d  # unknowns: images of the generators, stacked
    images = []  # images[t]: d × u matrix with T(v_t) = images[t] @ w
    for parent, i in records:
        if parent is None:
            X = np.zeros((d, u), dtype=np.int64)
            X[:, i * d : (i + 1) * d] = identity(d)
        else:
            X = matmul(F, N.mats[i], images[parent])
        images.append(X)
    Ims = np.stack(images)  # (m, d, u)
    Vinv = inverse(F, V.T)  # coordinates of a vector in the basis V
    ech_rows = np.zeros((0, u), dtype=np.int64)
    for i, A in enumerate(M.mats):
        # ρ_M(b_i) v_t = Σ_l C[l,t] v_l  ⇒  ρ_N(b_i) T v_t − Σ_l C[l,t] T v_l = 0
        C = matmul(F, Vinv, matmul(F, A, V.T))
        left = matmul(F, N.mats[i][None], Ims)
        right = matmul(F, C.T, Ims.reshape(m, d * u)).reshape(m, d, u)
        eqs = F.sub(left, right).reshape(m * d, u)
        for start in range(0, eqs.shape[0], 4 * u + 64):
            block = np.vstack([ech_rows, eqs[start : start + 4 * u + 64]])
            R, r, _ = rref(F, block)
            ech_rows = R[:r]
    sols = nullspace(F, ech_rows) if ech_rows.shape[0] else identity(u)
    out = []
    for w in sols:
        TV = (Ims @ w) if F.is_prime else None
        if F.is_prime:
            TV = TV % F.q
        else:
            TV = np.stack([matmul(F, X, w[:, None]).reshape(-1) for X in Ims])
        # T V = TV^T  ⇒  T = TV^T V^{-1}
        T = matmul(F, TV.T, inverse(F, V.T))
        out.append(T)
    return out


def hom_dimension(M: Module, N: Module) -> int:
    return len(hom_space(M, N))


@dataclass
class IsoVerdict:
    iso: bool
    hom_dim: int
    trials: int
    matrix: np.ndarray | None = None
    reason: str = ""

    @property
    def label(self) -> str:
        if self.iso:
            return "ISO"
        if self.reason:
            return f"NO_ISO ({self.reason})"
        return "NO_ISO_FOUND" + (" (inconclusive)" if self.hom_dim else "")

    def as_dict(self) -> dict:
        return {"verdict": self.label, "iso": self.iso, "hom_dim": self.hom_dim, "trials": self.trials}


def iso_test(M: Module, N: Module, trials: int = 40, seed: int = 0) -> IsoVerdict:
    """Search the intertwiner space for an invertible map M → N."""
    if M.dim != N.dim:
        return IsoVerdict(False, 0, 0, reason="dimension mismatch")
    if M.dim == 0:
        return IsoVerdict(True, 0, 0, np.zeros((0, 0), dtype=np.int64))
    basis = hom_space(M, N, seed)
    if not basis:
        return IsoVerdict(False, 0, 0, reason="Hom is zero")
    F = M.F
    rng = np.random.default_rng(seed)
    for t in range(1, trials + 1):
        coeffs = F.random(rng, len(basis)) if t > 1 or len(basis) > 1 else np.ones(1, dtype=np.int64)
        T = np.zeros((N.dim, M.dim), dtype=np.int64)
        for c, B in zip(coeffs.tolist(), basis):
            if c:
                T = F.add(T, F.mul(c, B))
        if rank(F, T) == M.dim:
            return IsoVerdict(True, len(basis), t, T)
    return IsoVerdict(False, len(basis), trials)


def is_intertwiner(M: Module, N: Module, T) -> bool:
    F = M.F
    T = np.asarray(T, dtype=np.int64)
    return all(np.array_equal(matmul(F, T, A), matmul(F, B, T)) for A, B in zip(M.mats, N.mats))


def is_free(M: Module, vectors) -> bool:
    """M|_𝔢 free over U₀(𝔢) for an elementary abelian 𝔢 spanned by `vectors`.

    Free of rank dim M / p^r exactly when the top monomial Π x_i^{p−1} acts with that rank.
    """
    F = M.F
    V = np.asarray(vectors, dtype=np.int64).reshape(-1, M.L.dim)
    r = V.shape[0]
    if M.dim % (M.L.p**r):
        return False
    op = identity(M.dim)
    for v in V:
        X = M.act(v)
        P = identity(M.dim)
        for _ in range(M.L.p - 1):
            P = matmul(F, P, X)
        op = matmul(F, op, P)
    return rank(F, op) == M.dim // M.L.p**r


# named constructors for the CLI


def module_from_spec(L: LieAlgebra, spec: str) -> Module:
    """Parse names like L:2, Z:1, Zp:3, radZ:0, Zsoc:0, Ht:1, free, free:2, trivial, adjoint, S:3, Stop."""
    spec = spec.strip()
    name, _, arg = spec.partition(":")
    key = name.lower()
    n = int(arg) if arg else None
    if key == "trivial":
        return trivial(L, n or 1)
    if key == "adjoint":
        return adjoint(L)
    if key in ("free", "u0", "regular"):
        return free_module(L, n or 1)
    if n is None and key not in ("stop",):
        raise ModuleError(f"module {spec!r} needs a parameter, e.g. {name}:0")
    if key == "l":
        return simple_L(L, n)
    if key == "z":
        return baby_verma(L, n)
    if key in ("zp", "z'", "zprime"):
        return baby_verma(L, n, lower=True)
    if key == "radz":
        return radical_module(baby_verma(L, n))
    if key in ("zpsoc", "z'soc", "zpquot"):
        Zp = baby_verma(L, n, lower=True)
        return quotient(Zp, socle(Zp))
    if key in ("ht", "heart"):
        return heart(L, n)
    if key == "s":
        return witt_induced(L, n)
    if key == "stop":
        return witt_top(L)
    raise ModuleError(f"unknown module constructor {name!r}")


def module_from_json(data: dict, L: LieAlgebra | None = None) -> Module:
    if L is None:
        if "algebra" not in data:
            raise ModuleError("module file needs an 'algebra' entry")
        L = LieAlgebra.from_json(data["algebra"])
    try:
        mats = [np.asarray(A, dtype=np.int64) for A in data["matrices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ModuleError(f"module file needs 'matrices': {exc}") from None
    if any(A.ndim != 2 for A in mats):
        raise ModuleError("action matrices must be two-dimensional")
    return Module(L, mats, data.get("name", "file"))


__all__ += [
    "AlgebraError",
    "IsoVerdict",
    "adjoint",
    "baby_verma",
    "conjugate",
    "direct_sum",
    "dual",
    "free_module",
    "generated_submodule",
    "heart",
    "heart_selfdual",
    "hom_dimension",
    "hom_space",
    "is_free",
    "is_intertwiner",
    "is_submodule",
    "is_uniserial",
    "iso_test",
    "layers",
    "loewy_length",
    "module_from_json",
    "module_from_spec",
    "quotient",
    "radical",
    "radical_generators",
    "radical_module",
    "radical_power",
    "radical_series",
    "restrict",
    "simple_L",
    "socle",
    "socle_module",
    "socle_series",
    "submodule",
    "tensor",
    "top",
    "trivial",
    "twist",
    "witt_induced",
    "witt_top",
]
