"""Seeded families of test modules over 𝔢_r and 𝔥₀."""

from __future__ import annotations

import functools
import itertools

import numpy as np

from .catalog import elementary, heisenberg
from .liealg import Automorphism, LieAlgebra
from .linalg import identity, inverse, matmul, rank
from .modules import direct_sum, dual, quotient, tensor, twist
from .rep import Module


def monomials(r: int, p: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Exponent vectors with entries < p and total degree in [lo, hi), degree-major order."""
    out = [a for a in itertools.product(range(p), repeat=r) if lo <= sum(a) < hi]
    return sorted(out, key=lambda a: (sum(a), tuple(-x for x in a)))


def truncated(L: LieAlgebra, lo: int, hi: int) -> Module:
    """m^lo / m^hi inside U₀(𝔢_r) = k[x_1..x_r]/(x_i^p), with x_i acting by multiplication."""
    p, r = L.p, L.dim
    basis = monomials(r, p, lo, hi)
    index = {a: t for t, a in enumerate(basis)}
    d = len(basis)
    mats = []
    for i in range(r):
        A = np.zeros((d, d), dtype=np.int64)
        for col, a in enumerate(basis):
            b = list(a)
            b[i] += 1
            b = tuple(b)
            if b in index:
                A[index[b], col] = 1
        mats.append(A)
    return Module(L, mats, f"m^{lo}/m^{hi}")


def free(L: LieAlgebra) -> Module:
    return truncated(L, 0, L.dim * (L.p - 1) + 1)


def random_invertible(F, n: int, rng) -> np.ndarray:
    while True:
        T = F.random(rng, (n, n))
        if rank(F, T) == n:
            return T


def scramble(M: Module, rng) -> Module:
    """Conjugate by a random change of basis."""
    F = M.F
    if M.dim == 0:
        return M
    T = random_invertible(F, M.dim, rng)
    Ti = inverse(F, T)
    return Module(M.L, [matmul(F, matmul(F, Ti, A), T) for A in M.mats], M.name, verify=False)


def random_gl_twist(M: Module, rng) -> Module:
    """Twist by a random element of GL(𝔢_r) = Aut_p(𝔢_r)."""
    L = M.L
    phi = Automorphism(L, random_invertible(L.F, L.dim, rng), "g")
    return twist(M, phi)


def constant_type_pieces(L: LieAlgebra, max_dim: int = 24) -> list[Module]:
    """GL_r-equivariant subquotients m^a/m^b of U₀(𝔢_r) (constant Jordan type) up to max_dim."""
    p, r = L.p, L.dim
    top = r * (p - 1) + 1
    out = []
    for lo in range(top):
        for hi in range(lo + 1, top + 1):
            d = len(monomials(r, p, lo, hi))
            if d <= max_dim:
                out.append(truncated(L, lo, hi))
    return out


def random_constant_type(L: LieAlgebra, rng, max_dim: int = 24) -> Module:
    """A module of constant Jordan type: sums, duals and small tensor products of
    equivariant pieces, then twisted by GL_r and scrambled."""
    pieces = [M for M in constant_type_pieces(L, max_dim) if M.dim > 1 or rng.random() < 0.1]
    parts = []
    budget = max_dim
    while True:
        fits = [M for M in pieces if M.dim <= budget]
        if not fits or (parts and rng.random() < 0.35):
            break
        M = fits[int(rng.integers(len(fits)))]
        if rng.random() < 0.4:
            M = dual(M)
        parts.append(M)
        budget -= M.dim
    small = [M for M in parts if M.dim <= 4]
    if len(small) >= 2 and rng.random() < 0.3:
        T = tensor(small[0], small[1])
        if sum(M.dim for M in parts) - small[0].dim - small[1].dim + T.dim <= max_dim:
            parts = [M for M in parts if M is not small[0] and M is not small[1]] + [T]
    M = direct_sum(*parts) if len(parts) > 1 else parts[0]
    M = random_gl_twist(M, rng)
    M = scramble(M, rng)
    M.name = f"ctype[{'+'.join(P.name for P in parts)}]"
    return M


def random_nilpotent(F, n: int, p: int, rng) -> np.ndarray:
    """A random conjugate of a nilpotent Jordan matrix with blocks of size ≤ p."""
    blocks = []
    left = n
    while left:
        b = int(rng.integers(1, min(p, left) + 1))
        blocks.append(b)
        left -= b
    J = np.zeros((n, n), dtype=np.int64)
    off = 0
    for b in blocks:
        for t in range(b - 1):
            J[off + t + 1, off + t] = 1
        off += b
    T = random_invertible(F, n, rng)
    return matmul(F, matmul(F, inverse(F, T), J), T)


def _poly_of(F, N: np.ndarray, coeffs) -> np.ndarray:
    out = np.zeros_like(N)
    P = identity(N.shape[0])
    for c in coeffs:
        P = matmul(F, P, N)
        if c:
            out = F.add(out, F.mul(int(c), P))
    return out


def random_commuting_module(L: LieAlgebra, rng, max_dim: int = 12) -> Module:
    """Commuting nilpotent operators for the basis of 𝔢_r: polynomials without constant
    term in one random nilpotent matrix per block, assembled block-diagonally."""
    F, p, r = L.F, L.p, L.dim
    blocks = []
    size = int(rng.integers(1, max_dim + 1))
    left = size
    while left:
        b = int(rng.integers(1, left + 1))
        N = random_nilpotent(F, b, p, rng)
        blocks.append([_poly_of(F, N, F.random(rng, 3)) for _ in range(r)])
        left -= b
    mats = []
    for i in range(r):
        A = np.zeros((size, size), dtype=np.int64)
        off = 0
        for blk in blocks:
            b = blk[i].shape[0]
            A[off : off + b, off : off + b] = blk[i]
            off += b
        mats.append(A)
    M = Module(L, mats, "commuting")
    return scramble(M, rng)


def eip_family(L: LieAlgebra, rng, max_dim: int = 24) -> Module:
    """Modules with the equal images property: duals of k[x]/m^ℓ (equal kernels) and their sums."""
    p, r = L.p, L.dim
    top = r * (p - 1) + 1
    options = [dual(truncated(L, 0, hi)) for hi in range(1, top + 1) if len(monomials(r, p, 0, hi)) <= max_dim]
    parts = [options[int(rng.integers(len(options)))]]
    while rng.random() < 0.3:
        nxt = options[int(rng.integers(len(options)))]
        if sum(M.dim for M in parts) + nxt.dim > max_dim:
            break
        parts.append(nxt)
    M = direct_sum(*parts) if len(parts) > 1 else parts[0]
    M = scramble(random_gl_twist(M, rng), rng)
    M.name = "eip[" + "+".join(P.name for P in parts) + "]"
    return M


@functools.lru_cache(maxsize=4)
def _h0_truncations(p: int) -> tuple[Module, ...]:
    """U₀(𝔥₀)/Rad^ℓ for ℓ = 1, 2, … until the radical vanishes."""
    from .modules import radical_series
    from .u0 import regular_module

    H = heisenberg(p)
    H.name = "h0"
    R = regular_module(H)
    return tuple(quotient(R, S, f"U0/Rad^{ell}") for ell, S in enumerate(radical_series(R)[1:], start=1))


def heisenberg_family(p: int, rng, max_dim: int = 27) -> Module:
    """Modules over 𝔥₀: pullbacks along 𝔥₀ → 𝔥₀/kz ≅ 𝔢₂, quotients of U₀(𝔥₀) by
    radical powers, and their duals and sums."""
    H = heisenberg(p)
    H.name = "h0"
    E2 = elementary(2, p)
    choice = int(rng.integers(4))
    if choice == 0:
        base = random_commuting_module(E2, rng, min(max_dim, 10))
        M = Module(H, [base.mats[0], base.mats[1], np.zeros_like(base.mats[0])], "pullback")
    elif choice == 1:
        base = eip_family(E2, rng, min(max_dim, 20))
        M = Module(H, [base.mats[0], base.mats[1], np.zeros_like(base.mats[0])], "pullback-eip")
    else:
        options = [M for M in _h0_truncations(p) if M.dim <= max_dim]
        M = options[int(rng.integers(len(options)))]
        if choice == 3:
            M = dual(M)
    return scramble(M, rng)


__all__ = [
    "constant_type_pieces",
    "eip_family",
    "free",
    "heisenberg_family",
    "monomials",
    "random_commuting_module",
    "random_constant_type",
    "random_gl_twist",
    "random_invertible",
    "random_nilpotent",
    "scramble",
    "truncated",
]
