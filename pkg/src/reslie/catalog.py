"""Builtin restricted Lie algebras and the Cartan involution of sl(2)_s."""

from __future__ import annotations

import re

import numpy as np

from .field import field
from .liealg import AlgebraError, Automorphism, LieAlgebra, direct_sum
from .linalg import matpow, solve


def _structure(n: int, table: dict[tuple[int, int], dict[int, int]], p: int) -> np.ndarray:
    c = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), img in table.items():
        for k, v in img.items():
            c[i, j, k] = v % p
            c[j, i, k] = (-v) % p
    return c


def elementary(r: int, p: int) -> LieAlgebra:
    """𝔢_r: abelian with zero p-map."""
    n = r
    return LieAlgebra(p, [f"x{i + 1}" for i in range(r)], np.zeros((n, n, n)), np.zeros((n, n)), f"e{r}")


def heisenberg(p: int) -> LieAlgebra:
    """Basis x, y, z with [x,y] = z and zero p-map."""
    c = _structure(3, {(0, 1): {2: 1}}, p)
    return LieAlgebra(p, ["x", "y", "z"], c, np.zeros((3, 3)), "heisenberg")


def sl2(p: int) -> LieAlgebra:
    """Basis e, h, f with the p-map of 2×2 matrices."""
    c = _structure(3, {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}}, p)
    pm = np.zeros((3, 3), dtype=np.int64)
    pm[1, 1] = 1
    return LieAlgebra(p, ["e", "h", "f"], c, pm, "sl2")


def sl2s(p: int) -> LieAlgebra:
    """sl(2) ⊕ kc0 with c0 central and h^{[p]} = h + c0."""
    c = _structure(4, {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}}, p)
    pm = np.zeros((4, 4), dtype=np.int64)
    pm[1, 1] = 1
    pm[1, 3] = 1
    return LieAlgebra(p, ["e", "h", "f", "c0"], c, pm, "sl2s")


def cbc8(p: int) -> LieAlgebra:
    """The 8-dimensional algebra 𝔢 ⊕ 𝔣 ⊕ T with [x_i, y_j] = z_ij and z_ij^{[p]} = z_ij."""
    labels = ["x1", "x2", "y1", "y2", "z11", "z12", "z21", "z22"]
    table = {}
    for i in range(2):
        for j in range(2):
            table[(i, 2 + j)] = {4 + 2 * i + j: 1}
    c = _structure(8, table, p)
    pm = np.zeros((8, 8), dtype=np.int64)
    for t in range(4, 8):
        pm[t, t] = 1
    return LieAlgebra(p, labels, c, pm, "cbc8")


def witt_derivations(p: int) -> list[np.ndarray]:
    """Matrices of e_i = x^{i+1} d/dx on k[x]/(x^p), basis 1, x, …, x^{p-1}."""
    mats = []
    for i in range(-1, p - 1):
        D = np.zeros((p, p), dtype=np.int64)
        for l in range(p):
            if 0 <= i + l < p:
                D[i + l, l] = l % p
        mats.append(D)
    return mats


def witt(p: int) -> LieAlgebra:
    """W(1) with basis e_{-1}, …, e_{p-2}; the p-map is read off matrix p-th powers."""
    F = field(p)
    n = p
    table = {}
    for a in range(n):
        for b in range(a + 1, n):
            i, j = a - 1, b - 1
            if -1 <= i + j <= p - 2 and (j - i) % p:
                table[(a, b)] = {i + j + 1: j - i}
    c = _structure(n, table, p)
    mats = witt_derivations(p)
    stacked = np.array([D.reshape(-1) for D in mats]).T
    pm = np.zeros((n, n), dtype=np.int64)
    for a, D in enumerate(mats):
        sol = solve(F, stacked, matpow(F, D, p).reshape(-1))
        if sol is None:
            raise AlgebraError("p-th power of a Witt derivation is not a derivation")
        pm[a] = sol
    labels = [f"e{i}" for i in range(-1, p - 1)]
    return LieAlgebra(p, labels, c, pm, "witt")


def cartan_involution(L: LieAlgebra) -> Automorphism:
    """ω on sl(2) or sl(2)_s: e ↔ f, h ↦ −h, c0 ↦ −c0."""
    if L.labels[:3] != ("e", "h", "f"):
        raise AlgebraError("Cartan involution needs the basis e, h, f(, c0)")
    n = L.dim
    M = np.zeros((n, n), dtype=np.int64)
    M[2, 0] = 1
    M[0, 2] = 1
    M[1, 1] = L.p - 1
    if n == 4:
        M[3, 3] = L.p - 1
    return Automorphism(L, M, "omega")


_SIMPLE = {
    "heisenberg": heisenberg,
    "h": heisenberg,
    "h0": heisenberg,
    "sl2": sl2,
    "sl2s": sl2s,
    "cbc8": cbc8,
    "witt": witt,
    "w1": witt,
}

BUILTIN_NAMES = ("e<r>", "heisenberg", "h0", "sl2", "sl2s", "cbc8", "witt", "<a>+<b>")


def builtin(name: str, p: int) -> LieAlgebra:
    """Look up a builtin by name: e2, e3, heisenberg (= h0), sl2, sl2s, cbc8, witt, or sums a+b."""
    name = name.strip().lower()
    if "+" in name:
        parts = [builtin(part, p) for part in name.split("+")]
        return direct_sum(*parts, name=name)
    m = re.fullmatch(r"e_?(\d+)", name)
    if m:
        r = int(m.group(1))
        if r < 1:
            raise AlgebraError("e_r needs r ≥ 1")
        return elementary(r, p)
    if name not in _SIMPLE:
        raise AlgebraError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    L = _SIMPLE[name](p)
    if name == "h0":
        L.name = "h0"
    return L
