from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslie.catalog import builtin, cartan_involution, cbc8, elementary, heisenberg, sl2, sl2s, witt, witt_derivations
from reslie.field import field
from reslie.liealg import AlgebraError, Automorphism, LieAlgebra, direct_sum, is_p_automorphism
from reslie.linalg import Subspace, identity, matmul, matpow

P = 5
BUILTINS = ["e3", "heisenberg", "sl2", "sl2s", "cbc8", "witt", "sl2+e1"]


def coeffs(n, p=P):
    return st.lists(st.integers(0, p - 1), min_size=n, max_size=n).map(lambda c: np.array(c, dtype=np.int64))


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_builtins_verify(name, p):
    L = builtin(name, p)
    assert L.verify_axioms().ok


def test_corrupted_pmap_is_reported_at_h():
    L = sl2(P)
    pm = L.pmap.copy()
    pm[1] = [1, 0, 0]  # h^[p] = e
    bad = LieAlgebra(P, L.labels, L.structure, pm, "bad", verify=False)
    rep = bad.verify_axioms()
    assert not rep.ok
    assert ("ad-compatibility", (1,)) in [(k, w) for k, w, _ in rep.violations]
    with pytest.raises(AlgebraError):
        LieAlgebra(P, L.labels, L.structure, pm, "bad")


def test_jacobi_failure_reported():
    c = np.zeros((3, 3, 3), dtype=np.int64)
    c[0, 1, 2], c[1, 0, 2] = 1, -1
    c[1, 2, 0], c[2, 1, 0] = 1, -1
    rep = LieAlgebra(P, "abc", c, np.zeros((3, 3)), verify=False).verify_axioms()
    assert "jacobi" in rep.kinds() or "ad-compatibility" in rep.kinds()


def test_heisenberg_ad():
    H = heisenberg(P)
    x, y, z = (H.basis_vector(i) for i in range(3))
    assert not H.ad(z).any()
    assert np.array_equal(H.ad(x) @ y % P, z)
    assert not H.ad(H.zero()).any()


def test_p_power_examples():
    S = sl2s(P)
    hc = S.element({"h": 1, "c0": 1})
    assert np.array_equal(S.p_power(hc), hc)
    L = sl2(P)
    ef = L.element({"e": 1, "f": 1})
    assert np.array_equal(L.p_power(ef), ef)
    E = elementary(3, P)
    assert not E.p_power(E.element([1, 2, 3])).any()
    W = witt(P)
    e0 = W.basis_vector(W.index("e0"))
    assert np.array_equal(W.p_power(e0), e0)


def _sl2_matrix(v):
    e, h, f = (int(c) for c in v)
    return np.array([[h, e], [f, -h % P]], dtype=np.int64)


@given(coeffs(3))
def test_sl2_p_power_matches_matrix_power(v):
    # independent route: the defining 2×2 representation is faithful and restricted
    L = sl2(P)
    X = matpow(field(P), _sl2_matrix(v), P)
    assert np.array_equal(_sl2_matrix(L.p_power(v)), X)


@given(coeffs(P))
def test_witt_p_power_matches_derivation_power(v):
    W = witt(P)
    F = field(P)
    D = witt_derivations(P)
    mat = lambda u: sum(int(c) * A for c, A in zip(u, D)) % P
    assert np.array_equal(mat(W.p_power(v)), matpow(F, mat(v), P))


@pytest.mark.parametrize("name", BUILTINS)
def test_ad_compatibility_on_random_elements(name, rng):
    L = builtin(name, P)
    F = L.F
    for x in F.random(rng, (25, L.dim)):
        assert np.array_equal(L.ad(L.p_power(x)), matpow(F, L.ad(x), P))


@given(coeffs(4), st.integers(1, P - 1))
def test_p_power_scalar_rule(v, a):
    S = sl2s(P)
    assert np.array_equal(S.p_power(a * v % P), pow(a, P, P) * S.p_power(v) % P)


def test_p_power_over_extension_field(rng):
    S = sl2s(P).over(2)
    F = S.F
    for x in F.random(rng, (20, S.dim)):
        assert np.array_equal(S.ad(S.p_power(x)), matpow(F, S.ad(x), P))
    # scalar rule with a non-prime scalar
    a = 7
    x = F.random(rng, S.dim)
    assert np.array_equal(S.p_power(F.mul(a, x)), F.mul(F.power(a, P), S.p_power(x)))


def test_cartan_involution():
    S = sl2s(P)
    w = cartan_involution(S)
    assert np.array_equal(matmul(S.F, w.matrix, w.matrix), identity(4))
    assert w.is_restricted()
    assert np.array_equal(w(S.element("e")), S.element("f"))
    assert np.array_equal(w(S.element("c0")), S.element({"c0": -1}))


def test_substructures():
    H = heisenberg(P)
    z = Subspace.span(H.F, [H.element("z")], 3)
    assert H.center() == z
    assert H.derived() == z
    S = sl2s(P)
    assert S.center() == Subspace.span(S.F, [S.element("c0")], 4)
    assert S.centralizer([S.element("h")]) == Subspace.span(S.F, [S.element("h"), S.element("c0")], 4)
    borel = Subspace.span(S.F, [S.element("h"), S.element("e")], 4)
    assert S.normalizer(borel).dim == 3  # h, e and c0
    assert S.p_ideal_generated([S.element("h")]).dim == 4


def test_quotient_projection_commutes_with_p_powers(rng):
    S = sl2s(P)
    Q, Pm = S.quotient(Subspace.span(S.F, [S.element("c0")], 4))
    assert Q.dim == 3 and Q.verify_axioms().ok
    for x in S.F.random(rng, (20, 4)):
        assert np.array_equal(matmul(S.F, Pm, S.p_power(x)[:, None])[:, 0], Q.p_power(matmul(S.F, Pm, x[:, None])[:, 0]))


def test_quotient_rejects_non_ideals():
    S = sl2s(P)
    with pytest.raises(AlgebraError):
        S.quotient(Subspace.span(S.F, [S.element("e")], 4))
    # a toral central line is a p-ideal
    C = cbc8(P)
    I = Subspace.span(C.F, [C.element("z11")], 8)
    Q, _ = C.quotient(I)
    assert Q.dim == 7


def test_json_roundtrip():
    for name in BUILTINS:
        L = builtin(name, P)
        M = LieAlgebra.from_json(L.to_json())
        assert np.array_equal(M.structure, L.structure) and np.array_equal(M.pmap, L.pmap)
        assert M.labels == L.labels


def test_json_defaults_and_errors():
    L = LieAlgebra.from_json({"p": 5, "basis": ["a", "b"]})
    assert not L.structure.any() and not L.pmap.any()
    with pytest.raises(AlgebraError):
        LieAlgebra.from_json({"basis": ["a"]})
    with pytest.raises(AlgebraError):
        LieAlgebra.from_json({"p": 5, "basis": ["a"], "brackets": [[0, 3, 1]]})


def test_direct_sum_and_automorphism_checks():
    L = direct_sum(sl2(P), elementary(1, P))
    assert L.dim == 4 and L.verify_axioms().ok
    S = sl2s(P)
    # scaling e by a and f by 1/a is a restricted automorphism
    D = np.diag([2, 1, 3, 1])
    assert is_p_automorphism(S, D)
    with pytest.raises(AlgebraError):
        Automorphism(S, np.zeros((4, 4)))
