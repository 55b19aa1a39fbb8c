from __future__ import annotations

import itertools

import numpy as np
import pytest

from reslie.catalog import builtin, cbc8, elementary, heisenberg, sl2, sl2s, witt, witt_derivations
from reslie.field import field
from reslie.liealg import is_automorphism
from reslie.linalg import identity, matmul, matpow
from reslie.varieties import (
    EnumerationRefused,
    NotNilpotent,
    ProjPoint,
    admissible,
    elementary_planes,
    exp_ad,
    format_plane,
    normalize,
    nullcone_array,
    projective_count,
    projective_points,
    sandwich_array,
    sandwich_lie_subset_check,
    stratum_array,
)

P = 5


def test_projective_points_are_canonical():
    F = field(3, 2)
    pts = projective_points(F, 3)
    assert len(pts) == projective_count(9, 3) == 91
    assert {tuple(normalize(F, v)) for v in pts} == {tuple(v) for v in pts}
    assert ProjPoint.of(F, [0, 2, 4]) == ProjPoint.of(F, normalize(F, [0, 2, 4]))


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)])
def test_sl2_nullcone_count_by_determinant(p, k):
    # oracle: [[h, e], [f, -h]] is nilpotent iff h^2 + ef = 0; count lines by brute force
    F = field(p, k)
    count = 0
    for v in itertools.product(range(F.q), repeat=3):
        if any(v) and next(c for c in v if c) == 1:
            e, h, f = v
            count += int(F.add(F.mul(h, h), F.mul(e, f)) == 0)
    assert count == F.q + 1
    assert len(nullcone_array(sl2(p), k)) == count


@pytest.mark.parametrize("p", [3, 5, 7])
def test_heisenberg_and_sl2s_nullcones(p):
    assert len(nullcone_array(heisenberg(p))) == (p**3 - 1) // (p - 1)
    assert len(nullcone_array(sl2s(p))) == 2 * p + 1


def test_witt_nullcone_by_matrix_powers():
    # oracle: x ∈ V(W(1)) iff its derivation matrix on k[x]/(x^p) has zero p-th power
    D = witt_derivations(P)
    F = field(P)
    want = set()
    for v in projective_points(F, P):
        A = sum(int(c) * M for c, M in zip(v, D)) % P
        if not matpow(F, A, P).any():
            want.add(tuple(v))
    assert {tuple(v) for v in nullcone_array(witt(P))} == want


def test_strata_are_nested():
    L = sl2s(P)
    sizes = [len(stratum_array(L, i)) for i in range(2, P + 1)]
    assert sizes == sorted(sizes)
    assert {tuple(v) for v in sandwich_array(L)} == {tuple(v) for v in stratum_array(L, 2)}


def test_heisenberg_planes():
    H = heisenberg(P)
    planes = elementary_planes(H)
    assert len(planes) == P + 1
    assert all(pl.contains(H.element("z")) for pl in planes)


def test_sl2s_and_cbc8_planes():
    S = sl2s(P)
    assert sorted(format_plane(S, pl) for pl in elementary_planes(S)) == ["span(e, c0)", "span(f, c0)"]
    C = cbc8(P)
    assert sorted(format_plane(C, pl) for pl in elementary_planes(C)) == ["span(x1, x2)", "span(y1, y2)"]


def test_e2_planes_over_extension():
    assert len(elementary_planes(elementary(2, 3), k=2)) == 1
    assert len(elementary_planes(elementary(3, 3))) == 13


def test_plane_bound_refusal():
    with pytest.raises(EnumerationRefused):
        elementary_planes(cbc8(P), bound=10)
    with pytest.raises(EnumerationRefused):
        nullcone_array(elementary(8, 7), bound=1000)


@pytest.mark.parametrize("name", ["heisenberg", "sl2s", "cbc8", "sl2", "witt"])
def test_sandwich_set_is_lie_subset(name):
    rep = sandwich_lie_subset_check(builtin(name, P))
    assert rep.ok


def test_exp_examples():
    H = heisenberg(P)
    assert np.array_equal(exp_ad(H, H.zero()), identity(3))
    E = exp_ad(H, H.element("x"))
    assert np.array_equal(E[:, 1], H.element({"y": 1, "z": 1}))
    assert np.array_equal(E[:, 0], H.element("x")) and np.array_equal(E[:, 2], H.element("z"))
    with pytest.raises(NotNilpotent):
        exp_ad(sl2(P), sl2(P).element("h"))


@pytest.mark.parametrize("name", ["heisenberg", "sl2", "sl2s", "cbc8", "witt"])
def test_exp_of_half_stratum_is_automorphism(name):
    L = builtin(name, P)
    X = stratum_array(L, (P + 1) // 2)
    rng = np.random.default_rng(5)
    X = X[rng.choice(len(X), min(len(X), 40), replace=False)]
    for x in X:
        assert is_automorphism(L, exp_ad(L, x))


def test_exp_additive_on_commuting_pairs():
    H = heisenberg(P)
    x, z = H.element("x"), H.element({"z": 2})
    assert np.array_equal(exp_ad(H, (x + z) % P), matmul(H.F, exp_ad(H, x), exp_ad(H, z)))


def test_admissible_examples():
    assert admissible(elementary(3, P)).admissible
    assert admissible(sl2(P)).admissible
    rep = admissible(sl2s(P))
    assert not rep.admissible and not rep.condition_ii
    assert rep.witness_ii["reason"] == "p-map not preserved"


def test_sl2s_condition_i_witness_is_genuine():
    # the first condition fails too: e + h + 4f has ad^3 = 0 but p-power c0 (see the decisions ledger)
    S = sl2s(P)
    rep = admissible(S)
    assert not rep.condition_i
    x = S.element({"e": 1, "h": 1, "f": 4})
    A = S.ad(x)
    assert not matpow(S.F, A, 3).any()
    assert np.array_equal(S.p_power(x), S.element("c0"))
