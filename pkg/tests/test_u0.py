from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslie.catalog import elementary, heisenberg, sl2, sl2s, witt
from reslie.liealg import AlgebraError
from reslie.linalg import matmul
from reslie.modules import baby_verma, simple_L
from reslie.rep import verify_module
from reslie.u0 import U0Algebra, U0Element, induced_module, regular_module

P = 5


def elements(U: U0Algebra, max_terms: int = 3):
    mono = st.tuples(*[st.integers(0, U.p - 1)] * U.n)
    return st.dictionaries(mono, st.integers(1, U.p - 1), max_size=max_terms).map(lambda t: U0Element(U, t))


U_S = U0Algebra(sl2s(P))
U_W = U0Algebra(witt(P))


def test_unit_and_straightening():
    U = U0Algebra(sl2(P))
    e, h, f = U.gen("e"), U.gen("h"), U.gen("f")
    one = U.one()
    assert one * e == e and e * one == e
    assert f * e == e * f - h
    # [e, f] = h so e f stays in normal form
    assert (e * f).terms == {(1, 0, 1): 1}


def test_h_to_the_p():
    U = U_S
    h, c0 = U.gen("h"), U.gen("c0")
    assert h**P == h + c0


def test_pbw_dimension_and_normal_form():
    U = U0Algebra(heisenberg(3))
    assert U.dim == 27 == len(list(U.monomials()))
    with pytest.raises(AlgebraError):
        U0Element(U, {(3, 0, 0): 1})


@given(elements(U_S), elements(U_S), elements(U_S))
def test_associative_sl2s(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(U_W, 2), elements(U_W, 2), elements(U_W, 2))
def test_associative_witt(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(U_S))
def test_c0_central(u):
    c0 = U_S.gen("c0")
    assert c0 * u == u * c0


@given(elements(U_S), elements(U_S))
def test_distributive_and_action(u, v):
    M = simple_L(sl2s(P), 2)
    assert u * (v + 1) == u * v + u
    # the action on a module is a homomorphism of algebras
    assert np.array_equal((u * v).act(M), matmul(M.F, u.act(M), v.act(M)))


def test_lie_bracket_embeds():
    L = sl2s(P)
    U = U0Algebra(L)
    rng = np.random.default_rng(0)
    for _ in range(20):
        x, y = L.F.random(rng, 4), L.F.random(rng, 4)
        X, Y = U.from_lie(x), U.from_lie(y)
        assert X * Y - Y * X == U.from_lie(L.bracket(x, y))
        assert X**P == U.from_lie(L.p_power(x))


def test_baby_verma_dimensions_and_top_vector():
    S = sl2s(P)
    for i in range(P):
        Z = baby_verma(S, i)
        assert Z.dim == P * P and verify_module(Z).ok
        Zp = baby_verma(S, i, lower=True)
        assert Zp.dim == P * P and verify_module(Zp).ok
    # the canonical generator 1⊗1 is the basis vector of the empty monomial
    Z = baby_verma(S, 2)
    v = np.zeros(Z.dim, dtype=np.int64)
    v[0] = 1
    hc = Z.act(S.element({"h": 1, "c0": 1}))
    assert np.array_equal(hc @ v % P, 2 * v % P)
    assert not (Z.act(S.element("e")) @ v % P).any()


def test_trivial_character_on_whole_algebra():
    S = sl2s(P)
    M = induced_module(S, np.eye(4, dtype=np.int64), [0, 0, 0, 0])
    assert M.dim == 1 and not any(A.any() for A in M.mats)


def test_induced_module_rejections():
    S = sl2s(P)
    with pytest.raises(AlgebraError):
        induced_module(S, [S.element("e"), S.element("f")], [0, 0])  # not a subalgebra
    with pytest.raises(AlgebraError):
        induced_module(S, [S.element("h")], [1])  # h^[p] = h + c0 leaves kh
    with pytest.raises(AlgebraError):
        induced_module(S, [S.element({"h": 1, "c0": 1}), S.element("e")], [2, 1])  # λ([h,e]) != 0


def test_regular_module_is_free():
    E = elementary(2, 3)
    R = regular_module(E)
    assert R.dim == 9 and verify_module(R).ok
