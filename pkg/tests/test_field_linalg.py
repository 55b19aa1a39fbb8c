from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslie.field import GF, FieldError, field, smallest_irreducible
from reslie.forms import BinaryForm, form_gcd
from reslie.linalg import Subspace, batch_rank, compound, identity, inverse, matmul, nullspace, rank, rref, solve

F5 = field(5)


def mat(p, rows, cols):
    return st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: np.array(xs, dtype=np.int64).reshape(rows, cols)
    )


# fields


def test_rejects_bad_characteristic():
    with pytest.raises(FieldError):
        GF(4)
    with pytest.raises(FieldError):
        GF(2)


def test_smallest_irreducible_is_lexicographically_first():
    # over F_5, x^2 and x^2 + 1 split while -2 = 3 is a non-square, so x^2 + 2 comes first
    assert smallest_irreducible(5, 2) == (2, 0)
    assert smallest_irreducible(3, 2) == (1, 0)


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (3, 3), (7, 2)])
def test_extension_field_axioms(p, k):
    F = field(p, k)
    els = np.arange(F.q)
    a, b = np.meshgrid(els, els)
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.add(a, b), F.add(b, a))
    assert all(F.mul(x, F.inv(x)) == 1 for x in range(1, F.q))
    c = (els * 7 + 3) % F.q
    assert np.array_equal(F.mul(F.mul(a, b), c[None, :]), F.mul(a, F.mul(b, c[None, :])))
    assert np.array_equal(F.mul(a, F.add(b, c[None, :])), F.add(F.mul(a, b), F.mul(a, c[None, :])))


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (3, 3), (5, 3)])
def test_frobenius_has_order_k(p, k):
    F = field(p, k)
    x = np.arange(F.q)
    y = x.copy()
    orders = []
    for t in range(1, k + 1):
        y = F.frobenius(y)
        if np.array_equal(y, x):
            orders.append(t)
    assert orders and orders[0] == k


# rref and friends


def test_rref_identity_and_zero():
    R, r, piv = rref(F5, identity(4))
    assert r == 4 and np.array_equal(R, identity(4)) and piv == [0, 1, 2, 3]
    R, r, piv = rref(F5, np.zeros((3, 3), dtype=np.int64))
    assert r == 0 and not R.any() and piv == []


def test_rref_hand_example():
    R, r, piv = rref(F5, [[1, 2], [2, 4]])
    assert r == 1
    assert R.tolist() == [[1, 2], [0, 0]]


@given(mat(5, 4, 5))
def test_rref_idempotent_and_rank_nullity(A):
    R, r, piv = rref(F5, A)
    R2, r2, _ = rref(F5, R)
    assert np.array_equal(R, R2) and r == r2
    N = nullspace(F5, A)
    assert N.shape[0] == A.shape[1] - r
    if N.size:
        assert not matmul(F5, A, N.T).any()


@given(mat(7, 3, 3))
def test_inverse_and_solve(A):
    F = field(7)
    if rank(F, A) < 3:
        with pytest.raises(ValueError):
            inverse(F, A)
        return
    Ai = inverse(F, A)
    assert np.array_equal(matmul(F, A, Ai), identity(3))
    b = np.array([1, 2, 3])
    x = solve(F, A, b)
    assert np.array_equal(matmul(F, A, x.reshape(-1, 1)).reshape(-1), b)


def test_batch_rank_matches_rank(rng):
    for p, k in [(5, 1), (3, 2)]:
        F = field(p, k)
        A = F.random(rng, (40, 5, 6))
        A[::3, 2] = A[::3, 0]  # force some rank drops
        assert batch_rank(F, A).tolist() == [rank(F, X) for X in A]


# subspaces


def test_subspace_examples():
    n = 3
    e = identity(n)
    U = Subspace.span(F5, e[:2], n)
    W = Subspace.span(F5, e[1:], n)
    Z = Subspace.zero(F5, n)
    assert U + Z == U
    assert (U & U) == U
    assert (U & W) == Subspace.span(F5, e[1:2], n)


def test_intersection_by_enumeration():
    # oracle: list every vector of both spans
    rng = np.random.default_rng(3)
    for _ in range(10):
        A, B = rng.integers(0, 5, (2, 4)), rng.integers(0, 5, (2, 4))
        U, W = Subspace.span(F5, A, 4), Subspace.span(F5, B, 4)

        def vectors(S):
            return {tuple(np.array(c) @ S.basis % 5) for c in itertools.product(range(5), repeat=S.dim)}

        common = vectors(U) & vectors(W)
        assert len(common) == 5 ** (U & W).dim
        assert common == vectors(U & W)


@given(mat(5, 3, 5), mat(5, 2, 5))
def test_dimension_formula(A, B):
    U, W = Subspace.span(F5, A, 5), Subspace.span(F5, B, 5)
    assert (U + W).dim + (U & W).dim == U.dim + W.dim
    assert U.issubset(U + W) and (U & W).issubset(W)


@given(mat(5, 3, 4), st.integers(1, 4))
def test_canonical_equality(A, c):
    U = Subspace.span(F5, A, 4)
    V = Subspace.span(F5, (A * c) % 5, 4)
    assert U == V and hash(U) == hash(V)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        Subspace.whole(F5, 3) + Subspace.whole(F5, 4)


# compound matrices


def test_compound_trivial_cases(rng):
    assert np.array_equal(compound(F5, identity(4), 2), identity(6))
    A = F5.random(rng, (3, 4))
    assert np.array_equal(compound(F5, A, 1), A)
    with pytest.raises(ValueError):
        compound(F5, A, 4)


def test_compound_of_rank_r_has_rank_one(rng):
    for _ in range(20):
        B, C = F5.random(rng, (5, 2)), F5.random(rng, (2, 5))
        A = matmul(F5, B, C)
        if rank(F5, A) != 2:
            continue
        W = compound(F5, A, 2)
        assert rank(F5, W) == 1
        cols = [W[:, c] for c in range(W.shape[1]) if W[:, c].any()]
        for u in cols[1:]:
            assert rank(F5, np.vstack([cols[0], u])) == 1


# binary forms


def bf(*coeffs, p=5):
    return BinaryForm(field(p), tuple(coeffs))


def test_form_gcd_examples():
    s2t, st2 = bf(0, 1, 0, 0), bf(0, 0, 1, 0)
    assert form_gcd([s2t, st2]) == bf(0, 1, 0)
    f = bf(2, 4, 1)
    assert form_gcd([f, BinaryForm.zero(F5, 3)]) == f.monic()
    # s^2 + t^2 = (s + 2t)(s - 2t) over F_5
    assert form_gcd([bf(1, 0, 1), bf(1, 2)]) == bf(1, 2)
    with pytest.raises(ValueError):
        form_gcd([BinaryForm.zero(F5, 2)])


forms5 = st.lists(st.integers(0, 4), min_size=2, max_size=6).map(lambda c: BinaryForm(F5, tuple(c)))


@given(forms5, forms5, forms5)
def test_form_gcd_properties(f, g, h):
    if f.is_zero or g.is_zero:
        return
    d = form_gcd([f, g])
    assert d.divides(f) and d.divides(g)
    assert d == form_gcd([g, f])
    assert d.degree <= min(f.degree, g.degree)
    if not h.is_zero:
        assert form_gcd([form_gcd([f, g]), h]) == form_gcd([f, form_gcd([g, h])])
        # common factor h survives
        assert h.monic().divides(form_gcd([f * h, g * h]))
