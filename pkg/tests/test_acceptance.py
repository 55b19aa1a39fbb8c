"""Acceptance criteria, one test and one PASS/FAIL line per criterion.

Criteria 3.3, 3.5b, 3.5c and 4.1b fail as stated: the module Z'(i+2)/Soc is
isomorphic to Rad Z(i) (row S3.3), so the heart as defined is 2·Rad Z(i) and not
self-dual. The S rows check the same formulas on Rad Z(i) ⊕ Rad Z(i)^(ω).
Set RESLIE_DEEP=1 to repeat everything at p = 7 (a few minutes).
"""

from __future__ import annotations

import json
import os

import pytest

from reslie.paper_check import CRITERIA, SUPPLEMENTARY, run_criterion

PRIMES = [5, 7] if os.environ.get("RESLIE_DEEP") else [5]
_CACHE: dict = {}


def _show(v) -> str:
    return json.dumps(v, sort_keys=True, ensure_ascii=False, default=str)


def _check(cid: str, p: int):
    row = run_criterion(cid, p, _CACHE)
    status = "PASS" if row.passed else "FAIL"
    print(f"\n[{status}] {row.id} (p={p}) {row.name}\n    expected: {_show(row.expected)}\n    actual:   {_show(row.actual)}")
    assert row.passed, f"{row.id}: expected {_show(row.expected)}, got {_show(row.actual)}"


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("cid", [c[0] for c in CRITERIA])
def test_criterion(cid, p):
    _check(cid, p)


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("cid", [c[0] for c in SUPPLEMENTARY])
def test_supplementary(cid, p):
    _check(cid, p)
