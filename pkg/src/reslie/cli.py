"""Command-line front end."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

import numpy as np
from sympy import isprime

from .catalog import BUILTIN_NAMES, builtin
from .liealg import AlgebraError, LieAlgebra, is_automorphism, is_p_automorphism
from .linalg import Subspace
from .rep import ModuleError, verify_module
from .varieties import EnumerationRefused, NotNilpotent

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_REFUSED = 3


class InvalidInput(ValueError):
    pass


# input parsing

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z_][\w']*)?\s*")


def parse_element(L: LieAlgebra, text: str) -> np.ndarray:
    """'e+2h-f', '3*x1 + z' or a comma-separated coefficient list."""
    text = text.strip()
    if re.fullmatch(r"[\d\s,+-]+", text) and "," in text:
        coeffs = [int(c) for c in text.split(",")]
        if len(coeffs) != L.dim:
            raise InvalidInput(f"element needs {L.dim} coordinates, got {len(coeffs)}")
        return L.element(coeffs)
    v = L.zero()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise InvalidInput(f"cannot parse element {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3) is None:
            raise InvalidInput(f"scalar without basis label in {text!r}")
        try:
            i = L.index(m.group(3))
        except (KeyError, AlgebraError, ValueError):
            raise InvalidInput(f"unknown basis label {m.group(3)!r}; basis is {', '.join(L.labels)}") from None
        v[i] = (v[i] + sign * c) % L.p
        pos = m.end()
    return v


def parse_plane(L: LieAlgebra, text: str) -> Subspace:
    parts = [s for s in re.split(r"[;|]", text) if s.strip()]
    if len(parts) != 2:
        raise InvalidInput("a plane is given as two elements separated by ';', e.g. 'f;c0'")
    S = Subspace.span(L.F, np.vstack([parse_element(L, s) for s in parts]), L.dim)
    if S.dim != 2:
        raise InvalidInput(f"{text!r} does not span a plane")
    return S


def load_algebra(args):
    if args.algebra_file:
        with open(args.algebra_file) as fh:
            data = json.load(fh)
        if "algebra" in data and "basis" not in data:
            data = data["algebra"]
        return LieAlgebra.from_json(data)
    if args.builtin:
        return builtin(args.builtin, args.p)
    module = getattr(args, "module", None)
    if module and os.path.isfile(module):
        with open(module) as fh:
            data = json.load(fh)
        if "algebra" in data:
            return LieAlgebra.from_json(data["algebra"])
    raise InvalidInput("give --builtin NAME or --algebra-file PATH")


def load_module(L: LieAlgebra, spec: str | None):
    from .modules import module_from_json, module_from_spec

    if not spec:
        raise InvalidInput("this command needs --module")
    if os.path.isfile(spec):
        with open(spec) as fh:
            data = json.load(fh)
        return module_from_json(data, L)
    return module_from_spec(L, spec)


def _check_j(L, j):
    if j is None:
        raise InvalidInput("this command needs --j")
    if not 1 <= j <= L.p - 1:
        raise InvalidInput(f"--j must lie in 1..{L.p - 1}")
    return j


# commands; each returns (report, table rows or None, passed)


def cmd_verify_algebra(args):
    L = load_algebra(args)
    rep = L.verify_axioms()
    out = {"algebra": L.name, "p": L.p, "dim": L.dim, "ok": rep.ok, "violations": rep.as_dict()["violations"]}
    if args.module:
        M = load_module(L, args.module)
        mrep = verify_module(M)
        out["module"] = {"name": M.name, "dim": M.dim, **mrep.as_dict()}
        if not mrep.ok:
            raise InvalidInput(f"module fails its axioms: {mrep.violations[0]}")
    rows = [{"axiom": a, "where": list(w), "detail": d} for a, w, d in rep.violations]
    return out, rows, rep.ok


def cmd_nullcone(args):
    from .varieties import nullcone_array, stratum_array

    L = load_algebra(args)
    Lk = L.over(args.k)
    X = stratum_array(L, args.stratum, args.k, bound=args.bound) if args.stratum else nullcone_array(L, args.k, bound=args.bound)
    pts = [Lk.format(x) for x in X]
    out = {"algebra": L.name, "k": args.k, "stratum": args.stratum or "V", "count": len(pts), "points": pts}
    return out, [{"point": s} for s in pts], True


def cmd_sandwich(args):
    from .varieties import sandwich_lie_subset_check

    L = load_algebra(args)
    rep = sandwich_lie_subset_check(L, args.k, seed=args.seed)
    return {"algebra": L.name, "k": args.k, **rep.as_dict()}, None, rep.ok


def cmd_planes(args):
    from .varieties import elementary_planes, format_plane

    L = load_algebra(args)
    planes = elementary_planes(L, args.k, bound=args.bound, override=args.override)
    names = [format_plane(L.over(args.k), P) for P in planes]
    center = L.over(args.k).center()
    common = [L.format(v) for v in center.basis if all(P.contains(v) for P in planes)] if planes else []
    out = {"algebra": L.name, "k": args.k, "count": len(names), "planes": names, "central_vectors_in_every_plane": common}
    return out, [{"plane": s} for s in names], True


def cmd_exp_check(args):
    from .varieties import exp_ad, exp_failure, stratum_array

    L = load_algebra(args)
    Lk = L.over(args.k)
    if args.x:
        xs = [parse_element(L, args.x)]
    else:
        xs = list(stratum_array(L, (L.p + 1) // 2, args.k, bound=args.bound))
    rows = []
    for x in xs:
        phi = exp_ad(Lk, x)
        fail = exp_failure(Lk, x)
        rows.append(
            {
                "x": Lk.format(x),
                "aut": bool(is_automorphism(Lk, phi)),
                "aut_p": bool(is_p_automorphism(Lk, phi)),
                "reason": fail["reason"] if fail else "",
            }
        )
    # only the enumerated N_{(p+1)/2} sweep is a check; a single x is a query
    ok = bool(args.x) or all(r["aut"] for r in rows)
    out = {"algebra": L.name, "k": args.k, "points": len(rows), "all_in_aut": all(r["aut"] for r in rows), "rows": rows}
    if args.x:
        out["matrix"] = exp_ad(Lk, xs[0]).tolist()
    return out, rows, ok


def cmd_admissible(args):
    from .varieties import admissible

    L = load_algebra(args)
    rep = admissible(L, args.k)
    return {"algebra": L.name, "k": args.k, **rep.as_dict()}, None, True


def cmd_jordan(args):
    from .rankdeg import jordan_type

    L = load_algebra(args)
    M = load_module(L, args.module)
    if not args.x:
        raise InvalidInput("jordan needs --x")
    x = parse_element(L, args.x)
    J = jordan_type(M, x)
    return {"module": M.name, "x": L.format(x), **J.as_dict()}, [{"size": s + 1, "count": a} for s, a in enumerate(J.blocks)], True


def cmd_rank(args):
    from .rankdeg import rank_profile

    L = load_algebra(args)
    M = load_module(L, args.module)
    j = _check_j(L, args.j)
    rp = rank_profile(M, j, args.k)
    out = {"module": M.name, **rp.as_dict(L)}
    rows = [{"x": pt["x"], **{f"rk{t + 1}": r for t, r in enumerate(pt["ranks"])}} for pt in out["points"]]
    return out, rows, True


def cmd_eip(args):
    from .rankdeg import eip_check

    L = load_algebra(args)
    M = load_module(L, args.module)
    js = [_check_j(L, args.j)] if args.j else list(range(1, L.p))
    res = {j: eip_check(M, j, args.k) for j in js}
    return {"module": M.name, "k": args.k, "eip": {str(j): v for j, v in res.items()}}, [{"j": j, "eip": v} for j, v in res.items()], True


def cmd_kernel(args):
    from .rankdeg import generic_kernel, stable_generic_kernel_dim

    L = load_algebra(args)
    M = load_module(L, args.module)
    j = _check_j(L, args.j)
    plane = parse_plane(L, args.plane) if args.plane else None
    K = generic_kernel(M, j, plane, args.k)
    out = {"module": M.name, "j": j, "k": args.k, "dim_module": M.dim, "dim_kernel": K.dim}
    if plane is not None and args.stabilise:
        d, k = stable_generic_kernel_dim(M, j, plane)
        out["stable"] = {"dim_kernel": d, "k": k}
    return out, None, True


def cmd_degree(args):
    from .rankdeg import degree_function

    L = load_algebra(args)
    M = load_module(L, args.module)
    j = _check_j(L, args.j)
    planes = [parse_plane(L, args.plane)] if args.plane else None
    rep = degree_function(M, j, args.k, planes=planes, method=args.method)
    out = {"module": M.name, "method": args.method, **rep.as_dict()}
    rows = [{"plane": k, "degree": v} for k, v in rep.values.items()]
    rows += [{"plane": k, "degree": "undefined (non-constant rank)"} for k in rep.undefined]
    return out, rows, True


def cmd_modj(args):
    from .rankdeg import mod_j_membership

    L = load_algebra(args)
    M = load_module(L, args.module)
    js = [args.j] if args.j else list(range(1, L.p + 1))
    res = {j: mod_j_membership(M, j, args.k) for j in js}
    return {"module": M.name, "k": args.k, "member": {str(j): v for j, v in res.items()}}, [{"j": j, "member": v} for j, v in res.items()], True


def cmd_paper_check(args):
    from .paper_check import run_suite

    rows = run_suite(args.p, deep=args.deep, only=args.only)
    table = [r.as_dict() for r in rows]
    main = [r for r in rows if not r.id.startswith("S")]
    for r in rows:
        print(f"{'PASS' if r.passed else 'FAIL'}  p={r.p}  {r.id:6s} {r.name}", file=sys.stderr)
    out = {
        "p": args.p,
        "deep": args.deep,
        "passed": sum(r.passed for r in main),
        "failed": sum(not r.passed for r in main),
        "rows": table,
    }
    return out, [{**t, "expected": json.dumps(t["expected"], sort_keys=True), "actual": json.dumps(t["actual"], sort_keys=True)} for t in table], all(
        r.passed for r in main
    )


COMMANDS = {
    "verify-algebra": (cmd_verify_algebra, "check Lie and restricted axioms (and a module, if given)"),
    "nullcone": (cmd_nullcone, "enumerate ℙ(V(g)) or a stratum N_i"),
    "sandwich": (cmd_sandwich, "check that Sw(g) is closed under brackets"),
    "planes": (cmd_planes, "enumerate E(2,g)"),
    "exp-check": (cmd_exp_check, "check exp(x) against Aut(g) and Aut_p(g)"),
    "admissible": (cmd_admissible, "the two admissibility conditions with witnesses"),
    "jordan": (cmd_jordan, "Jordan type of a module at a nullcone point"),
    "rank": (cmd_rank, "j-rank profile over the nullcone"),
    "eip": (cmd_eip, "equal j-images property"),
    "kernel": (cmd_kernel, "generic kernel dimension"),
    "degree": (cmd_degree, "j-degree on one plane or all of E(2,g)"),
    "modj": (cmd_modj, "membership in mod^j"),
    "paper-check": (cmd_paper_check, "run the acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reslie", description="Rank and degree invariants of restricted Lie algebra modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--builtin", help=f"builtin algebra ({', '.join(BUILTIN_NAMES)}, e_r, or sums a+b)")
        sp.add_argument("--algebra-file", help="algebra JSON file")
        sp.add_argument("--p", type=int, default=5)
        sp.add_argument("--k", type=int, default=1, help="extension degree of the point field")
        sp.add_argument("--module", help="constructor name (L:i, Z:i, radZ:i, Ht:i, free, ...) or module JSON file")
        sp.add_argument("--j", type=int)
        sp.add_argument("--x", help="an element, e.g. 'e+2h' or '1,0,2'")
        sp.add_argument("--plane", help="two elements separated by ';'")
        sp.add_argument("--stratum", type=int, help="nullcone: enumerate N_i instead of V")
        sp.add_argument("--bound", type=int, default=2 * 10**6, help="enumeration bound")
        sp.add_argument("--override", action="store_true", help="ignore the plane-enumeration bound")
        sp.add_argument("--method", choices=["minors", "compound", "sections"], default="minors")
        sp.add_argument("--stabilise", action="store_true", help="kernel: raise k until the dimension stabilises")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--deep", action="store_true", help="paper-check: also run p=7")
        sp.add_argument("--only", nargs="*", help="paper-check: criterion ids")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--output", help="write the report here instead of stdout")
    return parser


def _render(report, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False, default=_default) + "\n"
    rows = rows if rows is not None else [report]
    buf = io.StringIO()
    fields: list[str] = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (json.dumps(v, sort_keys=True, default=_default) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
    return buf.getvalue()


def _default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    return str(o)


def _fail(kind: str, exc: BaseException, code: int) -> int:
    diag = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    profile = getattr(exc, "profile", None)
    if profile is not None:
        diag["witness"] = profile
    print(json.dumps(diag, sort_keys=True, ensure_ascii=False, default=_default), file=sys.stderr)
    return code


def main(argv=None) -> int:
    from .rankdeg import EmptyNullcone, NonConstantRank, NotElementary, NotInNullcone

    args = build_parser().parse_args(argv)
    if not isprime(args.p):
        return _fail("invalid input", InvalidInput(f"--p must be prime, got {args.p}"), EXIT_INVALID)
    if args.k < 1:
        return _fail("invalid input", InvalidInput("--k must be positive"), EXIT_INVALID)
    fn = COMMANDS[args.command][0]
    try:
        report, rows, passed = fn(args)
    except EnumerationRefused as exc:
        return _fail("refused", exc, EXIT_REFUSED)
    except (
        InvalidInput,
        AlgebraError,
        ModuleError,
        NotNilpotent,
        NotInNullcone,
        NotElementary,
        EmptyNullcone,
        NonConstantRank,
        json.JSONDecodeError,
        OSError,
        KeyError,
    ) as exc:
        return _fail("invalid input", exc, EXIT_INVALID)
    text = _render(report, rows, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
