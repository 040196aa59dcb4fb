"""Command-line interface.

Exit codes: 0 success, 1 failed verification or rejected input, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import characters
from .branching import branch
from .decomposition import Decomposition
from .diagrams import conjugate, format_diagram, iota, parse_diagram
from .lr import lr_coeff
from .pieri import skew_pieri
from .reciprocity import main_theorem_grid, verify_cross, verify_duality, verify_main_theorem
from .stable import stable_tensor


def _diagram(text: str):
    try:
        return parse_diagram(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _total_dimension(dec: Decomposition) -> int | None:
    if dec.rank > characters.tensor_cap():
        return None
    return sum(k * characters.dim(d, dec.rank) for d, k in dec)


def _emit_decomposition(dec: Decomposition, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(dec.to_json(_total_dimension(dec)), sort_keys=True))
    else:
        print(dec.table())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympieri", description="Symplectic tensor products and branching rules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("iota", help="apply iota_{n,m}")
    p.add_argument("--diagram", type=_diagram, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("conjugate", help="transpose a diagram")
    p.add_argument("--diagram", type=_diagram, required=True)

    p = sub.add_parser("dim", help="dimension of tau^D of Sp(2n)")
    p.add_argument("--diagram", type=_diagram, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("branch", help="restrict Sp(2n+2) to Sp(2n) x Sp(2)")
    p.add_argument("--diagram", type=_diagram, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("pieri", help="decompose tau^D ⊗ omega_r of Sp(2m)")
    p.add_argument("--diagram", type=_diagram, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("tensor", help="decompose tau^D1 ⊗ tau^D2 of Sp(2m)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--stable", action="store_true", help="Littlewood-Richardson formula (stable range)")
    mode.add_argument("--oracle", action="store_true", help="character convolution (small rank)")
    p.add_argument("--d1", type=_diagram, required=True)
    p.add_argument("--d2", type=_diagram, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^F_{D,E}")
    p.add_argument("--f", type=_diagram, required=True)
    p.add_argument("--d", type=_diagram, required=True)
    p.add_argument("--e", type=_diagram, required=True)

    p = sub.add_parser("verify", help="run identity checks")
    vsub = p.add_subparsers(dest="check", required=True)
    v = vsub.add_parser("duality", help="exterior algebra skew duality")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v = vsub.add_parser("main", help="tensor/branching reciprocity")
    v.add_argument("--parts", type=_int_list, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--d", type=_diagram, action="append", help="one per part; omit to sweep the grid")
    v.add_argument("--e", type=_diagram, default=None)
    v.add_argument("--format", choices=("table", "json"), default="table")
    v = vsub.add_parser("cross", help="cross-check every rule against the others")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--depth-cap", type=int, default=3)
    v.add_argument("--size-cap", type=int, default=4)
    v.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _branch_json(g, n: int, terms) -> dict:
    return {
        "group": "Sp",
        "rank": n + 1,
        "diagram": list(g),
        "terms": [
            {"diagram": list(t.e), "sl2": [{"ell": ell, "multiplicity": k} for ell, k in t.sl2.items()]}
            for t in terms
        ],
    }


def _run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "iota":
        print(format_diagram(iota(args.diagram, args.n, args.m)))
    elif cmd == "conjugate":
        print(format_diagram(conjugate(args.diagram)))
    elif cmd == "dim":
        print(characters.dim(args.diagram, args.n))
    elif cmd == "lr":
        print(lr_coeff(args.f, args.d, args.e))
    elif cmd == "branch":
        terms = branch(args.diagram, args.n)
        if args.format == "json":
            print(json.dumps(_branch_json(args.diagram, args.n, terms), sort_keys=True))
        else:
            for t in terms:
                content = " + ".join(f"{k}x({ell})" for ell, k in t.sl2.items())
                print(f"({format_diagram(t.e)}) ⊗ [{content}]")
    elif cmd == "pieri":
        _emit_decomposition(skew_pieri(args.diagram, args.r, args.m, args.n), args.format)
    elif cmd == "tensor":
        if args.stable:
            dec = stable_tensor(args.d1, args.d2, args.m)
        else:
            dec = characters.tensor_decompose(args.d1, args.d2, args.m)
        _emit_decomposition(dec, args.format)
    elif cmd == "verify":
        return _verify(args)
    return 0


def _verify(args: argparse.Namespace) -> int:
    if args.check == "duality":
        report = verify_duality(args.n, args.m)
        if args.format == "json":
            print(json.dumps(report.to_json(), sort_keys=True))
        else:
            status = "PASS" if report.passed else "FAIL"
            print(f"{status} duality n={args.n} m={args.m} mass={report.total_mass}/{report.expected_mass}")
            for w, a, b in report.discrepancies[:20]:
                print(f"  weight {w}: exterior {a}, sum {b}")
        return 0 if report.passed else 1

    if args.check == "main":
        if args.d is None and args.e is None:
            checks = main_theorem_grid(args.parts, args.m)
        elif args.d is not None and args.e is not None:
            checks = [verify_main_theorem(args.parts, args.m, args.d, args.e)]
        else:
            raise ValueError("give both --d (once per part) and --e, or neither to sweep the grid")
        passed = all(c.equal for c in checks)
        if args.format == "json":
            print(json.dumps({"check": "main", "passed": passed, "instances": [c.to_json() for c in checks]},
                             sort_keys=True))
        else:
            for c in checks:
                ds = " ".join(f"({format_diagram(d)})" for d in c.ds)
                print(f"{'PASS' if c.equal else 'FAIL'} D={ds} E=({format_diagram(c.e)}) lhs={c.lhs} rhs={c.rhs}")
        return 0 if passed else 1

    report = verify_cross(args.m, args.depth_cap, args.size_cap)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        for r in report.results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.instances} instances)"
            if r.counterexample:
                line += f": {r.counterexample}"
            print(line)
    return 0 if report.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
