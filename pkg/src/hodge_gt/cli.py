"""Command-line front end: ``hodge-gt generate|verify|dims|selftest``.

Exit codes: 0 ok, 1 verification failure, 2 usage error or malformed
input, 3 oracle size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import render
from .gt_basis import Basis, gmt_basis, gt_basis_hodge
from .verify import SizeCapExceeded, check_basis, nullspace_dim_hodge

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _parse_set(text: str) -> list[int]:
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of grades: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hodge-gt", description="Exact GT bases of Hodge-de Rham solution spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a basis")
    g.add_argument("--dim", type=int, required=True, help="ambient dimension m >= 2")
    g.add_argument("--degree", type=int, required=True, help="homogeneity degree k >= 0")
    grp = g.add_mutually_exclusive_group(required=True)
    grp.add_argument("--grade", type=int, help="grade s (Hodge-de Rham system)")
    grp.add_argument("--set", type=_parse_set, dest="grade_set", help="comma-separated grades S (GMT system)")
    g.add_argument("--algebra", choices=("complex", "real"), default="complex")
    g.add_argument("--format", choices=("json", "text", "latex"), default="text")
    g.add_argument("--out", type=Path, help="write to this file instead of stdout")
    g.add_argument("--normalize", action="store_true", help="scale each element so its leading coefficient is 1")

    v = sub.add_parser("verify", help="check a stored basis file")
    v.add_argument("path", type=Path)

    d = sub.add_parser("dims", help="oracle dimensions of H_k^s for s = 0..m")
    d.add_argument("--dim", type=int, required=True)
    d.add_argument("--degree", type=int, required=True)
    d.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("selftest", help="run the property matrix")
    s.add_argument("--quick", action="store_true", help="restrict to m <= 3")
    s.add_argument("--inject-fault", action="store_true", help="corrupt one basis to exercise the failure path")
    s.add_argument("--seed", type=int, default=0)
    return p


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def format_basis(B: Basis, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(B.to_json(), indent=1) + "\n"
    meta = B.meta
    head = f"m={meta['m']} k={meta['k']} " + (f"S={meta['S']}" if "S" in meta else f"s={meta['s']}")
    lines = []
    short = meta.get("mode") != "real"
    if fmt == "latex":
        lines.append(f"% {head} mode={meta['mode']} size={len(B)}")
        for i, e in enumerate(B):
            lines.append(f"P_{{{i}}} &= {render.to_latex(e.poly, short)} \\\\  % {e.label}")
    else:
        lines.append(f"# {head} mode={meta['mode']} size={len(B)}")
        for i, e in enumerate(B):
            lines.append(f"[{i}] {e.label}")
            lines.append(f"    {render.to_text(e.poly, short)}")
    return "\n".join(lines) + "\n"


def cmd_generate(args, parser) -> int:
    m, k = args.dim, args.degree
    if m < 2:
        parser.error("--dim must be >= 2")
    if k < 0:
        parser.error("--degree must be >= 0")
    if args.grade is not None:
        if not 0 <= args.grade <= m:
            parser.error(f"--grade must lie in 0..{m}")
        B = gt_basis_hodge(m, k, args.grade, args.algebra, normalize=args.normalize)
    else:
        if any(not 0 <= s <= m for s in args.grade_set):
            parser.error(f"--set grades must lie in 0..{m}")
        B = gmt_basis(m, k, args.grade_set, args.algebra, normalize=args.normalize)
    _emit(format_basis(B, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        data = json.loads(args.path.read_text())
        B = Basis.from_json(data)
        report = check_basis(B)
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        print(f"error: cannot read basis file {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(report, indent=1))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_dims(args, parser) -> int:
    m, k = args.dim, args.degree
    if m < 2 or k < 0:
        parser.error("need --dim >= 2 and --degree >= 0")
    dims = [nullspace_dim_hodge(m, k, s) for s in range(m + 1)]
    if args.format == "json":
        print(json.dumps({"m": m, "k": k, "dims": dims}))
    else:
        print("s\tdim H_k^s")
        for s, d in enumerate(dims):
            print(f"{s}\t{d}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    report = run_selftest(quick=args.quick, inject_fault=args.inject_fault, seed=args.seed, log=print)
    print("selftest:", "ok" if report.ok else "FAILED")
    return EXIT_OK if report.ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args, parser)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "dims":
            return cmd_dims(args, parser)
        return cmd_selftest(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
