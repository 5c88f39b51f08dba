"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import verify as verify_mod
from .enumeration import (
    EnumerationError,
    bell_f,
    count_table,
    enumerate_centered_hyperplanes,
    enumerate_hemispaces,
    enumerate_splittings,
    splitting_to_weak_order,
)
from .faces import FaceError, Hyperplane, HyperplaneError, KFace, classify, face_catalog, face_conditions, face_to_json, is_pure
from .hemispace import AssemblyError, Hemispace, PartitionError
from .maxplus import parse_point
from .render import render_svg


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json_arg(text: str):
    path = Path(text)
    if not text.lstrip().startswith(("{", "[", '"')) and path.is_file():
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON: {e}") from None


def _hyperplane(text: str) -> Hyperplane:
    try:
        return Hyperplane.from_json(_load_json_arg(text))
    except HyperplaneError as e:
        raise UsageError(f"invalid hyperplane: {e}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_decompose(args, out):
    H = _hyperplane(args.hyperplane)
    for f in face_catalog(H):
        row = {"face": face_to_json(H, f), "conditions": face_conditions(H, f)}
        if isinstance(f, KFace):
            row["codim"] = f.codim
            row["pure"] = is_pure(H, f)
        out.write(_dump(row) + "\n")
    return 0


def cmd_classify(args, out):
    H = _hyperplane(args.hyperplane)
    try:
        p = parse_point(args.point)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(p) != H.n:
        raise UsageError(f"point has {len(p)} coordinates, hyperplane has n = {H.n}")
    out.write(_dump(face_to_json(H, classify(H, p))) + "\n")
    return 0


def cmd_enumerate(args, out):
    hyperplanes = None
    if args.hyperplane is not None:
        H = _hyperplane(args.hyperplane)
        if H.n != args.n:
            raise UsageError(f"--n {args.n} does not match hyperplane dimension {H.n}")
        if H.has_type_i:
            raise UsageError("hemispaces of a hyperplane with a type-I face cannot be enumerated (infinitely many)")
        hyperplanes = [H]
    try:
        lines = (hm.dumps() + "\n" for hm in enumerate_hemispaces(args.n, hyperplanes))
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.writelines(lines)
        else:
            out.writelines(lines)
    except EnumerationError as e:
        raise UsageError(str(e)) from None
    return 0


def cmd_count(args, out):
    ok = True
    for n in range(1, args.n + 1):
        row = count_table(n)
        ok &= row["match"]
        out.write(_dump(row) + "\n")
    return 0 if ok else 1


def cmd_bell(args, out):
    out.write(" ".join(str(bell_f(k)) for k in range(args.n + 1)) + "\n")
    return 0


def cmd_splittings(args, out):
    sp = enumerate_splittings(args.m)
    out.write(_dump({"m": args.m, "splittings": len(sp)}) + "\n")
    if args.list:
        for s in sp:
            row = s.to_json()
            row["weak_order"] = splitting_to_weak_order(s).to_json()
            out.write(_dump(row) + "\n")
    return 0


def cmd_verify(args, out):
    color = "NO_COLOR" not in os.environ and out.isatty()
    report = verify_mod.run_all(args.n, trials=args.trials, seed=args.seed)
    out.write(verify_mod.format_report(report, color=color))
    return 0 if report.passed else 1


def cmd_render(args, out):
    H = _hyperplane(args.hyperplane)
    if H.n != 2:
        raise UsageError("render supports n = 2 only")
    hm = None
    if args.hemispace is not None:
        try:
            hm = Hemispace.from_json(_load_json_arg(args.hemispace))
        except (HyperplaneError, FaceError, PartitionError, AssemblyError, ValueError, TypeError) as e:
            raise UsageError(f"invalid hemispace: {e}") from None
        if hm.hyperplane != H:
            raise UsageError("hemispace is supported by a different hyperplane")
    Path(args.svg).write_text(render_svg(H, hm), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hemispaces", description="Max-plus hyperplane faces and hemispaces.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", help="list the faces of a hyperplane")
    s.add_argument("--hyperplane", required=True, help="hyperplane JSON or a file holding it")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("classify", help="name the face containing a point")
    s.add_argument("--hyperplane", required=True)
    s.add_argument("--point", required=True, help="e.g. 1,-inf,3/2")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="stream centered hemispaces as JSON lines")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--hyperplane")
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="enumerated vs formula counts for n = 1..k")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("bell", help="print f(0..k)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_bell)

    s = sub.add_parser("splittings", help="union-closed splittings of the subsets of [m]")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_splittings)

    s = sub.add_parser("verify", help="run the invariant suite")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="SVG picture of an R^2_max decomposition")
    s.add_argument("--hyperplane", required=True)
    s.add_argument("--hemispace")
    s.add_argument("--svg", required=True)
    s.set_defaults(func=cmd_render)
    return p


def _glue_values(argv):
    # point text such as "-inf,1" would otherwise be read as an option
    out, k = [], 0
    while k < len(argv):
        if argv[k] == "--point" and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"--point={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(list(argv)))
        for name in ("n", "m", "trials"):
            value = getattr(args, name, None)
            if value is not None and value < (0 if (name == "n" and args.command == "bell") else 1):
                raise UsageError(f"--{name} is out of range")
        return args.func(args, out)
    except UsageError as e:
        err.write(f"hemispaces: error: {e}\n")
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
