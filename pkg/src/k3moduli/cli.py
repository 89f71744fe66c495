"""Command-line front end: ``k3moduli {lattice,strata,quartic,octavic,verify}``.

Exit codes: 0 success, 1 bad input, 2 verification failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cover, octavic, quartic, strata, verify
from .lattice import LatticeError, lattice_to_json, orthogonal_complement, roots
from .named import classify_root, lattice_invariants, make
from .poly import ParseError

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_input(arg):
    if arg == "-":
        return sys.stdin.read().strip()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _int_list(text):
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        value = [int(x) for x in text.replace(",", " ").split()]
    return value


# ---------------------------------------------------------------------------
# handlers

def cmd_lattice(args, out):
    lat = make(args.expr)
    if args.action == "invariants":
        rank, sig, factors, ell, delta = lattice_invariants(str(args.expr).strip())
        data = {"expr": args.expr, "rank": rank, "signature": list(sig[:2]),
                "invariant_factors": list(factors), "ell": ell, "delta": delta}
        if args.json:
            print(_dump(data), file=out)
        else:
            print(f"{args.expr}: rank {rank}, signature ({sig[0]},{sig[1]}), "
                  f"discriminant {list(factors) or 'trivial'}, ell {ell}, delta {delta}", file=out)
    elif args.action == "roots":
        found = roots(lat)
        if args.json:
            print(_dump({"expr": args.expr, "count": len(found), "roots": [list(r) for r in found]}),
                  file=out)
        else:
            print(f"{args.expr}: {len(found)} roots", file=out)
    elif args.action == "complement":
        if not args.vectors:
            raise UsageError("complement needs --vectors")
        comp = orthogonal_complement(lat, [tuple(v) for v in _int_list(args.vectors)])
        data = json.loads(lattice_to_json(comp))
        data["basis"] = [[str(x) for x in b] for b in comp.basis]
        print(_dump(data) if args.json else
              f"complement of rank {comp.rank}, gram {[list(r) for r in comp.gram]}", file=out)
    elif args.action == "classify-root":
        if not args.vectors:
            raise UsageError("classify-root needs --vectors")
        label = classify_root(_int_list(args.vectors))
        print(_dump({"class": label}) if args.json else label, file=out)
    return EXIT_OK


def cmd_strata(args, out):
    rows = strata.full_table()
    if args.json:
        print(_dump([r.to_json() for r in rows]), file=out)
        return EXIT_OK
    header = f"{'(n,c)':7} {'rank':>4} {'ell':>3} {'delta':>5}  {'Picard lattice':24} anti-invariant"
    print(header, file=out)
    for r in rows:
        j = r.to_json()
        print(f"{str(r.type):7} {j['rank']:>4} {j['ell']:>3} {j['delta']:>5}  "
              f"{j['picard']:24} {j['anti_invariant']}", file=out)
    return EXIT_OK


def cmd_quartic(args, out):
    form = quartic.parse_quartic(_read_input(args.input))
    v = quartic.git_stability(form)
    t = quartic.singular_type(form, v) if v.stability == "stable" else None
    report = None
    if args.cover and v.stability != "unstable":
        report = cover.cover_report_quartic(v, t)
    if args.json:
        data = {"input": str(form), "verdict": v.to_json(witnesses=args.witnesses)}
        if args.type or t is not None:
            data["type"] = [t.n, t.c] if t else None
        if args.cover:
            data["cover"] = report.to_json() if report else None
        print(_dump(data), file=out)
        return EXIT_OK
    line = v.summary()
    if t is not None:
        line += f", type {t}"
    elif args.type:
        line += ", type undefined"
    print(line, file=out)
    if args.witnesses:
        for w in v.witnesses:
            extra = "" if w.admissible is None else f" admissible={w.admissible}"
            print(f"  {w.type} (multiplicity {w.multiplicity}) at {w.point}{extra}", file=out)
    if args.cover:
        _print_cover(report, out)
    return EXIT_OK


def cmd_octavic(args, out):
    form = octavic.parse_octavic(_read_input(args.input))
    v = octavic.octavic_stability(form)
    report = cover.cover_report_octavic(v) if args.cover and v.stability != "unstable" else None
    mults = octavic.multiplicities(form)
    if args.json:
        data = {"input": str(form), "verdict": v.to_json(witnesses=args.witnesses),
                "multiplicities": mults.to_json(),
                "cone_singularities": octavic.cone_curve_singularities(form)}
        if args.cover:
            data["cover"] = report.to_json() if report else None
        print(_dump(data), file=out)
        return EXIT_OK
    print(v.summary(), file=out)
    print(f"  profile {list(mults.profile)}", file=out)
    if args.witnesses:
        for w in v.witnesses:
            print(f"  {w.root.factor}: multiplicity {w.root.multiplicity}, "
                  f"{w.cone_singularity} on the cone curve", file=out)
    if args.cover:
        _print_cover(report, out)
    return EXIT_OK


def _print_cover(report, out):
    if report is None:
        print("  cover: none (unstable)", file=out)
        return
    sings = ", ".join(f"{k} x{v}" for k, v in report.cover_singularities) or "none"
    print(f"  cover: {report.moduli_location}, {report.degeneration_type}, singularities {sings}",
          file=out)
    if report.picard is not None:
        print(f"  Picard: {report.picard.picard_expr or 'not tabulated'} "
              f"(rank {report.picard.picard_rank})", file=out)


def cmd_verify(args, out):
    rep = verify.run_all()
    if args.json:
        print(_dump(rep.to_json()), file=out)
    else:
        for c in rep.checks:
            print(c.line(), file=out)
        print("all checks passed" if rep.passed else "verification FAILED", file=out)
    return EXIT_OK if rep.passed else EXIT_VERIFY


# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="k3moduli", description="Lattices, strata and GIT stability for quartic K3 covers.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    lat = sub.add_parser("lattice", help="lattice invariants, roots, complements")
    lat.add_argument("action", choices=["invariants", "roots", "complement", "classify-root"])
    lat.add_argument("expr", nargs="?", default="<2>^2 + D4^3",
                     help="lattice expression such as 'U + A1^8' (default L-)")
    lat.add_argument("--vectors", help="JSON list of vectors (complement) or one vector (classify-root)")
    lat.add_argument("--json", action="store_true")
    lat.set_defaults(func=cmd_lattice)

    st = sub.add_parser("strata", help="the verified Picard lattice table")
    st.add_argument("--json", action="store_true")
    st.set_defaults(func=cmd_strata)

    for name, func in (("quartic", cmd_quartic), ("octavic", cmd_octavic)):
        sp = sub.add_parser(name, help=("classify a plane quartic" if name == "quartic" else "classify a binary octavic"))
        sp.add_argument("action", choices=["classify"])
        sp.add_argument("input", help="polynomial, file path, or - for stdin")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--witnesses", action="store_true", help="include singular points with local models")
        sp.add_argument("--cover", action="store_true", help="describe the K3 cover and moduli location")
        if name == "quartic":
            sp.add_argument("--type", action="store_true", help="report the singular type (n,c) of a stable quartic")
        sp.set_defaults(func=func, type=False)

    ver = sub.add_parser("verify", help="run every acceptance check")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(str(exc).rstrip(), file=err)
        return EXIT_USAGE
    except SystemExit as exc:   # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"k3moduli: error: {exc}", file=err)
        return EXIT_USAGE
    except (ParseError, LatticeError, quartic.QuarticError, octavic.OctavicError,
            cover.CoverError, ValueError) as exc:
        print(f"k3moduli: error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
