"""``noc`` command-line driver."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

FORMATS = ("text", "json")


def _dataset(args):
    if getattr(args, "fixtures", None):
        from .orbitdata import load_dataset

        return load_dataset(args.fixtures)
    return None


def _rows(args):
    from .orbitdata import ORBITS, orbit

    ds = _dataset(args)
    if args.orbit:
        return [orbit(args.orbit, ds)], ds
    return list(ds or ORBITS), ds


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_orbits(args) -> int:
    from .hierarchy import positivity
    from .orbitdata import weight_comparison

    rows, _ = _rows(args)
    if args.format == "json":
        out = []
        for o in rows:
            d = o.to_json()
            d["positivity"] = positivity(o).to_json()
            out.append(d)
        _emit(args, "", out if not args.orbit else out[0])
        return 0
    lines = []
    for o in rows:
        lines.append(f"{o.name:7s} codim {o.codim:2d}  {o.stratum:5s}  ({', '.join(o.representative_strings())})")
        if args.orbit:
            lines.append("  U weights:      " + ", ".join(map(str, o.u_weights)))
            lines.append("  V weights:      " + ", ".join(map(str, o.v_weights)))
            lines.append("  normal weights: " + ", ".join(map(str, o.normal_weights)))
            if not weight_comparison(o)["match"]:
                lines.append("  tabulated:      " + ", ".join(map(str, o.printed_normal_weights)))
            p = positivity(o)
            if p:
                phi = ", ".join(f"{k}={v}" for k, v in zip(p.params, p.values))
                lines.append(f"  positive ({p.source}): {phi}")
            else:
                lines.append("  not positive")
            lines.append(f"  generator degrees: {list(o.poincare_degrees)}  determinant image: {o.delta_label}")
    _emit(args, "\n".join(lines), None)
    return 0


def _class_of(name: str, ds):
    from .resolver import class_Amu, orbit_class, solve_class

    if name in ("A_mu", "A", "A_finite"):
        return class_Amu("finite")
    if name in ("A_inf", "A_infinity"):
        return class_Amu("infinity")
    return orbit_class(name) if ds is None else solve_class(name, ds).poly


def _class_names(args):
    rows, ds = _rows(args)
    if args.orbit:
        from .orbitdata import canonical_name

        try:
            return [canonical_name(args.orbit)] if ds is None else [rows[0].name], ds
        except KeyError:
            return [args.orbit], ds
    return ["A_mu", "A_inf"] + [o.name for o in rows if o.codim > 1 and o.name != "0"], ds


def cmd_classes(args) -> int:
    from .resolver import factored_str

    if args.orbit in ("A_mu", "A", "A_finite", "A_inf", "A_infinity"):
        names, ds = [args.orbit], _dataset(args)
    else:
        names, ds = _class_names(args)
    out, lines = [], []
    for n in names:
        p = _class_of(n, ds)
        s = str(p) if args.expanded else factored_str(p)
        out.append({"orbit": n, "degree": p.weighted_degree(), "class": s, "poly": p.to_json()})
        lines.append(s if len(names) == 1 else f"{n:7s} {s}")
    _emit(args, "\n".join(lines), out if len(out) > 1 else out[0])
    return 0


def cmd_degrees(args) -> int:
    from .enumerative import degree

    if args.orbit in ("A_mu", "A", "A_finite", "A_inf", "A_infinity"):
        names, ds = [args.orbit], _dataset(args)
    else:
        names, ds = _class_names(args)
    out = [{"orbit": n, "degree": degree(_class_of(n, ds))} for n in names]
    lines = [str(d["degree"]) if len(out) == 1 else f"{d['orbit']:7s} {d['degree']}" for d in out]
    _emit(args, "\n".join(lines), out if len(out) > 1 else out[0])
    return 0


def cmd_multiplicities(args) -> int:
    from .enumerative import PULLBACK_IDENTITIES, pullback_identities

    targets = [t for t, _, _ in PULLBACK_IDENTITIES]
    if args.target and args.target not in targets:
        raise KeyError(f"unknown cubic class {args.target!r}; known: {', '.join(targets)}")
    res = [(r, p) for r, p in pullback_identities() if not args.target or r.target == args.target]
    lines = []
    for r, printed in res:
        rhs = ""
        for n, c in r.coefficients:
            term = f"{abs(c)}*[{n}]" if not n.startswith(("u1", "v1")) else f"{abs(c)}*{n}"
            rhs += (" - " if c < 0 else " + ") + term if rhs else ("-" if c < 0 else "") + term
        flag = "unique" if r.unique else r.status
        ok = "verified" if r.verified else "NOT verified"
        match = "as tabulated" if r.values() == printed else "differs from tabulated"
        lines.append(f"delta^*[{r.target}] = {rhs}   ({flag}, {ok}, {match})")
    _emit(args, "\n".join(lines), [r.to_json() for r, _ in res])
    return 0


def cmd_hierarchy(args) -> int:
    from .hierarchy import build_hierarchy

    g = build_hierarchy(_dataset(args))
    if args.format == "json":
        print(json.dumps(g.to_json(), indent=2, ensure_ascii=False))
    elif args.format == "dot":
        sys.stdout.write(g.to_dot(covering=not args.all_edges))
    else:
        edges = g.sorted_edges() if args.all_edges else g.covering_edges()
        for a, b in edges:
            print(f"{a} -> {b}  [{g.edge_source[(a, b)]}]")
        for a, b, note in g.flagged:
            print(f"? {a} -> {b}  ({note})")
    return 0


def cmd_invariants(args) -> int:
    from .invariants.nets import Net, corank, nu_net
    from .invariants.semi import semistable_table, stability

    if args.net or args.orbit or args.slice:
        if args.net:
            net = Net.load(args.net)
        elif args.orbit:
            from .orbitdata import orbit

            net = Net(orbit(args.orbit, _dataset(args)).representative)
        else:
            net = nu_net(Fraction(args.slice[0]), Fraction(args.slice[1]))
        s = stability(net)
        r = corank(net)
        data = {"net": net.to_json(), "corank": r, **s.to_json()}
        text = f"net {net}\ncorank {r}\nJ6 = {s.J6}\nJ12 = {s.J12}\n{s.verdict()}"
        _emit(args, text, data)
        return 0
    table = semistable_table()
    lines = ["orbit    J6   J12   k"]
    for n, s in table.items():
        lines.append(f"{n:6s} {str(s.J6):>4s} {str(s.J12):>5s}   {s.k}")
    _emit(args, "\n".join(lines), {n: s.to_json() for n, s in table.items()})
    return 0


def cmd_thom(args) -> int:
    from .thom import tp_orbit

    want_schur = args.format in ("schur", "json")
    r = tp_orbit(args.orbit, args.p, expand=want_schur)
    if args.format == "json":
        print(json.dumps(r.to_json(), indent=2, ensure_ascii=False))
    elif args.format == "roots":
        print(r.roots())
    elif args.format == "elementary":
        print(r.elementary)
    else:
        print(r.schur)
    return 0


def cmd_verify_all(args) -> int:
    from .verify import CHECKS, run_checks

    ids = None
    if args.only:
        ids = {int(x) for x in args.only.split(",") if x.strip()}
        known = {c for c, _, _ in CHECKS}
        if not ids <= known:
            raise KeyError(f"unknown check ids: {sorted(ids - known)}")

    def progress(row):
        if args.timings:
            print(f"  {row.id:2d} {row.status:17s} {row.seconds:6.1f}s  {row.topic}", file=sys.stderr, flush=True)

    report = run_checks(ids, _dataset(args), progress)
    if args.format == "json":
        print(json.dumps(report.to_json(timings=False), indent=2, ensure_ascii=False))
    else:
        print(report.table(timings=False))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixtures", metavar="DIR", help="orbit dataset directory (orbits.json) to use instead of the built-in one")

    p = argparse.ArgumentParser(prog="noc", description="Exact computations on nets of conics.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", parents=[common], help="orbit table")
    s.add_argument("--orbit")
    s.add_argument("--list", action="store_true", help="list all orbits (the default)")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("classes", parents=[common], help="equivariant classes of orbit closures")
    s.add_argument("--orbit")
    s.add_argument("--expanded", action="store_true", help="print fully expanded instead of factored")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("degrees", parents=[common], help="degrees of orbit closures")
    s.add_argument("--orbit")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_degrees)

    s = sub.add_parser("multiplicities", parents=[common], help="pullbacks of plane-cubic classes")
    s.add_argument("--target", help="nu, theta, Omega, A or K")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_multiplicities)

    s = sub.add_parser("hierarchy", parents=[common], help="adjacency graph of orbits")
    s.add_argument("--format", choices=("text", "dot", "json"), default="text")
    s.add_argument("--all-edges", action="store_true", help="include edges implied by transitivity")
    s.set_defaults(func=cmd_hierarchy)

    s = sub.add_parser("invariants", parents=[common], help="J6, J12 and k of a net")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--net", metavar="FILE", help='JSON file {"quadrics": [[6 coefficients] x 3]}')
    g.add_argument("--orbit")
    g.add_argument("--slice", nargs=2, metavar=("C", "G"), help="the slice net nu_{c,g}")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("thom", parents=[common], help="Thom polynomial by localization")
    s.add_argument("--orbit", required=True, help="A_finite, A_infinity or a Sigma^0 orbit")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--format", choices=("schur", "roots", "elementary", "json"), default="schur")
    s.set_defaults(func=cmd_thom)

    s = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.add_argument("--only", metavar="IDS", help="comma-separated check ids")
    s.add_argument("--timings", action="store_true", help="per-check timings on stderr")
    s.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ValueError, OSError, ArithmeticError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"noc {args.command}: {msg}", file=sys.stderr)
        return 1


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # output piped into head and the like
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()


__all__ = ["run", "main", "build_parser"]
