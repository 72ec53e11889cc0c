"""Command-line front end.

Coloured-root syntax: ``1,1,0:2`` is the root with those coefficients in
colour 2 (``:1`` may be omitted); ``-e2`` is the negative of the second
simple root.  Pass ``--`` before positional root arguments so that the
leading dash is not parsed as a flag.

Exit codes: 0 success / all checks pass, 1 verification failure or
internal error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .cluster_complex import (build_graph, complex_to_json, enumerate_facets,
                              verify_complement_counts, verify_facet_sizes,
                              verify_parabolic_restriction)
from .coloured_roots import (ColouredRoot, check_coloured, compatibility_degree,
                             compatible_combinatorial, coloured_ground_set,
                             rotation_Rm)
from .derived import derived_category
from .orbit_category import compatible_categorical, mcluster_category
from .root_system import RootSystem, build_root_system, parse_type


class UsageError(ValueError):
    pass


def parse_coloured_root(rs: RootSystem, m: int, text: str) -> ColouredRoot:
    text = text.strip()
    try:
        if text.startswith("-e"):
            i = int(text[2:])
            if not 1 <= i <= rs.n:
                raise UsageError(f"negative simple index {i} out of range 1..{rs.n}")
            return ColouredRoot(rs.negative_simple(i - 1), 1)
        colour = 1
        if ":" in text:
            text, colour_text = text.rsplit(":", 1)
            colour = int(colour_text)
        coeffs = tuple(int(c) for c in text.split(","))
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(f"cannot parse coloured root {text!r}: {exc}") from None
    if len(coeffs) != rs.n:
        raise UsageError(f"expected {rs.n} coefficients, got {len(coeffs)}")
    x = ColouredRoot(coeffs, colour)
    try:
        check_coloured(rs, m, x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return x


def _root_system(args: argparse.Namespace) -> RootSystem:
    try:
        return build_root_system(parse_type(args.type))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    if args.oracle == "both":
        g_comb = build_graph(rs, args.m, "combinatorial")
        g_cat = build_graph(rs, args.m, "categorical")
        agree = g_comb.adjacency == g_cat.adjacency
        data = complex_to_json(rs, args.m, "combinatorial", g=g_comb)
        data["oracle"] = "both"
        data["oracles_agree"] = agree
        _write(json.dumps(data, indent=2) + "\n", args.out)
        if not agree:
            print("oracle disagreement detected", file=sys.stderr)
            return 1
        return 0
    data = complex_to_json(rs, args.m, args.oracle)
    _write(json.dumps(data, indent=2) + "\n", args.out)
    return 0


def cmd_compat(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    x = parse_coloured_root(rs, args.m, args.x)
    y = parse_coloured_root(rs, args.m, args.y)
    comb = compatible_combinatorial(rs, args.m, x, y)
    cat = compatible_categorical(rs, args.m, x, y)
    line = (f"combinatorial: {'compatible' if comb else 'incompatible'}  "
            f"categorical: {'compatible' if cat else 'incompatible'}")
    if args.m == 1:
        line += f"  degree: {compatibility_degree(rs, x.root, y.root)}"
    print(line)
    if comb != cat:
        print("oracle disagreement detected", file=sys.stderr)
        return 1
    return 0


def cmd_ext(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    cat = mcluster_category(rs, args.m)
    x = parse_coloured_root(rs, args.m, args.x)
    y = parse_coloured_root(rs, args.m, args.y)
    X, Y = cat.W(x), cat.W(y)
    dims = [cat.ext(X, Y, i) for i in range(1, args.m + 1)]
    for i, d in enumerate(dims, start=1):
        print(f"Ext^{i}({X}, {Y}) = {d}")
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    x = parse_coloured_root(rs, args.m, args.x)
    start = x
    steps = [x]
    while True:
        x = rotation_Rm(rs, args.m, x)
        if x == start:
            break
        steps.append(x)
    print(" -> ".join(str(s) for s in steps) + " -> (cycle)")
    return 0


def cmd_export_zq(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    try:
        lo, hi = (int(p) for p in args.window.split(":"))
    except ValueError:
        raise UsageError(f"cannot parse window {args.window!r}; expected LO:HI") from None
    _write(derived_category(rs).export_zq_dot(lo, hi), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    rs = _root_system(args)
    m = args.m
    cat = mcluster_category(rs, m)
    failures = 0

    def record(name: str, ok: bool, detail: str) -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        if not ok:
            failures += 1

    ground = coloured_ground_set(rs, m)
    g_comb = build_graph(rs, m, "combinatorial")
    g_cat = build_graph(rs, m, "categorical")
    record("oracle equivalence", g_comb.adjacency == g_cat.adjacency,
           f"{len(ground)} nodes, {len(ground) * (len(ground) + 1) // 2} pairs")

    facets = enumerate_facets(g_comb)
    sizes = verify_facet_sizes(facets, rs.n)
    record("facet sizes = rank", sizes.passed, f"{len(facets)} facets")

    comps = verify_complement_counts(g_comb, facets)
    record(f"complement count = {m + 1}", comps.passed,
           f"{comps.checked} almost-complete sets")

    parab_ok, parab_pairs = True, 0
    for drop in range(rs.n if rs.n > 1 else 0):
        keep = [v for v in range(rs.n) if v != drop]
        rep = verify_parabolic_restriction(rs, m, keep)
        parab_ok &= rep.passed
        parab_pairs += rep.checked
    record("parabolic restriction", parab_ok, f"{parab_pairs} supported pairs")

    rot_ok = all(cat.shift_matches_rotation(x) for x in ground)
    record("rotation matches shift", rot_ok, f"{len(ground)} coloured roots")

    objs = cat.objects()
    sym_ok = all(cat.ext_symmetry(X, Y, i)
                 for X in objs for Y in objs for i in range(1, m + 1))
    record("Ext dimension symmetry", sym_ok,
           f"{len(objs) ** 2 * m} (pair, degree) instances")

    if m == 1:
        d = derived_category(rs)
        deg_ok = True
        almost = [b for b in rs.positive_roots] + [rs.negative_simple(i) for i in range(rs.n)]
        for a in almost:
            for b in almost:
                if cat.ext(d.V(a), d.V(b), 1) != compatibility_degree(rs, a, b):
                    deg_ok = False
        record("Ext^1 = compatibility degree", deg_ok, f"{len(almost) ** 2} ordered pairs")

    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcluster", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, need_m: bool = True) -> None:
        p.add_argument("--type", required=True, help="Dynkin type, e.g. A3, D4, E6")
        if need_m:
            p.add_argument("--m", type=int, default=1, help="number of colours (>= 1)")

    p = sub.add_parser("enumerate", help="enumerate facets and write the complex as JSON")
    common(p)
    p.add_argument("--oracle", choices=["combinatorial", "categorical", "both"],
                   default="combinatorial")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("compat", help="compatibility verdict for a pair of coloured roots")
    common(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_compat)

    p = sub.add_parser("ext", help="orbit Ext dimensions for a pair of coloured roots")
    common(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_ext)

    p = sub.add_parser("orbit", help="print the rotation orbit of a coloured root")
    common(p)
    p.add_argument("x")
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("export-zq", help="DOT export of the translation quiver")
    common(p, need_m=False)
    p.add_argument("--window", default="0:0", help="coarse-degree range LO:HI")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(fn=cmd_export_zq)

    p = sub.add_parser("verify", help="run all theorem/lemma suites for one instance")
    common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "m", 1) < 1:
        print("error: m must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
