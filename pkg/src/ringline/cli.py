"""``ringline`` command-line front end.

Exit codes: 0 success (or a valid fixture), 1 well-formed input that fails
verification, 2 usage, parse or cap errors, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import verify_classification
from .cliques import enumerate_max_cliques, find_clique_partition, partitions_into
from .errors import BudgetExceededError, CapExceededError, FixtureError, RingSpecError, RinglineError
from .fixtures import load_fixture, verify_fixture
from .grassmannian import (Parallelism, analyze_partition_pairs, check_parallelism,
                           enumerate_parallelisms, enumerate_spreads, gaussian_binomial)
from .io import export_graph
from .isomorphism import is_isomorphic
from .orbits import classify_orbits
from .pline import distant_graph, projective_line, radical_projection
from .ring import FiniteRing, jacobson_radical, make_ring, radical_signature, units

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def parse_ring_spec(text: str) -> FiniteRing:
    """Build a ring from its expression; the ring's label is the normalized spec."""
    return make_ring(text)


def _factors(sig):
    return " x ".join(f"M{n}(F({q}))" if n > 1 else f"F({q})" for n, q in sig) or "0"


def _out(text=""):
    sys.stdout.write(text + "\n")


def cmd_ring_info(args):
    R = parse_ring_spec(args.spec)
    J = jacobson_radical(R)
    _out(f"ring: {R.label}")
    _out(f"size: {R.size}")
    _out(f"units: {len(units(R))}")
    _out(f"jacobson radical size: {len(J)}")
    if len(J) <= 16:
        _out("jacobson radical: {" + ", ".join(R.element_label(x) for x in J.sorted_members()) + "}")
    _out(f"R/J: {_factors(radical_signature(R))}")
    _out(f"local: {'yes' if len(radical_signature(R)) == 1 and radical_signature(R)[0][0] == 1 else 'no'}")
    return EXIT_OK


def cmd_pline(args):
    R = parse_ring_spec(args.spec)
    pts = projective_line(R)
    g = distant_graph(R)
    phi = radical_projection(R)
    _out(f"ring: {R.label}")
    _out(f"points: {len(pts)}")
    _out(f"degree: {g.regular_degree()}")
    _out(f"points of P(R/J): {len(phi.base_points)}")
    _out(f"fiber size: {len(pts) // len(phi.base_points)}")
    _out(f"diameter: {g.diameter()}")
    if args.points:
        for p in pts:
            _out(f"  {p.index}: {p.label()}")
    return EXIT_OK


def cmd_graph_export(args):
    R = parse_ring_spec(args.spec)
    data = export_graph(distant_graph(R), args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.flush()
        sys.stdout.buffer.write(data if args.format != "g6" else data + b"\n")
        sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_iso(args):
    A, B = parse_ring_spec(args.spec_a), parse_ring_spec(args.spec_b)
    perm = is_isomorphic(distant_graph(A), distant_graph(B))
    verdict = "isomorphic" if perm is not None else "not isomorphic"
    _out(f"G({A.label}) and G({B.label}): {verdict}")
    if perm is not None and args.witness:
        _out("witness: " + " ".join(map(str, perm)))
    return EXIT_OK


def _print_partition(R, part):
    pts = projective_line(R)
    for block in part:
        _out("  {" + ", ".join(pts[v].label() for v in block) + "}")


def cmd_partition(args):
    R = parse_ring_spec(args.spec)
    g = distant_graph(R)
    if not args.enumerate:
        part = find_clique_partition(g, node_limit=args.budget)
        if part is None:
            _out(f"G({R.label}) has no partition into maximum cliques")
            return EXIT_INVALID
        _out(f"G({R.label}): {len(part)} blocks of size {part.block_sizes[0]}")
        _print_partition(R, part)
        return EXIT_OK
    omega, cliques = enumerate_max_cliques(g)
    found = 0
    for part in partitions_into(g, cliques, limit=args.limit, node_limit=args.budget):
        found += 1
        _out(f"partition {found}:")
        _print_partition(R, part)
    _out(f"partitions found: {found}" + (f" (limit {args.limit})" if args.limit else ""))
    return EXIT_OK


def cmd_spreads(args):
    spreads = enumerate_spreads(args.n, args.q, node_budget=args.budget)
    _out(f"G({args.n},{2 * args.n},{args.q}): {gaussian_binomial(2 * args.n, args.n, args.q)} "
         f"subspaces, {len(spreads)} spreads")
    if not args.count_only:
        for k, s in enumerate(spreads, 1):
            _out(f"  {k}: " + " ".join(X.label() for X in s))
    return EXIT_OK


def cmd_parallelisms(args):
    pars = enumerate_parallelisms(args.n, args.q, node_budget=args.budget)
    _out(f"parallelisms of V({2 * args.n},{args.q}): {len(pars)}")
    if not args.count_only:
        for k, p in enumerate(pars, 1):
            _out(f"parallelism {k}:")
            for s in p:
                _out("  " + " ".join(X.label() for X in s))
    return EXIT_OK


def cmd_classify_orbits(args):
    pars = enumerate_parallelisms(args.n, args.q, node_budget=args.budget)
    orbits = classify_orbits(pars, args.n, args.q)
    _out(f"|GL({2 * args.n},{args.q})| = {orbits.group_order}")
    _out(f"parallelisms: {len(pars)}, orbits: {len(orbits.orbits)}")
    for lab, orb in zip(orbits.labels, orbits.orbits):
        _out(f"  orbit {lab}: {len(orb)} (first: {orb[0] + 1})")
    return EXIT_OK


def cmd_analyze(args):
    fx = load_fixture(args.fixture, args.n, args.q)
    ok, msg = check_parallelism(fx.spreads, args.n, args.q)
    if not ok:
        _out(f"invalid parallelism: {msg}")
        return EXIT_INVALID
    report = analyze_partition_pairs(Parallelism(tuple(tuple(s) for s in fx.spreads)),
                                     args.n, args.q)
    names = fx.names
    for (i, j), size in sorted(report.pair_clique_size.items()):
        _out(f"pair {names[i]}-{names[j]}: largest cross clique {size}, "
             f"{len(report.pair_cliques[(i, j)])} of them")
    for t, kind in sorted(report.triple_kinds.items()):
        _out(f"triple {'-'.join(names[x] for x in t)}: {kind}")
    _out("lines: " + " ".join("{" + ",".join(names[x] for x in t) + "}" for t in report.lines))
    _out(f"projective plane: {'yes' if report.is_fano else 'no'}")
    return EXIT_OK


def cmd_catalog(args):
    report = verify_classification(args.p, args.k)
    _out(report.to_json() if args.json else report.to_text().rstrip("\n"))
    return EXIT_OK


def cmd_verify_fixture(args):
    v = verify_fixture(args.path, args.n, args.q, node_budget=args.budget)
    if args.json:
        from dataclasses import asdict
        doc = asdict(v)
        doc["pair_clique_sizes"] = {str(k): c for k, c in sorted(v.pair_clique_sizes.items())}
        doc["pair_clique_counts"] = {str(k): c for k, c in sorted(v.pair_clique_counts.items())}
        doc["triple_kinds"] = dict(sorted(v.triple_kinds.items()))
        _out(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _out(f"valid parallelism: {'yes' if v.valid else 'no'}" + ("" if v.valid else f" ({v.message})"))
        if v.valid:
            _out(f"spreads: {v.spread_count}")
            sizes = ", ".join(f"{c} pairs with cross clique {s}"
                              for s, c in sorted(v.pair_clique_sizes.items()))
            counts = ", ".join(f"{c} pairs with {k} such clique{'s' if k != 1 else ''}"
                               for k, c in sorted(v.pair_clique_counts.items()))
            _out(f"pairs: {sizes}; {counts}")
            _out("triples: " + ", ".join(f"{c} {k}" for k, c in sorted(v.triple_kinds.items())))
            _out(f"fano: {'pass' if v.fano else 'fail'}")
            _out(f"orbit: {v.orbit if v.orbit else 'unknown (enumeration out of budget)'}"
                 + (f" of sizes {v.orbit_sizes}" if v.orbit_sizes else ""))
    return EXIT_OK if v.valid else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ringline",
                                 description="Projective lines over finite rings and their distant graphs.")
    ap.add_argument("--threads", type=int, default=1, metavar="N",
                    help="worker cap (results do not depend on it)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    def budget(p, default=None):
        p.add_argument("--budget", type=int, default=default, metavar="N",
                       help="search node budget")

    p = add("ring-info", cmd_ring_info, "size, units, radical and R/J of a ring")
    p.add_argument("spec")
    p = add("pline", cmd_pline, "projective line summary")
    p.add_argument("spec")
    p.add_argument("--points", action="store_true", help="list the points")
    p = add("graph-export", cmd_graph_export, "write the distant graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=["g6", "dot", "json"], required=True)
    p.add_argument("-o", "--output")
    p = add("iso", cmd_iso, "test two distant graphs for isomorphism")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.add_argument("--witness", action="store_true", help="print the vertex map")
    p = add("partition", cmd_partition, "partition into maximum cliques")
    p.add_argument("spec")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--limit", type=int)
    budget(p, 5_000_000)
    for name, fn, help_ in (("spreads", cmd_spreads, "enumerate spreads of V(2n,q)"),
                            ("parallelisms", cmd_parallelisms, "enumerate parallelisms of V(2n,q)"),
                            ("classify-orbits", cmd_classify_orbits, "GL(2n,q) orbits of parallelisms")):
        p = add(name, fn, help_)
        p.add_argument("n", type=int)
        p.add_argument("q", type=int)
        if name != "classify-orbits":
            p.add_argument("--count-only", action="store_true")
        budget(p)
    for name, fn, arg, help_ in (("analyze", cmd_analyze, "fixture", "pair and triple analysis"),
                                 ("verify-fixture", cmd_verify_fixture, "path", "check a fixture")):
        p = add(name, fn, help_)
        p.add_argument(arg, help="fixture file, or table1 / table2 for the bundled ones")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        if name == "verify-fixture":
            p.add_argument("--json", action="store_true")
            budget(p, 2_000_000)
    p = add("catalog", cmd_catalog, "classification report for order p^k")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        sys.stderr.write("ringline: --threads must be positive\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"ringline: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (RingSpecError, FixtureError, CapExceededError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"ringline: {exc}\n")
        return EXIT_USAGE
    except RinglineError as exc:
        sys.stderr.write(f"ringline: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
