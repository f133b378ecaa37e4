"""Command line surface.

Subcommands:

* ``analyze <file>``: run the full pipeline on an edge-list file and print
  a text or JSON report.
* ``family <name> <params>``: print the edge list of a named family.
* ``sweep cycle <kmin> <kmax>`` / ``sweep whiskered <k> <max_total>``:
  one report row per instance, CSV or JSON.

Exit codes: 0 success, 2 validation error, 3 when the input ring is not
normal and a normality-requiring sub-report (--omega-max-deg or --verify)
was explicitly requested.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Iterable

from . import families
from .analysis import AnalysisReport, analyze
from .errors import GraphFormatError
from .graphs import Graph, parse_graph

SWEEP_COLUMNS = [
    "instance",
    "n",
    "edge_count",
    "bipartite",
    "unicyclic",
    "normal",
    "unmixed",
    "min_cover_sizes",
    "primes_containing_t",
    "class_group_rank",
    "gorenstein",
    "gorenstein_factor",
    "pseudo_gorenstein",
    "omega_initial_degree",
    "prime_set_equals_prediction",
]


def _json_dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, separators=(",", ": "))


def _render_text(report: AnalysisReport) -> str:
    d = report.to_dict()
    lines = []
    g = d["graph"]
    lines.append(f"vertices: {g['n']}")
    lines.append(f"edges ({g['edge_count']}): " + " ".join(f"{u}-{v}" for u, v in g["edges"]))
    lines.append(f"components: {g['components']}")
    lines.append(f"bipartite: {g['bipartite']}")
    lines.append(f"unicyclic: {g['unicyclic']}")
    lines.append(f"unmixed: {g['unmixed']} (cover sizes {g['min_cover_sizes']})")
    if g["whiskered_cycle"] is not None:
        w = g["whiskered_cycle"]
        lines.append(
            f"whiskered cycle: k={w['k']} counts={tuple(w['whisker_counts'])}"
        )
    nn = d["normality"]
    lines.append(f"normal: {nn['normal']} ({nn['reason']})")
    if nn["witness"]:
        lines.append(f"  witness cycles: {nn['witness'][0]} | {nn['witness'][1]}")
    if d["primes"] is None:
        lines.append("primes/class group/canonical data: skipped "
                      f"(not normal: {nn['reason']})")
        return "\n".join(lines) + "\n"
    p = d["primes"]
    lines.append(
        f"height-one monomial primes: {p['count']} "
        f"({p['containing_t']} containing t), kinds {p['by_kind']}"
    )
    for entry in p["list"]:
        tag = entry["kind"]
        if entry["cover"] is not None:
            tag += f" C={entry['cover']}"
        if entry["vertex"] is not None:
            tag += f" i={entry['vertex']}"
        lines.append(f"  form {entry['form']}  [{tag}]")
    if p["prime_set_equals_prediction"] is not None:
        lines.append(
            f"prediction ({p['prediction_tag']}, exact={p['prediction_exact']}): "
            f"matches={p['prime_set_equals_prediction']}"
        )
    cg = d["class_group"]
    lines.append(
        f"class group: free of rank {cg['rank']} "
        f"(r={cg['r']}, relation {cg['relation']})"
    )
    kappa = d["canonical_class"]
    lines.append(
        f"canonical class: {kappa['coefficients']} (zero: {kappa['is_zero']})"
    )
    gor = d["gorenstein"]
    lines.append(
        f"gorenstein: {gor['gorenstein']}"
        + (f" (factor {gor['factor']})" if gor["factor"] is not None else "")
        + (f" fast-paths {gor['fast_paths']}" if gor["fast_paths"] else "")
    )
    if d["pseudo_gorenstein"] is not None:
        pg = d["pseudo_gorenstein"]
        if pg.get("pseudo_gorenstein") is None:
            lines.append(f"pseudo-gorenstein: undetermined ({pg.get('error')})")
        else:
            lines.append(
                f"pseudo-gorenstein: {pg['pseudo_gorenstein']} "
                f"(initial degree {pg['initial_degree']}, "
                f"dimension {pg['initial_dimension']})"
            )
    if d["omega_generators"] is not None:
        og = d["omega_generators"]
        lines.append(
            f"canonical module generators up to t-degree {og['max_degree']} "
            f"(truncated list):"
        )
        for m in og["generators"]:
            lines.append(f"  x^{m['exponents']} t^{m['t_degree']}")
    if d["verification"] is not None:
        lines.append("verification:")
        for name, res in d["verification"].items():
            lines.append(f"  {name}: agreement={res.get('agreement')}")
            if res.get("discrepancy"):
                lines.append(f"    {res['discrepancy']}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            g = parse_graph(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = analyze(
        g,
        omega_max_deg=args.omega_max_deg,
        include_canonical=not args.no_canonical,
        verify=args.verify,
    )
    if args.json:
        print(_json_dumps(report.to_dict()))
    else:
        print(_render_text(report), end="")
    if not report.normality["normal"] and (
        args.omega_max_deg is not None or args.verify
    ):
        return 3
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        g = _build_family(args.name, args.params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(families.edge_list_text(g), end="")
    return 0


def _build_family(name: str, params: list[str]) -> Graph:
    if name == "cycle":
        if len(params) != 1:
            raise ValueError("cycle takes one parameter: k")
        return families.cycle(int(params[0]))
    if name == "path":
        if len(params) != 1:
            raise ValueError("path takes one parameter: k")
        return families.path(int(params[0]))
    if name == "complete_bipartite":
        if len(params) != 2:
            raise ValueError("complete_bipartite takes two parameters: m n")
        return families.complete_bipartite(int(params[0]), int(params[1]))
    if name == "whiskered":
        if len(params) == 1 and "," in params[0]:
            counts = [int(x) for x in params[0].split(",")]
        else:
            counts = [int(x) for x in params]
        if not counts:
            raise ValueError("whiskered takes the whisker counts a_1,...,a_k")
        return families.whiskered_cycle(counts)
    raise ValueError(f"unknown family {name!r}")


def _sweep_instances(args: argparse.Namespace) -> Iterable[tuple[str, Graph]]:
    if args.family == "cycle":
        for k in range(args.start, args.stop + 1):
            yield f"cycle_{k}", families.cycle(k)
    else:
        k, max_total = args.start, args.stop
        seen = set()
        for counts in _compositions(k, max_total):
            canon = _canonical_counts(counts)
            if canon in seen:
                continue
            seen.add(canon)
            name = "whiskered_" + ",".join(str(c) for c in canon)
            yield name, families.whiskered_cycle(list(canon))


def _compositions(k: int, max_total: int):
    def rec(prefix, remaining_slots, budget):
        if remaining_slots == 0:
            yield tuple(prefix)
            return
        for a in range(budget + 1):
            prefix.append(a)
            yield from rec(prefix, remaining_slots - 1, budget - a)
            prefix.pop()

    yield from rec([], k, max_total)


def _canonical_counts(counts: tuple[int, ...]) -> tuple[int, ...]:
    k = len(counts)
    best = None
    for seq in (list(counts), list(counts)[::-1]):
        for shift in range(k):
            cand = tuple(seq[shift:] + seq[:shift])
            if best is None or cand < best:
                best = cand
    return best


def _sweep_row(name: str, g: Graph) -> dict[str, Any]:
    report = analyze(g).to_dict()
    graph, primes_d = report["graph"], report["primes"]
    row: dict[str, Any] = {
        "instance": name,
        "n": graph["n"],
        "edge_count": graph["edge_count"],
        "bipartite": graph["bipartite"],
        "unicyclic": graph["unicyclic"],
        "normal": report["normality"]["normal"],
        "unmixed": graph["unmixed"],
        "min_cover_sizes": "+".join(str(s) for s in graph["min_cover_sizes"]),
        "primes_containing_t": None,
        "class_group_rank": None,
        "gorenstein": None,
        "gorenstein_factor": None,
        "pseudo_gorenstein": None,
        "omega_initial_degree": None,
        "prime_set_equals_prediction": None,
    }
    if primes_d is not None:
        row["primes_containing_t"] = primes_d["containing_t"]
        row["class_group_rank"] = report["class_group"]["rank"]
        row["gorenstein"] = report["gorenstein"]["gorenstein"]
        row["gorenstein_factor"] = report["gorenstein"]["factor"]
        pg = report["pseudo_gorenstein"]
        if pg is not None and pg.get("pseudo_gorenstein") is not None:
            row["pseudo_gorenstein"] = pg["pseudo_gorenstein"]
            row["omega_initial_degree"] = pg["initial_degree"]
        row["prime_set_equals_prediction"] = primes_d["prime_set_equals_prediction"]
    return row


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = [_sweep_row(name, g) for name, g in _sweep_instances(args)]
    if args.json:
        print(_json_dumps(rows))
    else:
        print(",".join(SWEEP_COLUMNS))
        for row in rows:
            print(",".join("" if row[c] is None else str(row[c]) for c in SWEEP_COLUMNS))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgraph",
        description=(
            "Divisorial invariants of the monomial algebra generated by t, "
            "x_i t and x_i x_j t for a finite simple graph."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full report for one edge-list file")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--json", action="store_true", help="JSON instead of text")
    p_analyze.add_argument(
        "--verify", action="store_true", help="run brute-force oracle cross-checks"
    )
    p_analyze.add_argument(
        "--omega-max-deg",
        type=int,
        default=None,
        metavar="B",
        help="t-degree bound for canonical module generators (default n+2)",
    )
    p_analyze.add_argument(
        "--no-canonical",
        action="store_true",
        help="skip canonical-module slice enumeration",
    )
    p_analyze.set_defaults(func=_cmd_analyze)

    p_family = sub.add_parser("family", help="print the edge list of a named family")
    p_family.add_argument(
        "name", choices=["cycle", "whiskered", "complete_bipartite", "path"]
    )
    p_family.add_argument("params", nargs="+")
    p_family.set_defaults(func=_cmd_family)

    p_sweep = sub.add_parser("sweep", help="one report row per family instance")
    p_sweep.add_argument("family", choices=["cycle", "whiskered"])
    p_sweep.add_argument(
        "start", type=int, help="cycle: smallest k; whiskered: cycle length k"
    )
    p_sweep.add_argument(
        "stop", type=int, help="cycle: largest k; whiskered: max total whiskers"
    )
    p_sweep.add_argument("--json", action="store_true", help="JSON instead of CSV")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
