"""Full analysis pipeline producing one report per graph.

The report aggregates the graph summary, the normality verdict and, for
normal rings, the prime inventory, the class group presentation, the
canonical class, the Gorenstein and pseudo-Gorenstein verdicts and the
canonical-module generators.  Everything downstream of normality is None,
with the verdict's reason explaining why, when the ring is not normal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from . import canonical, divisor, oracle, primes
from .cone import facet_support_forms, semigroup_generators
from .errors import OmegaBoundError
from .graphs import (
    Graph,
    bipartition,
    connected_components,
    is_unmixed,
    is_unicyclic,
    minimal_vertex_covers,
    recognize_whiskered_cycle,
)
from .normality import NormalityVerdict, is_normal, p0_supporting_check


@dataclass
class AnalysisReport:
    graph: dict[str, Any]
    normality: dict[str, Any]
    primes: dict[str, Any] | None
    class_group: dict[str, Any] | None
    canonical_class: dict[str, Any] | None
    gorenstein: dict[str, Any] | None
    pseudo_gorenstein: dict[str, Any] | None
    omega_generators: dict[str, Any] | None
    verification: dict[str, Any] | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "normality": self.normality,
            "primes": self.primes,
            "class_group": self.class_group,
            "canonical_class": self.canonical_class,
            "gorenstein": self.gorenstein,
            "pseudo_gorenstein": self.pseudo_gorenstein,
            "omega_generators": self.omega_generators,
            "verification": self.verification,
        }


def _graph_summary(g: Graph) -> dict[str, Any]:
    comps = connected_components(g)
    bip = bipartition(g)
    shape = recognize_whiskered_cycle(g)
    unmixed, sizes = is_unmixed(g)
    return {
        "n": g.n,
        "edge_count": len(g.edges),
        "edges": [list(e) for e in g.edges],
        "components": [list(c) for c in comps],
        "connected": len(comps) == 1,
        "bipartite": bip.is_bipartite,
        "bipartition": (
            [sorted(bip.parts[0]), sorted(bip.parts[1])] if bip.is_bipartite else None
        ),
        "unicyclic": is_unicyclic(g),
        "unmixed": unmixed,
        "min_cover_sizes": list(sizes),
        "whiskered_cycle": (
            None
            if shape is None
            else {
                "k": shape.k,
                "whisker_counts": list(shape.whisker_counts),
                "vertex_map": list(shape.vertex_map),
            }
        ),
    }


def _normality_summary(verdict: NormalityVerdict) -> dict[str, Any]:
    return {
        "normal": verdict.normal,
        "reason": verdict.reason,
        "witness": (
            None
            if verdict.witness is None
            else [list(c) for c in verdict.witness]
        ),
    }


def _prime_entry(p: primes.MonomialPrime, k: primes.PrimeKind) -> dict[str, Any]:
    return {
        "form": list(p.form),
        "kind": k.kind,
        "cover": list(k.cover) if k.cover is not None else None,
        "vertex": k.vertex,
        "contains_t": p.contains_t,
    }


def analyze(
    g: Graph,
    omega_max_deg: int | None = None,
    include_canonical: bool = True,
    verify: bool = False,
) -> AnalysisReport:
    graph_summary = _graph_summary(g)
    verdict = is_normal(g)
    p0_supporting_check(g)
    normality_summary = _normality_summary(verdict)

    report = AnalysisReport(
        graph=graph_summary,
        normality=normality_summary,
        primes=None,
        class_group=None,
        canonical_class=None,
        gorenstein=None,
        pseudo_gorenstein=None,
        omega_generators=None,
        verification=None,
    )

    gens = semigroup_generators(g)
    if verdict.normal:
        facets = facet_support_forms([pt for _, pt in gens])
        inventory = primes.primes_from_facets(g, facets)
        by_kind: dict[str, int] = {}
        for _, k in inventory:
            by_kind[k.kind] = by_kind.get(k.kind, 0) + 1
        prime_info: dict[str, Any] = {
            "count": len(inventory),
            "containing_t": sum(1 for p, _ in inventory if p.contains_t),
            "by_kind": by_kind,
            "list": [_prime_entry(p, k) for p, k in inventory],
        }
        if graph_summary["connected"]:
            prediction = primes.predicted_prime_set(g)
            actual = frozenset(k.key() for _, k in inventory)
            prime_info["prediction_tag"] = prediction.tag
            prime_info["prediction_exact"] = prediction.exact
            prime_info["prime_set_equals_prediction"] = actual == prediction.kinds
        else:
            prime_info["prediction_tag"] = None
            prime_info["prediction_exact"] = None
            prime_info["prime_set_equals_prediction"] = None
        report.primes = prime_info

        t_primes = [p for p, _ in inventory if p.contains_t]
        presentation = divisor.class_group(t_primes)
        report.class_group = {
            "r": presentation.r,
            "relation": list(presentation.relation),
            "rank": presentation.rank,
        }
        kappa = divisor.canonical_class(presentation)
        report.canonical_class = {
            "coefficients": list(kappa.coeffs),
            "is_zero": kappa.is_zero,
        }
        gor = divisor.gorenstein_from_primes(g, inventory)
        report.gorenstein = {
            "gorenstein": gor.gorenstein,
            "factor": gor.factor,
            "fast_paths": dict(gor.fast_paths),
        }

        if include_canonical:
            bound = omega_max_deg if omega_max_deg is not None else g.n + 2
            try:
                pg = canonical.is_pseudo_gorenstein(g, bound, facets=facets)
                report.pseudo_gorenstein = {
                    "pseudo_gorenstein": pg.pseudo_gorenstein,
                    "initial_degree": pg.initial_degree,
                    "initial_dimension": pg.initial_dimension,
                }
            except OmegaBoundError as exc:
                report.pseudo_gorenstein = {
                    "pseudo_gorenstein": None,
                    "error": str(exc),
                }
            omega = canonical.omega_generators(g, bound, facets=facets)
            report.omega_generators = {
                "max_degree": omega.max_t_deg,
                "truncated": omega.truncated,
                "generators": [
                    {"exponents": list(m.exps), "t_degree": m.t_deg}
                    for m in omega.generators
                ],
            }

    if verify:
        report.verification = run_verification(g, normal=verdict.normal)
    return report


def run_verification(g: Graph, normal: bool) -> dict[str, Any]:
    """Oracle cross-checks for one instance, sized to stay interactive.

    The facet exhaustion is skipped (with a note) when the subset count is
    unreasonably large; covers are always checked; the primality check runs
    on the facet primes of small normal instances.
    """
    checks: dict[str, Any] = {}
    gens = semigroup_generators(g)
    n_subsets = math.comb(len(gens), g.n)
    if n_subsets <= 200_000:
        rep = oracle.compare_facets(g)
        checks["facets"] = {"agreement": rep.agreement, "discrepancy": rep.discrepancy}
    else:
        checks["facets"] = {
            "agreement": None,
            "discrepancy": f"skipped: {n_subsets} subsets exceed the brute-force budget",
        }
    rep = oracle.compare_minimal_covers(g)
    checks["minimal_covers"] = {
        "agreement": rep.agreement,
        "discrepancy": rep.discrepancy,
    }
    if normal and g.n <= 7:
        results = []
        for p, k in primes.height_one_primes(g):
            ok = oracle.brute_prime_test(p.generator_faces, gens, 3)
            results.append({"form": list(p.form), "kind": k.kind, "closed": ok})
        checks["prime_complements_closed"] = {
            "agreement": all(r["closed"] for r in results),
            "primes": results,
        }
    else:
        checks["prime_complements_closed"] = {
            "agreement": None,
            "discrepancy": "skipped: needs a normal ring and n <= 7",
        }
    return checks
