"""Normality of the graph's semigroup ring, decided combinatorially and
cross-checked by a bounded brute-force saturation oracle.

The ring is normal exactly when at most one connected component is
non-bipartite and that component satisfies the odd cycle condition.  The
oracle independently verifies saturation up to a t-degree bound: every
lattice point of the cone must be a sum of generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import (
    evaluate,
    facet_support_forms,
    lattice_points_of_slice,
    semigroup_generators,
    zero_prime_form,
)
from .errors import InvariantViolationError
from .graphs import Graph, _cycles_linked, connected_components, induced_odd_cycles


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    reason: str  # bipartite-all | single-odd-component-OCC | multiple-odd-components | OCC-failure
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.normal


def is_normal(g: Graph) -> NormalityVerdict:
    """Decide normality: at most one non-bipartite component, and that
    component satisfies the odd cycle condition.

    A failing verdict carries a witness pair of vertex-disjoint induced odd
    cycles with no edge between them.
    """
    comps = connected_components(g)
    cycles = induced_odd_cycles(g)
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    cycles_by_comp: dict[int, list[tuple[int, ...]]] = {}
    for c in cycles:
        cycles_by_comp.setdefault(comp_of[c[0]], []).append(c)

    odd_comps = sorted(cycles_by_comp)
    if not odd_comps:
        return NormalityVerdict(True, "bipartite-all")
    if len(odd_comps) > 1:
        witness = (cycles_by_comp[odd_comps[0]][0], cycles_by_comp[odd_comps[1]][0])
        return NormalityVerdict(False, "multiple-odd-components", witness)
    comp_cycles = cycles_by_comp[odd_comps[0]]
    for i in range(len(comp_cycles)):
        for j in range(i + 1, len(comp_cycles)):
            if not _cycles_linked(g, comp_cycles[i], comp_cycles[j]):
                return NormalityVerdict(
                    False, "OCC-failure", (comp_cycles[i], comp_cycles[j])
                )
    return NormalityVerdict(True, "single-odd-component-OCC")


def p0_supporting_check(g: Graph) -> bool:
    """Evaluate the form (-1,...,-1,2) on every generator and confirm the
    values 2 / 1 / 0 on the empty face, vertices and edges.

    This certifies, unconditionally (no normality needed), that the ideal
    generated by t and all x_i*t is a monomial prime: its monomials are
    exactly those with positive value under a supporting form.
    """
    form = zero_prime_form(g.n)
    for label, point in semigroup_generators(g):
        expected = 2 - len(label)
        if evaluate(form, point) != expected:
            raise InvariantViolationError(
                f"form {form} evaluates wrongly on face {label}"
            )
    return True


@dataclass(frozen=True)
class SaturationReport:
    """Outcome of the bounded saturation check.

    ``ok`` means every cone lattice point with t-degree <= ``max_t_deg``
    is a sum of generators; otherwise ``witness`` is the first gap point
    found, as (exponents, t_degree).  A passing report is only evidence up
    to the bound, never a proof of normality.
    """

    ok: bool
    max_t_deg: int
    witness: tuple[tuple[int, ...], int] | None = None


def normality_oracle(g: Graph, max_t_deg: int) -> SaturationReport:
    """Brute-force saturation check by dynamic programming over t-degree.

    Sums of exactly b generators are accumulated degree by degree and
    compared against the lattice points of the cone (described by its
    facets, which need no normality assumption).
    """
    if max_t_deg < 1:
        raise ValueError("max_t_deg must be at least 1")
    gens = [point for _, point in semigroup_generators(g)]
    forms = facet_support_forms(gens)
    reachable = {(0,) * (g.n + 1)}
    for b in range(1, max_t_deg + 1):
        reachable = {
            tuple(x + y for x, y in zip(pt, gen))
            for pt in reachable
            for gen in gens
        }
        for exps in lattice_points_of_slice(forms, g.n, b, strict=False):
            if exps + (b,) not in reachable:
                return SaturationReport(False, max_t_deg, (exps, b))
    return SaturationReport(True, max_t_deg)
