"""Brute-force re-derivations of the main computations.

These are deliberately naive and exponential: facets by exhausting rank-n
generator subsets, minimal covers by subset enumeration, primality by
checking multiplicative closure of a prime's complement degree by degree.
They ship with the library (not only the tests) so the command line can
cross-check any small instance on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cone import (
    FaceLabel,
    LatticePoint,
    SupportForm,
    facet_support_forms,
    semigroup_generators,
)
from .graphs import Graph, is_minimal_vertex_cover, is_vertex_cover, minimal_vertex_covers
from .lattice import integer_rank, kernel_basis


@dataclass(frozen=True)
class OracleReport:
    subject: str
    instance: str
    agreement: bool
    discrepancy: str | None = None


def brute_facets(points: Sequence[LatticePoint]) -> list[SupportForm]:
    """Provably complete facet list by exhaustion.

    Every facet vanishes on n linearly independent generators, so scanning
    all size-n subsets, solving for a primitive kernel vector and keeping
    the orientations that are nonnegative everywhere finds them all.
    """
    dim = len(points[0])
    found: set[SupportForm] = set()
    for subset in itertools.combinations(points, dim - 1):
        basis = kernel_basis(subset)
        if len(basis) != 1:
            continue
        form = basis[0]
        values = [sum(a * b for a, b in zip(form, p)) for p in points]
        if all(v >= 0 for v in values):
            found.add(form)
        elif all(v <= 0 for v in values):
            found.add(tuple(-c for c in form))
    return sorted(found)


def brute_minimal_covers(g: Graph) -> list[tuple[int, ...]]:
    """All minimal vertex covers by direct subset testing (2^n)."""
    covers = []
    verts = list(g.vertices)
    for mask in range(1 << g.n):
        subset = tuple(v for v in verts if mask >> (v - 1) & 1)
        if is_vertex_cover(g, subset) and is_minimal_vertex_cover(g, subset):
            covers.append(subset)
    return sorted(covers)


def semigroup_elements_by_degree(
    gens: Sequence[tuple[FaceLabel, LatticePoint]], max_t_deg: int
) -> list[set[tuple[int, ...]]]:
    """Sums of exactly b generators for b = 0..max_t_deg."""
    layers = [{(0,) * len(gens[0][1])}]
    for _ in range(max_t_deg):
        layers.append(
            {
                tuple(x + y for x, y in zip(el, pt))
                for el in layers[-1]
                for _, pt in gens
            }
        )
    return layers


def brute_prime_test(
    generator_faces: Iterable[FaceLabel],
    gens: Sequence[tuple[FaceLabel, LatticePoint]],
    max_t_deg: int,
) -> bool:
    """Check that the monomial ideal generated by the given faces has a
    multiplicatively closed complement, among all products of at most
    max_t_deg semigroup generators.

    Ideal membership is decided honestly: u is in the ideal when u minus
    one of the ideal's face generators is again a semigroup element.  No
    support-form evaluation is involved, which is the point: this is the
    independent primality check.
    """
    face_set = set(generator_faces)
    ideal_gens = [pt for label, pt in gens if label in face_set]
    layers = semigroup_elements_by_degree(gens, max_t_deg)
    members: set[tuple[int, ...]] = set().union(*layers)

    def in_ideal(u: tuple[int, ...]) -> bool:
        for pt in ideal_gens:
            diff = tuple(x - y for x, y in zip(u, pt))
            if all(x >= 0 for x in diff) and diff in members:
                return True
        return False

    complement_by_deg = [
        [u for u in sorted(layers[b]) if not in_ideal(u)]
        for b in range(max_t_deg + 1)
    ]
    for b1 in range(1, max_t_deg + 1):
        for b2 in range(b1, max_t_deg - b1 + 1):
            for u in complement_by_deg[b1]:
                for v in complement_by_deg[b2]:
                    prod = tuple(x + y for x, y in zip(u, v))
                    if in_ideal(prod):
                        return False
    return True


def compare_facets(g: Graph, instance: str = "") -> OracleReport:
    gens = [pt for _, pt in semigroup_generators(g)]
    fast = facet_support_forms(gens)
    slow = brute_facets(gens)
    if fast == slow:
        return OracleReport("facets", instance, True)
    missing = sorted(set(slow) - set(fast))
    extra = sorted(set(fast) - set(slow))
    return OracleReport(
        "facets", instance, False, f"missing={missing} extra={extra}"
    )


def compare_minimal_covers(g: Graph, instance: str = "") -> OracleReport:
    fast = minimal_vertex_covers(g)
    slow = brute_minimal_covers(g)
    if fast == slow:
        return OracleReport("minimal-covers", instance, True)
    missing = sorted(set(slow) - set(fast))
    extra = sorted(set(fast) - set(slow))
    return OracleReport(
        "minimal-covers", instance, False, f"missing={missing} extra={extra}"
    )


def check_facet_rank(g: Graph, form: SupportForm) -> bool:
    """A support form is a facet exactly when its zero set of generators
    has lattice rank n."""
    gens = semigroup_generators(g)
    zero_points = [pt for _, pt in gens if sum(a * b for a, b in zip(form, pt)) == 0]
    return integer_rank(zero_points) == g.n
