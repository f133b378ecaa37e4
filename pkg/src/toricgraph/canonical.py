"""Graded pieces and minimal generators of the canonical module.

For a normal ring the canonical module is the intersection of all
height-one monomial primes; a monomial lies in it exactly when every facet
support form is strictly positive on its exponent vector.  Its degree-b
piece is therefore the set of strictly interior lattice points of the cone
at t-coordinate b, and the ring is pseudo-Gorenstein when the first
nonempty piece is a single point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cone import (
    SupportForm,
    facet_support_forms,
    lattice_points_of_slice,
    semigroup_generators,
)
from .errors import NonNormalGraphError, OmegaBoundError
from .graphs import Graph
from .lattice import dot
from .normality import is_normal


@dataclass(frozen=True)
class SemigroupMonomial:
    """Exponent data of a monomial x^exps * t^t_deg."""

    exps: tuple[int, ...]
    t_deg: int

    def vector(self) -> tuple[int, ...]:
        return self.exps + (self.t_deg,)


@dataclass(frozen=True)
class OmegaSlice:
    degree: int
    points: tuple[SemigroupMonomial, ...]

    def __len__(self) -> int:
        return len(self.points)


def _require_normal(g: Graph) -> None:
    verdict = is_normal(g)
    if not verdict.normal:
        raise NonNormalGraphError(
            f"the semigroup ring is not normal ({verdict.reason}); the cone "
            "test does not describe the canonical module then"
        )


def _facets(g: Graph, facets: Sequence[SupportForm] | None) -> list[SupportForm]:
    if facets is not None:
        return list(facets)
    gens = [point for _, point in semigroup_generators(g)]
    return facet_support_forms(gens)


def semigroup_membership(
    exps: Sequence[int], t_deg: int, facets: Sequence[SupportForm]
) -> bool:
    """Whether x^exps * t^t_deg lies in the (normal) semigroup: all facet
    forms nonnegative on the exponent vector."""
    vec = tuple(exps) + (t_deg,)
    return all(dot(f, vec) >= 0 for f in facets)


def omega_slice(
    g: Graph, t_deg: int, facets: Sequence[SupportForm] | None = None
) -> OmegaSlice:
    """All monomials of the canonical module with the given t-degree:
    lattice points strictly positive on every facet, lexicographic."""
    _require_normal(g)
    forms = _facets(g, facets)
    pts = lattice_points_of_slice(forms, g.n, t_deg, strict=True)
    return OmegaSlice(t_deg, tuple(SemigroupMonomial(p, t_deg) for p in pts))


def omega_hilbert(
    g: Graph, max_t_deg: int, facets: Sequence[SupportForm] | None = None
) -> tuple[int, ...]:
    """Dimensions of the canonical module's graded pieces for t-degree
    0..max_t_deg."""
    _require_normal(g)
    forms = _facets(g, facets)
    return tuple(
        len(lattice_points_of_slice(forms, g.n, b, strict=True))
        for b in range(max_t_deg + 1)
    )


@dataclass(frozen=True)
class PseudoGorensteinResult:
    pseudo_gorenstein: bool
    initial_degree: int
    initial_dimension: int

    def __bool__(self) -> bool:
        return self.pseudo_gorenstein


def is_pseudo_gorenstein(
    g: Graph,
    max_t_deg: int | None = None,
    facets: Sequence[SupportForm] | None = None,
) -> PseudoGorensteinResult:
    """Scan t-degrees 1, 2, ... for the first nonempty graded piece of the
    canonical module; pseudo-Gorenstein means it is one-dimensional.

    The scan is capped (default n+2); if nothing is found below the cap an
    OmegaBoundError is raised rather than returning a silent False.
    """
    _require_normal(g)
    forms = _facets(g, facets)
    cap = max_t_deg if max_t_deg is not None else g.n + 2
    for b in range(1, cap + 1):
        pts = lattice_points_of_slice(forms, g.n, b, strict=True)
        if pts:
            return PseudoGorensteinResult(len(pts) == 1, b, len(pts))
    raise OmegaBoundError(
        f"no nonzero graded piece of the canonical module for t-degree <= {cap}"
    )


@dataclass(frozen=True)
class OmegaGenerators:
    """Minimal monomial generators of the canonical module with t-degree
    up to ``max_t_deg``.  The list is truncated at that bound: generators
    of larger degree, should they exist, are not ruled out."""

    max_t_deg: int
    generators: tuple[SemigroupMonomial, ...]
    truncated: bool = True


def omega_generators(
    g: Graph, max_t_deg: int, facets: Sequence[SupportForm] | None = None
) -> OmegaGenerators:
    """Interior points not reachable from a smaller interior point by
    adding a semigroup generator (division by t included via the empty
    face)."""
    _require_normal(g)
    forms = _facets(g, facets)
    gen_points = [point for _, point in semigroup_generators(g)]
    interior: set[tuple[int, ...]] = set()
    by_degree: list[list[tuple[int, ...]]] = []
    for b in range(max_t_deg + 1):
        pts = lattice_points_of_slice(forms, g.n, b, strict=True)
        by_degree.append(pts)
        interior.update(p + (b,) for p in pts)
    minimal = []
    for b, pts in enumerate(by_degree):
        for p in pts:
            vec = p + (b,)
            reducible = any(
                tuple(x - y for x, y in zip(vec, gen)) in interior
                for gen in gen_points
            )
            if not reducible:
                minimal.append(SemigroupMonomial(p, b))
    return OmegaGenerators(max_t_deg, tuple(minimal))
