"""Height-one monomial primes of a normal graph semigroup ring.

Every facet of the cone yields one height-one monomial prime, generated by
the face monomials its support form is positive on.  Primes are classified
against three named families:

* cover primes, with form -sum(x_i : i not in C) + t for a minimal vertex
  cover C;
* variable primes, with form x_i, not containing t;
* the zero prime generated by t and all x_i*t, with form -sum(x_i) + 2t;

anything else is exceptional.  For a connected bipartite graph the facets
are exactly the cover and variable primes; whiskered odd cycles add the
zero prime and nothing else; a general non-bipartite graph may have
exceptional facets, and a concrete witness form can be built from an
induced odd cycle plus a vertex far from it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import (
    FaceLabel,
    SupportForm,
    face_point,
    facet_support_forms,
    semigroup_generators,
    zero_prime_form,
)
from .errors import NonNormalGraphError
from .graphs import (
    Graph,
    bipartition,
    connected_components,
    is_minimal_vertex_cover,
    is_vertex_cover,
    minimal_vertex_covers,
    recognize_whiskered_cycle,
)
from .lattice import dot, integer_rank
from .normality import is_normal

KIND_COVER = "cover"
KIND_VARIABLE = "variable"
KIND_ZERO = "zero"
KIND_EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class PrimeKind:
    kind: str
    cover: tuple[int, ...] | None = None
    vertex: int | None = None
    minimal: bool | None = None  # for cover kind: whether the cover is minimal

    def key(self) -> tuple:
        """Hashable identity used when comparing prime inventories."""
        if self.kind == KIND_COVER:
            return (KIND_COVER, self.cover)
        if self.kind == KIND_VARIABLE:
            return (KIND_VARIABLE, self.vertex)
        return (self.kind,)


@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime presented by its support form.

    ``generator_faces`` are the faces whose monomials generate the prime
    (form value positive); the prime contains t exactly when the last form
    coefficient is positive; ``facet`` records whether the zero set has
    lattice rank n, i.e. whether the prime has height one.
    """

    form: SupportForm
    generator_faces: frozenset[FaceLabel]
    contains_t: bool
    facet: bool


def cover_form(n: int, cover: tuple[int, ...]) -> SupportForm:
    coeffs = [-1] * (n + 1)
    coeffs[n] = 1
    for v in cover:
        coeffs[v - 1] = 0
    return tuple(coeffs)


def classify_form(g: Graph, form: SupportForm) -> PrimeKind:
    """Match a support form against the named patterns, in the order zero,
    variable, cover; unmatched forms are exceptional."""
    n = g.n
    if form == zero_prime_form(n):
        return PrimeKind(KIND_ZERO)
    support = [j for j in range(n + 1) if form[j] != 0]
    if len(support) == 1 and support[0] < n and form[support[0]] == 1:
        return PrimeKind(KIND_VARIABLE, vertex=support[0] + 1)
    if form[n] == 1 and all(c in (0, -1) for c in form[:n]):
        cover = tuple(i + 1 for i in range(n) if form[i] == 0)
        if is_vertex_cover(g, cover):
            return PrimeKind(
                KIND_COVER, cover=cover, minimal=is_minimal_vertex_cover(g, cover)
            )
    return PrimeKind(KIND_EXCEPTIONAL)


def prime_from_form(g: Graph, form: SupportForm) -> MonomialPrime:
    """Build the monomial prime of a support form by evaluating it on all
    generators; raises if the form is negative somewhere."""
    positive = set()
    zero_points = []
    for label, point in semigroup_generators(g):
        val = dot(form, point)
        if val < 0:
            raise ValueError(f"form {form} is negative on face {label}")
        if val > 0:
            positive.add(label)
        else:
            zero_points.append(point)
    return MonomialPrime(
        form=tuple(form),
        generator_faces=frozenset(positive),
        contains_t=form[g.n] > 0,
        facet=integer_rank(zero_points) == g.n,
    )


def primes_from_facets(
    g: Graph, facets: list[SupportForm]
) -> list[tuple[MonomialPrime, PrimeKind]]:
    """Classify precomputed facet forms; primes containing t come first,
    then the rest, each block sorted by form."""
    entries = []
    for form in facets:
        prime = prime_from_form(g, form)
        entries.append((prime, classify_form(g, form)))
    return sorted(entries, key=lambda e: (not e[0].contains_t, e[0].form))


def height_one_primes(g: Graph) -> list[tuple[MonomialPrime, PrimeKind]]:
    """All height-one monomial primes of a normal ring, one per facet,
    classified, primes containing t first.

    The facet/prime correspondence is only valid for normal rings, so a
    non-normal graph is rejected.
    """
    verdict = is_normal(g)
    if not verdict.normal:
        raise NonNormalGraphError(
            f"the semigroup ring is not normal ({verdict.reason}); "
            "height-one primes are only enumerated in the normal case"
        )
    gens = [point for _, point in semigroup_generators(g)]
    return primes_from_facets(g, facet_support_forms(gens))


def cover_prime(g: Graph, cover: tuple[int, ...]) -> MonomialPrime:
    """The prime attached to a vertex cover via its support form.

    Any cover gives a prime; it is a facet prime (height one) exactly when
    the cover is minimal, which the ``facet`` field records.
    """
    cover = tuple(sorted(cover))
    if not is_vertex_cover(g, cover):
        raise ValueError(f"{cover} is not a vertex cover")
    return prime_from_form(g, cover_form(g.n, cover))


@dataclass(frozen=True)
class PrimePrediction:
    """Predicted height-one prime inventory for a connected graph with a
    normal ring.

    ``exact`` distinguishes a provably complete prediction from the
    general lower bound that holds for every connected non-bipartite
    graph.
    """

    kinds: frozenset[tuple]
    exact: bool
    tag: str  # bipartite | whiskered-odd-cycle | inclusion-only


def predicted_prime_set(g: Graph) -> PrimePrediction:
    if len(connected_components(g)) != 1:
        raise ValueError("prime-set prediction needs a connected graph")
    verdict = is_normal(g)
    if not verdict.normal:
        raise NonNormalGraphError(
            f"the semigroup ring is not normal ({verdict.reason})"
        )
    kinds = {(KIND_COVER, c) for c in minimal_vertex_covers(g)}
    kinds |= {(KIND_VARIABLE, v) for v in g.vertices}
    if bipartition(g).is_bipartite:
        return PrimePrediction(frozenset(kinds), exact=True, tag="bipartite")
    kinds.add((KIND_ZERO,))
    shape = recognize_whiskered_cycle(g)
    if shape is not None and shape.k % 2 == 1:
        return PrimePrediction(frozenset(kinds), exact=True, tag="whiskered-odd-cycle")
    return PrimePrediction(frozenset(kinds), exact=False, tag="inclusion-only")


def exceptional_witness_form(
    g: Graph, cycle: tuple[int, ...], v: int
) -> SupportForm:
    """Support form certifying an extra height-one prime containing t.

    Given an induced odd cycle and a vertex v neither on it nor adjacent
    to it, the form takes -2 on v, 0 on the neighbors of v, -1 on every
    other vertex and +2 on the t-coordinate.  It is nonnegative on all
    generators, so it supports a prime that contains t, differs from every
    cover prime (x_v*t is missing) and from the zero prime (edge monomials
    at v are missing).
    """
    cycle_set = set(cycle)
    if v in cycle_set:
        raise ValueError(f"vertex {v} lies on the cycle")
    if g.adjacency[v] & cycle_set:
        raise ValueError(f"vertex {v} is adjacent to the cycle")
    coeffs = []
    for i in g.vertices:
        if i == v:
            coeffs.append(-2)
        elif i in g.adjacency[v]:
            coeffs.append(0)
        else:
            coeffs.append(-1)
    coeffs.append(2)
    form = tuple(coeffs)
    for label, point in semigroup_generators(g):
        if dot(form, point) < 0:
            raise AssertionError(f"witness form {form} negative on face {label}")
    return form
