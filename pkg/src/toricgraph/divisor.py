"""Divisor class group and canonical class of a normal graph semigroup
ring, and the Gorenstein test.

The classes of the primes containing t generate the class group with the
single relation given by the last coefficients of their support forms, so
the group is free of rank r-1.  The class of the variable prime at vertex
j is read off the j-th form coefficients, the canonical class is the sum
of all height-one prime classes, and the ring is Gorenstein exactly when
the canonical class is an integer multiple of the relation vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cone import SupportForm
from .errors import InvariantViolationError
from .graphs import Graph, bipartition, connected_components, is_unmixed
from .lattice import smith_normal_form
from .primes import (
    KIND_COVER,
    KIND_ZERO,
    MonomialPrime,
    PrimeKind,
    height_one_primes,
)


@dataclass(frozen=True)
class ClassGroupPresentation:
    """Class group data: generators [P_1..P_r] (the primes containing t,
    via their support forms, in a fixed order) and the unique relation
    sum(relation[i] * [P_i]) = 0."""

    forms: tuple[SupportForm, ...]
    relation: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.forms)

    @property
    def rank(self) -> int:
        return self.r - 1

    @property
    def n(self) -> int:
        return len(self.forms[0]) - 1


@dataclass(frozen=True)
class DivisorClass:
    """An element of the class group in the [P_i] coordinates, considered
    modulo integer multiples of the relation vector."""

    coeffs: tuple[int, ...]
    relation: tuple[int, ...]

    def reduced(self) -> tuple[int, ...]:
        # unique representative with first coordinate in [0, relation[0])
        m = self.coeffs[0] // self.relation[0]
        return tuple(c - m * r for c, r in zip(self.coeffs, self.relation))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced())

    def __eq__(self, other) -> bool:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.relation == other.relation and self.reduced() == other.reduced()

    def __hash__(self) -> int:
        return hash((self.relation, self.reduced()))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.relation != other.relation:
            raise ValueError("classes live in different presentations")
        return DivisorClass(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.relation
        )


def class_group(t_primes: Sequence[MonomialPrime]) -> ClassGroupPresentation:
    """Presentation from the primes containing t.

    The relation entries are the last form coefficients; each must be
    positive and their gcd must be 1 (checked through the Smith normal
    form), which makes the quotient free of rank r-1.
    """
    if not t_primes:
        raise ValueError("need at least one prime containing t")
    for p in t_primes:
        if not p.contains_t:
            raise ValueError(f"prime with form {p.form} does not contain t")
    relation = tuple(p.form[-1] for p in t_primes)
    if any(c < 1 for c in relation):
        raise InvariantViolationError(f"relation vector {relation} has entry < 1")
    if smith_normal_form([relation]) != (1,):
        raise InvariantViolationError(
            f"relation vector {relation} is not primitive; the class group "
            "would not be free of rank r-1"
        )
    return ClassGroupPresentation(tuple(p.form for p in t_primes), relation)


def prime_class(i: int, presentation: ClassGroupPresentation) -> DivisorClass:
    """[P_i] itself, as the i-th unit vector (1-indexed)."""
    coeffs = [0] * presentation.r
    coeffs[i - 1] = 1
    return DivisorClass(tuple(coeffs), presentation.relation)


def q_class(j: int, presentation: ClassGroupPresentation) -> DivisorClass:
    """Class of the variable prime at vertex j: the negated j-th column of
    the form coefficients."""
    if not 1 <= j <= presentation.n:
        raise ValueError(f"vertex {j} out of range")
    coeffs = tuple(-f[j - 1] for f in presentation.forms)
    return DivisorClass(coeffs, presentation.relation)


def canonical_class(presentation: ClassGroupPresentation) -> DivisorClass:
    """Class of the canonical module: coefficient 1 - sum of the first n
    coefficients, per form."""
    n = presentation.n
    coeffs = tuple(1 - sum(f[:n]) for f in presentation.forms)
    return DivisorClass(coeffs, presentation.relation)


@dataclass(frozen=True)
class GorensteinResult:
    gorenstein: bool
    factor: int | None  # the integer a with kappa = a * relation, when it exists
    fast_paths: dict[str, bool] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.gorenstein


def _multiple_factor(cls: DivisorClass) -> int | None:
    """The integer a with coeffs == a * relation, or None."""
    a, r0 = cls.coeffs[0], cls.relation[0]
    if a % r0:
        return None
    m = a // r0
    if all(c == m * r for c, r in zip(cls.coeffs, cls.relation)):
        return m
    return None


def gorenstein_from_primes(
    g: Graph, primes: Sequence[tuple[MonomialPrime, PrimeKind]]
) -> GorensteinResult:
    """Gorenstein test, given the classified height-one primes.

    The source of truth is the canonical class being a multiple of the
    relation.  Two combinatorial shortcuts are known for special shapes;
    they are recomputed and asserted against the general test, never used
    instead of it.
    """
    t_primes = [p for p, _ in primes if p.contains_t]
    presentation = class_group(t_primes)
    kappa = canonical_class(presentation)
    factor = _multiple_factor(kappa)
    gorenstein = factor is not None

    fast_paths: dict[str, bool] = {}
    connected = len(connected_components(g)) == 1
    t_kind_names = {k.kind for p, k in primes if p.contains_t}
    if connected and bipartition(g).is_bipartite:
        expected = is_unmixed(g)[0]
        fast_paths["bipartite-unmixed"] = expected
        if expected != gorenstein:
            raise InvariantViolationError(
                "bipartite shortcut (unmixed <=> Gorenstein) disagrees with "
                f"the canonical-class test on n={g.n}, edges={g.edges}"
            )
    elif connected and t_kind_names == {KIND_COVER, KIND_ZERO}:
        # primes containing t are exactly the cover primes plus the zero
        # prime: Gorenstein should mean odd vertex count and unmixed
        expected = g.n % 2 == 1 and is_unmixed(g)[0]
        fast_paths["odd-vertex-unmixed"] = expected
        if expected != gorenstein:
            raise InvariantViolationError(
                "cover-plus-zero shortcut (n odd and unmixed <=> Gorenstein) "
                f"disagrees with the canonical-class test on n={g.n}, edges={g.edges}"
            )
    return GorensteinResult(gorenstein, factor, fast_paths)


def is_gorenstein(g: Graph) -> GorensteinResult:
    """Full pipeline: facets, primes, class group, canonical class.
    Raises for non-normal input."""
    return gorenstein_from_primes(g, height_one_primes(g))
