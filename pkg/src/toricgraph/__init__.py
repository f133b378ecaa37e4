"""Divisorial invariants of graph toric rings.

For a finite simple graph on vertices 1..n, the monomial algebra generated
by t, the x_i*t and the x_i*x_j*t (one generator per vertex and per edge)
is an affine semigroup ring.  This package decides its normality,
enumerates the height-one monomial primes by exact facet computation,
presents the divisor class group, computes the canonical class and the
canonical module's graded pieces and minimal generators, and decides the
Gorenstein and pseudo-Gorenstein properties.  Brute-force oracles
re-derive each step on small instances.
"""

from .analysis import AnalysisReport, analyze
from .canonical import (
    OmegaGenerators,
    OmegaSlice,
    PseudoGorensteinResult,
    SemigroupMonomial,
    is_pseudo_gorenstein,
    omega_generators,
    omega_hilbert,
    omega_slice,
    semigroup_membership,
)
from .cone import (
    face_of_form,
    face_point,
    faces,
    facet_support_forms,
    lattice_points_of_slice,
    semigroup_generators,
    zero_prime_form,
)
from .divisor import (
    ClassGroupPresentation,
    DivisorClass,
    GorensteinResult,
    canonical_class,
    class_group,
    is_gorenstein,
    prime_class,
    q_class,
)
from .errors import (
    DegenerateConeError,
    GraphFormatError,
    InvariantViolationError,
    NonNormalGraphError,
    OmegaBoundError,
)
from .families import complete_bipartite, cycle, edge_list_text, path, whiskered_cycle
from .graphs import (
    BipartitionResult,
    Graph,
    WhiskeredShape,
    bipartition,
    connected_components,
    dominated_odd_cycle_condition,
    induced_cycles,
    induced_odd_cycles,
    is_unicyclic,
    is_unmixed,
    minimal_vertex_covers,
    odd_cycle_condition,
    parse_graph,
    recognize_whiskered_cycle,
)
from .lattice import kernel_basis, primitive_normalize, smith_normal_form
from .normality import (
    NormalityVerdict,
    SaturationReport,
    is_normal,
    normality_oracle,
    p0_supporting_check,
)
from .primes import (
    MonomialPrime,
    PrimeKind,
    PrimePrediction,
    cover_form,
    cover_prime,
    exceptional_witness_form,
    height_one_primes,
    predicted_prime_set,
)

__version__ = "0.1.0"
