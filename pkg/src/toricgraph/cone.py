"""Affine semigroup generators of a graph's monomial algebra and exact
facet enumeration of the cone they span.

The algebra is generated by one monomial per face of dimension at most one:
the empty face contributes t, vertex i contributes x_i*t, edge {i,j}
contributes x_i*x_j*t.  As exponent vectors in Z^(n+1) (t-coordinate last)
the generator of a face F is the 0/1 vector with ones on F and a trailing 1.

A support form is a primitive integer functional that is nonnegative on all
generators and vanishes on a rank-n subset of them; support forms are in
bijection with the facets of the cone.  They are computed with the double
description method applied to the dual cone: a support form is exactly an
extreme ray of {f : f(p) >= 0 for every generator p}, and the extreme rays
are maintained incrementally while the generator inequalities are inserted
one at a time in a fixed order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DegenerateConeError
from .graphs import Graph
from .lattice import dot, primitive_normalize

FaceLabel = tuple[int, ...]
LatticePoint = tuple[int, ...]
SupportForm = tuple[int, ...]


def faces(g: Graph) -> list[FaceLabel]:
    """The faces of dimension <= 1: empty, vertices ascending, edges in
    lexicographic order."""
    return [()] + [(v,) for v in g.vertices] + [e for e in g.edges]


def face_point(face: FaceLabel, n: int) -> LatticePoint:
    coords = [0] * (n + 1)
    for v in face:
        coords[v - 1] = 1
    coords[n] = 1
    return tuple(coords)


def semigroup_generators(g: Graph) -> list[tuple[FaceLabel, LatticePoint]]:
    """The 1 + n + |E| generator points, one per face, in face order."""
    return [(f, face_point(f, g.n)) for f in faces(g)]


def zero_prime_form(n: int) -> SupportForm:
    """The form with -1 on every vertex and +2 on the t-coordinate; it
    evaluates to 2 on the empty face, 1 on vertices and 0 on edges, and
    supports the prime generated by t and all x_i*t."""
    return tuple([-1] * n + [2])


def evaluate(form: SupportForm, point: LatticePoint) -> int:
    return dot(form, point)


def face_of_form(
    form: SupportForm, gens: Sequence[tuple[FaceLabel, LatticePoint]]
) -> set[FaceLabel]:
    """Labels of the generators the form vanishes on.  The form must be
    nonnegative on every generator."""
    zero = set()
    for label, point in gens:
        val = dot(form, point)
        if val < 0:
            raise ValueError(f"form {form} is negative on generator {label}")
        if val == 0:
            zero.add(label)
    return zero


def _independent_subset(points: Sequence[LatticePoint]) -> list[int]:
    """Indices of a greedy maximal linearly independent subset, scanning in
    input order (exact rational elimination)."""
    dim = len(points[0])
    basis_rows: list[list[Fraction]] = []
    chosen: list[int] = []
    for idx, p in enumerate(points):
        row = [Fraction(x) for x in p]
        for b in basis_rows:
            lead = next(j for j in range(dim) if b[j])
            if row[lead]:
                f = row[lead] / b[lead]
                row = [x - f * y for x, y in zip(row, b)]
        if any(row):
            basis_rows.append(row)
            chosen.append(idx)
            if len(chosen) == dim:
                break
    return chosen


def _inverse_columns(points: Sequence[LatticePoint]) -> list[SupportForm]:
    """Columns of the exact inverse of the square matrix with the given
    rows, each scaled to a primitive integer vector."""
    d = len(points)
    aug = [[Fraction(x) for x in p] + [Fraction(int(i == j)) for j in range(d)]
           for i, p in enumerate(points)]
    for col in range(d):
        piv = next(i for i in range(col, d) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(d):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    cols = []
    for j in range(d):
        col = [aug[i][d + j] for i in range(d)]
        denom = 1
        for x in col:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        cols.append(primitive_normalize([int(x * denom) for x in col]))
    return cols


def facet_support_forms(points: Sequence[LatticePoint]) -> list[SupportForm]:
    """One primitive support form per facet of the cone spanned by the
    points, sorted lexicographically.

    Double description on the dual cone: start from a simplicial cone cut
    out by a maximal independent subset of the points, then insert the
    remaining point inequalities one at a time, replacing the rays cut off
    by each new halfspace with combinations of adjacent ray pairs.
    Adjacency is the standard combinatorial test on zero sets.
    """
    if not points:
        raise DegenerateConeError("no generators")
    dim = len(points[0])
    if any(len(p) != dim for p in points):
        raise ValueError("generator points must share one length")
    basis_idx = _independent_subset(points)
    if len(basis_idx) < dim:
        raise DegenerateConeError(
            f"generators span rank {len(basis_idx)} < {dim}; cone is not full-dimensional"
        )
    rays = _inverse_columns([points[i] for i in basis_idx])
    processed = [points[i] for i in basis_idx]
    remaining = [p for i, p in enumerate(points) if i not in set(basis_idx)]

    for p in remaining:
        vals = {r: dot(r, p) for r in rays}
        negatives = [r for r in rays if vals[r] < 0]
        if not negatives:
            processed.append(p)
            continue
        keep = [r for r in rays if vals[r] >= 0]
        zsets = {
            r: frozenset(i for i, q in enumerate(processed) if dot(r, q) == 0)
            for r in rays
        }
        created = []
        for rp, rm in itertools.product(
            (r for r in rays if vals[r] > 0), negatives
        ):
            common = zsets[rp] & zsets[rm]
            adjacent = not any(
                common <= zsets[r3] for r3 in rays if r3 is not rp and r3 is not rm
            )
            if adjacent:
                new = tuple(
                    vals[rp] * b - vals[rm] * a for a, b in zip(rp, rm)
                )
                created.append(primitive_normalize(new))
        seen = set(keep)
        for r in created:
            if r not in seen:
                seen.add(r)
                keep.append(r)
        rays = keep
        processed.append(p)
    return sorted(rays)


def lattice_points_of_slice(
    forms: Sequence[SupportForm], n: int, t_deg: int, strict: bool = False
) -> list[tuple[int, ...]]:
    """Integer points (a_1..a_n, t_deg) satisfying f >= 0 on every form
    (f >= 1 everywhere when strict), listed lexicographically.

    Bounds: every cone point is a nonnegative combination of generators
    whose first-n coordinate sum is at most twice the t-coordinate, so
    sum(a) <= 2*t_deg caps the search; per-branch interval arithmetic on
    the forms does the rest of the pruning.
    """
    if t_deg < 0:
        return []
    thr = 1 if strict else 0
    # a unit form on coordinate i (the vertex facet) forces a_i >= thr
    lo_coord = [0] * n
    for f in forms:
        support = [j for j in range(n + 1) if f[j] != 0]
        if len(support) == 1 and support[0] < n and f[support[0]] == 1:
            lo_coord[support[0]] = thr
    budget = 2 * t_deg
    if sum(lo_coord) > budget:
        return []
    hi_coord = [budget - (sum(lo_coord) - lo_coord[i]) for i in range(n)]

    # optimistic future contribution of coordinates > i, per form
    future = []
    for f in forms:
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            gain = f[i] * (hi_coord[i] if f[i] > 0 else lo_coord[i])
            suffix[i] = suffix[i + 1] + gain
        future.append(suffix)

    out: list[tuple[int, ...]] = []
    coeffs = [tuple(f[:n]) for f in forms]
    base = [f[n] * t_deg for f in forms]
    lo_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo_suffix[i] = lo_suffix[i + 1] + lo_coord[i]

    def descend(i: int, vals: list[int], used: int, prefix: list[int]):
        if i == n:
            out.append(tuple(prefix))
            return
        lo, hi = lo_coord[i], min(hi_coord[i], budget - used - lo_suffix[i + 1])
        for fi, f in enumerate(coeffs):
            c = f[i]
            head = vals[fi] + future[fi][i + 1]
            if c > 0:
                need = thr - head
                if need > 0:
                    lo = max(lo, -(-need // c))
            elif c < 0:
                cap = head - thr
                if cap < 0:
                    return
                hi = min(hi, cap // (-c))
            elif head < thr:
                return
            if lo > hi:
                return
        for a in range(lo, hi + 1):
            nvals = [v + f[i] * a for v, f in zip(vals, coeffs)]
            prefix.append(a)
            descend(i + 1, nvals, used + a, prefix)
            prefix.pop()

    descend(0, list(base), 0, [])
    return out
