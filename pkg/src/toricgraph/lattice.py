"""Exact integer linear algebra: primitive vectors, integer kernels, Smith
normal form.

Everything works with plain Python integers, so there is no overflow and no
floating point anywhere.  Matrices are tiny (at most ~20 columns), so the
classical cubic algorithms are perfectly adequate.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

IntVector = tuple[int, ...]
IntMatrix = Sequence[Sequence[int]]


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def primitive_normalize(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the (positive) gcd of its entries.

    The result equals ``v`` times a positive rational and its entries are
    coprime, so the operation is idempotent.  Raises ValueError on the zero
    vector.
    """
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def integer_rank(rows: IntMatrix) -> int:
    """Rank of an integer matrix, by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        top = m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = gcd(m[i][c], top[c])
                a, b = top[c] // f, m[i][c] // f
                m[i] = [a * x - b * y for x, y in zip(m[i], top)]
        rank += 1
        if rank == len(m):
            break
    return rank


def _snf_with_transforms(rows: IntMatrix):
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns ``(diag, u, v)`` where ``u @ A @ v`` is diagonal with the
    entries of ``diag`` (nonnegative, each dividing the next), and ``u``,
    ``v`` are unimodular.  ``diag`` has ``min(k, n)`` entries and may end
    in zeros.
    """
    a = [list(r) for r in rows]
    k = len(a)
    n = len(a[0]) if k else 0
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i, j, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(k, n):
        piv = None
        for i in range(t, k):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            row_swap(t, piv[0])
        if piv[1] != t:
            col_swap(t, piv[1])

        while True:
            # reduce column t; a nonzero remainder becomes the new, smaller pivot
            dirty = True
            while dirty:
                dirty = False
                for i in range(t + 1, k):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        row_sub(i, t, q)
                        if a[i][t]:
                            row_swap(t, i)
                            dirty = True
            dirty = True
            while dirty:
                dirty = False
                for j in range(t + 1, n):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        col_sub(j, t, q)
                        if a[t][j]:
                            col_swap(t, j)
                            dirty = True
            if all(a[i][t] == 0 for i in range(t + 1, k)):
                break

        # pivot must divide the remaining submatrix for the divisibility chain
        offender = None
        for i in range(t + 1, k):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_sub(t, offender, -1)
            continue

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    diag = [a[i][i] for i in range(min(k, n))]
    return diag, u, v


def smith_normal_form(rows: IntMatrix) -> tuple[int, ...]:
    """Elementary divisors d1 | d2 | ... of an integer matrix.

    Only the nonzero invariant factors are returned, in divisibility order;
    the zero matrix gives the empty tuple.
    """
    diag, _, _ = _snf_with_transforms(rows)
    return tuple(d for d in diag if d != 0)


def kernel_basis(rows: IntMatrix) -> list[IntVector]:
    """Lattice basis of the saturated integer kernel {v : rows @ v = 0}.

    The columns of the right transform of the Smith decomposition whose
    invariant factor vanishes form a basis; since the transform is
    unimodular the basis lattice is automatically saturated.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    n = len(m[0])
    diag, _, v = _snf_with_transforms(m)
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append(tuple(v[i][j] for i in range(n)))
    return basis
