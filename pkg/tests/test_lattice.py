import random
from fractions import Fraction
from math import gcd

import pytest

from toricgraph.lattice import (
    _snf_with_transforms,
    integer_rank,
    kernel_basis,
    primitive_normalize,
    smith_normal_form,
    vector_gcd,
)


def _det(m):
    """Exact determinant by rational elimination (test helper)."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def _matmul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


class TestPrimitiveNormalize:
    def test_examples(self):
        assert primitive_normalize((-2, 0, 4)) == (-1, 0, 2)
        assert primitive_normalize((3, 6, 9)) == (1, 2, 3)
        assert primitive_normalize((0, -5, 0)) == (0, -1, 0)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            primitive_normalize((0, 0, 0))

    def test_idempotent_and_coprime(self):
        rng = random.Random(7)
        for _ in range(200):
            v = tuple(rng.randint(-20, 20) for _ in range(rng.randint(1, 6)))
            if not any(v):
                continue
            p = primitive_normalize(v)
            assert vector_gcd(p) == 1
            assert primitive_normalize(p) == p
            # p is v times a positive rational
            g = vector_gcd(v)
            assert tuple(x * g for x in p) == v


class TestSmithNormalForm:
    def test_examples(self):
        assert smith_normal_form([(1, 1, 1, 2)]) == (1,)
        assert smith_normal_form([(2, 4)]) == (2,)
        assert smith_normal_form([(0, 0), (0, 0)]) == ()

    def test_against_minor_gcds(self):
        # d_1 * ... * d_k equals the gcd of all k x k minors
        import itertools

        rng = random.Random(11)
        for _ in range(20):
            size = rng.randint(2, 4)
            m = [[rng.randint(-6, 6) for _ in range(size)] for _ in range(size)]
            invariants = smith_normal_form(m)
            prod = 1
            for k, d in enumerate(invariants, start=1):
                prod *= d
                minor_gcd = 0
                for rows in itertools.combinations(range(size), k):
                    for cols in itertools.combinations(range(size), k):
                        sub = [[m[i][j] for j in cols] for i in rows]
                        minor_gcd = gcd(minor_gcd, int(_det(sub)))
                assert prod == minor_gcd

    def test_random_decomposition(self):
        rng = random.Random(21)
        for _ in range(60):
            k = rng.randint(1, 5)
            n = rng.randint(1, 5)
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(k)]
            diag, u, v = _snf_with_transforms(m)
            assert abs(_det(u)) == 1
            assert abs(_det(v)) == 1
            product = _matmul(_matmul(u, m), v)
            for i in range(k):
                for j in range(n):
                    expected = diag[i] if i == j and i < len(diag) else 0
                    assert product[i][j] == expected
            nonzero = [d for d in diag if d]
            for d1, d2 in zip(nonzero, nonzero[1:]):
                assert d2 % d1 == 0


class TestKernelBasis:
    def test_examples(self):
        basis = kernel_basis([(1, 1, 1)])
        assert len(basis) == 2
        for v in basis:
            assert sum(v) == 0
        assert kernel_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == []
        basis = kernel_basis([(1, 0, 1), (0, 1, 1)])
        assert len(basis) == 1
        v = basis[0]
        assert v in ((1, 1, -1), (-1, -1, 1))

    def test_random_annihilation_and_saturation(self):
        rng = random.Random(5)
        for _ in range(80):
            k = rng.randint(1, 4)
            n = rng.randint(2, 6)
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(k)]
            basis = kernel_basis(m)
            for v in basis:
                for row in m:
                    assert sum(a * b for a, b in zip(row, v)) == 0
            assert len(basis) == n - integer_rank(m)
            if basis:
                # saturated: the basis rows have unit invariant factors
                assert set(smith_normal_form(basis)) == {1}


class TestIntegerRank:
    def test_basic(self):
        assert integer_rank([(1, 2), (2, 4)]) == 1
        assert integer_rank([(1, 0), (0, 1)]) == 2
        assert integer_rank([]) == 0
        assert integer_rank([(0, 0, 0)]) == 0
