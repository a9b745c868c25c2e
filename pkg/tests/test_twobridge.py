import math
import random
import timeit

import pytest

from knotsurgery.exact import det_exact
from knotsurgery.laurent import LaurentPoly, evaluate, is_symmetric
from knotsurgery.twobridge import (
    alexander,
    alexander_matrix,
    enumerate_knots,
    equivalent,
    is_fibered,
    is_mirror_pair,
    seifert_matrix,
    _raw_alexander,
)

from conftest import DELTA_105

T = LaurentPoly.monomial(1)


def laplace_poly_det(m):
    """Determinant of a matrix of LaurentPoly entries by cofactor expansion."""
    if len(m) == 1:
        return m[0][0]
    total = LaurentPoly()
    for j, a in enumerate(m[0]):
        if not a.is_zero():
            sub = [row[:j] + row[j + 1 :] for row in m[1:]]
            total = total + (a * laplace_poly_det(sub) if j % 2 == 0 else -(a * laplace_poly_det(sub)))
    return total


def oracle_alexander(b):
    v = seifert_matrix(b)
    n = len(v)
    return laplace_poly_det([[T * v[i][j] - v[j][i] for j in range(n)] for i in range(n)])


def test_seifert_examples():
    assert seifert_matrix((1, 1)) == [[1, 0], [1, 1]]
    assert seifert_matrix((1, -1)) == [[1, 0], [1, -1]]
    v = seifert_matrix((1, 1, -1, -1, -1, -1, 1, 1))
    assert [v[i][i] for i in range(8)] == [1, 1, -1, -1, -1, -1, 1, 1]
    for i in range(8):
        off = {j: v[i][j] for j in range(8) if j != i and v[i][j]}
        if i % 2 == 0:
            assert off == {}
        else:
            assert off == ({i - 1: 1, i + 1: 1} if i < 7 else {i - 1: 1})


@pytest.mark.parametrize(
    "p, q, delta",
    [
        (3, 2, T - 1 + T**-1),
        (105, 64, DELTA_105),
        (105, 76, DELTA_105),
        (5, 2, -T + 3 - T**-1),
        (15, 4, 4 * T - 7 + 4 * T**-1),
    ],
)
def test_alexander_examples(p, q, delta):
    assert alexander(p, q).alexander == delta


def test_fibered_examples():
    assert is_fibered(105, 64) and is_fibered(105, 76)
    assert is_fibered(5, 2)
    assert not is_fibered(15, 4)


def test_knots_105_invariants():
    inv = alexander(105, 64)
    assert inv.genus == 4 and inv.determinant == 105
    assert inv.bvector == (1, 1, -1, -1, -1, -1, 1, 1)


def test_interpolation_matches_laplace_oracle():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice([2, 4, 6])
        b = tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n))
        raw = LaurentPoly.from_coefficients(_raw_alexander(b))
        assert raw == oracle_alexander(b)


def test_continuant_samples_match_bareiss():
    b = (1, 1, -1, -1, -1, -1, 1, 1)
    coeffs = _raw_alexander(b)
    for t in range(-9, 10):
        assert det_exact(alexander_matrix(b, t)) == sum(c * t**i for i, c in enumerate(coeffs))


def test_determinant_law_up_to_99():
    for p in range(3, 100, 2):
        for q in enumerate_knots(p):
            inv = alexander(p, q)
            d = inv.alexander
            assert is_symmetric(d)
            assert evaluate(d, 1) == 1
            assert abs(evaluate(d, -1)) == p == inv.determinant
            assert inv.genus == d.span() / 2
            assert len(seifert_matrix(inv.bvector)) == len(inv.bvector)


def test_equivalent_knots_share_alexander():
    for p in range(3, 60, 2):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                qi = pow(q, -1, p)
                assert equivalent(p, q, qi)
                assert alexander(p, q).alexander == alexander(p, qi).alexander


def test_equivalent_examples():
    assert equivalent(105, 64, 64)
    assert equivalent(7, 2, 4)
    assert not equivalent(105, 64, 76)
    assert is_mirror_pair(105, 64, 41)


def brute_force_classes(p):
    """Union-find over q ~ q^-1 mod p, one minimal representative per class."""
    parent = {q: q for q in range(1, p) if math.gcd(p, q) == 1}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for q in parent:
        for r in parent:
            if q * r % p == 1:
                a, b = find(q), find(r)
                parent[max(a, b)] = min(a, b)
    return sorted({find(q) for q in parent})


def test_enumerate_examples():
    # trefoil and its mirror are kept apart
    assert enumerate_knots(3) == [1, 2]
    assert enumerate_knots(5) == [1, 2, 4]
    reps = enumerate_knots(105)
    assert 64 in reps and 76 in reps


def test_enumerate_matches_brute_force():
    for p in range(3, 100, 2):
        assert enumerate_knots(p) == brute_force_classes(p)


def test_alexander_fast():
    t = min(timeit.repeat(lambda: alexander.__wrapped__(105, 64), number=1, repeat=10))
    assert t < 0.010
