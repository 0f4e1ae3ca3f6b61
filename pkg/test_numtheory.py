import math
import random

import numpy as np
import pytest

from bezout_bezier.constants import MAX_COORDINATE
from bezout_bezier.exceptions import CoordinateRangeError, DomainError
from bezout_bezier.numtheory import (
    BezoutCoeffs,
    Center,
    CoprimePair,
    bezout_coefficient_arrays,
    bezout_coefficients,
    bezout_identity_residual,
    coprime_neighbor_arrays,
    coprime_neighbors,
    extend_pair,
    extended_gcd,
    flip_bezout,
    gcd,
    iter_coprime_pairs,
)


def exhaustive_bezout(p, q):
    """Every (a, b) in 0 < a <= p, 0 <= b < q with a*q - b*p = 1."""
    a = np.arange(1, p + 1, dtype=np.int64)
    num = a * q - 1
    ok = num % p == 0
    b = num // p
    ok &= (b >= 0) & (b < q)
    return list(zip(a[ok].tolist(), b[ok].tolist()))


def brute_neighbors(p, q, radius):
    found = []
    for r in range(math.ceil(p - radius), math.floor(p + radius) + 1):
        for s in range(math.ceil(q - radius), math.floor(q + radius) + 1):
            if r >= 1 and s >= 1 and (r - p) ** 2 + (s - q) ** 2 <= radius * radius and math.gcd(r, s) == 1:
                found.append((r, s))
    return sorted(found)


def test_gcd():
    assert gcd(5, 0) == 5
    assert gcd(0, 7) == 7
    assert gcd(12, 18) == 6
    assert gcd(300, 21) == 3


def test_gcd_rejects_zero_pair():
    with pytest.raises(DomainError):
        gcd(0, 0)
    with pytest.raises(DomainError):
        gcd(-4, 6)


def test_extended_gcd():
    g, u, v = extended_gcd(240, 46)
    assert g == 2
    assert u * 240 + v * 46 == 2


@pytest.mark.parametrize(
    "pair, expected",
    [((1, 1), (1, 0)), ((3, 5), (2, 3)), ((299, 21), (57, 4)), ((5, 3), (2, 1)), ((8, 5), (5, 3))],
)
def test_bezout_coefficients(pair, expected):
    coeffs = bezout_coefficients(CoprimePair(*pair))
    assert coeffs.xy == expected
    assert bezout_identity_residual(coeffs) == 0


def test_non_coprime_pair_names_gcd():
    with pytest.raises(DomainError, match="gcd = 3") as err:
        CoprimePair(300, 21)
    assert err.value.gcd == 3


@pytest.mark.parametrize("pair", [(0, 1), (1, 0), (-3, 5), (0, 0)])
def test_non_positive_pair_rejected(pair):
    with pytest.raises(DomainError):
        CoprimePair(*pair)


def test_coefficients_outside_box_rejected():
    # 5*5 - 8*3 = 1 but a > p
    with pytest.raises(DomainError):
        BezoutCoeffs(5, 8, CoprimePair(3, 5))
    with pytest.raises(DomainError):
        BezoutCoeffs(1, 1, CoprimePair(3, 5))


def test_coordinate_range():
    with pytest.raises(CoordinateRangeError):
        CoprimePair(MAX_COORDINATE + 1, 1)
    with pytest.raises(CoordinateRangeError):
        Center(1, MAX_COORDINATE + 1)


def test_bezout_matches_exhaustive_oracle():
    count = 0
    for pair in iter_coprime_pairs(200):
        solutions = exhaustive_bezout(pair.r, pair.s)
        assert len(solutions) == 1, pair
        assert bezout_coefficients(pair).xy == solutions[0], pair
        count += 1
    assert count == sum(1 for p in range(1, 201) for q in range(1, 201) if math.gcd(p, q) == 1)


@pytest.mark.parametrize(
    "pair, expected",
    [((3, 5), (2, 1)), ((1, 1), (1, 0)), ((299, 21), (17, 242))],
)
def test_flip_bezout(pair, expected):
    flipped = flip_bezout(bezout_coefficients(CoprimePair(*pair)))
    assert flipped.xy == expected
    assert flipped.pair == CoprimePair(pair[1], pair[0])


def test_flip_identities_over_sweep():
    for pair in iter_coprime_pairs(200):
        coeffs = bezout_coefficients(pair)
        flipped = flip_bezout(coeffs)
        assert flipped.xy == bezout_coefficients(pair.flipped()).xy
        assert flip_bezout(flipped) == coeffs


@pytest.mark.parametrize(
    "pair, extension",
    [((3, 5), (8, 5)), ((1, 1), (1, 2)), ((5, 3), (4, 7))],
)
def test_extend_pair(pair, extension):
    coeffs = bezout_coefficients(CoprimePair(*pair))
    extended = extend_pair(coeffs)
    assert (extended.r, extended.s) == extension
    assert bezout_coefficients(extended).xy == (pair[1], pair[0])


def test_extension_identity_over_sweep():
    for pair in iter_coprime_pairs(200):
        extended = extend_pair(bezout_coefficients(pair))
        assert bezout_coefficients(extended).xy == (pair.s, pair.r)


def test_extend_pair_out_of_range():
    coeffs = bezout_coefficients(CoprimePair(MAX_COORDINATE, MAX_COORDINATE - 1))
    with pytest.raises(CoordinateRangeError):
        extend_pair(coeffs)


@pytest.mark.parametrize(
    "center, radius, expected",
    [
        ((300, 21), 1, [(299, 21)]),
        ((3, 5), 0, [(3, 5)]),
        ((5, 5), 1, [(4, 5), (5, 4), (5, 6), (6, 5)]),
        ((5, 0), 1, [(5, 1)]),
        ((300, 21), 0.5, []),
    ],
)
def test_coprime_neighbors(center, radius, expected):
    pairs = coprime_neighbors(Center(*center), radius)
    assert [(pair.r, pair.s) for pair in pairs] == expected


def test_coprime_neighbors_rejects_negative_radius():
    with pytest.raises(DomainError):
        coprime_neighbors(Center(3, 5), -1)


def test_coprime_neighbors_complete():
    rng = random.Random(20240601)
    for _ in range(60):
        p, q = rng.randint(1, 10**4), rng.randint(0, 10**4)
        radius = rng.uniform(0, 50)
        pairs = coprime_neighbors(Center(p, q), radius)
        assert [(pair.r, pair.s) for pair in pairs] == brute_neighbors(p, q, radius)


def test_coprime_neighbors_near_origin():
    pairs = coprime_neighbors(Center(2, 1), 3)
    assert [(pair.r, pair.s) for pair in pairs] == brute_neighbors(2, 1, 3)
    assert CoprimePair(1, 1) in pairs


def test_bezout_coefficient_arrays_match_scalar():
    pairs = list(iter_coprime_pairs(120))
    r = np.array([pair.r for pair in pairs], dtype=np.int64)
    s = np.array([pair.s for pair in pairs], dtype=np.int64)
    a, b = bezout_coefficient_arrays(r, s)
    assert [(int(x), int(y)) for x, y in zip(a, b)] == [bezout_coefficients(pair).xy for pair in pairs]
    assert np.all(a * s - b * r == 1)


def test_bezout_coefficient_arrays_large_pairs():
    r = np.array([MAX_COORDINATE - 1, 1_000_003], dtype=np.int64)
    s = np.array([MAX_COORDINATE - 3, 999_983], dtype=np.int64)
    a, b = bezout_coefficient_arrays(r, s)
    for x, y, ax, bx in zip(r, s, a, b):
        assert (int(ax), int(bx)) == bezout_coefficients(CoprimePair(int(x), int(y))).xy


def test_coprime_neighbor_arrays():
    r, s = coprime_neighbor_arrays(Center(5, 5), 1)
    assert r.tolist() == [4, 5, 5, 6]
    assert s.tolist() == [5, 4, 6, 5]
    r, s = coprime_neighbor_arrays(Center(300, 21), 0.5)
    assert r.size == 0 and s.size == 0


def test_coprime_neighbors_beyond_range():
    with pytest.raises(CoordinateRangeError):
        coprime_neighbors(Center(MAX_COORDINATE, 1), 2)
