import math
import random
from fractions import Fraction
from itertools import product

import pytest

from kakeya.bounds import (
    best_m,
    binary_entropy,
    c_alpha,
    count_Nq,
    eulerian,
    lemma_bound,
    region_volume,
    region_volume_eulerian,
    region_volume_mc,
)

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9]


def _count_oracle(n, q, m):
    return sum(1 for e in product(range(q), repeat=n) if sum(e) < m * q)


def test_count_matches_enumeration():
    for q in (2, 3, 4, 5, 7):
        for n in (1, 2, 3, 4):
            for m in range(1, n + 1):
                assert count_Nq(n, q, m) == _count_oracle(n, q, m), (q, n, m)


def test_count_full_space_when_m_at_least_n():
    for q in PRIME_POWERS:
        for n in (1, 2, 3):
            for m in range(n, n + 3):
                assert count_Nq(n, q, m) == q**n


def test_count_m1_stars_and_bars():
    for q in PRIME_POWERS:
        for n in (1, 2, 3, 4):
            assert count_Nq(n, q, 1) == math.comb(q - 1 + n, n)


def test_count_example_115():
    assert count_Nq(3, 5, 2) == 115


def test_half_monomials_at_half_m():
    # the involution e -> (q-1-e) pairs low and high total degrees
    for q in PRIME_POWERS:
        for n in (1, 2, 3, 4, 5, 6):
            m = (n + 1) // 2
            assert 2 * count_Nq(n, q, m) >= q**n


def test_lemma_bound_small_example():
    rep = lemma_bound(2, 2, 1)
    assert (rep.N, rep.denom) == (3, 1)
    assert rep.bound == 3
    assert rep.bound_ceiling == 3


def test_lemma_bound_beats_five_twentyfourths():
    rep = lemma_bound(3, 5, 2)
    assert rep.bound == Fraction(115, 4)
    assert rep.bound > Fraction(5, 24) * 125


def test_lemma_bound_m_equals_n_preset():
    for q in PRIME_POWERS:
        for n in (1, 2, 3, 4, 5):
            rep = lemma_bound(n, q, n)
            assert rep.bound == Fraction(q**n, math.comb(2 * n - 1, n))
            assert rep.bound >= Fraction(q, 4) ** n


def test_bound_report_consistency():
    rep = lemma_bound(3, 7, 2)
    assert rep.bound * rep.denom == rep.N
    assert rep.N <= 7**3
    assert rep.per_point_constraints == rep.denom


def test_best_m_examples():
    m, rep = best_m(2, 3, 4)
    assert m == 1 and rep.bound == 6
    assert lemma_bound(2, 3, 2).bound == 3
    m, rep = best_m(3, 5, 4)
    assert m == 1 and rep.bound == 35


def test_best_m_prefers_smaller_on_tie():
    # m >= n all give N = q^n; the denominator grows, so ties cannot
    # happen there, but equal bounds at small q must pick the smaller m
    for q in (2, 3):
        for n in (2, 3):
            m, rep = best_m(n, q, 6)
            for m2 in range(1, m):
                assert lemma_bound(n, q, m2).bound < rep.bound


def test_eulerian_small_rows():
    assert eulerian(1) == [1]
    assert eulerian(2) == [1, 1]
    assert eulerian(3) == [1, 4, 1]
    assert eulerian(4) == [1, 11, 11, 1]


def test_eulerian_row_sums_and_symmetry():
    for n in range(1, 20):
        row = eulerian(n)
        assert sum(row) == math.factorial(n)
        assert row == row[::-1]


def test_eulerian_range_check():
    with pytest.raises(ValueError):
        eulerian(0)
    with pytest.raises(ValueError):
        eulerian(65)


def test_region_volume_simplex_and_cube():
    assert region_volume(3, Fraction(1, 3)) == Fraction(1, 6)
    assert region_volume(3, 1) == 1
    assert region_volume(5, 0) == 0


def test_region_volume_symmetry():
    # volume below alpha*n plus volume below (1-alpha)*n is 1
    for n in (4, 7, 10):
        for alpha in (Fraction(1, 4), Fraction(2, 5)):
            assert region_volume(n, alpha) + region_volume(n, 1 - alpha) == 1


def test_region_volume_eulerian_agreement():
    for n in (3, 5, 8, 12):
        for k in range(0, n + 1):
            assert region_volume(n, Fraction(k, n)) == region_volume_eulerian(n, k)


def test_region_volume_monte_carlo_within_3_sigma():
    samples = 20000
    for n, alpha in ((4, 0.5), (6, 0.398), (8, 0.6)):
        exact = float(region_volume(n, Fraction(str(alpha))))
        est = region_volume_mc(n, alpha, samples=samples, seed=12345)
        sigma = math.sqrt(exact * (1 - exact) / samples)
        assert abs(est - exact) <= 3 * sigma + 1e-12


def test_region_volume_rejects_bad_alpha():
    with pytest.raises(ValueError):
        region_volume(4, 2)
    with pytest.raises(ValueError):
        region_volume(4, -0.1)


def test_binary_entropy_edges():
    assert binary_entropy(0) == 0
    assert binary_entropy(1) == 0
    assert binary_entropy(0.5) == 1


def test_c_alpha_at_one_matches_m_equals_n():
    rep = c_alpha(1.0, 64)
    assert rep.entropy_factor == pytest.approx(4.0)
    assert rep.c_alpha == pytest.approx(0.25)
    # consistent with the m=n route: C(2n-1, n)^(1/n) -> 4
    assert math.comb(127, 64) ** (1 / 64) == pytest.approx(4.0, rel=0.1)


def test_c_alpha_ladder_monotone_toward_probe():
    rep = c_alpha(0.398, 64)
    cs = [c for _, _, c in rep.ladder]
    assert cs == sorted(cs)
    assert rep.ladder[-1][0] == 64
    assert rep.method == "eulerian-exact"
    assert rep.tau_root <= rep.tau


def test_c_alpha_small_alpha_collapses():
    rep = c_alpha(0.02, 16)
    assert rep.c_alpha < 0.1


def test_c_alpha_argument_checks():
    with pytest.raises(ValueError):
        c_alpha(0.0, 64)
    with pytest.raises(ValueError):
        c_alpha(0.5, 4)


def test_mc_seed_reproducibility():
    a = region_volume_mc(5, 0.4, samples=2000, seed=7)
    b = region_volume_mc(5, 0.4, samples=2000, seed=7)
    assert a == b


def test_random_m_bounds_never_exceed_full_space():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 6)
        q = rng.choice(PRIME_POWERS)
        m = rng.randint(1, 2 * n)
        rep = lemma_bound(n, q, m)
        assert rep.bound <= q**n
