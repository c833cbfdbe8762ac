import math
from collections import Counter

import pytest
from scipy.stats import chisquare

from qdbsample import PascalCache, RandomSource


def half_triangle_count(n: int) -> int:
    """Closed form for the number of stored values in rows 0..n."""
    if n % 2 == 0:
        return (n // 2 + 1) ** 2
    return (n + 1) * (n + 3) // 4


class TestPascalCache:
    @pytest.mark.parametrize("n_max,expected", [(4, 9), (0, 1), (5, 12)])
    def test_stored_counts(self, n_max, expected):
        assert PascalCache(n_max).stored_count == expected

    def test_stored_count_matches_closed_form_both_parities(self):
        for n in range(0, 65):
            assert PascalCache(n).stored_count == half_triangle_count(n)

    def test_values_against_math_comb(self):
        cache = PascalCache(20)
        for n in range(21):
            for k in range(n + 1):
                assert cache.binom(n, k) == math.comb(n, k)

    def test_symmetry(self):
        cache = PascalCache(15)
        for n in range(16):
            for k in range(n + 1):
                assert cache.binom(n, k) == cache.binom(n, n - k)

    def test_pascal_rule(self):
        cache = PascalCache(30)
        for n in range(1, 31):
            for k in range(n + 1):
                assert cache.binom(n, k) == cache.binom(n - 1, k - 1) + cache.binom(n - 1, k)

    def test_row_sums_are_powers_of_two(self):
        cache = PascalCache(64)
        for n in range(65):
            assert sum(cache.binom(n, k) for k in range(n + 1)) == 2**n

    def test_out_of_range_k_is_zero(self):
        cache = PascalCache(4)
        assert cache.binom(0, 1) == 0
        assert cache.binom(3, -1) == 0
        assert cache.binom(2, 0) == 1
        assert cache.binom(3, 1) == 3

    def test_n_out_of_cache_raises(self):
        cache = PascalCache(4)
        with pytest.raises(ValueError):
            cache.binom(5, 1)
        with pytest.raises(ValueError):
            cache.binom(-1, 0)

    def test_ensure_extends(self):
        cache = PascalCache(2)
        cache.ensure(10)
        assert cache.n_max == 10
        assert cache.binom(10, 5) == 252

    def test_negative_n_max_rejected(self):
        with pytest.raises(ValueError):
            PascalCache(-1)


class TestRandomSource:
    def test_n_must_be_positive(self):
        rng = RandomSource(0)
        with pytest.raises(ValueError):
            rng.uniform_inclusive(0)

    def test_n_one_always_one(self):
        rng = RandomSource(1)
        assert all(rng.uniform_inclusive(1) == 1 for _ in range(20))

    def test_range_containment_and_determinism(self):
        a, b = RandomSource(42), RandomSource(42)
        va = [a.uniform_inclusive(1320) for _ in range(500)]
        vb = [b.uniform_inclusive(1320) for _ in range(500)]
        assert va == vb
        assert all(1 <= v <= 1320 for v in va)

    def test_big_integer_range(self):
        rng = RandomSource(3)
        n = 2**200 + 12345
        assert all(1 <= rng.uniform_inclusive(n) <= n for _ in range(50))

    def test_empirical_mean(self):
        rng = RandomSource(2024)
        draws = 100_000
        mean = sum(rng.uniform_inclusive(100) for _ in range(draws)) / draws
        assert abs(mean - 50.5) < 1.0

    @pytest.mark.parametrize("n", [7, 100])
    def test_chi_square_uniformity(self, n):
        rng = RandomSource(7 * n + 1)
        draws = 100_000
        counts = Counter(rng.uniform_inclusive(n) for _ in range(draws))
        observed = [counts.get(v, 0) for v in range(1, n + 1)]
        _, p = chisquare(observed)
        assert p > 0.001

    def test_draw_count_tracks_calls(self):
        rng = RandomSource(0)
        for _ in range(5):
            rng.uniform_inclusive(10)
        rng.uniform_inclusive(1)
        assert rng.draw_count == 6

    def test_seed_validation(self):
        with pytest.raises(ValueError):
            RandomSource(-1)
        with pytest.raises(ValueError):
            RandomSource(2**64)

    def test_derive_streams_differ(self):
        a = RandomSource.derive(9, 0)
        b = RandomSource.derive(9, 1)
        assert [a.uniform_inclusive(10**6) for _ in range(10)] != [
            b.uniform_inclusive(10**6) for _ in range(10)
        ]
