import random
from fractions import Fraction

import pytest

from qdbsample import (
    EnumerationCapError,
    LengthUtility,
    SampleRecord,
    SampleRequest,
    build_weight_index,
    compare_empirical,
    enumerate_distribution,
    parse_qdb,
    representativeness_report,
    sample_patterns,
    union_normalizer,
)


def key_of(db, *labels):
    return frozenset(db.dictionary.index_of(label) for label in labels)


class TestEnumerateDistribution:
    def test_toy_probabilities(self, toy_db, hup_unbounded):
        dist = enumerate_distribution(toy_db, hup_unbounded)
        assert dist.z == 1594
        assert dist.probabilities[key_of(toy_db, "l1", "l3")] == Fraction(119, 1594)
        assert dist.probabilities[key_of(toy_db, "l3", "l4")] == Fraction(218, 1594)
        assert dist.probabilities[key_of(toy_db, "l1")] == Fraction(88, 1594)
        assert sum(dist.probabilities.values()) == 1

    def test_support_size(self, toy_db, hup_unbounded):
        # 15 subsets of t1; the other transactions only repeat existing item sets
        dist = enumerate_distribution(toy_db, hup_unbounded)
        assert len(dist.support()) == 15

    def test_z_matches_weight_index_total(self, cache):
        rng = random.Random(41)
        for _ in range(10):
            lines = []
            for _ in range(rng.randint(1, 5)):
                n = rng.randint(1, 6)
                lines.append(" ".join(f"x{j}:{rng.randint(1, 30)}" for j in range(n)))
            db = parse_qdb("\n".join(lines))
            for u in (LengthUtility(), LengthUtility(min_len=2, max_len=3)):
                dist = enumerate_distribution(db, u)
                try:
                    index = build_weight_index(db, u, cache)
                except Exception:
                    assert dist.z == 0
                    continue
                assert dist.z == index.total

    def test_haup_z(self, toy_db):
        u = LengthUtility(mode="haup", min_len=1, max_len=2)
        dist = enumerate_distribution(toy_db, u)
        # scaled totals 825 + 88 + 24 + 327 over scale 2
        assert dist.z == Fraction(825 + 88 + 24 + 327, 2)

    def test_cap_enforced(self, toy_db, hup_unbounded):
        with pytest.raises(EnumerationCapError):
            enumerate_distribution(toy_db, hup_unbounded, cap=10)


class TestCompareEmpirical:
    def test_perfect_match_has_zero_tv(self, toy_db, hup_unbounded):
        dist = enumerate_distribution(toy_db, hup_unbounded)
        records = []
        scale = 1594
        for key, p in dist.probabilities.items():
            count = int(p * scale)
            items = tuple(sorted(key))
            records += [SampleRecord(items, len(items), 0, 0)] * count
        report = compare_empirical(dist, records)
        assert report.tv_distance == 0
        assert report.chi_square_p > 0.999
        assert report.sample_size == scale

    def test_good_sample_passes(self, toy_db, cache, hup_unbounded):
        dist = enumerate_distribution(toy_db, hup_unbounded)
        index = build_weight_index(toy_db, hup_unbounded, cache)
        records = sample_patterns(toy_db, index, SampleRequest(hup_unbounded, 50_000, 6), cache)
        report = compare_empirical(dist, records)
        assert report.tv_distance < 0.02
        assert report.chi_square_p > 0.001
        assert max(abs(z) for z in report.z_scores.values()) < 4.5

    def test_skewed_sample_fails(self, toy_db, hup_unbounded):
        dist = enumerate_distribution(toy_db, hup_unbounded)
        l1 = toy_db.dictionary.index_of("l1")
        records = [SampleRecord((l1,), 1, 44, 0)] * 5_000
        report = compare_empirical(dist, records)
        assert report.tv_distance > 0.5
        assert report.chi_square_p < 1e-6

    def test_outside_support_counts_against_fit(self, toy_db):
        u = LengthUtility(min_len=2, max_len=4)
        dist = enumerate_distribution(toy_db, u)
        l1 = toy_db.dictionary.index_of("l1")
        records = [SampleRecord((l1,), 1, 44, 0)] * 100
        report = compare_empirical(dist, records)
        assert report.tv_distance == 1.0
        assert report.chi_square_p < 1e-6

    def test_empty_sample_rejected(self, toy_db, hup_unbounded):
        dist = enumerate_distribution(toy_db, hup_unbounded)
        with pytest.raises(ValueError):
            compare_empirical(dist, [])


class TestRepresentativeness:
    def test_mean_of_known_values(self, toy_db, hup_unbounded):
        l1 = toy_db.dictionary.index_of("l1")
        l3 = toy_db.dictionary.index_of("l3")
        records = [
            SampleRecord((l1,), 1, 44, 0),
            SampleRecord((l1, l3), 2, 119, 0),
        ]
        # normalizer = u({l1}) + u({l1,l3}) = 88 + 119 = 207
        report = representativeness_report(records, toy_db, hup_unbounded)
        assert report.mean_normalized_utility == pytest.approx((88 / 207 + 119 / 207) / 2)
        assert report.sample_size == 2
        assert not report.degenerate
        lo, hi = report.confidence_interval_95
        assert lo < report.mean_normalized_utility < hi

    def test_single_record_is_degenerate(self, toy_db, hup_unbounded):
        l1 = toy_db.dictionary.index_of("l1")
        report = representativeness_report([SampleRecord((l1,), 1, 44, 0)], toy_db, hup_unbounded)
        assert report.degenerate
        assert report.confidence_interval_95 is None

    def test_histogram_accounts_for_all_records(self, toy_db, cache, hup_unbounded):
        index = build_weight_index(toy_db, hup_unbounded, cache)
        records = sample_patterns(toy_db, index, SampleRequest(hup_unbounded, 500, 17), cache)
        report = representativeness_report(records, toy_db, hup_unbounded)
        assert sum(count for _, count in report.utility_histogram) == 500

    def test_shared_normalizer_orders_samplers(self, toy_db, hup_unbounded):
        l1 = toy_db.dictionary.index_of("l1")
        l2 = toy_db.dictionary.index_of("l2")
        high = [SampleRecord(tuple(sorted((l1, l2))), 2, 56, 0)] * 10
        low = [SampleRecord((l2,), 1, 12, 0)] * 10
        norm = union_normalizer([high, low], toy_db, hup_unbounded)
        r_high = representativeness_report(high, toy_db, hup_unbounded, norm)
        r_low = representativeness_report(low, toy_db, hup_unbounded, norm)
        assert r_high.mean_normalized_utility > r_low.mean_normalized_utility

    def test_report_json_shape(self, toy_db, cache, hup_unbounded):
        index = build_weight_index(toy_db, hup_unbounded, cache)
        records = sample_patterns(toy_db, index, SampleRequest(hup_unbounded, 50, 23), cache)
        payload = representativeness_report(records, toy_db, hup_unbounded).to_json()
        assert set(payload) == {
            "meanNormalizedUtility",
            "utilityHistogram",
            "confidenceInterval95",
            "degenerate",
            "sampleSize",
        }
