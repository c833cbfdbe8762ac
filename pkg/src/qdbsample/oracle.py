"""Brute-force ground truth: exhaustive pattern enumeration with exact rational
probabilities, plus the statistics that turn the exactness claim into tests."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from scipy.stats import chi2

from .qdb import LengthUtility, QuantitativeDatabase
from .sampler import SampleRecord


class EnumerationCapError(RuntimeError):
    """The database is too large for exhaustive enumeration."""


@dataclass
class ExactDistribution:
    """Exact pattern distribution u(X,D) * f(|X|) / Z' over the constrained language."""

    probabilities: dict[frozenset[int], Fraction]
    utilities: dict[frozenset[int], int]
    z: Fraction
    utility: LengthUtility

    def support(self) -> set[frozenset[int]]:
        return set(self.probabilities)


def enumerate_distribution(
    db: QuantitativeDatabase, utility: LengthUtility, cap: int = 2**24
) -> ExactDistribution:
    """Enumerate every constrained pattern of every transaction, exactly.

    Pattern identity is the item set, aggregated across transactions.  Raises
    EnumerationCapError when the total subset count exceeds `cap`.
    """
    work = sum(2 ** len(t) for t in db.transactions)
    if work > cap:
        raise EnumerationCapError(f"{work} subsets exceed the cap of {cap}")
    utilities: dict[frozenset[int], int] = {}
    for t in db.transactions:
        for length in utility.length_range(len(t)):
            for combo in combinations(range(len(t)), length):
                key = frozenset(t.items[j] for j in combo)
                utilities[key] = utilities.get(key, 0) + sum(t.weights[j] for j in combo)
    z = Fraction(0)
    weighted: dict[frozenset[int], Fraction] = {}
    for key, u in utilities.items():
        mass = u * utility.factor(len(key))
        weighted[key] = mass
        z += mass
    if z == 0:
        probabilities: dict[frozenset[int], Fraction] = {}
    else:
        probabilities = {key: mass / z for key, mass in weighted.items()}
    return ExactDistribution(probabilities, utilities, z, utility)


@dataclass
class FitReport:
    tv_distance: float
    chi_square_p: float
    chi_square_stat: float
    degrees_of_freedom: int
    z_scores: dict[frozenset[int], float]
    sample_size: int

    def to_json(self) -> dict:
        return {
            "tvDistance": self.tv_distance,
            "chiSquarePValue": self.chi_square_p,
            "chiSquareStat": self.chi_square_stat,
            "degreesOfFreedom": self.degrees_of_freedom,
            "sampleSize": self.sample_size,
            "maxAbsZScore": max((abs(v) for v in self.z_scores.values()), default=0.0),
        }


def compare_empirical(dist: ExactDistribution, records: Sequence[SampleRecord]) -> FitReport:
    """Total-variation distance and chi-square goodness of fit of a sample.

    Patterns with expected count below 5 are pooled into one chi-square bucket
    (standard practice; sparse cells break the chi-square approximation).
    """
    if not records:
        raise ValueError("sample must be non-empty")
    n = len(records)
    counts = Counter(frozenset(r.items) for r in records)
    keys = set(dist.probabilities) | set(counts)
    tv = 0.0
    z_scores: dict[frozenset[int], float] = {}
    for key in keys:
        p = float(dist.probabilities.get(key, 0))
        freq = counts.get(key, 0) / n
        tv += abs(freq - p)
        if 0 < p < 1:
            z_scores[key] = (counts.get(key, 0) - n * p) / math.sqrt(n * p * (1 - p))
    tv /= 2

    observed = []
    expected = []
    pooled_obs = 0
    pooled_exp = 0.0
    for key, p in dist.probabilities.items():
        exp = float(p) * n
        obs = counts.get(key, 0)
        if exp < 5:
            pooled_obs += obs
            pooled_exp += exp
        else:
            observed.append(obs)
            expected.append(exp)
    outside = sum(c for key, c in counts.items() if key not in dist.probabilities)
    pooled_obs += outside
    if pooled_exp > 0 or pooled_obs > 0:
        observed.append(pooled_obs)
        expected.append(pooled_exp)
    if len(observed) < 2:
        return FitReport(tv, 1.0, 0.0, 0, z_scores, n)
    stat = 0.0
    for obs, exp in zip(observed, expected):
        if exp > 0:
            stat += (obs - exp) ** 2 / exp
        elif obs > 0:
            stat = float("inf")
            break
    df = len(observed) - 1
    p_value = float(chi2.sf(stat, df)) if math.isfinite(stat) else 0.0
    return FitReport(tv, p_value, float(stat), df, z_scores, n)


@dataclass
class RepresentativenessReport:
    mean_normalized_utility: float
    utility_histogram: list[tuple[float, int]]
    confidence_interval_95: tuple[float, float] | None
    degenerate: bool
    sample_size: int

    def to_json(self) -> dict:
        return {
            "meanNormalizedUtility": self.mean_normalized_utility,
            "utilityHistogram": [[lo, count] for lo, count in self.utility_histogram],
            "confidenceInterval95": list(self.confidence_interval_95)
            if self.confidence_interval_95
            else None,
            "degenerate": self.degenerate,
            "sampleSize": self.sample_size,
        }


def union_normalizer(
    sample_lists: Iterable[Sequence[SampleRecord]],
    db: QuantitativeDatabase,
    utility: LengthUtility,
) -> Fraction:
    """Total weighted utility of the distinct patterns in the union of samples."""
    from .qdb import pattern_utility_in_database

    distinct = {frozenset(r.items) for records in sample_lists for r in records}
    total = Fraction(0)
    for key in distinct:
        total += pattern_utility_in_database(key, db) * utility.factor(len(key))
    return total


def representativeness_report(
    records: Sequence[SampleRecord],
    db: QuantitativeDatabase,
    utility: LengthUtility,
    normalizer: Fraction | None = None,
) -> RepresentativenessReport:
    """Mean and 95% CI of per-pattern weighted utility, normalized by the union
    total (or the sample's own distinct-pattern total when none is given)."""
    from .qdb import pattern_utility_in_database

    if not records:
        raise ValueError("sample must be non-empty")
    if normalizer is None:
        normalizer = union_normalizer([records], db, utility)
    norm = float(normalizer) if normalizer else 1.0
    values = [
        float(pattern_utility_in_database(r.items, db) * utility.factor(r.length)) / norm
        for r in records
    ]
    n = len(values)
    mean = sum(values) / n
    degenerate = n < 2
    if degenerate:
        ci = None
    else:
        var = sum((v - mean) ** 2 for v in values) / (n - 1)
        half = 1.96 * math.sqrt(var / n)
        ci = (mean - half, mean + half)
    lo, hi = min(values), max(values)
    bins = 10
    width = (hi - lo) / bins if hi > lo else 1.0
    histogram = [[lo + b * width, 0] for b in range(bins)]
    for v in values:
        b = min(int((v - lo) / width), bins - 1)
        histogram[b][1] += 1
    return RepresentativenessReport(
        mean_normalized_utility=mean,
        utility_histogram=[(edge, count) for edge, count in histogram],
        confidence_interval_95=ci,
        degenerate=degenerate,
        sample_size=n,
    )
