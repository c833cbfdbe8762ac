"""Drawing phase: exact pattern draws proportional to weighted utility.

A draw costs exactly 2 + length uniform variates: one for the transaction, one
for the length, one per selected item.  Item positions are located by binary
search over the cumulative mass cum(i) = VUTU(r, i) + C(i, r) * u(Y, t), which
is equivalent to the sequential per-position acceptance process but needs only
O(log) mass evaluations per item.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .combinatorics import PascalCache, RandomSource
from .qdb import (
    LengthUtility,
    Pattern,
    QuantitativeDatabase,
    QuantitativeTransaction,
    pattern_utility_in_transaction,
)
from .weighting import TransactionWeight, WeightIndex, ZeroMassError, vutu, weigh_transaction


@dataclass(frozen=True)
class SampleRequest:
    utility: LengthUtility
    k: int
    seed: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class SampleRecord:
    items: tuple[int, ...]
    length: int
    utility: int
    tid: int

    def to_json(self, db: QuantitativeDatabase | None = None) -> dict:
        items = list(db.labels_of(self.items)) if db is not None else list(self.items)
        return {
            "items": items,
            "length": self.length,
            "utility": self.utility,
            "transaction": self.tid,
        }


def draw_transaction(index: WeightIndex, rng: RandomSource) -> int:
    """Transaction id j with probability W(t_j) / Z; cum(j-1) < alpha <= cum(j)."""
    if index.total < 1:
        raise ZeroMassError("cannot draw from an index with zero total mass")
    alpha = rng.uniform_inclusive(index.total)
    return bisect_left(index.cumulative, alpha)


def draw_length(t: QuantitativeTransaction, tw: TransactionWeight, rng: RandomSource) -> int:
    """Length l with probability VUTU(l, |t|) * f'(l) / W(t)."""
    if tw.total < 1:
        raise ZeroMassError("transaction has zero weight under the constraint")
    alpha = rng.uniform_inclusive(tw.total)
    running = 0
    for length, mass in tw.per_length().items():
        running += mass
        if alpha <= running:
            return length
    raise AssertionError("alpha exceeded total per-length mass")


def cum(
    t: QuantitativeTransaction, r: int, y_utility: int, i: int, cache: PascalCache
) -> int:
    """Mass of all patterns made of Y plus r items taken from the first i items.

    cum(0) == 0, and cum vanishes for i < r (not enough items left).
    """
    if i == 0:
        return 0
    return vutu(t, r, i, cache) + cache.binom(i, r) * y_utility


def locate_position(
    t: QuantitativeTransaction,
    r: int,
    y_utility: int,
    bound: int,
    alpha: int,
    cache: PascalCache,
) -> int:
    """Unique i in [r..bound] with cum(i-1) < alpha <= cum(i), by binary search."""
    lo, hi = r, bound
    while lo < hi:
        mid = (lo + hi) // 2
        if cum(t, r, y_utility, mid, cache) >= alpha:
            hi = mid
        else:
            lo = mid + 1
    return lo


def locate_position_sequential(
    t: QuantitativeTransaction,
    r: int,
    y_utility: int,
    bound: int,
    alpha: int,
    cache: PascalCache,
) -> int:
    """Reference scan from `bound` down, rejecting i while alpha <= cum(i-1).

    Conditional on having rejected all positions above, position i is accepted
    with probability (cum(i) - cum(i-1)) / cum(i); consuming the same alpha as
    locate_position it must select the same index.
    """
    for i in range(bound, r - 1, -1):
        if alpha > cum(t, r, y_utility, i - 1, cache):
            return i
    raise AssertionError("alpha outside the total mass")


def draw_items(
    t: QuantitativeTransaction, length: int, rng: RandomSource, cache: PascalCache
) -> tuple[Pattern, int]:
    """Draw a length-`length` pattern from t; returns it with its utility in t.

    Positions are selected from right to left; after picking position i the
    next search runs over [r-1 .. i-1], so items are never re-selected.
    """
    if length < 1 or length > len(t):
        raise ValueError(f"length {length} outside [1..{len(t)}]")
    picked: list[int] = []
    y_utility = 0
    bound = len(t)
    r = length
    while r > 0:
        total = cum(t, r, y_utility, bound, cache)
        alpha = rng.uniform_inclusive(total)
        i = locate_position(t, r, y_utility, bound, alpha, cache)
        picked.append(i)
        y_utility += t.weights[i - 1]
        bound = i - 1
        r -= 1
    items = tuple(t.items[i - 1] for i in reversed(picked))
    return Pattern(items, t.tid), y_utility


def sample_patterns(
    db: QuantitativeDatabase,
    index: WeightIndex,
    request: SampleRequest,
    cache: PascalCache,
) -> list[SampleRecord]:
    """k independent draws, each pattern X with probability u(X,D) f'(|X|) / Z."""
    if request.utility != index.utility:
        raise ValueError("index was built with a different length utility")
    rng = RandomSource(request.seed)
    tw_cache: dict[int, TransactionWeight] = {}
    records = []
    for _ in range(request.k):
        tid = draw_transaction(index, rng)
        t = db.transactions[tid]
        tw = tw_cache.get(tid)
        if tw is None:
            tw = weigh_transaction(t, request.utility, cache)
            tw_cache[tid] = tw
        length = draw_length(t, tw, rng)
        pattern, utility = draw_items(t, length, rng, cache)
        records.append(SampleRecord(pattern.items, length, utility, tid))
    return records


def bootstrap_sample(db: QuantitativeDatabase, request: SampleRequest) -> list[SampleRecord]:
    """Baseline without utility proportionality: uniform transaction among the
    eligible ones, uniform length in [m..min(M,|t|)], uniform items without
    replacement."""
    u = request.utility
    eligible = [t for t in db.transactions if len(t) >= u.min_len]
    if not eligible:
        raise ZeroMassError("no transaction is long enough for the constraint")
    rng = RandomSource(request.seed)
    records = []
    for _ in range(request.k):
        t = eligible[rng.uniform_inclusive(len(eligible)) - 1]
        hi = len(t) if u.max_len is None else min(u.max_len, len(t))
        length = u.min_len + rng.uniform_inclusive(hi - u.min_len + 1) - 1
        positions = list(range(len(t)))
        chosen = []
        for _ in range(length):
            k = rng.uniform_inclusive(len(positions)) - 1
            chosen.append(positions.pop(k))
        items = tuple(t.items[p] for p in sorted(chosen))
        utility = pattern_utility_in_transaction(items, t)
        records.append(SampleRecord(items, length, utility, t.tid))
    return records
