"""Two-pass streaming sampler for qDB files that should not be held in memory.

Pass 1 streams the file once and keeps only the per-transaction weights (plus
the label dictionary).  Pass 2 streams again, drawing patterns only from the
pre-selected transaction ids, and stops as soon as the sample is complete.
"""
from __future__ import annotations

import os
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass

from .combinatorics import PascalCache, RandomSource
from .qdb import ItemDictionary, LengthUtility, PriceTable, iter_parse_qdb
from .sampler import SampleRecord, SampleRequest, draw_items, draw_length
from .weighting import ZeroMassError, weigh_transaction


class FileChangedError(RuntimeError):
    """The qDB file changed between the weighting and drawing passes."""


@dataclass
class DiskWeights:
    """Pass-1 output: the only retained state besides the item dictionary."""

    path: str
    weights: list[int]
    total: int
    byte_size: int
    dictionary: ItemDictionary
    utility: LengthUtility
    max_transaction_length: int

    @property
    def count(self) -> int:
        return len(self.weights)


def _iter_file(path, prices: PriceTable | None, dictionary: ItemDictionary):
    with open(path, "r", encoding="utf-8") as fh:
        yield from iter_parse_qdb(fh, prices, dictionary)


def stream_weigh(
    path,
    utility: LengthUtility,
    prices: PriceTable | None = None,
    cache: PascalCache | None = None,
) -> DiskWeights:
    """Single sequential pass computing W(t) per transaction.

    Per-transaction scratch is O(|t|); the Pascal cache grows on demand when a
    longer transaction appears.
    """
    cache = cache if cache is not None else PascalCache(0)
    dictionary = ItemDictionary()
    weights: list[int] = []
    total = 0
    longest = 0
    for t in _iter_file(path, prices, dictionary):
        if len(t) > longest:
            longest = len(t)
            cache.ensure(longest)
        w = weigh_transaction(t, utility, cache).total
        weights.append(w)
        total += w
    if total == 0:
        raise ZeroMassError("no pattern satisfies the length constraint (Z = 0)")
    return DiskWeights(
        path=os.fspath(path),
        weights=weights,
        total=total,
        byte_size=os.path.getsize(path),
        dictionary=dictionary,
        utility=utility,
        max_transaction_length=longest,
    )


def select_ids(dw: DiskWeights, k: int, rng: RandomSource) -> Counter:
    """k independent id draws proportional to W, aggregated to multiplicities."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if dw.total < 1:
        raise ZeroMassError("cannot select from zero total mass")
    cumulative = []
    running = 0
    for w in dw.weights:
        running += w
        cumulative.append(running)
    selected: Counter = Counter()
    for _ in range(k):
        alpha = rng.uniform_inclusive(dw.total)
        selected[bisect_left(cumulative, alpha)] += 1
    return selected


def stream_draw(
    path,
    dw: DiskWeights,
    selected: Counter,
    rng: RandomSource,
    prices: PriceTable | None = None,
    cache: PascalCache | None = None,
) -> list[SampleRecord]:
    """Second sequential pass drawing from the selected transactions only.

    The file must be unchanged since pass 1 (verified via byte length and
    transaction count).  Stops early once every requested pattern is drawn.
    """
    if os.path.getsize(path) != dw.byte_size:
        raise FileChangedError("file byte length changed between passes")
    cache = cache if cache is not None else PascalCache(dw.max_transaction_length)
    remaining = sum(selected.values())
    records: list[SampleRecord] = []
    for t in _iter_file(path, prices, dw.dictionary):
        if remaining == 0:
            break
        if t.tid >= dw.count:
            raise FileChangedError("file has more transactions than during weighting")
        multiplicity = selected.get(t.tid, 0)
        if multiplicity == 0:
            continue
        if len(t) > cache.n_max:
            cache.ensure(len(t))
        tw = weigh_transaction(t, dw.utility, cache)
        for _ in range(multiplicity):
            length = draw_length(t, tw, rng)
            pattern, utility = draw_items(t, length, rng, cache)
            records.append(SampleRecord(pattern.items, length, utility, t.tid))
        remaining -= multiplicity
    if remaining > 0:
        raise FileChangedError("file has fewer transactions than during weighting")
    return records


def sample_patterns_disk(
    path,
    request: SampleRequest,
    prices: PriceTable | None = None,
) -> tuple[list[SampleRecord], DiskWeights]:
    """End-to-end streamed pipeline: weigh, select ids, then draw."""
    dw = stream_weigh(path, request.utility, prices)
    rng = RandomSource(request.seed)
    cache = PascalCache(dw.max_transaction_length)
    selected = select_ids(dw, request.k, rng)
    records = stream_draw(path, dw, selected, rng, prices, cache)
    return records, dw
