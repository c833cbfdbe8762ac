"""Transaction and database weighting through the virtual upper-triangle utility.

The triangle itself is never materialized: every access reduces to one cached
binomial times a prefix sum, so weighting a transaction is O(number of
admissible lengths) and O(1) in the unconstrained case.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import PascalCache
from .qdb import LengthUtility, QuantitativeDatabase, QuantitativeTransaction


class ZeroMassError(RuntimeError):
    """The length constraint excludes every pattern: total weight is zero."""


def vutu(t: QuantitativeTransaction, length: int, i: int, cache: PascalCache) -> int:
    """Total utility of all length-`length` patterns within the first i items.

    Closed form: C(i-1, length-1) * prefix[i].  Returns 0 when length is
    outside [1..i].
    """
    if i < 1 or i > len(t):
        raise ValueError(f"position i={i} outside [1..{len(t)}]")
    if length < 1 or length > i:
        return 0
    return cache.binom(i - 1, length - 1) * t.prefix[i]


def vutu_recursive_table(t: QuantitativeTransaction, cache: PascalCache) -> list[list[int]]:
    """Full triangle computed by the defining three-case recurrence.

    Test oracle only (O(|t|^2) time and space).  table[l][i] holds the value
    for length l at position i, with zero padding at l=0 / i=0.
    """
    n = len(t)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        table[1][i] = t.prefix[i]
    for length in range(2, n + 1):
        row = table[length]
        above = table[length - 1]
        for i in range(length, n + 1):
            row[i] = cache.binom(i - 1, length - 1) * t.weights[i - 1] + above[i - 1] + row[i - 1]
    return table


def vutu_recursive(t: QuantitativeTransaction, length: int, i: int, cache: PascalCache) -> int:
    """Single recurrence-path value; see vutu_recursive_table."""
    if i < 1 or i > len(t):
        raise ValueError(f"position i={i} outside [1..{len(t)}]")
    if length < 1 or length > i:
        return 0
    return vutu_recursive_table(t, cache)[length][i]


@dataclass
class TransactionWeight:
    """Total scaled weight of one transaction plus its per-length split.

    In the unconstrained HUP case the total is 2^(|t|-1) * transaction utility
    and the per-length split is only materialized if a length draw asks for it.
    """

    total: int
    _transaction: QuantitativeTransaction
    _utility: LengthUtility
    _cache: PascalCache
    _per_length: dict[int, int] | None = field(default=None, repr=False)

    def per_length(self) -> dict[int, int]:
        if self._per_length is None:
            t, u = self._transaction, self._utility
            self._per_length = {
                length: vutu(t, length, len(t), self._cache) * u.scaled_factor(length)
                for length in u.length_range(len(t))
            }
        return self._per_length


def weigh_transaction(
    t: QuantitativeTransaction, utility: LengthUtility, cache: PascalCache
) -> TransactionWeight:
    """Scaled total pattern-utility mass of t under the length constraint."""
    if utility.unconstrained_hup:
        if len(t) == 0:
            return TransactionWeight(0, t, utility, cache, {})
        total = (1 << (len(t) - 1)) * t.prefix[-1]
        return TransactionWeight(total, t, utility, cache)
    lengths = utility.length_range(len(t))
    if not lengths:
        return TransactionWeight(0, t, utility, cache, {})
    per_length = {
        length: vutu(t, length, len(t), cache) * utility.scaled_factor(length)
        for length in lengths
    }
    return TransactionWeight(sum(per_length.values()), t, utility, cache, per_length)


@dataclass
class WeightIndex:
    """Per-transaction weights with their cumulative sums for O(log) draws."""

    weights: list[int]
    cumulative: list[int]
    total: int
    utility: LengthUtility


def build_weight_index(
    db: QuantitativeDatabase, utility: LengthUtility, cache: PascalCache
) -> WeightIndex:
    """Weigh every transaction in id order; raises ZeroMassError when Z == 0.

    Transactions shorter than min_len keep a zero weight (an empty interval in
    the cumulative index) so transaction ids stay stable.
    """
    weights = []
    cumulative = []
    running = 0
    for t in db.transactions:
        w = weigh_transaction(t, utility, cache).total
        weights.append(w)
        running += w
        cumulative.append(running)
    if running == 0:
        raise ZeroMassError("no pattern satisfies the length constraint (Z = 0)")
    return WeightIndex(weights, cumulative, running, utility)
