"""Core data model: items, quantitative transactions, databases and patterns.

A database is a list of transactions; each transaction stores its items in
index order together with effective weights (quantity * price) and the running
prefix sums of those weights.  All utilities are exact arbitrary-precision
integers, which is what makes exact sampling possible downstream.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

HUP = "hup"
HAUP = "haup"


class QdbError(ValueError):
    """Malformed qDB input (bad token, non-positive quantity, ...)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PriceTable:
    """User-defined strictly positive integer prices; unlisted items cost 1."""

    def __init__(self, prices: dict[str, int] | None = None):
        self._prices: dict[str, int] = {}
        for label, price in (prices or {}).items():
            if not isinstance(price, int) or isinstance(price, bool) or price < 1:
                raise ValueError(f"price of {label!r} must be a positive integer, got {price!r}")
            self._prices[label] = price

    def price(self, label: str) -> int:
        return self._prices.get(label, 1)

    def items(self):
        return self._prices.items()

    def __eq__(self, other):
        return isinstance(other, PriceTable) and self._prices == other._prices

    @classmethod
    def parse(cls, lines: Iterable[str]) -> "PriceTable":
        """Parse `label price` pairs, one per line; `#` starts a comment."""
        prices: dict[str, int] = {}
        for lineno, raw in enumerate(lines, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise QdbError(f"expected 'label price', got {line!r}", lineno)
            try:
                price = int(parts[1])
            except ValueError:
                raise QdbError(f"price {parts[1]!r} is not an integer", lineno) from None
            if price < 1:
                raise QdbError(f"price of {parts[0]!r} must be >= 1", lineno)
            prices[parts[0]] = price
        return cls(prices)

    @classmethod
    def load(cls, path) -> "PriceTable":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh)


class ItemDictionary:
    """Bijective label<->index mapping.

    The dense index order doubles as the fixed total order over items, set by
    first appearance during parsing.
    """

    def __init__(self, labels: Iterable[str] = ()):
        self._labels: list[str] = []
        self._index: dict[str, int] = {}
        for label in labels:
            self.intern(label)

    def intern(self, label: str) -> int:
        idx = self._index.get(label)
        if idx is None:
            idx = len(self._labels)
            self._labels.append(label)
            self._index[label] = idx
        return idx

    def index_of(self, label: str) -> int:
        return self._index[label]

    def label_of(self, index: int) -> str:
        return self._labels[index]

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._labels)

    def __eq__(self, other):
        return isinstance(other, ItemDictionary) and self._labels == other._labels


@dataclass(frozen=True, slots=True)
class QuantitativeTransaction:
    """A set of weighted items, kept sorted by item index.

    prefix[i] is the summed weight of the first i items (prefix[0] == 0), i.e.
    the total utility of the transaction head of length i.
    """

    tid: int
    items: tuple[int, ...]
    quantities: tuple[int, ...]
    weights: tuple[int, ...]
    prefix: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.items)

    @property
    def utility(self) -> int:
        return self.prefix[-1]

    def weight_of(self, item: int) -> int | None:
        """Weight of `item` in this transaction, or None if absent."""
        k = bisect_left(self.items, item)
        if k < len(self.items) and self.items[k] == item:
            return self.weights[k]
        return None


@dataclass(frozen=True, slots=True)
class Pattern:
    """A non-empty sorted itemset drawn from one source transaction."""

    items: tuple[int, ...]
    source_tid: int

    def __post_init__(self):
        if not self.items:
            raise ValueError("pattern must be non-empty")
        if any(a >= b for a, b in zip(self.items, self.items[1:])):
            raise ValueError("pattern items must be strictly increasing")

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class LengthUtility:
    """Per-length multiplier f(l): 1 for HUP, 1/l for HAUP, 0 outside [min..max].

    max_len=None means unbounded, which HAUP rejects: 1/l over an unbounded
    range has no common denominator, so exact integer draws would be impossible.
    """

    mode: str = HUP
    min_len: int = 1
    max_len: int | None = None

    def __post_init__(self):
        if self.mode not in (HUP, HAUP):
            raise ValueError(f"mode must be {HUP!r} or {HAUP!r}, got {self.mode!r}")
        if self.min_len < 1:
            raise ValueError("min_len must be >= 1")
        if self.max_len is not None and self.max_len < self.min_len:
            raise ValueError("max_len must be >= min_len")
        if self.mode == HAUP and self.max_len is None:
            raise ValueError("haup requires a finite max_len")

    def factor(self, length: int) -> Fraction:
        if length < self.min_len or (self.max_len is not None and length > self.max_len):
            return Fraction(0)
        return Fraction(1) if self.mode == HUP else Fraction(1, length)

    @property
    def scale(self) -> int:
        """Common denominator clearing factor(l) to integers over [min..max]."""
        if self.mode == HUP:
            return 1
        return math.lcm(*range(self.min_len, self.max_len + 1))

    def scaled_factor(self, length: int) -> int:
        """scale * factor(length), always an integer."""
        if length < self.min_len or (self.max_len is not None and length > self.max_len):
            return 0
        return 1 if self.mode == HUP else self.scale // length

    def length_range(self, transaction_length: int) -> range:
        """Admissible pattern lengths inside a transaction of the given size."""
        hi = transaction_length if self.max_len is None else min(self.max_len, transaction_length)
        return range(self.min_len, hi + 1)

    @property
    def unconstrained_hup(self) -> bool:
        return self.mode == HUP and self.min_len == 1 and self.max_len is None


@dataclass
class QuantitativeDatabase:
    transactions: list[QuantitativeTransaction]
    dictionary: ItemDictionary

    def __len__(self) -> int:
        return len(self.transactions)

    def max_transaction_length(self) -> int:
        return max((len(t) for t in self.transactions), default=0)

    def stats(self) -> dict:
        lengths = [len(t) for t in self.transactions]
        return {
            "transactions": len(self.transactions),
            "items": len(self.dictionary),
            "minLength": min(lengths) if lengths else 0,
            "maxLength": max(lengths) if lengths else 0,
            "avgLength": (sum(lengths) / len(lengths)) if lengths else 0.0,
            "totalUtility": sum(t.utility for t in self.transactions),
        }

    def labels_of(self, pattern: Pattern | Iterable[int]) -> tuple[str, ...]:
        items = pattern.items if isinstance(pattern, Pattern) else tuple(pattern)
        return tuple(self.dictionary.label_of(i) for i in items)


def make_transaction(
    tid: int,
    quantities: dict[int, int],
    price_of_index,
) -> QuantitativeTransaction:
    """Assemble a transaction from item-index -> quantity, applying prices."""
    items = tuple(sorted(quantities))
    qty = tuple(quantities[i] for i in items)
    weights = tuple(q * price_of_index(i) for i, q in zip(items, qty))
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)
    return QuantitativeTransaction(tid, items, qty, weights, tuple(prefix))


def parse_transaction_line(
    line: str,
    lineno: int,
    tid: int,
    dictionary: ItemDictionary,
    prices: PriceTable,
) -> QuantitativeTransaction:
    """One whitespace-separated `label:quantity` line -> transaction.

    Duplicate items on a line have their quantities summed.
    """
    quantities: dict[int, int] = {}
    for token in line.split():
        label, sep, qty_text = token.rpartition(":")
        if not sep or not label or not qty_text:
            raise QdbError(f"malformed token {token!r}", lineno)
        try:
            qty = int(qty_text)
        except ValueError:
            raise QdbError(f"quantity {qty_text!r} is not an integer", lineno) from None
        if qty < 1:
            raise QdbError(f"quantity must be >= 1 in token {token!r}", lineno)
        idx = dictionary.intern(label)
        quantities[idx] = quantities.get(idx, 0) + qty
    return make_transaction(tid, quantities, lambda i: prices.price(dictionary.label_of(i)))


def iter_parse_qdb(
    lines: Iterable[str],
    prices: PriceTable | None = None,
    dictionary: ItemDictionary | None = None,
) -> Iterator[QuantitativeTransaction]:
    """Streaming parse: yields transactions one by one without retaining them.

    Blank lines and `#` comments are skipped.  The dictionary (if given) is
    filled in place, fixing the item order by first appearance.
    """
    prices = prices if prices is not None else PriceTable()
    dictionary = dictionary if dictionary is not None else ItemDictionary()
    tid = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_transaction_line(line, lineno, tid, dictionary, prices)
        tid += 1


def parse_qdb(lines: Iterable[str] | str, prices: PriceTable | None = None) -> QuantitativeDatabase:
    """Parse qDB text (or an iterable of lines) into an in-memory database."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    dictionary = ItemDictionary()
    transactions = list(iter_parse_qdb(lines, prices, dictionary))
    return QuantitativeDatabase(transactions, dictionary)


def load_qdb(path, prices: PriceTable | None = None) -> QuantitativeDatabase:
    with open(path, "r", encoding="utf-8") as fh:
        dictionary = ItemDictionary()
        transactions = list(iter_parse_qdb(fh, prices, dictionary))
    return QuantitativeDatabase(transactions, dictionary)


def serialize_qdb(db: QuantitativeDatabase) -> str:
    """Text form that reparses (with the same prices) to an identical database."""
    lines = []
    for t in db.transactions:
        lines.append(" ".join(f"{db.dictionary.label_of(i)}:{q}" for i, q in zip(t.items, t.quantities)))
    return "\n".join(lines) + ("\n" if lines else "")


def db_to_json(db: QuantitativeDatabase) -> dict:
    return {
        "items": list(db.dictionary.labels),
        "transactions": [
            {"tid": t.tid, "items": list(t.items), "quantities": list(t.quantities), "weights": list(t.weights)}
            for t in db.transactions
        ],
        "stats": db.stats(),
    }


def db_from_json(obj: dict) -> QuantitativeDatabase:
    dictionary = ItemDictionary(obj["items"])
    transactions = []
    for rec in obj["transactions"]:
        quantities = dict(zip(rec["items"], rec["quantities"]))
        weights = dict(zip(rec["items"], rec["weights"]))
        t = make_transaction(rec["tid"], quantities, lambda i: weights[i] // quantities[i])
        if list(t.weights) != [weights[i] for i in t.items]:
            raise QdbError("weights are not integer multiples of quantities")
        transactions.append(t)
    return QuantitativeDatabase(transactions, dictionary)


def pattern_utility_in_transaction(items: Iterable[int], t: QuantitativeTransaction) -> int:
    """Summed item weights if the itemset is contained in t, else 0."""
    total = 0
    for item in items:
        w = t.weight_of(item)
        if w is None:
            return 0
        total += w
    return total


def pattern_utility_in_database(items: Iterable[int], db: QuantitativeDatabase) -> int:
    items = tuple(items)
    return sum(pattern_utility_in_transaction(items, t) for t in db.transactions)
