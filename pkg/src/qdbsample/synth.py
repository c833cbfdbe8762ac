"""Synthetic qDB generation for benchmarks and tests."""
from __future__ import annotations

import random


def generate_qdb(
    path,
    transactions: int,
    avg_length: int = 10,
    items: int = 10_000,
    max_quantity: int = 100,
    seed: int = 0,
) -> None:
    """Write a random qDB file: `transactions` lines averaging `avg_length` items.

    Lengths are uniform on [1 .. 2*avg_length - 1]; items are distinct per line
    with quantities uniform on [1 .. max_quantity].
    """
    if transactions < 1 or avg_length < 1 or items < 2 * avg_length - 1 or max_quantity < 1:
        raise ValueError("invalid generator parameters")
    rng = random.Random(seed)
    randrange = rng.randrange
    sample = rng.sample
    hi = 2 * avg_length - 1
    with open(path, "w", encoding="utf-8") as fh:
        for _ in range(transactions):
            length = randrange(1, hi + 1)
            chosen = sample(range(items), length)
            fh.write(
                " ".join(f"i{idx}:{randrange(1, max_quantity + 1)}" for idx in chosen)
            )
            fh.write("\n")
