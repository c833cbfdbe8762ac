"""Half-stored Pascal triangle of big-integer binomials and exact uniform draws."""
from __future__ import annotations

import random


class PascalCache:
    """Binomial coefficients C(n, k) for n up to n_max.

    Only the first floor(n/2)+1 entries of each row are kept; the rest come
    from the symmetry C(n, k) == C(n, n-k).  Values are exact Python ints.
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        self._rows: list[list[int]] = [[1]]
        self.ensure(n_max)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def ensure(self, n_max: int) -> None:
        """Extend the triangle so rows up to n_max are available."""
        while self.n_max < n_max:
            n = self.n_max + 1
            prev = self._rows[-1]
            half = n // 2 + 1
            row = [1] * half
            for k in range(1, half):
                row[k] = self._prev_value(prev, n - 1, k - 1) + self._prev_value(prev, n - 1, k)
            self._rows.append(row)

    @staticmethod
    def _prev_value(row: list[int], n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        if k > n - k:
            k = n - k
        return row[k]

    def binom(self, n: int, k: int) -> int:
        """C(n, k); 0 when k is outside [0, n].  n must be within the cache."""
        if n < 0 or n > self.n_max:
            raise ValueError(f"n={n} outside cached range [0..{self.n_max}]")
        if k < 0 or k > n:
            return 0
        if k > n - k:
            k = n - k
        return self._rows[n][k]

    @property
    def stored_count(self) -> int:
        return sum(len(row) for row in self._rows)


class RandomSource:
    """Seeded generator of exact uniform integers over [1..n].

    Uses rejection over fixed-width bit blocks, so every value has probability
    exactly 1/n even for arbitrary-precision n; no floating point is involved.
    """

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        self.seed = seed
        self._rng = random.Random(seed)
        self.draw_count = 0

    def uniform_inclusive(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be >= 1")
        self.draw_count += 1
        if n == 1:
            return 1
        bits = (n - 1).bit_length()
        while True:
            r = self._rng.getrandbits(bits)
            if r < n:
                return r + 1

    @classmethod
    def derive(cls, seed: int, job_index: int) -> "RandomSource":
        """Independent stream for a concurrent job; stable in (seed, job_index)."""
        mix = (seed * 0x9E3779B97F4A7C15 + job_index + 1) % 2**64
        return cls(mix)
