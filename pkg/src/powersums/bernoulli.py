"""Bernoulli numbers from the defining recurrence, with a grow-only cache.

The sequence is generated by

    B_0 = 1,    B_m = -(C(m+1, 0) B_0 + ... + C(m+1, m-1) B_{m-1}) / (m + 1)

with the convention B_1 = -1/2.  Computing B_m consumes every predecessor,
so a cache keeps the computed prefix and extends it on demand.  Odd indices
above 1 come out of the recurrence as exact zeros; they are deliberately
not short-circuited, because that emergent zero is itself a useful
correctness signal.

The recurrence is O(m^2) rational operations up to index m, which is
instant for m in the hundreds and noticeably slow past a few thousand.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from pathlib import Path

from .exact_arith import format_rational, parse_rational

__all__ = [
    "BernoulliCache",
    "CacheCorruptionError",
    "bernoulli",
    "bernoulli_range",
    "recurrence_residual",
]


class CacheCorruptionError(ValueError):
    """A persisted cache file failed validation on load."""


class BernoulliCache:
    """Grow-only table of B_0..B_m, contiguous from index 0.

    Extension is serialized behind a lock; completed prefixes may be read
    concurrently without synchronization because entries are appended in
    order and never mutated.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> Fraction:
        """B_n, computing and caching everything up to index n if needed."""
        if n < 0:
            raise ValueError("Bernoulli index must be nonnegative")
        if n >= len(self._values):
            self._extend_to(n)
        return self._values[n]

    def _extend_to(self, n: int) -> None:
        with self._lock:
            values = self._values
            for m in range(len(values), n + 1):
                # Binomial weights stay integers; one rational division per step.
                total = sum(comb(m + 1, i) * values[i] for i in range(m))
                values.append(-total / (m + 1))

    def save(self, path: str | Path) -> None:
        """Write one line per index: ``<index> <num>/<den>``."""
        with self._lock:
            snapshot = list(self._values)
        path = Path(path)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(
            "".join(f"{i} {format_rational(v)}\n" for i, v in enumerate(snapshot))
        )
        tmp.replace(path)

    @classmethod
    def load(cls, path: str | Path) -> BernoulliCache:
        """Load a persisted table, rejecting anything inconsistent.

        Indices must be contiguous from 0, entry 0 must be 1/1, and the
        identity sum_{i<=n} C(n+1, i) B_i = 0 is re-checked for the top
        three indices to catch silently corrupted values.
        """
        lines = Path(path).read_text().splitlines()
        if not lines:
            raise CacheCorruptionError(f"{path}: cache file is empty")
        values: list[Fraction] = []
        for lineno, line in enumerate(lines):
            fields = line.split()
            if len(fields) != 2:
                raise CacheCorruptionError(
                    f"{path}:{lineno + 1}: expected '<index> <num>/<den>'"
                )
            try:
                index = int(fields[0])
                value = parse_rational(fields[1])
            except ValueError as exc:
                raise CacheCorruptionError(f"{path}:{lineno + 1}: {exc}") from exc
            if index != lineno:
                raise CacheCorruptionError(
                    f"{path}:{lineno + 1}: non-contiguous index {index}"
                )
            values.append(value)
        if values[0] != 1:
            raise CacheCorruptionError(f"{path}: index 0 must hold 1/1")
        for n in range(len(values) - 1, max(len(values) - 4, 0), -1):
            residual = sum(comb(n + 1, i) * values[i] for i in range(n + 1))
            if residual != 0:
                raise CacheCorruptionError(
                    f"{path}: recurrence identity fails at index {n}"
                )
        cache = cls()
        cache._values = values
        return cache


_shared_cache = BernoulliCache()


def bernoulli(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention).

    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    target = cache if cache is not None else _shared_cache
    return target[n]


def bernoulli_range(
    max_index: int, cache: BernoulliCache | None = None
) -> list[Fraction]:
    """[B_0, ..., B_max_index], computed in one pass."""
    target = cache if cache is not None else _shared_cache
    target[max_index]
    return [target[i] for i in range(max_index + 1)]


def recurrence_residual(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """sum_{i=0}^{n} C(n+1, i) B_i, which is exactly zero for every n >= 1.

    Exposed as an operation so the identity behind the recurrence can be
    asserted directly.  n = 0 is rejected: there the sum collapses to
    B_0 = 1 and the identity does not apply.
    """
    if n < 1:
        raise ValueError("the identity requires n >= 1 (at n = 0 the sum is B_0 = 1)")
    target = cache if cache is not None else _shared_cache
    target[n]
    return sum(comb(n + 1, i) * target[i] for i in range(n + 1))
