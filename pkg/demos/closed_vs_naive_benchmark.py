"""Quantify what the closed form buys over direct summation.

The closed form is one polynomial evaluation (a handful of big-integer
multiplications) regardless of n; direct summation does n exponentiations.

Run:  python demos/closed_vs_naive_benchmark.py
"""

from powersums.bernoulli import BernoulliCache
from powersums.cli import run_benchmark

cache = BernoulliCache()

print(f"{'n':>10} {'k':>3} {'closed (s)':>12} {'naive (s)':>12} {'speedup':>9}")
for n in (10**3, 10**4, 10**5, 10**6):
    result = run_benchmark(n, 10, iters=3, cache=cache)
    assert result.values_equal
    speedup = result.naive_time / result.closed_time
    print(
        f"{result.n:>10} {result.k:>3} {result.closed_time:>12.2e} "
        f"{result.naive_time:>12.2e} {speedup:>8.0f}x"
    )

print("\nEvery row first re-verified that both strategies return the same integer.")
