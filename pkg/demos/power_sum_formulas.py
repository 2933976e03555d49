"""Build closed forms for 1^k + 2^k + ... + n^k and evaluate them.

Run:  python demos/power_sum_formulas.py
"""

from powersums import (
    BernoulliCache,
    factored_form,
    faulhaber_poly,
    format_factored,
    format_power_sum,
    power_sum_closed,
    power_sum_naive,
)

cache = BernoulliCache()

# The classical table, in the compact factored presentation.
print("Factored closed forms:")
for k in range(9):
    print(" ", format_factored(factored_form(k, cache)))

# Expanded form with a single common denominator.  Note the checkerboard
# of zero coefficients: odd-index Bernoulli numbers vanish, so below the
# top three terms only every second power survives.
print("\nExpanded closed forms:")
for k in (9, 10, 11, 12):
    print(" ", format_power_sum(k, faulhaber_poly(k, cache)))

# Both evaluation strategies agree exactly, at any size.
n, k = 10**6, 12
closed = power_sum_closed(n, k, cache)
naive = power_sum_naive(n, k)
print(f"\nSum of the first {n} twelfth powers ({len(str(closed))} digits):")
print(f"  closed form      : {closed}")
print(f"  direct summation : {naive}")
print(f"  equal            : {closed == naive}")
