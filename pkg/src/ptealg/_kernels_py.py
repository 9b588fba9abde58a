"""Pure-Python twin of the compiled kernels (arbitrary precision)."""

from collections import defaultdict
from itertools import combinations_with_replacement


def equal_power_sum_classes(size, degree, lo, hi):
    """Multisets of ``size`` integers in ``[lo, hi]`` grouped by power sums 1..degree.

    Only groups with at least two members are returned; members are
    nondecreasing tuples.
    """
    buckets = defaultdict(list)
    for combo in combinations_with_replacement(range(lo, hi + 1), size):
        sig = tuple(sum(x**j for x in combo) for j in range(1, degree + 1))
        buckets[sig].append(combo)
    return [members for members in buckets.values() if len(members) > 1]
