"""Shared Hypothesis strategies and small builders for the test modules."""

import random

from hypothesis import strategies as st

from subarr.fixtures import random_arrangement

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def arrangements(n_max=5, l_max=5, n_min=1):
    return seeds.map(lambda s: random_arrangement(random.Random(s), n_max, l_max, n_min=n_min))


def multi_arrangements(n_max=5, l_max=5):
    """Arrangements with at least two members."""
    return arrangements(n_max, l_max, n_min=2).filter(lambda a: len(a) >= 2)
