"""Shared hypothesis strategies and small helpers for the test suite."""

from itertools import product

from hypothesis import strategies as st

from irng import catalog
from irng.semigroups import band_corpus, semigroup_algebra

SMALL_NAMES = [n for n in catalog.catalog_names("rng") if catalog.get(n).order <= 256]


def small_rng_strategy():
    """Valid finite rngs: catalog entries, cyclic rngs, zero-mult rngs,
    band algebras and direct sums of two of those."""
    named = st.sampled_from(SMALL_NAMES).map(catalog.get)
    cyc = st.integers(2, 12).flatmap(
        lambda m: st.integers(0, m - 1).map(lambda c: catalog.cyclic_rng(m, c)))
    zero = st.lists(st.integers(2, 4), min_size=1, max_size=3).map(catalog.zero_mult_rng)
    bands = band_corpus(3)
    alg = st.tuples(st.sampled_from([2, 3]), st.sampled_from(bands)).map(
        lambda a: semigroup_algebra(*a))
    base = st.one_of(named, cyc, zero, alg)
    summed = st.tuples(base, base).filter(
        lambda p: p[0].order * p[1].order <= 512).map(lambda p: catalog.direct_sum(*p))
    return st.one_of(base, summed)


def element_of(R):
    return st.tuples(*[st.integers(0, d - 1) for d in R.factors]).map(R.element)


def all_elements(R):
    return [R.element(c) for c in product(*(range(d) for d in R.factors))]
