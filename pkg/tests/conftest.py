from fractions import Fraction

import pytest
from hypothesis import strategies as st

from vectop.fields import model_create


@pytest.fixture(scope="session")
def qsqrt2():
    """Q(sqrt 2) inside R."""
    return model_create("arch", minpoly=[-2, 0, 1], interval=(1, 2))


@pytest.fixture(scope="session")
def q5i():
    """Q(i) inside Q_5, i = 2 mod 5."""
    return model_create("padic", p=5, minpoly=[1, 0, 1], residue=2)


small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements(model, zero_bias=True):
    coords = st.lists(small_rats, min_size=model.degree, max_size=model.degree)
    strat = coords.map(model.from_coords)
    if zero_bias:
        strat = st.one_of(st.just(model.zero), st.integers(-3, 3).map(model), strat)
    return strat


def vectors(model, n):
    return st.lists(elements(model), min_size=n, max_size=n)


def generator_sets(model, n, max_rows=None):
    return st.lists(vectors(model, n), max_size=max_rows if max_rows is not None else n + 1)


F = Fraction
