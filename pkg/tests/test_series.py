from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charband.partitions import partitions
from charband.series import (
    BiGradedSeries,
    GradedSym,
    TruncationError,
    exp_free,
    exp_free_split,
    log_free,
    parse_series_text,
    plethysm,
    series_inverse,
    series_text,
)
from charband.symfunc import SymElem, e, h, s


def test_square_of_an_odd_class_is_exterior():
    g = GradedSym({1: s(1)}, trunc=4, wmax=4, unit_parity=1)
    assert plethysm(h(2), g).coefficient(2) == s(1, 1)
    assert plethysm(e(2), g).coefficient(2) == s(2)


def test_square_of_an_even_class_is_symmetric():
    g = GradedSym({2: s(1)}, trunc=4, wmax=4, unit_parity=1)
    assert plethysm(h(2), g).coefficient(4) == s(2)


def test_free_algebra_on_odd_generator():
    g = GradedSym({1: s(1)}, trunc=4, wmax=4, unit_parity=1)
    F = exp_free(g)
    assert F.coefficient(3) == s(1, 1, 1)
    assert F.coefficient(4) == s(1, 1, 1, 1)


def test_exp_split_agrees_with_signed_exp():
    g = GradedSym({1: s(2), 2: s(1) + s(1, 1)}, trunc=6, wmax=6, unit_parity=1)
    assert exp_free(g) == exp_free_split(g)


def test_inverse_times_series_is_one():
    F = exp_free(GradedSym({1: s(1), 2: s(2)}, trunc=6, wmax=6, unit_parity=1))
    assert F * series_inverse(F) == F.unit()


def test_exp_rejects_constant_term():
    with pytest.raises(TruncationError):
        exp_free(GradedSym({0: s()}, trunc=3, wmax=3))


def test_log_needs_unit_constant():
    with pytest.raises(TruncationError):
        log_free(GradedSym({1: s(1)}, trunc=3, wmax=3))


def test_series_text_round_trip():
    F = exp_free(GradedSym({1: s(1), 2: Fraction(1, 2) * s(2)}, trunc=4, wmax=4, unit_parity=1))
    assert parse_series_text(series_text(F), "graded", wmax=4, unit_parity=1) == F


def test_bigraded_coefficients_survive_basis_changes():
    B = BiGradedSeries({2: {((1,), (2,)): 1, ((1, 1), (1, 1)): 3}}, trunc=3, wmax=(3, 3))
    assert B.coefficient(2) == {((1,), (2,)): 1, ((1, 1), (1, 1)): 3}


_PARTS = [lam for n in range(1, 4) for lam in partitions(n)]


@st.composite
def generator_series(draw):
    terms = {}
    for N in draw(st.lists(st.integers(1, 5), min_size=1, max_size=3, unique=True)):
        d = draw(st.dictionaries(st.sampled_from(_PARTS), st.integers(-2, 3), min_size=1, max_size=2))
        f = SymElem("s", d)
        if f:
            terms[N] = f
    if not terms:
        terms = {1: s(1)}
    return GradedSym(terms, trunc=10, wmax=6, unit_parity=draw(st.integers(0, 1)))


@settings(max_examples=15, deadline=None)
@given(generator_series())
def test_exp_then_log_is_identity(g):
    assert log_free(exp_free(g)) == g


@settings(max_examples=15, deadline=None)
@given(generator_series())
def test_exp_turns_sums_into_products(g):
    assert exp_free(g + g) == exp_free(g) * exp_free(g)
