"""The plethystic pipeline against explicit linear algebra on small pieces."""

from fractions import Fraction

import pytest

from charband.dk import gr_t, kt_character
from charband.oracle import decompose_traces, kt_piece, quadratic_lie_piece


@pytest.mark.parametrize("k,s,j", [(2, 2, 1), (3, 0, 2), (3, 1, 2), (3, 2, 1), (4, 1, 2), (4, 0, 3)])
def test_kriz_totaro_pieces(k, s, j):
    N = 2 * j + s
    F = kt_character("odd", k, s, N)
    got = {kk: v for kk, v in F.coefficient((N, j + s)).items() if sum(kk[1]) == k and sum(kk[0]) == s}
    assert got == kt_piece(k, s, j)


@pytest.mark.parametrize("k,s,j", [(2, 2, 2), (2, 3, 1), (3, 1, 2), (3, 2, 2), (4, 0, 3), (4, 1, 2)])
def test_quadratic_lie_pieces(k, s, j):
    N = 2 * j + s
    assert gr_t(k, s, N).get(s, k, N) == quadratic_lie_piece(k, s, j)


def test_oracle_cells_behind_the_corrections():
    assert quadratic_lie_piece(2, 3, 1) == {((3,), (1, 1)): 1, ((2, 1), (2,)): 1, ((2, 1), (1, 1)): 1, ((1, 1, 1), (2,)): 1}
    assert quadratic_lie_piece(2, 4, 1)[((2, 2), (2,))] == 2


def test_kt_arity_two_is_exterior_on_one_class():
    assert kt_piece(2, 0, 1) == {((), (2,)): 1}


def test_trace_decomposition_of_regular_representation():
    # the regular representation of S_2 has traces 2 (identity) and 0 (swap)
    traces = {((), (1, 1)): 2, ((), (2,)): 0}
    assert decompose_traces(traces, 0, 2) == {((), (2,)): Fraction(1), ((), (1, 1)): Fraction(1)}
