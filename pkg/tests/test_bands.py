import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charband.bands import (
    MAX_BAND,
    bk_band,
    cancellation_feasible,
    check_cancellation,
    check_hand_values,
    check_restriction,
    check_top_degree,
    euler_characteristic,
    federer_layer,
    fourth_band_complex,
    suffix_sums,
    verify_suite,
)
from charband.branching import trivial_multiplicity
from charband.partitions import transpose


def test_band_one():
    band = bk_band(1)
    assert band.coefficients((1,)) == [2, 2]
    assert band.coefficients((3,)) == [0, 1, 1]
    assert band.coefficients((1, 1, 1)) == [1]


def test_band_three_extra_row():
    band = bk_band(3)
    assert band.coefficients((3,)) == [3, 6, 5, 3, 1]
    assert band.euler[(3,)] == 0


def test_band_three_euler_of_three_one_one():
    assert bk_band(3).euler[(3, 1, 1)] == 1


def test_band_four_trivial_row():
    assert bk_band(4).coefficients(()) == [3, 15, 21, 10, 4, 2]


def test_band_four_unchecked_rows():
    band = bk_band(4)
    assert band.unchecked == {lam for lam in band.rows if sum(lam) == 6}
    assert (2, 1, 1) not in band.unchecked


def test_min_rank_and_reflection():
    assert [bk_band(r).min_g for r in range(1, 5)] == [4, 4, 6, 7]
    assert [bk_band(r).parity for r in range(1, 5)] == [-1, 1, -1, 1]


def test_band_range():
    with pytest.raises(ValueError):
        bk_band(MAX_BAND + 1)
    with pytest.raises(ValueError):
        bk_band(0)


def test_suffix_sums():
    assert suffix_sums([3, 6, 5, 3, 1]) == [3 - 6 + 5 - 3 + 1, 6 - 5 + 3 - 1, 5 - 3 + 1, 3 - 1, 1]
    assert cancellation_feasible([9, 24, 37, 30, 11, 1])
    assert not cancellation_feasible([1, 3])


def test_euler_characteristic():
    assert euler_characteristic({(1, 1): 3, (0, 2): 15, (-1, 3): 21}) == 9


def test_layer_invariants_in_band_two():
    inv = {k: sum(trivial_multiplicity(e.character, "Sp") for e in federer_layer(k, 2)) for k in (2, 3, 4)}
    assert inv == {2: 0, 3: 1, 4: 1}
    (e3,) = [e for e in federer_layer(3, 2) if trivial_multiplicity(e.character, "Sp")]
    assert (e3.units, e3.defect) == (2, -1)
    (e4,) = [e for e in federer_layer(4, 2) if trivial_multiplicity(e.character, "Sp")]
    assert (e4.units, e4.defect) == (2, -2)


def test_fourth_band_complex():
    c = fourth_band_complex()
    assert c.dims == (2, 4, 10, 21, 15, 3)
    assert c.degrees[0] == (4, -9) and c.degrees[-1] == (4, -4)
    assert c.euler == 1
    assert c.eigenvalue == 1


def test_checks_pass():
    assert check_hand_values().passed
    assert check_top_degree(4).passed
    assert check_restriction(5).passed
    assert check_cancellation(4).passed


def test_verify_suite_subset():
    assert all(r.passed for r in verify_suite(max_k=3, max_band=1))


@settings(max_examples=8, deadline=None)
@given(st.integers(1, MAX_BAND))
def test_rows_have_the_parity_of_the_band(r):
    # -id acts by (-1)^|lambda| on V_lambda and by (-1)^r on the band
    band = bk_band(r)
    assert all(sum(lam) % 2 == r % 2 for lam in band.rows)
    if r % 2:
        assert band.row(()) == {}


@settings(max_examples=8, deadline=None)
@given(st.integers(1, MAX_BAND))
def test_even_dimension_computed_directly_matches_transposition(r):
    odd = bk_band(r, "odd")
    even = bk_band(r, "even", direct=True)
    assert even.rows == {transpose(lam): cell for lam, cell in odd.rows.items()}
    assert even.row(()) == odd.row(())
