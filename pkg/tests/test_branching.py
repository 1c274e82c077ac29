import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charband.branching import (
    group_for_parity,
    lift,
    min_rank,
    operator_D,
    parity,
    restrict,
    trivial_multiplicity,
)
from charband.partitions import partitions, transpose
from charband.symfunc import SymElem, omega, s

_PARTS8 = [lam for n in range(9) for lam in partitions(n)]


def test_small_restrictions():
    assert restrict(s(1, 1), "Sp") == SymElem("sp", {(): 1, (1, 1): 1})
    assert restrict(s(2), "O") == SymElem("o", {(): 1, (2,): 1})
    assert restrict(s(2), "Sp") == SymElem("sp", {(2,): 1})


def test_trivial_multiplicities():
    assert trivial_multiplicity(s(1, 1), "Sp") == 1
    assert trivial_multiplicity(s(2), "Sp") == 0
    assert trivial_multiplicity(s(2, 2), "Sp") == 1
    assert trivial_multiplicity(s(2), "O") == 1


def test_operator_D_relabels():
    assert operator_D(s(2, 1), "Sp") == SymElem("sp", {(2, 1): 1})


def test_min_rank_and_parity():
    assert min_rank(s(2, 1, 1)) == 4
    assert parity(s(2, 1)) == "odd"
    assert parity(s(2, 2)) == "even"
    with pytest.raises(ValueError):
        parity(s(2) + s(1))


def test_group_for_parity():
    assert group_for_parity("odd") == "Sp"
    assert group_for_parity("even") == "O"


def test_bad_group_rejected():
    with pytest.raises(ValueError):
        restrict(s(1), "GL")


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.sampled_from(_PARTS8), st.integers(-3, 3), max_size=4), st.sampled_from(["Sp", "O"]))
def test_lift_inverts_restrict(terms, group):
    f = SymElem("s", terms)
    assert lift(restrict(f, group)) == f


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_PARTS8))
def test_omega_exchanges_symplectic_and_orthogonal(lam):
    sp = restrict(s(*lam), "Sp")
    o = restrict(omega(s(*lam)), "O")
    assert o == SymElem("o", {transpose(mu): c for mu, c in sp.items()})

