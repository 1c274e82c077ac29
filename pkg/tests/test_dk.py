"""Pipeline values.  Cells marked as corrected were checked against the brute-force
oracle in charband.oracle and are frozen here."""

from fractions import Fraction

import pytest

from charband import dk
from charband.dk import (
    ConsistencyError,
    conf_cohomology,
    der_char,
    family_from_text,
    family_to_text,
    gr_f,
    gr_t,
    kt_arity,
    koszul_dual,
    tab_ff_row,
    x1_series,
)
from charband.operads import lie_char
from charband.partitions import partitions
from charband.series import BiGradedSeries
from charband.symfunc import SymElem, lr_product, omega, s


def cell(k, lam, N_max=None):
    return {N: {nu: int(c) for nu, c in row.items()} for N, row in tab_ff_row(k, lam, N_max).items()}


# ------------------------------------------------------------------ gr f


def test_lowest_pieces():
    assert cell(2, ()) == {2: {(2,): 1}}
    assert cell(3, ()) == {4: {(1, 1, 1): 1}, 6: {(2, 1): 1}}
    assert cell(4, (), 8) == {6: {(2, 2): 1}, 8: {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1}}


def test_corrected_cells():
    assert cell(2, (1, 1, 1), 6) == {5: {(2,): 1}}
    assert cell(2, (2, 2), 6) == {6: {(2,): 2}}
    assert cell(5, (1,), 9) == {9: {nu: int(c) for nu, c in lie_char(5).items()}}


def test_k3_two_one_row():
    assert cell(3, (2, 1), 7) == {7: {(1, 1, 1): 1, (2, 1): 3, (3,): 1}}


def test_top_arity_rows():
    assert cell(5, (), 8) == {8: {(3, 1, 1): 1}}
    assert cell(6, (), 10) == {10: {(4, 2): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1}}


@pytest.mark.parametrize("k", [2, 3, 4])
def test_one_label_top_piece_is_lie(k):
    assert cell(k, (1,), 2 * k - 1)[2 * k - 1] == {nu: int(c) for nu, c in lie_char(k).items()}


def test_even_parity_transposes_first_slot():
    odd, even = gr_f(3, 3, 7, "odd"), gr_f(3, 3, 7, "even")
    assert even.entries == odd.transpose_first().entries


def test_gr_t_agrees_with_gr_f_in_arity_two():
    t = gr_t(2, 2, 6)
    f = gr_f(2, 2, 6)
    for key in f.keys():
        assert t.get(*key) == f.get(*key)


def test_negative_entries_raise(monkeypatch):
    bad = BiGradedSeries({2: {((), (2,)): -1}}, trunc=2, wmax=(0, 2))
    monkeypatch.setattr(dk, "gr_f_series", lambda k, s_max, N_max: bad)
    with pytest.raises(ConsistencyError):
        gr_f(2, 0, 2)


def test_koszul_dual_needs_odd():
    with pytest.raises(ValueError):
        koszul_dual(kt_arity("even", 2, 1, 4))


def test_family_text_round_trip():
    fam = gr_f(3, 2, 7)
    text = family_to_text(fam)
    back = family_from_text(text)
    assert back.entries == fam.entries
    assert family_to_text(back) == text


def test_family_text_rejects_orphan_lines():
    with pytest.raises(ValueError):
        family_from_text("T^2 : 1 s[2] (x) s[2]\n")


# -------------------------------------------------- configuration spaces


def conf_cell(k, lam, par="even"):
    return {N: {nu: int(c) for nu, c in row.items()} for N, row in conf_cohomology(k, par).row(lam, k).items()}


def test_conf_corrected_cells():
    assert conf_cell(2, ()) == {}
    assert conf_cell(2, (1,)) == {1: {(2,): 1}}
    assert conf_cell(3, (3,)) == {3: {(3,): 1}}
    assert conf_cell(3, (1, 1, 1)) == {3: {(1, 1, 1): 1}}
    assert conf_cell(4, (2, 1)) == {3: {(4,): 1, (3, 1): 2, (2, 2): 1, (2, 1, 1): 1}}


def _diag(m):
    return {(lam, lam): Fraction(1) for lam in partitions(m)}


def _pairs_product(a, b):
    out = {}
    for (m1, n1), c1 in a.items():
        for (m2, n2), c2 in b.items():
            for mu, x in lr_product(s(*m1), s(*m2)).items():
                for nu, y in lr_product(s(*n1), s(*n2)).items():
                    out[(mu, nu)] = out.get((mu, nu), 0) + c1 * c2 * x * y
    return {kk: v for kk, v in out.items() if v}


@pytest.mark.parametrize("k", range(2, 7))
def test_full_label_weight_is_the_diagonal(k):
    assert conf_cohomology(k).get(k, k, k) == _diag(k)


@pytest.mark.parametrize("k", range(2, 7))
def test_one_below_full_weight(k):
    expected = _pairs_product({((1,), (2,)): 1}, _diag(k - 2))
    assert conf_cohomology(k).get(k - 1, k, k - 1) == expected


def test_conf_parities_differ_by_transposition():
    odd, even = conf_cohomology(4, "odd"), conf_cohomology(4, "even")
    assert odd.entries == even.transpose_first().entries


# ------------------------------------------------------------ derivations


def test_derivations():
    assert der_char(1) == s(2, 1) + s(1, 1, 1)
    assert der_char(2) == s(3, 1) + s(2, 2) + s(2, 1, 1)
    assert der_char(1, "omega") == s(1, 1, 1)
    assert der_char(2, "omega") == s(2, 2)
    assert der_char(3, "omega") == s(3, 1, 1)
    assert der_char(4, "omega") == s(4, 2) + s(3, 1, 1, 1) + s(2, 2, 2)


def test_derivations_even_are_transposed():
    for k in range(1, 5):
        assert der_char(k, "omega", "even") == omega(der_char(k, "omega", "odd"))


def test_der_rejects_bad_input():
    with pytest.raises(ValueError):
        der_char(0)
    with pytest.raises(ValueError):
        der_char(1, "other")


# -------------------------------------------------------------------- X_1


def test_x1_before_restriction():
    res = x1_series("odd", 3)
    assert res.P_pre[1] == s(3)
    assert res.P_pre[2] == s(4) + s(4, 2) + s(6)


def test_x1_q_odd():
    Q = x1_series("odd", 3).Q
    assert Q[1] == SymElem("sp", {(1, 1, 1): 1})
    assert Q[2] == SymElem("sp", {(): 1, (1, 1): 1, (2, 2): 1})
    assert Q[3] == SymElem("sp", {(2, 1): 1, (3, 1, 1): 1})


def test_x1_qbar_parities_are_exchanged_by_omega():
    odd, even = x1_series("odd", 3), x1_series("even", 3)
    for N in odd.Qbar:
        assert omega(odd.Qbar[N]) == even.Qbar[N]


def test_x1_warns_past_validated_range():
    assert x1_series("odd", 3).warning is None
    assert x1_series("odd", 5).warning is not None


def test_unknown_parity():
    with pytest.raises(ValueError):
        gr_f(2, 1, 4, "neither")
