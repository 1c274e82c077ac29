import json

import pytest

from charband.bands import bk_band
from charband.report import band_cell_text, band_table, fmt_partition, parse_row, t_cell_text


def test_partition_formatting():
    assert fmt_partition((2, 1, 1)) == "(2,1^2)"
    assert fmt_partition(()) == "(0)"
    assert fmt_partition((3, 3)) == "(3^2)"


@pytest.mark.parametrize("text", ["2,1,1", "(2,1^2)", "2 1 1", " (2, 1, 1) "])
def test_parse_row(text):
    assert parse_row(text) == (2, 1, 1)


def test_parse_empty_row():
    assert parse_row("0") == () and parse_row("()") == ()


def test_parse_row_rejects_nonsense():
    with pytest.raises(ValueError):
        parse_row("1,2")
    with pytest.raises(ValueError):
        parse_row("a")


def test_cells():
    assert t_cell_text({3: {(1, 1): 1}, 5: {(1, 1): 1}}) == "T^3 s[1,1] + T^5 s[1,1]"
    assert t_cell_text({}) == "0"
    assert band_cell_text({(1, 1): 3, (0, 2): 15, (-1, 3): 21}) == "3 t*l + 15 l^2 + 21 t^-1 l^3"


def test_band_formats():
    band = bk_band(2)
    text = band_table(band, "text", [()])
    assert text.splitlines()[1] == "(0): t*l + t^-1 l^3 + t^-2 l^4 | euler 1"
    rows = json.loads(band_table(band, "json", [()]))
    assert rows[0] == {"lambda": "(0)", "t_exp": 1, "l_exp": 1, "dim": 1}
    assert band_table(band, "csv", [()]).splitlines()[0] == "lambda,t_exp,l_exp,dim"
