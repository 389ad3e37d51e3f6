import json
from fractions import Fraction

import pytest

from superinterval import NATURALS, from_rows, parse_matrix, render_matrix, row
from superinterval.errors import BadEndpoint, InconsistentCuts, ParseError
from superinterval.textio import from_json_obj, to_json_obj


def test_parse_comments_blank_lines_and_cuts():
    m = parse_matrix(
        """
        # a small matrix
        domain: nat
        1 2 | 3     # first row

        4 5 | 6
        -----
        7 8 | 9
        """
    )
    assert m.dims == (3, 3)
    assert m.partition.row_cuts == (2,) and m.partition.col_cuts == (2,)
    assert render_matrix(m) == "domain: nat\n1 2 | 3\n4 5 | 6\n---\n7 8 | 9"


def test_decimals_parse_exactly():
    m = parse_matrix("domain: unit\n0.31 | 0.1 1")
    assert m.flat() == (Fraction(31, 100), Fraction(1, 10), Fraction(1))
    assert render_matrix(m) == "domain: unit\n31/100 | 1/10 1"
    assert render_matrix(m, decimals=True) == "domain: unit\n0.31 | 0.1 1"


def test_repeating_decimals_stay_fractions():
    m = parse_matrix("domain: qplus\n1/3 7/4")
    assert render_matrix(m, decimals=True) == "domain: qplus\n1/3 1.75"


def test_inconsistent_column_cuts():
    with pytest.raises(InconsistentCuts) as info:
        parse_matrix("domain: nat\n1 | 2 3\n4 5 | 6")
    assert info.value.line == 3


def test_bad_endpoint_position():
    with pytest.raises(BadEndpoint) as info:
        parse_matrix("domain: z5\n1 2 7")
    assert (info.value.line, info.value.column) == (2, 5)
    with pytest.raises(BadEndpoint):
        parse_matrix("domain: nat\n1 -2")
    with pytest.raises(BadEndpoint):
        parse_matrix("domain: unit\n1.5")


@pytest.mark.parametrize(
    "text",
    [
        "1 2",
        "domain: nat",
        "domain: q\n1",
        "domain: nat\n| 1 2",
        "domain: nat\n1 2 |",
        "domain: nat\n1 | | 2",
        "domain: nat\n---\n1 2",
        "domain: nat\n1 2\n---",
        "domain: nat\n1 2\n---\n---\n3 4",
        "domain: nat\n1 2\n3",
    ],
)
def test_malformed_text(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_json_round_trip():
    m = from_rows("qplus", [["1/2", 3], [0, "5/4"]], [1], [1])
    obj = to_json_obj(m)
    assert obj == {
        "domain": "qplus",
        "dims": [2, 2],
        "row_cuts": [1],
        "col_cuts": [1],
        "endpoints": [["1/2", 3], [0, "5/4"]],
    }
    assert from_json_obj(json.loads(render_matrix(m, "json"))) == m


def test_unknown_format():
    with pytest.raises(ValueError):
        render_matrix(row(NATURALS, [1]), "csv")
