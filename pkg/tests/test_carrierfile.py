from fractions import Fraction

import pytest

from superinterval.carrierfile import load_carrier
from superinterval.errors import ParseError


def test_minimal_carrier():
    cf = load_carrier('domain = "z5"\ndims = [1, 3]\ncol_cuts = [1]\n')
    assert cf.carrier.size() == 125
    assert cf.carrier.op == "add" and cf.seeds is None


def test_pool_pattern_and_generators():
    cf = load_carrier(
        'domain = "unit"\ndims = [1, 2]\nop = "max"\npool = ["0", "1/2", "1"]\n'
        'pattern = [[1, 1]]\n'
    )
    assert cf.carrier.size() == 3
    cf = load_carrier('domain = "z7"\ndims = [2, 2]\nrow_cuts = [1]\ngenerators = ["1 2; --- ; 3 4"]\n')
    assert cf.generators[0].partition.row_cuts == (1,)
    assert cf.generators[0].flat() == (1, 2, 3, 4)


def test_eta_table():
    cf = load_carrier('domain = "nat"\ndims = [1, 1]\n[eta]\nrule = "classes"\neta_zero = "0"\n')
    assert cf.eta.rule == "classes" and cf.eta.eta_zero == Fraction(0)


def test_map_rule_terms():
    cf = load_carrier(
        'domain = "nat"\ndims = [1, 2]\n[map]\ndims = [1, 2]\nrule = [["2*a2 + a1", "3"]]\n'
    )
    src = cf.carrier.matrix((4, 5))
    assert cf.map_rule(src).flat() == (14, 3)


@pytest.mark.parametrize(
    "text",
    [
        "not toml = = 1",
        'dims = [1, 1]',
        'domain = "z5"',
        'domain = "z5"\ndims = [1, 2]\npool = [0.5]',
        'domain = "nat"\ndims = [1, 2]\n[map]\ndims = [1, 2]\nrule = [["a3", "a1"]]',
        'domain = "nat"\ndims = [1, 2]\n[map]\ndims = [1, 2]\nrule = [["b1", "a1"]]',
        'domain = "nat"\ndims = [1, 2]\n[map]\ndims = [1, 2]\n',
        'domain = "q"\ndims = [1, 2]',
    ],
)
def test_bad_carrier_files(text):
    with pytest.raises(ParseError):
        load_carrier(text)
