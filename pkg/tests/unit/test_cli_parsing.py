from fractions import Fraction

import pytest

from src.cli.parsing import (
    parse_element,
    parse_matrix,
    parse_monomial,
    parse_operator,
    parse_pair,
    parse_positive_matrix,
    parse_rational,
    parse_weight_two,
)
from src.exact import Mat
from src.hecke import FormValue, HeckeElem
from src.hopf import UNIT, H1Elem, PBWMonomial, delta2_prime
from src.models.values import HeckeElemModel


def test_parse_matrix():
    assert parse_matrix(" 1, 2,3 ,4") == Mat(1, 2, 3, 4)
    for bad in ("1,2,3", "1,2,3,x", "1.5,0,0,1"):
        with pytest.raises(ValueError):
            parse_matrix(bad)
    with pytest.raises(ValueError):
        parse_positive_matrix("0,1,1,0")


def test_parse_rationals():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_pair("1/3,0") == (Fraction(1, 3), Fraction(0))
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_pair("1,2,3")


def test_parse_monomial():
    assert parse_monomial("1") == UNIT
    assert parse_monomial("d1^2 d3 X^2 Y") == PBWMonomial((2, 0, 1), 2, 1)
    assert parse_monomial("Y d1 d1") == PBWMonomial((2,), 0, 1)
    with pytest.raises(ValueError):
        parse_monomial("d0")
    with pytest.raises(ValueError):
        parse_monomial("Z")


def test_parse_operator():
    assert parse_operator("d2p") == delta2_prime()
    assert parse_operator("X") == H1Elem.of(PBWMonomial((), 1, 0))


def test_parse_weight_two():
    assert parse_weight_two("0").is_zero()
    assert parse_weight_two("eta4") == FormValue.form("eta4")
    assert parse_weight_two("2,0,0,1") == FormValue.mu(Mat(2, 0, 0, 1))
    assert parse_weight_two("1,1,0,1").is_zero()


def test_parse_element():
    assert parse_element("E4") == HeckeElem.from_form(FormValue.form("E4"))
    assert parse_element("const") == HeckeElem.identity()
    F = HeckeElem.single(Mat(1, 1, 0, 2), FormValue.form("Delta"))
    assert parse_element(HeckeElemModel.from_value(F).model_dump_json()) == F
    with pytest.raises(ValueError):
        parse_element("E8")
