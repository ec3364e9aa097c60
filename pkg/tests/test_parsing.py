import pytest
from hypothesis import given

from supercliff import (
    Multivector,
    ParseError,
    format_multivector,
    parse_multivector,
)
from conftest import multivectors


def test_parse_examples():
    m = parse_multivector("1 + 2*e1*e3", 3)
    assert m.coeffs == {0: 1.0 + 0j, 0b101: 2.0 + 0j}
    assert parse_multivector("(0,1)*e2", 2).coeffs == {0b10: 1j}
    assert parse_multivector("0", 3).coeffs == {}


def test_parse_rejects_non_increasing_indices():
    with pytest.raises(ParseError) as err:
        parse_multivector("e2*e1", 2)
    assert "increasing" in str(err.value)
    assert err.value.pos == 3


def test_parse_rejects_out_of_range_index():
    with pytest.raises(ParseError) as err:
        parse_multivector("e4", 3)
    assert "out of range" in str(err.value)


def test_parse_reports_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_multivector("1 + + 2", 2)
    assert err.value.pos == 4
    with pytest.raises(ParseError):
        parse_multivector("1 2", 2)
    with pytest.raises(ParseError):
        parse_multivector("(1,2", 2)
    with pytest.raises(ParseError):
        parse_multivector("", 2)


def test_leading_sign_and_accumulation():
    assert parse_multivector("-e1", 2).coeffs == {0b01: -1.0 + 0j}
    assert parse_multivector("-2.5*e1 + e1", 2).coeffs == {0b01: -1.5 + 0j}
    assert parse_multivector("1 - 1", 2).coeffs == {}


def test_greedy_float_lexing():
    # 2e3 is the float 2000, not 2*e3
    assert parse_multivector("2e3", 3).coeffs == {0: 2000.0 + 0j}
    assert parse_multivector("2*e3", 3).coeffs == {0b100: 2.0 + 0j}


def test_format_examples():
    m = Multivector(3, {0: 1.0, 0b101: 2.0})
    assert format_multivector(m) == "1.0 + 2.0*e1*e3"
    assert format_multivector(Multivector.zero(3)) == "0"
    assert format_multivector(Multivector(2, {0b10: 1j})) == "(0.0,1.0)*e2"
    assert format_multivector(Multivector(2, {0b01: -1.0})) == "-e1"


def test_format_chops_small_values():
    m = Multivector(2, {0: 1.0 + 1e-15j, 0b01: 1e-13})
    assert format_multivector(m, sig_digits=12, chop=1e-12) == "1"
    assert format_multivector(Multivector(2, {0b01: 1e-13}), sig_digits=12, chop=1e-12) == "0"


@given(multivectors(4))
def test_round_trip_identity(m):
    assert parse_multivector(format_multivector(m), m.dim) == m


@given(multivectors(3))
def test_display_form_stays_parseable(m):
    text = format_multivector(m, sig_digits=12, chop=1e-12)
    reparsed = parse_multivector(text, m.dim)
    assert reparsed.dim == m.dim
