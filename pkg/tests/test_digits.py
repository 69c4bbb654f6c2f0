import pytest
from hypothesis import given, strategies as st

from linecross import DigitString, format_digits, parse_digits, to_value
from linecross.errors import EmptyInput, InvalidBase, InvalidDigit


@pytest.mark.parametrize("text, base, digits", [
    ("21", 10, (2, 1)),
    ("0007", 10, (7,)),
    ("ff", 16, (15, 15)),
    ("FF", 16, (15, 15)),
    ("0", 10, (0,)),
    ("000", 2, (0,)),
    ("  101 ", 2, (1, 0, 1)),
])
def test_parse_digits(text, base, digits):
    assert parse_digits(text, base).digits == digits


def test_parse_hex_value_matches_positional_expansion():
    assert to_value(parse_digits("ff", 16)) == 15 * 16 + 15


@pytest.mark.parametrize("text, base, exc", [
    ("", 10, EmptyInput),
    ("   ", 10, EmptyInput),
    ("zz", 10, InvalidDigit),
    ("12a", 10, InvalidDigit),
    ("2", 2, InvalidDigit),
    ("-5", 10, InvalidDigit),
    ("1.5", 10, InvalidDigit),
    ("10", 1, InvalidBase),
    ("10", 17, InvalidBase),
])
def test_parse_errors(text, base, exc):
    with pytest.raises(exc) as info:
        parse_digits(text, base)
    assert exc.__name__ in str(info.value)


@pytest.mark.parametrize("digits, base, text", [
    ((4, 8, 3), 10, "483"),
    ((0,), 10, "0"),
    ((15, 15), 16, "ff"),
])
def test_format_digits(digits, base, text):
    assert format_digits(DigitString(digits, base)) == text


@pytest.mark.parametrize("digits, value", [
    ((2, 1), 21),
    ((0,), 0),
    ((1, 2, 3, 4, 5, 6, 7, 8), 12345678),
])
def test_to_value(digits, value):
    assert to_value(DigitString(digits)) == value


def test_constructor_rejects_invalid_states():
    with pytest.raises(EmptyInput):
        DigitString(())
    with pytest.raises(InvalidDigit):
        DigitString((0, 1))
    with pytest.raises(InvalidDigit):
        DigitString((10,), 10)
    with pytest.raises(InvalidBase):
        DigitString((1,), 20)


def test_from_int_and_from_digits():
    assert DigitString.from_int(255, 16).digits == (15, 15)
    assert DigitString.from_int(0, 7).digits == (0,)
    assert DigitString.from_digits([0, 0, 3, 0]).digits == (3, 0)
    assert DigitString.from_digits([0, 0]).digits == (0,)


@st.composite
def digit_text(draw):
    base = draw(st.integers(2, 16))
    symbols = "0123456789abcdef"[:base]
    text = draw(st.text(alphabet=symbols, min_size=1, max_size=32))
    return text, base


@given(digit_text())
def test_round_trip(case):
    text, base = case
    assert format_digits(parse_digits(text, base)) == (text.lstrip("0") or "0")


@given(digit_text())
def test_value_matches_independent_evaluation(case):
    text, base = case
    expected = sum(int(ch, 16) * base ** k for k, ch in enumerate(reversed(text)))
    assert to_value(parse_digits(text, base)) == expected
    assert to_value(parse_digits(text, base)) == int(text, base)
