import pytest
from hypothesis import strategies as st

from linecross import DigitString, parse_digits


def digit_strings(base, min_len=1, max_len=12):
    """Normalized DigitString values of the given base."""
    lead = st.integers(1, base - 1)
    rest = st.lists(st.integers(0, base - 1), min_size=min_len - 1, max_size=max_len - 1)
    nonzero = st.builds(lambda h, t: DigitString((h, *t), base), lead, rest)
    return st.one_of(st.just(DigitString((0,), base)), nonzero)


@pytest.fixture
def p():
    """Shorthand parser: p("123") -> DigitString in base 10."""
    return lambda text, base=10: parse_digits(text, base)
