"""Factors as digit vectors in a configurable base (2..16)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import EmptyInput, InvalidBase, InvalidDigit

MIN_BASE = 2
MAX_BASE = 16

_SYMBOLS = "0123456789abcdef"


def check_base(base: int) -> int:
    if isinstance(base, bool) or not isinstance(base, int):
        raise InvalidBase(f"base must be an integer, got {base!r}")
    if not MIN_BASE <= base <= MAX_BASE:
        raise InvalidBase(f"base {base} outside [{MIN_BASE}, {MAX_BASE}]")
    return base


@dataclass(frozen=True)
class DigitString:
    """A non-negative integer as digits in ``base``, most significant first.

    Construction validates but does not normalize; use :func:`parse_digits`
    or :meth:`from_digits` to strip leading zeros.
    """

    digits: Tuple[int, ...]
    base: int = 10

    def __post_init__(self):
        check_base(self.base)
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise EmptyInput("a digit string needs at least one digit")
        for d in digits:
            if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d < self.base:
                raise InvalidDigit(f"digit {d!r} out of range for base {self.base}")
        if len(digits) > 1 and digits[0] == 0:
            raise InvalidDigit("leading zero in non-normalized digit string")

    @classmethod
    def from_digits(cls, digits: Iterable[int], base: int = 10) -> "DigitString":
        digits = list(digits)
        while len(digits) > 1 and digits[0] == 0:
            digits.pop(0)
        return cls(tuple(digits) or (0,), base)

    @classmethod
    def from_int(cls, value: int, base: int = 10) -> "DigitString":
        check_base(base)
        if value < 0:
            raise InvalidDigit("negative values are not supported")
        out = []
        while True:
            value, r = divmod(value, base)
            out.append(r)
            if not value:
                break
        return cls(tuple(reversed(out)), base)

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_digits(self)


def parse_digits(text: str, base: int = 10) -> DigitString:
    """Parse ``text`` as a digit string in ``base``.

    Letters a-f (either case) stand for 10-15. Leading zeros are stripped.
    """
    check_base(base)
    text = text.strip()
    if not text:
        raise EmptyInput("blank factor")
    digits = []
    for ch in text.lower():
        d = _SYMBOLS.find(ch)
        if d < 0 or d >= base:
            raise InvalidDigit(f"{ch!r} is not a digit in base {base}")
        digits.append(d)
    return DigitString.from_digits(digits, base)


def format_digits(d: DigitString) -> str:
    return "".join(_SYMBOLS[x] for x in d.digits)


def to_value(d: DigitString) -> int:
    value = 0
    for x in d.digits:
        value = value * d.base + x
    return value
