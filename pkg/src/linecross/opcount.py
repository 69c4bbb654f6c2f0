"""Measure how much work each multiplication method does.

Counts come from running the real arithmetic in :mod:`linecross.gridmult`
with a counter attached, never from closed-form formulas.

Conventions: a two-operand digit addition counts once; absorbing a non-zero
incoming carry (or emitting a digit of the final leftover carry) counts as
one carry operation instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digits import DigitString, format_digits
from .gridmult import check_same_base, grid_multiply, schoolbook_multiply

METHODS = ("grid", "schoolbook", "count")


@dataclass
class OpCount:
    method: str
    digit_multiplications: int = 0
    digit_additions: int = 0
    carry_operations: int = 0
    unary_increments: int = 0

    # hooks called from gridmult
    def multiply(self):
        self.digit_multiplications += 1

    def add(self):
        self.digit_additions += 1

    def carry(self):
        self.carry_operations += 1

    def increment(self):
        self.unary_increments += 1

    def to_dict(self):
        return {
            "method": self.method,
            "digitMultiplications": self.digit_multiplications,
            "digitAdditions": self.digit_additions,
            "carryOperations": self.carry_operations,
            "unaryIncrements": self.unary_increments,
        }


def count_ops(a: DigitString, b: DigitString, method: str = "grid") -> OpCount:
    """Run ``method`` on ``a * b`` with a fresh counter and return it."""
    check_same_base(a, b)
    counter = OpCount(method)
    if method == "grid":
        grid_multiply(a, b, counter)
    elif method == "schoolbook":
        schoolbook_multiply(a, b, counter)
    elif method == "count":
        grid_multiply(a, b, counter, unary=True)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return counter


@dataclass
class Comparison:
    factors: tuple
    base: int
    counts: dict

    @property
    def multiplications_equal(self):
        return (self.counts["grid"].digit_multiplications
                == self.counts["schoolbook"].digit_multiplications)

    @property
    def group_count(self):
        return len(self.factors[0]) * len(self.factors[1])

    def to_dict(self):
        return {
            "factors": [format_digits(f) for f in self.factors],
            "base": self.base,
            "groupCount": self.group_count,
            "methods": [self.counts[m].to_dict() for m in METHODS],
            "multiplicationsEqual": self.multiplications_equal,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_text(self):
        a, b = (format_digits(f) for f in self.factors)
        header = ("method", "mult", "add", "carry", "unary")
        rows = [header]
        for m in METHODS:
            c = self.counts[m]
            rows.append((m, str(c.digit_multiplications), str(c.digit_additions),
                         str(c.carry_operations), str(c.unary_increments)))
        widths = [max(len(r[k]) for r in rows) for k in range(len(header))]
        lines = [f"{a} x {b} (base {self.base}), {self.group_count} groups"]
        for r in rows:
            cells = [r[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(r[1:], widths[1:])]
            lines.append("  ".join(cells).rstrip())
        verdict = "equal" if self.multiplications_equal else "DIFFERENT"
        lines.append(f"grid vs schoolbook multiplications: {verdict}")
        return "\n".join(lines)


def compare_ops(a: DigitString, b: DigitString) -> Comparison:
    counts = {m: count_ops(a, b, m) for m in METHODS}
    return Comparison((a, b), a.base, counts)
