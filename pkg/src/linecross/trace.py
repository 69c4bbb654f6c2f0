"""Step-by-step record of one multiplication, with canonical JSON I/O.

``grid`` and ``diagonals`` are written most significant first, the way the
numbers are written on paper. ``carrySteps`` run units first, which is the
order they are carried out in. The step for the most significant diagonal
stores its whole total as a list of digits when that total does not fit in
one digit (``56`` becomes ``[5, 6]`` for 67 x 85).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import List, Tuple, Union

from .digits import DigitString, format_digits
from .gridmult import build_grid, column_sums, diagonal_sums, resolve_carries, schoolbook_rows, DiagonalSums

KEY_ORDER = ("factors", "base", "method", "grid", "diagonals", "carrySteps", "result", "groupCount")
STEP_KEYS = ("diagonalIndex", "rawSum", "incomingCarry", "writtenDigit", "outgoingCarry")


@dataclass(frozen=True)
class CarryStep:
    diagonal_index: int
    raw_sum: int
    incoming_carry: int
    written_digit: Union[int, Tuple[int, ...]]
    outgoing_carry: int

    def to_dict(self):
        w = self.written_digit
        return dict(zip(STEP_KEYS, (self.diagonal_index, self.raw_sum, self.incoming_carry,
                                    list(w) if isinstance(w, tuple) else w,
                                    self.outgoing_carry)))


@dataclass(frozen=True)
class StepTrace:
    factors: Tuple[str, str]
    base: int
    method: str
    grid: Tuple[Tuple[int, ...], ...]
    diagonals: Tuple[int, ...]
    carry_steps: Tuple[CarryStep, ...]
    result: str
    group_count: int

    def to_dict(self):
        values = (list(self.factors), self.base, self.method,
                  [list(r) for r in self.grid], list(self.diagonals),
                  [s.to_dict() for s in self.carry_steps], self.result, self.group_count)
        return dict(zip(KEY_ORDER, values))


def build_trace(a: DigitString, b: DigitString, method: str = "grid") -> StepTrace:
    """Trace ``a * b``.

    ``method`` only changes how the intermediate numbers are obtained:
    ``"count"`` fills the grid by unary counting and ``"schoolbook"`` takes
    the diagonals from the bracketed long-multiplication columns.
    """
    if method not in ("grid", "schoolbook", "count"):
        raise ValueError(f"unknown method {method!r}")
    grid = build_grid(a, b, unary=(method == "count"))
    if method == "schoolbook":
        sums = DiagonalSums(tuple(column_sums(schoolbook_rows(a, b))), a.base)
    else:
        sums = diagonal_sums(grid)
    result, ledger = resolve_carries(sums)

    steps = []
    for e in ledger.entries:
        if e.diagonal == 0 and ledger.overflow:
            steps.append(CarryStep(e.diagonal, e.raw_sum, e.incoming,
                                   ledger.overflow + (e.written,), 0))
        else:
            steps.append(CarryStep(e.diagonal, e.raw_sum, e.incoming, e.written, e.outgoing))
    return StepTrace(
        factors=(format_digits(a), format_digits(b)),
        base=a.base,
        method=method,
        grid=grid.cells,
        diagonals=sums.sums,
        carry_steps=tuple(steps),
        result=format_digits(result),
        group_count=grid.group_count,
    )


def serialize_trace(t: StepTrace) -> str:
    """Canonical compact JSON; identical traces give identical bytes."""
    return json.dumps(t.to_dict(), separators=(",", ":"), ensure_ascii=True)


def parse_trace(text: str) -> StepTrace:
    doc = json.loads(text)
    steps = []
    for s in doc["carrySteps"]:
        w = s["writtenDigit"]
        steps.append(CarryStep(s["diagonalIndex"], s["rawSum"], s["incomingCarry"],
                               tuple(w) if isinstance(w, list) else w, s["outgoingCarry"]))
    return StepTrace(
        factors=tuple(doc["factors"]),
        base=doc["base"],
        method=doc["method"],
        grid=tuple(tuple(r) for r in doc["grid"]),
        diagonals=tuple(doc["diagonals"]),
        carry_steps=tuple(steps),
        result=doc["result"],
        group_count=doc["groupCount"],
    )


def load_schema() -> dict:
    with resources.files(__package__).joinpath("trace.schema.json").open("r", encoding="utf-8") as fh:
        return json.load(fh)


def validate_trace(doc) -> None:
    """Raise ``jsonschema.ValidationError`` if ``doc`` (dict or JSON text) is not a valid trace."""
    import jsonschema

    if isinstance(doc, str):
        doc = json.loads(doc)
    jsonschema.validate(doc, load_schema())
