"""Line-crossing multiplication as arithmetic.

The diagram's clusters are the cells of a partial-product grid; clusters
that line up share a place value and are the grid's anti-diagonals. Summing
each anti-diagonal and carrying from the units end gives the product.

Every operation takes an optional ``counter`` (see :mod:`linecross.opcount`)
which is told about each digit multiplication, addition, carry and unary
increment as it happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from .digits import DigitString
from .errors import BaseMismatch


def check_same_base(a: DigitString, b: DigitString) -> int:
    if a.base != b.base:
        raise BaseMismatch(f"factors in base {a.base} and base {b.base}")
    return a.base


@dataclass(frozen=True)
class PartialProductGrid:
    """``cells[i][j] = a.digits[i] * b.digits[j]`` (rows follow ``a``)."""

    cells: Tuple[Tuple[int, ...], ...]
    base: int
    factor_a: DigitString
    factor_b: DigitString

    @property
    def shape(self):
        return len(self.factor_a), len(self.factor_b)

    @property
    def group_count(self):
        rows, cols = self.shape
        return rows * cols

    def as_lists(self):
        return [list(row) for row in self.cells]

    def transpose(self) -> "PartialProductGrid":
        cells = tuple(zip(*self.cells))
        return PartialProductGrid(cells, self.base, self.factor_b, self.factor_a)


@dataclass(frozen=True)
class DiagonalSums:
    """Anti-diagonal sums, most significant first.

    ``sums[k]`` collects the cells with ``i + j == k``; the last entry is
    the units place.
    """

    sums: Tuple[int, ...]
    base: int

    def __len__(self):
        return len(self.sums)

    @property
    def top(self):
        """Index of the units diagonal."""
        return len(self.sums) - 1


class CarryEntry(NamedTuple):
    diagonal: int
    raw_sum: int
    incoming: int
    written: int
    outgoing: int

    @property
    def total(self):
        return self.raw_sum + self.incoming


@dataclass(frozen=True)
class CarryLedger:
    """Carry bookkeeping, one entry per diagonal, units diagonal first.

    ``overflow`` holds the digits (most significant first) that the carry
    left over after the most significant diagonal expands into.
    """

    entries: Tuple[CarryEntry, ...]
    overflow: Tuple[int, ...]
    base: int

    def value(self) -> int:
        """Reconstruct the product from the written digits alone."""
        top = len(self.entries) - 1
        total = 0
        for e in self.entries:
            total += e.written * self.base ** (top - e.diagonal)
        shift = self.base ** len(self.entries)
        for d in reversed(self.overflow):
            total += d * shift
            shift *= self.base
        return total


class PolynomialTerm(NamedTuple):
    coefficient: int
    power: int


class PartialProduct(NamedTuple):
    product: int
    shift: int


def unary_count_oracle(da: int, db: int, counter=None) -> int:
    """Count the crossings of ``da`` lines with ``db`` lines one at a time.

    No multiplication is performed: the result is reached purely by
    repeated increments, which is what counting dots on the diagram does.
    """
    if da < 0 or db < 0:
        raise ValueError("digit counts must be non-negative")
    count = 0
    for _ in range(da):
        for _ in range(db):
            count += 1
            if counter is not None:
                counter.increment()
    return count


def build_grid(a: DigitString, b: DigitString, counter=None, *, unary=False) -> PartialProductGrid:
    """Partial-product grid of ``a`` and ``b``.

    With ``unary=True`` every cell is obtained by :func:`unary_count_oracle`
    instead of a digit multiplication.
    """
    base = check_same_base(a, b)
    rows = []
    for x in a.digits:
        row = []
        for y in b.digits:
            if unary:
                row.append(unary_count_oracle(x, y, counter))
            else:
                if counter is not None:
                    counter.multiply()
                row.append(x * y)
        rows.append(tuple(row))
    return PartialProductGrid(tuple(rows), base, a, b)


def diagonal_sums(g: PartialProductGrid, counter=None) -> DiagonalSums:
    rows, cols = g.shape
    sums: List[Optional[int]] = [None] * (rows + cols - 1)
    for i, row in enumerate(g.cells):
        for j, cell in enumerate(row):
            k = i + j
            if sums[k] is None:
                sums[k] = cell
            else:
                if counter is not None:
                    counter.add()
                sums[k] += cell
    return DiagonalSums(tuple(sums), g.base)


def resolve_carries(s: DiagonalSums, counter=None) -> Tuple[DigitString, CarryLedger]:
    """Turn diagonal sums into digits, carrying from the units end leftward."""
    base = s.base
    entries = []
    carry = 0
    for k in range(s.top, -1, -1):
        raw = s.sums[k]
        total = raw
        if carry:
            if counter is not None:
                counter.carry()
            total += carry
        outgoing, written = divmod(total, base)
        entries.append(CarryEntry(k, raw, carry, written, outgoing))
        carry = outgoing
    overflow = []
    while carry:
        if counter is not None:
            counter.carry()
        carry, d = divmod(carry, base)
        overflow.append(d)
    overflow.reverse()
    digits = overflow + [e.written for e in reversed(entries)]
    return DigitString.from_digits(digits, base), CarryLedger(tuple(entries), tuple(overflow), base)


def grid_multiply(a: DigitString, b: DigitString, counter=None, *, unary=False) -> DigitString:
    grid = build_grid(a, b, counter, unary=unary)
    result, _ = resolve_carries(diagonal_sums(grid, counter), counter)
    return result


def binomial_terms(a: DigitString, b: DigitString) -> List[PolynomialTerm]:
    """Product as a polynomial in the base, one term per diagonal.

    ``21 * 23`` is ``(2d + 1u)(2d + 3u) = 4d^2 + 8du + 3u^2``, i.e.
    ``[(4, 2), (8, 1), (3, 0)]``.
    """
    s = diagonal_sums(build_grid(a, b))
    return [PolynomialTerm(c, s.top - k) for k, c in enumerate(s.sums)]


def schoolbook_rows(a: DigitString, b: DigitString) -> List[List[PartialProduct]]:
    """Long-multiplication rows with each digit product kept whole.

    Row ``r`` multiplies ``a`` by the ``r``-th digit of ``b`` counted from
    the units end. Entries run most significant first; ``shift`` is the
    total place-value exponent of the product.
    """
    check_same_base(a, b)
    na, nb = len(a), len(b)
    rows = []
    for r in range(nb):
        y = b.digits[nb - 1 - r]
        rows.append([PartialProduct(x * y, (na - 1 - i) + r) for i, x in enumerate(a.digits)])
    return rows


def column_sums(rows: List[List[PartialProduct]]) -> List[int]:
    """Sum bracketed schoolbook products by shift, most significant first."""
    width = 1 + max(p.shift for row in rows for p in row)
    cols = [0] * width
    for row in rows:
        for p in row:
            cols[width - 1 - p.shift] += p.product
    return cols


def schoolbook_multiply(a: DigitString, b: DigitString, counter=None) -> DigitString:
    """Long multiplication with carries resolved inside each row."""
    base = check_same_base(a, b)
    acc: List[int] = []  # units first
    for r, y in enumerate(reversed(b.digits)):
        row = []  # units first
        carry = 0
        for x in reversed(a.digits):
            if counter is not None:
                counter.multiply()
            p = x * y
            if carry:
                if counter is not None:
                    counter.carry()
                p += carry
            carry, d = divmod(p, base)
            row.append(d)
        while carry:
            carry, d = divmod(carry, base)
            row.append(d)
        if not acc:
            acc = [0] * r + row
            continue
        carry = 0
        for pos, d in enumerate(row, start=r):
            if pos < len(acc):
                if counter is not None:
                    counter.add()
                total = acc[pos] + d
            else:
                total = d
            if carry:
                if counter is not None:
                    counter.carry()
                total += carry
            carry, acc_d = divmod(total, base)
            if pos < len(acc):
                acc[pos] = acc_d
            else:
                acc.append(acc_d)
        pos = r + len(row)
        while carry:
            if counter is not None:
                counter.carry()
            if pos < len(acc):
                carry, acc[pos] = divmod(acc[pos] + carry, base)
            else:
                carry, d = divmod(carry, base)
                acc.append(d)
            pos += 1
    return DigitString.from_digits(reversed(acc), base)
