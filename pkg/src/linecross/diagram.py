"""Geometry of the line-crossing diagram and its SVG / ASCII renderings.

Canonical frame (all lengths integers, positions exact ``Fraction``):

* factor ``a``, digit group ``i``, strand ``s``: the line ``y = x + c`` with
  ``c = -(i * G + s * L)``;
* factor ``b``, digit group ``j``, strand ``t``: the line ``y = -x + c`` with
  ``c = (len(b) - 1 - j) * G + t * L``.

A crossing of group ``i`` with group ``j`` then sits at height
``((len(b) - 1 - (i + j)) * G + (t - s) * L) / 2``, so every cluster on the
same anti-diagonal lands in one horizontal band: ``y`` is the readout axis.
The SVG draws the readout axis left to right with the units band on the
right.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .digits import DigitString, format_digits
from .errors import InvalidConfig
from .gridmult import PartialProductGrid, check_same_base, diagonal_sums, resolve_carries

Point = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class DiagramConfig:
    """Spacing and annotation options, in SVG user units.

    ``group_spacing=None`` picks ``3 * (base - 1) * line_spacing``, which keeps
    clusters apart for every base up to 16.
    """

    line_spacing: int = 10
    group_spacing: Optional[int] = None
    marker_radius: float = 2.5
    show_counts: bool = False
    show_bands: bool = False

    def resolved(self, base: int) -> "DiagramConfig":
        """Return a copy with ``group_spacing`` filled in and validated."""
        g = self.group_spacing
        if g is None:
            g = 3 * (base - 1) * self.line_spacing
        cfg = DiagramConfig(self.line_spacing, g, self.marker_radius,
                            self.show_counts, self.show_bands)
        cfg.validate(base)
        return cfg

    def validate(self, base: int):
        lsp, g = self.line_spacing, self.group_spacing
        for name, v in (("line_spacing", lsp), ("group_spacing", g)):
            if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
                raise InvalidConfig(f"{name} must be a positive integer, got {v!r}")
        if not self.marker_radius > 0:
            raise InvalidConfig("marker_radius must be positive")
        if g <= (base - 1) * lsp:
            raise InvalidConfig(
                f"group_spacing {g} must exceed (base-1)*line_spacing = {(base - 1) * lsp}")
        # a cluster spans at most `extent` along each line direction; points of
        # different clusters must be farther apart than any two in one cluster
        extent = (base - 2) * lsp
        if (g - extent) ** 2 <= 2 * extent ** 2:
            raise InvalidConfig(
                f"group_spacing {g} too small to keep base-{base} clusters separated")


@dataclass(frozen=True)
class Line:
    """One drawn line ``y = slope * x + offset`` between two endpoints."""

    family: str  # "a" or "b"
    group: int
    strand: int
    slope: int
    offset: int
    placeholder: bool
    start: Point
    end: Point


@dataclass(frozen=True)
class IntersectionPoint:
    position: Point
    cluster: Tuple[int, int]

    @property
    def diagonal(self):
        return self.cluster[0] + self.cluster[1]


@dataclass(frozen=True)
class ReadoutBand:
    diagonal: int
    points: Tuple[IntersectionPoint, ...]

    @property
    def count(self):
        return len(self.points)


@dataclass(frozen=True)
class LineDiagram:
    family_a: Tuple[Line, ...]
    family_b: Tuple[Line, ...]
    config: DiagramConfig
    factors: Tuple[DigitString, DigitString]

    @cached_property
    def intersections(self) -> List[IntersectionPoint]:
        return compute_intersections(self)

    @property
    def base(self):
        return self.factors[0].base

    def band_center(self, k: int) -> Fraction:
        nb = len(self.factors[1])
        return Fraction((nb - 1 - k) * self.config.group_spacing, 2)


def _offsets(digits, family, lsp, g):
    n = len(digits)
    out = []
    for idx, d in enumerate(digits):
        for strand in range(max(d, 1)):
            if family == "a":
                c = -(idx * g + strand * lsp)
            else:
                c = (n - 1 - idx) * g + strand * lsp
            out.append((idx, strand, c, d == 0))
    return out


def layout_lines(a: DigitString, b: DigitString, cfg: Optional[DiagramConfig] = None) -> LineDiagram:
    """Place one group of parallel lines per digit, ``a`` at +45 degrees and ``b`` at -45.

    A zero digit gets a single placeholder line that is drawn dashed and
    never counted.
    """
    base = check_same_base(a, b)
    cfg = (cfg or DiagramConfig()).resolved(base)
    lsp, g = cfg.line_spacing, cfg.group_spacing
    a_lines = _offsets(a.digits, "a", lsp, g)
    b_lines = _offsets(b.digits, "b", lsp, g)

    # every line runs from one line spacing before the first crossing to one past the last
    b_lo = min(c for *_, c, _ in b_lines) - lsp
    b_hi = max(c for *_, c, _ in b_lines) + lsp
    a_lo = min(c for *_, c, _ in a_lines) - lsp
    a_hi = max(c for *_, c, _ in a_lines) + lsp

    def a_point(ca, cb):
        return (Fraction(cb - ca, 2), Fraction(ca + cb, 2))

    family_a = tuple(
        Line("a", i, s, 1, c, ph, a_point(c, b_lo), a_point(c, b_hi))
        for i, s, c, ph in a_lines)
    family_b = tuple(
        Line("b", j, t, -1, c, ph, a_point(a_hi, c), a_point(a_lo, c))
        for j, t, c, ph in b_lines)
    return LineDiagram(family_a, family_b, cfg, (a, b))


def _intersect(p: Line, q: Line) -> Point:
    x = Fraction(q.offset - p.offset, p.slope - q.slope)
    return (x, p.slope * x + p.offset)


def compute_intersections(d: LineDiagram) -> List[IntersectionPoint]:
    points = []
    for p in d.family_a:
        if p.placeholder:
            continue
        for q in d.family_b:
            if q.placeholder:
                continue
            points.append(IntersectionPoint(_intersect(p, q), (p.group, q.group)))
    return points


def cluster_sizes(points: List[IntersectionPoint]) -> Dict[Tuple[int, int], int]:
    return dict(Counter(p.cluster for p in points))


def cluster_readout(points: List[IntersectionPoint], n_diagonals: Optional[int] = None) -> List[ReadoutBand]:
    """Group points by anti-diagonal, units band first.

    Pass ``n_diagonals`` to get empty bands for diagonals without any
    crossing (zero digits); otherwise only populated diagonals appear.
    """
    by_diag: Dict[int, List[IntersectionPoint]] = {}
    for p in points:
        by_diag.setdefault(p.diagonal, []).append(p)
    keys = range(n_diagonals) if n_diagonals is not None else by_diag
    return [ReadoutBand(k, tuple(by_diag.get(k, ()))) for k in sorted(keys, reverse=True)]


# --- SVG ---------------------------------------------------------------------

_PAD = 20


def _num(v) -> str:
    f = float(v)
    return str(int(f)) if f.is_integer() else repr(f)


def render_svg(d: LineDiagram) -> str:
    """Render ``d`` as a standalone SVG 1.1 document.

    Solid lines, dashed placeholders and one circle per crossing are always
    drawn. ``config.show_bands`` shades the readout bands and
    ``config.show_counts`` labels each band with its crossing count.
    """
    cfg = d.config
    lines = d.family_a + d.family_b
    points = d.intersections

    # readout axis (canonical y) runs left to right, units band on the right
    xs = [v for ln in lines for v in (ln.start[1], ln.end[1])]
    ys = [v for ln in lines for v in (ln.start[0], ln.end[0])]
    x0, x1 = max(xs), min(xs)
    y0, y1 = min(ys), max(ys)
    width = x0 - x1 + 2 * _PAD
    height = y1 - y0 + 2 * _PAD

    def screen(p: Point):
        return x0 - p[1] + _PAD, p[0] - y0 + _PAD

    n_diag = len(d.factors[0]) + len(d.factors[1]) - 1
    half_band = Fraction((d.base - 2) * cfg.line_spacing + cfg.line_spacing, 2)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<title>{format_digits(d.factors[0])} x {format_digits(d.factors[1])}'
        f' (base {d.base})</title>',
    ]
    if cfg.show_bands:
        out.append('<g id="bands" fill="#4a90d9" fill-opacity="0.12" stroke="none">')
        for k in range(n_diag):
            sx, _ = screen((Fraction(0), d.band_center(k)))
            out.append(f'<rect x="{_num(sx - half_band)}" y="0" width="{_num(2 * half_band)}" '
                       f'height="{_num(height)}" data-diagonal="{k}"/>')
        out.append("</g>")

    out.append('<g id="lines" stroke="#222" stroke-width="1.5" stroke-linecap="round">')
    for ln in lines:
        (ax, ay), (bx, by) = screen(ln.start), screen(ln.end)
        cls = "placeholder" if ln.placeholder else "solid"
        dash = ' stroke-dasharray="4 4" stroke="#999"' if ln.placeholder else ""
        out.append(f'<line class="{cls}" data-family="{ln.family}" data-group="{ln.group}" '
                   f'x1="{_num(ax)}" y1="{_num(ay)}" x2="{_num(bx)}" y2="{_num(by)}"{dash}/>')
    out.append("</g>")

    out.append('<g id="points" fill="#d0342c">')
    for p in points:
        cx, cy = screen(p.position)
        out.append(f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(cfg.marker_radius)}" '
                   f'data-cluster="{p.cluster[0]},{p.cluster[1]}"/>')
    out.append("</g>")

    if cfg.show_counts:
        out.append('<g id="counts" font-family="sans-serif" font-size="14" '
                   'text-anchor="middle" dominant-baseline="central" fill="#000" '
                   'stroke="#fff" stroke-width="3" paint-order="stroke">')
        mid_y = height / 2
        for band in reversed(cluster_readout(points, n_diag)):
            if band.points:
                sp = [screen(p.position) for p in band.points]
                cx = sum(x for x, _ in sp) / len(sp)
                cy = sum(y for _, y in sp) / len(sp)
            else:
                cx, _ = screen((Fraction(0), d.band_center(band.diagonal)))
                cy = mid_y
            out.append(f'<text x="{_num(round(cx, 2))}" y="{_num(round(cy, 2))}" '
                       f'data-diagonal="{band.diagonal}">{band.count}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- ASCII -------------------------------------------------------------------

def render_ascii(g: PartialProductGrid) -> str:
    """Bracketed partial products with diagonal sums and the carried result.

    67 x 85 renders as::

               8    5
          6 (48) (30)
          7 (56) (35)

        diagonal sums: 48 86 35
        result: 5695
    """
    cells = [[f"({c})" for c in row] for row in g.cells]
    w = max(len(c) for row in cells for c in row)
    a_syms = format_digits(g.factor_a)
    b_syms = format_digits(g.factor_b)
    lines = ["  " + " ".join(s.rjust(w) for s in b_syms)]
    for sym, row in zip(a_syms, cells):
        lines.append(f"{sym} " + " ".join(c.rjust(w) for c in row))
    sums = diagonal_sums(g)
    result, _ = resolve_carries(sums)
    lines.append("")
    lines.append("diagonal sums: " + " ".join(str(s) for s in sums.sums))
    lines.append("result: " + format_digits(result))
    return "\n".join(lines) + "\n"


def render_schoolbook_ascii(rows) -> str:
    """Schoolbook rows with every digit product in brackets, right-aligned by shift."""
    width = 1 + max(p.shift for row in rows for p in row)
    w = max(len(f"({p.product})") for row in rows for p in row)
    lines = []
    for row in rows:
        slots = [" " * w] * width
        for p in row:
            slots[width - 1 - p.shift] = f"({p.product})".rjust(w)
        lines.append(" ".join(slots).rstrip())
    return "\n".join(lines) + "\n"
