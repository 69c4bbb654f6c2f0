"""Line-crossing ("Japanese") multiplication: arithmetic, diagrams, traces."""

from .digits import DigitString, format_digits, parse_digits, to_value
from .errors import BaseMismatch, EmptyInput, InvalidBase, InvalidConfig, InvalidDigit, LinecrossError
from .gridmult import (
    binomial_terms,
    build_grid,
    diagonal_sums,
    grid_multiply,
    resolve_carries,
    schoolbook_multiply,
    schoolbook_rows,
    unary_count_oracle,
)
from .diagram import DiagramConfig, layout_lines, compute_intersections, cluster_readout, render_svg, render_ascii
from .trace import build_trace, serialize_trace, parse_trace
from .opcount import count_ops, compare_ops

__version__ = "0.1.0"
