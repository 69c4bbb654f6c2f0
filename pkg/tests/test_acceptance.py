"""Exit criteria. Run with ``pytest tests/test_acceptance.py -s`` to see one
PASS/FAIL line per criterion."""

import contextlib
import random
import time
import xml.etree.ElementTree as ET

import pytest

from linecross import DigitString, parse_digits, to_value
from linecross.cli import run
from linecross.diagram import cluster_readout, cluster_sizes, layout_lines, render_svg
from linecross.gridmult import (
    binomial_terms,
    build_grid,
    diagonal_sums,
    grid_multiply,
    resolve_carries,
    schoolbook_multiply,
    unary_count_oracle,
)
from linecross.opcount import count_ops
from linecross.trace import build_trace, serialize_trace

from test_diagram import check_geometry
from test_trace import GOLDEN

SVG = "{http://www.w3.org/2000/svg}"


@contextlib.contextmanager
def criterion(n, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\nAC{n:<2} FAIL  {title}")
        raise
    elapsed = time.perf_counter() - start
    print(f"\nAC{n:<2} PASS  {title} ({elapsed:.2f}s)")


def d(text, base=10):
    return parse_digits(text, base)


def random_factor(rng, base, min_len, max_len):
    n = rng.randint(min_len, max_len)
    if n == 1:
        return DigitString((rng.randrange(base),), base)
    return DigitString((rng.randrange(1, base), *(rng.randrange(base) for _ in range(n - 1))), base)


def test_ac01_21x23():
    with criterion(1, "21x23: cells [[4,6],[2,3]], diagonals [4,8,3], result 483"):
        g = build_grid(d("21"), d("23"))
        assert g.as_lists() == [[4, 6], [2, 3]]
        s = diagonal_sums(g)
        assert list(s.sums) == [4, 8, 3]
        assert str(resolve_carries(s)[0]) == "483"
        assert str(grid_multiply(d("21"), d("23"))) == "483"


def test_ac02_123x321():
    with criterion(2, "123x321: diagonals [3,8,14,8,3], write 4 carry 1 mid-diagonal, result 39483"):
        s = diagonal_sums(build_grid(d("123"), d("321")))
        assert list(s.sums) == [3, 8, 14, 8, 3]
        result, ledger = resolve_carries(s)
        mid = next(e for e in ledger.entries if e.diagonal == 2)
        assert (mid.raw_sum, mid.written, mid.outgoing) == (14, 4, 1)
        assert str(result) == "39483"


def test_ac03_67x85():
    with criterion(3, "67x85: clusters {48,30,56,35}, carries 35/89/56, result 5695, golden trace"):
        a, b = d("67"), d("85")
        assert sorted(cluster_sizes(compute_points(a, b)).values()) == [30, 35, 48, 56]
        t = build_trace(a, b)
        chain = [(s.raw_sum + s.incoming_carry, s.written_digit, s.outgoing_carry) for s in t.carry_steps]
        assert chain == [(35, 5, 3), (89, 9, 8), (56, (5, 6), 0)]
        assert t.result == "5695"
        golden = (GOLDEN / "trace_67x85.json").read_bytes()
        for _ in range(3):
            assert (serialize_trace(build_trace(a, b)) + "\n").encode() == golden


def compute_points(a, b):
    return layout_lines(a, b).intersections


def test_ac04_binomial():
    with criterion(4, "binomial_terms(21,23) = [(4,2),(8,1),(3,0)]"):
        assert [tuple(t) for t in binomial_terms(d("21"), d("23"))] == [(4, 2), (8, 1), (3, 0)]


def test_ac05_chessboard():
    with criterion(5, "8x8 digits -> 64 multiplications; group count = d1*d2 on 200 random pairs"):
        assert count_ops(d("12345678"), d("87654321"), "grid").digit_multiplications == 64
        rng = random.Random(5)
        a8, b8 = random_factor(rng, 10, 8, 8), random_factor(rng, 10, 8, 8)
        assert count_ops(a8, b8, "grid").digit_multiplications == 64
        for _ in range(200):
            base = rng.choice([2, 10, 16])
            a, b = random_factor(rng, base, 1, 12), random_factor(rng, base, 1, 12)
            assert build_grid(a, b).group_count == len(a) * len(b)
            assert build_trace(a, b).group_count == len(a) * len(b)
            assert count_ops(a, b, "grid").digit_multiplications == len(a) * len(b)


def test_ac06_method_equivalence():
    with criterion(6, "1000 random pairs, bases 2/10/16: grid = schoolbook = exact product"):
        rng = random.Random(6)
        for k in range(1000):
            base = (2, 10, 16)[k % 3]
            a, b = random_factor(rng, base, 1, 12), random_factor(rng, base, 1, 12)
            g, s = grid_multiply(a, b), schoolbook_multiply(a, b)
            exact = DigitString.from_int(to_value(a) * to_value(b), base)
            assert g.digits == s.digits == exact.digits


def test_ac07_geometry():
    with criterion(7, "100 random pairs (1-4 digits): clusters = cells, bands = diagonals, separated"):
        rng = random.Random(7)
        for _ in range(100):
            a, b = random_factor(rng, 10, 1, 4), random_factor(rng, 10, 1, 4)
            check_geometry(a, b)


def test_ac08_unary_oracle():
    with criterion(8, "unary_count_oracle(i,j) = i*j for all digit pairs of bases 2..16"):
        for base in range(2, 17):
            for i in range(base):
                for j in range(base):
                    assert unary_count_oracle(i, j) == i * j


@pytest.mark.parametrize("a, b", [("21", "23"), ("123", "321"), ("67", "85")])
def test_ac09_svg(a, b):
    with criterion(9, f"SVG {a}x{b}: solid lines = digit sums, circles = crossings, byte-stable"):
        fa, fb = d(a), d(b)
        text = render_svg(layout_lines(fa, fb))
        root = ET.fromstring(text.encode())
        solid = [e for e in root.iter(f"{SVG}line") if e.get("class") == "solid"]
        circles = list(root.iter(f"{SVG}circle"))
        assert len(solid) == sum(fa.digits) + sum(fb.digits)
        assert len(circles) == sum(fa.digits) * sum(fb.digits) == len(layout_lines(fa, fb).intersections)
        assert all(render_svg(layout_lines(fa, fb)) == text for _ in range(3))


def test_ac10_cli(capsys):
    with criterion(10, "CLI: 483 / 39483 / 5695; malformed input exit 1; missing args exit 2"):
        for a, b, want in [("21", "23", "483"), ("123", "321", "39483"), ("67", "85", "5695")]:
            assert run(["multiply", a, b]) == 0
            assert capsys.readouterr().out == want + "\n"
        assert run(["multiply", "zz", "3", "--base", "10"]) == 1
        assert "InvalidDigit" in capsys.readouterr().err
        assert run(["multiply", "21"]) == 2
        assert run(["multiply"]) == 2
        capsys.readouterr()
