"""
permeq/core/notation.py

Cycle-notation text format.

Grammar (whitespace anywhere between tokens is ignored):

    product := "()" | cycle+
    cycle   := "(" point ("," point)* ")"
    point   := decimal integer in 1..n

Points not listed are fixed.  format_cycles() emits the canonical form:
each cycle min-first, cycles sorted by minimum, fixed points omitted, and
the identity printed as "()".  ``parse_cycles(format_cycles(p), n) == p``.
"""
from __future__ import annotations

import re

from permeq.core.permutation import Permutation
from permeq.exceptions import CycleParseError, InputError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[(),])|(?P<bad>\S))")


def _tokens(text: str) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:  # only trailing whitespace remains
            break
        if match.group("bad") is not None:
            raise CycleParseError("Unexpected character", match.group("bad"), match.start("bad"))
        kind = "num" if match.group("num") is not None else "sym"
        out.append((match.group(kind), match.start(kind)))
        pos = match.end()
    return out


def _parse_cycle_lists(text: str) -> list[list[tuple[int, str, int]]]:
    """Return cycles as lists of (point, token, position) triples."""
    tokens = _tokens(text)
    if not tokens:
        raise CycleParseError("Empty cycle notation", "", 0)

    cycles: list[list[tuple[int, str, int]]] = []
    i = 0
    while i < len(tokens):
        tok, pos = tokens[i]
        if tok != "(":
            raise CycleParseError("Expected '('", tok, pos)
        i += 1
        current: list[tuple[int, str, int]] = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise CycleParseError("Unclosed cycle", tok, pos)
            tok, pos = tokens[i]
            i += 1
            if tok == ")":
                if expect_point and current:
                    raise CycleParseError("Expected a point before ')'", tok, pos)
                break
            if expect_point:
                if not tok.isdigit():
                    raise CycleParseError("Expected a point", tok, pos)
                current.append((int(tok), tok, pos))
                expect_point = False
            else:
                if tok != ",":
                    raise CycleParseError("Expected ',' or ')'", tok, pos)
                expect_point = True
        cycles.append(current)
    return cycles


def infer_degree(text: str) -> int:
    """Largest point mentioned in *text* (at least 1)."""
    points = [pt for cyc in _parse_cycle_lists(text) for pt, _, _ in cyc]
    return max(points, default=1)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a product of disjoint cycles over 1..degree.

    Raises:
        CycleParseError: On malformed syntax, a point out of range, or a
            point that appears twice; the offending token is named.
    """
    if degree < 1:
        raise InputError(f"Degree must be at least 1, got {degree}.")
    cycles = _parse_cycle_lists(text)
    if any(not cyc for cyc in cycles) and len(cycles) > 1:
        raise CycleParseError("Empty cycle inside a product", "()", 0)

    table = list(range(degree))
    seen: set[int] = set()
    for cyc in cycles:
        for point, tok, pos in cyc:
            if not 1 <= point <= degree:
                raise CycleParseError(f"Point out of range 1..{degree}", tok, pos)
            if point in seen:
                raise CycleParseError("Duplicate point", tok, pos)
            seen.add(point)
        pts = [pt for pt, _, _ in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            table[a - 1] = b - 1
    return Permutation(tuple(table))


def format_cycles(p: Permutation) -> str:
    nontrivial = [c for c in p.cycles() if len(c) > 1]
    if not nontrivial:
        return "()"
    return "".join(str(c) for c in nontrivial)
