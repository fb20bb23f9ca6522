"""
permeq/core/permutation.py

Exact permutation arithmetic on {1, ..., n}.

Representation
--------------
A Permutation stores its image table 0-based (``table[i]`` is the image of
point ``i + 1``).  Every external surface (``__call__``, ``images``, cycle
notation, JSON) is 1-based; the translation happens only in this module and
in permeq.core.notation.

All operations are pure and every Permutation is immutable, so values can be
shared freely between threads and joblib workers.

Composition follows right-to-left application:
    compose(p, q)(i) == p(q(i))
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from permeq.config import get_settings
from permeq.exceptions import DegreeMismatchError, InputError

# Composites are re-validated up to this degree when the debug_checks setting is on.
_DEBUG_CHECK_MAX_DEGREE = 12


@dataclass(frozen=True)
class Cycle:
    """A cycle (c1, c2, ..., cr) of 1-based points, rotated min-first."""

    points: tuple[int, ...]

    @classmethod
    def of(cls, points: Iterable[int]) -> Cycle:
        pts = tuple(points)
        if not pts:
            raise InputError("A cycle needs at least one point.")
        if len(set(pts)) != len(pts):
            raise InputError(f"Cycle {pts} repeats a point.")
        start = pts.index(min(pts))
        return cls(pts[start:] + pts[:start])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[int]:
        return iter(self.points)

    @property
    def minimum(self) -> int:
        return self.points[0]

    def support(self) -> frozenset[int]:
        return frozenset(self.points)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.points)) + ")"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``table`` holds 0-based images."""

    table: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate(self.table)

    # ── Construction ─────────────────────────────────────

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from a 1-based image list: ``images[i-1]`` is the image of i."""
        return cls(tuple(int(v) - 1 for v in images))

    @classmethod
    def trusted(cls, table: Sequence[int]) -> Permutation:
        """Wrap a 0-based table already known to be a bijection.

        Hot loops (enumeration, composition) use this to skip validation;
        it still validates small degrees when the debug_checks setting is on.
        """
        perm = object.__new__(cls)
        object.__setattr__(perm, "table", tuple(table))
        if get_settings().debug_checks and len(perm.table) <= _DEBUG_CHECK_MAX_DEGREE:
            _validate(perm.table)
        return perm

    # ── Accessors ────────────────────────────────────────

    @property
    def degree(self) -> int:
        return len(self.table)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image table."""
        return tuple(v + 1 for v in self.table)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise InputError(f"Point {point} outside 1..{self.degree}.")
        return self.table[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.table))

    def cycles(self) -> list[Cycle]:
        """All cycles, fixed points included, each min-first, sorted by minimum."""
        seen = [False] * self.degree
        out: list[Cycle] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            pts: list[int] = []
            i = start
            while not seen[i]:
                seen[i] = True
                pts.append(i + 1)
                i = self.table[i]
            # start is the smallest unvisited point, so the cycle is already min-first
            out.append(Cycle(tuple(pts)))
        return out

    def canonical_key(self) -> tuple[tuple[int, ...], ...]:
        """Sort key shared by printing, hashing order and solution sets.

        The key is the tuple of non-trivial canonical cycles, so the identity
        sorts first.
        """
        return tuple(c.points for c in self.cycles() if len(c) > 1)

    def __str__(self) -> str:
        from permeq.core.notation import format_cycles  # noqa: PLC0415

        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({self}, n={self.degree})"


def _validate(table: tuple[int, ...]) -> None:
    n = len(table)
    if n < 1:
        raise InputError("Degree must be at least 1.")
    if sorted(table) != list(range(n)):
        raise InputError(f"Image table {tuple(v + 1 for v in table)} is not a bijection of 1..{n}.")


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def identity(n: int) -> Permutation:
    if n < 1:
        raise InputError(f"Degree must be at least 1, got {n}.")
    return Permutation(tuple(range(n)))


def from_cycles(cycles: Iterable[Iterable[int]], n: int) -> Permutation:
    """Build a permutation of degree *n* from disjoint 1-based cycles.

    Raises:
        InputError: If a point repeats or lies outside 1..n.
    """
    table = list(range(n))
    used: set[int] = set()
    for raw in cycles:
        pts = tuple(raw)
        for pt in pts:
            if not 1 <= pt <= n:
                raise InputError(f"Point {pt} outside 1..{n}.")
            if pt in used:
                raise InputError(f"Point {pt} appears in more than one cycle.")
            used.add(pt)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            table[a - 1] = b - 1
    return Permutation(tuple(table))


def cyclic(n: int) -> Permutation:
    """The n-cycle (1, 2, ..., n)."""
    return Permutation(tuple((i + 1) % n for i in range(n)))


# ---------------------------------------------------------------------------
# Group operations
# ---------------------------------------------------------------------------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. the map i ↦ p(q(i))."""
    _check_degrees(p, q)
    pt = p.table
    return Permutation.trusted(tuple(pt[v] for v in q.table))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p.table):
        inv[v] = i
    return Permutation.trusted(inv)


def power(p: Permutation, k: int) -> Permutation:
    """Return p^k for any integer k (square-and-multiply)."""
    if k < 0:
        return power(inverse(p), -k)
    result = tuple(range(p.degree))
    base = p.table
    while k:
        if k & 1:
            result = tuple(base[v] for v in result)
        base = tuple(base[v] for v in base)
        k >>= 1
    return Permutation.trusted(result)


def conjugate(p: Permutation, tau: Permutation) -> Permutation:
    """Return τ∘p∘τ⁻¹: the point τ(i) is sent to τ(p(i))."""
    _check_degrees(p, tau)
    out = [0] * p.degree
    tt = tau.table
    for i, v in enumerate(p.table):
        out[tt[i]] = tt[v]
    return Permutation.trusted(out)


def order(p: Permutation) -> int:
    """Least m >= 1 with p^m = 1, the lcm of the cycle lengths."""
    return math.lcm(*(len(c) for c in p.cycles()))


def restrict(p: Permutation, support: Iterable[int]) -> Permutation:
    """Agree with *p* on the p-invariant set *support*, identity elsewhere."""
    keep = {pt - 1 for pt in support}
    table = list(range(p.degree))
    for i in keep:
        if p.table[i] not in keep:
            raise InputError(f"Support is not invariant: {i + 1} maps to {p.table[i] + 1}.")
        table[i] = p.table[i]
    return Permutation.trusted(table)
