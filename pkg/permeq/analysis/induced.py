"""
permeq/analysis/induced.py

How α acts on the structure of a solution y of α∘y∘α⁻¹ = y².

fixed_set_decomposition(alpha, H)
    An α-invariant set H is a union of whole cycles of α, so
    |H| ∈ F_1(α) (and |H| ∈ F_d(α) when every chosen length is a
    multiple of d).

induced_index_permutation(alpha, y, r)
    α permutes the base sets C_1, ..., C_t of the r-cycles of y; the
    induced permutation γ of the indices satisfies α(C_i) = C_γ(i).

descent_cycle(alpha, y, induced, index_cycle)
    For a d-cycle of γ = induced.gamma with gcd(2^d − 1, r) = 1, α has a
    d-cycle inside the union of those base sets.  The point is found
    constructively, which is what the triviality certificates rely on.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

import structlog

from permeq.analysis.cycles import cycle_decomposition
from permeq.analysis.d_range import d_range
from permeq.core.permutation import Cycle, Permutation, power
from permeq.exceptions import (
    DegreeMismatchError,
    InputError,
    NotFixedSetError,
    NotInducedError,
    PreconditionError,
    VerificationError,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class InducedPermutation:
    """γ = α^(r) acting on the indices of the r-cycle base sets of y.

    ``base_sets[i]`` (sorted points, ordered by minimum) is the 1-based
    index ``i + 1``; ``gamma`` is a Permutation of degree t_r.
    """

    r: int
    base_sets: tuple[tuple[int, ...], ...]
    gamma: Permutation


def fixed_set_decomposition(alpha: Permutation, points: Iterable[int]) -> list[Cycle]:
    """Return the cycles of α whose union is the α-invariant set *points*.

    Raises:
        InputError:       A point lies outside 1..n.
        NotFixedSetError: Some point of H escapes H under α.
    """
    support = set(points)
    for pt in sorted(support):
        if not 1 <= pt <= alpha.degree:
            raise InputError(f"Point {pt} outside 1..{alpha.degree}.")
        image = alpha(pt)
        if image not in support:
            raise NotFixedSetError(pt, image)

    cycles = [c for c in cycle_decomposition(alpha) if c.minimum in support]
    if len(support) not in d_range(alpha, 1) and support:
        raise VerificationError(f"|H| = {len(support)} is not in F_1(alpha).")
    return cycles


def base_sets(y: Permutation, r: int) -> tuple[tuple[int, ...], ...]:
    """Point sets of the r-cycles of *y*, each sorted, ordered by minimum."""
    return tuple(tuple(sorted(c.points)) for c in cycle_decomposition(y) if len(c) == r)


def induced_index_permutation(alpha: Permutation, y: Permutation, r: int) -> InducedPermutation:
    """Compute α^(r) for the r-cycles of *y*.

    Raises:
        PreconditionError: y has no r-cycle.
        NotInducedError:   α maps some base set onto a set that is not a base set.
    """
    if alpha.degree != y.degree:
        raise DegreeMismatchError(alpha.degree, y.degree)
    sets = base_sets(y, r)
    if not sets:
        raise PreconditionError(f"y has no cycle of length {r}")

    index_of = {frozenset(s): i for i, s in enumerate(sets)}
    gamma: list[int] = []
    for i, s in enumerate(sets):
        image = frozenset(alpha(pt) for pt in s)
        j = index_of.get(image)
        if j is None:
            raise NotInducedError(i + 1, s)
        gamma.append(j)

    return InducedPermutation(r=r, base_sets=sets, gamma=Permutation(tuple(gamma)))


def descent_cycle(
    alpha: Permutation,
    y: Permutation,
    induced: InducedPermutation,
    index_cycle: Cycle,
) -> Cycle | None:
    """Find a d-cycle of α inside the base sets named by *index_cycle*.

    Returns None when gcd(2^d − 1, r) != 1 (no conclusion is possible).

    Raises:
        VerificationError: The arithmetic guarantee failed, meaning y is not
            a solution of α∘y∘α⁻¹ = y².
    """
    r = induced.r
    d = len(index_cycle)
    mersenne = (pow(2, d, r) - 1) % r
    if math.gcd(mersenne, r) != 1:
        return None

    c1 = induced.base_sets[index_cycle.minimum - 1][0]
    target = power(alpha, d)(c1)

    # α^d(c1) = y^s(c1) for some 1 <= s <= r
    s, pt = 0, c1
    for step in range(1, r + 1):
        pt = y(pt)
        if pt == target:
            s = step
            break
    if s == 0:
        raise VerificationError(f"alpha^{d}({c1}) = {target} is not on the y-cycle of {c1}.")

    # (2^d − 1)·u + s ≡ 0 (mod r); u taken in 1..r
    u = (-s * pow(mersenne, -1, r)) % r or r
    start = power(y, u)(c1)
    orbit = [start]
    for _ in range(d - 1):
        orbit.append(alpha(orbit[-1]))
    if alpha(orbit[-1]) != start:
        raise VerificationError(f"Point {start} does not close a {d}-cycle of alpha.")

    logger.debug("descent_cycle_found", r=r, d=d, start=start)
    return Cycle.of(orbit)
