"""
permeq/analysis/d_range.py

The d-range F_d(α).

For α with cycle type ⟨g1, ..., gn⟩ and 1 <= d <= n,

    F_d(α) = { Σ_{d | j} q_j · j  :  0 <= q_j <= g_j }

i.e. every total length reachable by choosing whole cycles of α whose
lengths are multiples of d.  0 (the empty choice) is always a member.

d_range() runs a subset-sum over a Python int used as a bitset (bit s set
⇔ s reachable); d_range_naive() enumerates the definition directly and
serves as the oracle in tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from permeq.analysis.cycles import cycle_type
from permeq.core.permutation import Permutation
from permeq.exceptions import InputError


@dataclass(frozen=True)
class DRange:
    """F_d(α) as a sorted tuple of members."""

    d: int
    members: tuple[int, ...]

    def __contains__(self, value: object) -> bool:
        return value in self.members

    def __iter__(self):
        return iter(self.members)

    def as_list(self) -> list[int]:
        return list(self.members)


def _check_d(alpha: Permutation, d: int) -> None:
    if not 1 <= d <= alpha.degree:
        raise InputError(f"d must lie in 1..{alpha.degree}, got {d}.")


def d_range(alpha: Permutation, d: int) -> DRange:
    """Compute F_d(α) by bitset subset-sum over cycle lengths divisible by d."""
    _check_d(alpha, d)
    n = alpha.degree
    ctype = cycle_type(alpha)
    mask = (1 << (n + 1)) - 1
    reach = 1  # only the empty sum
    for length in range(d, n + 1, d):
        for _ in range(ctype.count(length)):
            reach = (reach | (reach << length)) & mask
    members = tuple(s for s in range(n + 1) if reach >> s & 1)
    return DRange(d=d, members=members)


def d_range_naive(alpha: Permutation, d: int) -> DRange:
    """F_d(α) straight from the definition (exponential; small n only)."""
    _check_d(alpha, d)
    ctype = cycle_type(alpha)
    lengths = [j for j in range(d, alpha.degree + 1, d) if ctype.count(j)]
    sums = {
        sum(q * j for q, j in zip(choice, lengths))
        for choice in product(*(range(ctype.count(j) + 1) for j in lengths))
    }
    return DRange(d=d, members=tuple(sorted(sums)))
