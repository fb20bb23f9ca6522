"""
permeq/exceptions.py

Error hierarchy shared by every permeq module.

PermEqError
    InputError              rejected input (also a ValueError)
        DegreeMismatchError
        CycleParseError
        PreconditionError
        NotFixedSetError
        NotInducedError
    GuardExceededError      a search would exceed its configured degree guard
    VerificationError       a result failed post-verification (internal bug)

The CLI maps InputError to exit status 2, GuardExceededError to 3 and
VerificationError to 4.
"""
from __future__ import annotations


class PermEqError(Exception):
    """Base class for all permeq errors."""


class InputError(PermEqError, ValueError):
    """The caller supplied an argument the operation cannot accept."""


class DegreeMismatchError(InputError):
    def __init__(self, left: int, right: int) -> None:
        super().__init__(f"Degree mismatch: {left} != {right}.")
        self.left = left
        self.right = right


class CycleParseError(InputError):
    """Malformed cycle notation; ``token`` and ``position`` locate the fault."""

    def __init__(self, message: str, token: str, position: int) -> None:
        super().__init__(f"{message} (token '{token}' at position {position})")
        self.token = token
        self.position = position


class PreconditionError(InputError):
    """A documented precondition of a construction does not hold."""

    def __init__(self, condition: str) -> None:
        super().__init__(f"Precondition violated: {condition}")
        self.condition = condition


class NotFixedSetError(InputError):
    def __init__(self, point: int, image: int) -> None:
        super().__init__(f"Set is not invariant: point {point} maps to {image} outside it.")
        self.point = point
        self.image = image


class NotInducedError(InputError):
    def __init__(self, index: int, base_set: tuple[int, ...]) -> None:
        super().__init__(
            f"Alpha does not map base set #{index} {set(base_set)} onto another base set."
        )
        self.index = index
        self.base_set = base_set


class GuardExceededError(PermEqError):
    """A search was refused because the degree exceeds its guard."""

    def __init__(self, guard: str, limit: int, degree: int, hint: str = "") -> None:
        message = f"Guard '{guard}' exceeded: degree {degree} > {limit}."
        if hint:
            message = f"{message} {hint}"
        super().__init__(message)
        self.guard = guard
        self.limit = limit
        self.degree = degree


class VerificationError(PermEqError, AssertionError):
    """A constructed or enumerated result failed its defining equation."""
