"""Exact radix representations: conversion, palindrome test, digit-wise scaling.

Values are plain Python ints (arbitrary precision); a representation is a base
together with its digit tuple, most-significant digit first, so that printed
forms compare byte-for-byte against reference tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

# Bases are capped so digit arithmetic stays in machine-word range on any
# backend; every base this library searches is far below the cap.
MAX_BASE = (1 << 63) - 1


def digits_lsf(n: int, base: int) -> list[int]:
    """Digits of n in ``base``, least-significant first; [0] for n = 0."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError(f"value must be non-negative, got {n}")
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return out


def digits_value(digits: Sequence[int], base: int) -> int:
    """Evaluate a most-significant-first digit sequence in ``base``."""
    acc = 0
    for d in digits:
        acc = acc * base + d
    return acc


@dataclass(frozen=True)
class Representation:
    """A base-b digit tuple, most-significant digit first.

    Invariants: 2 <= base <= MAX_BASE, every digit lies in [0, base), and the
    leading digit is nonzero except for the canonical zero representation (0).
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.base > MAX_BASE:
            raise ValueError(f"base {self.base} exceeds the 2**63 - 1 cap")
        if not self.digits:
            raise ValueError("digit tuple must be nonempty")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")
        if self.digits[0] == 0 and self.digits != (0,):
            raise ValueError("leading digit must be nonzero")

    @property
    def digit_count(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        return digits_value(self.digits, self.base)

    def __str__(self) -> str:
        return "(%s)_%d" % (",".join(map(str, self.digits)), self.base)


@dataclass(frozen=True)
class ScaledRepresentation:
    """A representation written as multiplier * core, expanded digit-wise.

    Valid only when multiplier * d < base for every core digit d, so the
    expansion is again a legal digit tuple in the same base.
    """

    multiplier: int
    core: Representation

    def __post_init__(self) -> None:
        if self.multiplier < 1:
            raise ValueError(f"multiplier must be >= 1, got {self.multiplier}")
        for d in self.core.digits:
            if self.multiplier * d >= self.core.base:
                raise ValueError(
                    f"scaled digit {self.multiplier}*{d} overflows base {self.core.base}"
                )

    def expand(self) -> Representation:
        return Representation(
            self.core.base, tuple(self.multiplier * d for d in self.core.digits)
        )

    def value(self) -> int:
        return self.multiplier * self.core.value()

    def __str__(self) -> str:
        if self.multiplier == 1:
            return str(self.core)
        return f"{self.multiplier}*{self.core}"


def to_digits(n: int, base: int) -> Representation:
    """Unique radix representation of n >= 0 in ``base``.

    >>> str(to_digits(2023, 16))
    '(7,14,7)_16'
    """
    if base > MAX_BASE:
        raise ValueError(f"base {base} exceeds the 2**63 - 1 cap")
    lsf = digits_lsf(n, base)
    return Representation(base, tuple(reversed(lsf)))


def from_digits(rep: Representation) -> int:
    """Value of a representation: sum of digit * base**position."""
    return digits_value(rep.digits, rep.base)


def is_palindrome(rep: Representation) -> bool:
    """True iff the digit tuple equals its reversal (single digits included)."""
    return rep.digits == rep.digits[::-1]


def reduce_leading_zeros(
    digits: Sequence[int], base: int
) -> tuple[int, Representation]:
    """Strip the z leading/trailing zeros from a palindromic digit sequence.

    Returns (z, core) with value(input) = base**z * value(core).  A palindrome
    has equal numbers of leading and trailing zeros, so any asymmetric zero
    padding means the input was not palindromic and is rejected.
    """
    digs = list(digits)
    if not digs:
        raise ValueError("digit sequence must be nonempty")
    for d in digs:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
    if digs != digs[::-1]:
        raise ValueError("digit sequence is not palindromic")
    if all(d == 0 for d in digs):
        return len(digs) - 1, Representation(base, (0,))
    z = 0
    while digs[z] == 0:
        z += 1
    core = digs[z:len(digs) - z]
    return z, Representation(base, tuple(core))


def try_scale(rep: Representation, alpha: int) -> Representation | None:
    """Digit-wise alpha-multiple of rep, or None when any digit overflows."""
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    scaled = tuple(alpha * d for d in rep.digits)
    if any(d >= rep.base for d in scaled):
        return None
    return Representation(rep.base, scaled)


def split_common_factor(rep: Representation) -> ScaledRepresentation:
    """Normal form multiplier * core with the digit gcd factored out.

    (3,9,9,3)_26 becomes 3*(1,3,3,1)_26; a gcd of 1 leaves rep unchanged.
    """
    g = math.gcd(*rep.digits)
    if g <= 1:
        return ScaledRepresentation(1, rep)
    core = Representation(rep.base, tuple(d // g for d in rep.digits))
    return ScaledRepresentation(g, core)
