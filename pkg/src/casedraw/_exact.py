"""Exact arithmetic helpers.

All incidence decisions use :class:`fractions.Fraction`.  Tunnel lengths are
square roots of rationals, so sums of them are carried as :class:`RootSum`,
which compares exactly: a float fast path, then a rational-square grouping
that decides equality, then high-precision evaluation for the sign.
"""
from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from functools import total_ordering

import mpmath

_REL_EPS = 1e-9


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions, Decimals and decimal/ratio strings exactly.

    Binary floats are rejected on purpose; ``0.1`` must arrive as a string.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(Decimal(text))
    if isinstance(value, float):
        raise TypeError(f"refusing binary float {value!r}; pass a decimal string")
    raise TypeError(f"cannot interpret {value!r} as an exact number")


def is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    return rn * rn == n and rd * rd == d


def rational_sqrt(q: Fraction) -> Fraction:
    """Square root of a rational that is a perfect square."""
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def sqrt_float(q: Fraction) -> float:
    return math.sqrt(q.numerator / q.denominator) if q.denominator < 2**1000 else float(
        mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator)
    )


@total_ordering
class RootSum:
    """An exact value ``sum(c_i * sqrt(r_i))`` with rational ``c_i``, ``r_i >= 0``."""

    __slots__ = ("terms", "value")

    def __init__(self, terms=()):
        self.terms = tuple((Fraction(c), Fraction(r)) for c, r in terms if c and r)
        self.value = math.fsum(float(c) * sqrt_float(r) for c, r in self.terms)

    @classmethod
    def sqrt(cls, radicand) -> "RootSum":
        return cls(((1, radicand),))

    @classmethod
    def zero(cls) -> "RootSum":
        return cls(())

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, RootSum):
            return NotImplemented
        return RootSum(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return RootSum((-c, r) for c, r in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __float__(self):
        return self.value

    def canonical(self) -> tuple:
        """Group terms whose radicands differ by a rational square.

        Groups have linearly independent square roots over the rationals, so
        two sums are equal exactly when their canonical forms agree.
        """
        groups: list[list] = []  # [representative radicand, coefficient]
        for c, r in self.terms:
            for g in groups:
                ratio = r / g[0]
                if is_square(ratio):
                    g[1] += c * rational_sqrt(ratio)
                    break
            else:
                groups.append([r, c])
        return tuple((rep, coef) for rep, coef in groups if coef != 0)

    def sign(self) -> int:
        magnitude = sum(abs(float(c)) * sqrt_float(r) for c, r in self.terms)
        if abs(self.value) > _REL_EPS * max(1.0, magnitude):
            return 1 if self.value > 0 else -1
        canon = self.canonical()
        if not canon:
            return 0
        dps = 60
        while True:
            with mpmath.workdps(dps):
                total = mpmath.fsum(
                    mpmath.mpf(c.numerator) / c.denominator * mpmath.sqrt(mpmath.mpf(r.numerator) / r.denominator)
                    for r, c in canon
                )
                if abs(total) > mpmath.mpf(10) ** (-(dps - 10)):
                    return 1 if total > 0 else -1
            dps *= 4

    def _cmp(self, other) -> int:
        if not isinstance(other, RootSum):
            if other == math.inf:
                return -1
            other = RootSum(((1 if other >= 0 else -1, Fraction(other) ** 2),))
        diff = self.value - other.value
        scale = max(1.0, abs(self.value), abs(other.value))
        if abs(diff) > _REL_EPS * scale:
            return 1 if diff > 0 else -1
        return (self - other).sign()

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    __hash__ = None

    def __repr__(self):
        parts = " + ".join(f"{c}*sqrt({r})" for c, r in self.terms) or "0"
        return f"RootSum({parts} ~ {self.value:.12g})"
