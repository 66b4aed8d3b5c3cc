"""Trapezoidal fuzzy numbers and the m_lambda measure on threshold events.

The m_lambda measure blends possibility and necessity,
``m(A) = lam * Pos(A) + (1 - lam) * Nec(A)``, with ``Nec(A) = 1 - Pos(A^c)``.
Only events of the form ``{xi <= x}`` and ``{xi >= x}`` are supported.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Union

__all__ = [
    "Lambda",
    "LambdaLike",
    "TrapezoidalFuzzyNumber",
    "as_lambda",
    "membership",
    "possibility_leq",
    "possibility_geq",
    "necessity_leq",
    "necessity_geq",
    "credibility_leq",
    "m_lambda_leq",
    "m_lambda_geq",
]


@dataclass(frozen=True, order=True)
class Lambda:
    """Optimism weight in [0, 1]. ``0.5`` recovers the credibility measure."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"lambda must lie in [0, 1], got {self.value!r}")
        object.__setattr__(self, "value", v)

    def __float__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Lambda":
        """Parse ``"0.25"`` or a simple fraction such as ``"1/3"``."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return cls(float(Fraction(int(num), int(den))))
            return cls(float(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse lambda value {text!r}") from exc


LambdaLike = Union[Lambda, float]


def as_lambda(lam: LambdaLike) -> float:
    """Validate ``lam`` and return it as a plain float."""
    if isinstance(lam, Lambda):
        return lam.value
    if not isinstance(lam, Real):
        raise TypeError(f"lambda must be a real number, got {type(lam).__name__}")
    return Lambda(lam).value


@dataclass(frozen=True)
class TrapezoidalFuzzyNumber:
    """Trapezoidal fuzzy number ``(r1, r2, r3, r4)`` with ``r1 <= r2 <= r3 <= r4``.

    Membership is 0 outside ``[r1, r4]``, 1 on the core ``[r2, r3]`` and linear
    on the two shoulders. ``r2 == r3`` gives a triangular number and
    ``r1 == r4`` a crisp one.

    The alternate ``(a, b, alpha, beta)`` parametrisation has core ``[a, b]``
    and support ``[a - alpha, b + beta]``; see :meth:`from_abab`.
    """

    r1: float
    r2: float
    r3: float
    r4: float

    def __post_init__(self):
        rs = tuple(float(r) for r in (self.r1, self.r2, self.r3, self.r4))
        if any(r != r or r in (float("inf"), float("-inf")) for r in rs):
            raise ValueError(f"trapezoid parameters must be finite, got {rs}")
        if not rs[0] <= rs[1] <= rs[2] <= rs[3]:
            raise ValueError(f"need r1 <= r2 <= r3 <= r4, got {rs}")
        for name, r in zip(("r1", "r2", "r3", "r4"), rs):
            object.__setattr__(self, name, r)

    @classmethod
    def from_abab(cls, a, b, alpha, beta) -> "TrapezoidalFuzzyNumber":
        if alpha < 0 or beta < 0:
            raise ValueError(f"alpha and beta must be >= 0, got {alpha}, {beta}")
        return cls(a - alpha, a, b, b + beta)

    @classmethod
    def triangular(cls, left, peak, right) -> "TrapezoidalFuzzyNumber":
        return cls(left, peak, peak, right)

    @classmethod
    def crisp(cls, value) -> "TrapezoidalFuzzyNumber":
        return cls(value, value, value, value)

    @property
    def a(self) -> float:
        return self.r2

    @property
    def b(self) -> float:
        return self.r3

    @property
    def alpha(self) -> float:
        return self.r2 - self.r1

    @property
    def beta(self) -> float:
        return self.r4 - self.r3

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.r1, self.r2, self.r3, self.r4)

    def as_abab(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.alpha, self.beta)

    @property
    def is_triangular(self) -> bool:
        return self.r2 == self.r3

    @property
    def is_crisp(self) -> bool:
        return self.r1 == self.r4

    @property
    def is_positive(self) -> bool:
        return self.r1 > 0

    # Component-wise arithmetic. Valid for nonnegative scalars only, which is
    # all the linearity of the expectation needs.
    def __add__(self, other):
        if not isinstance(other, TrapezoidalFuzzyNumber):
            return NotImplemented
        return TrapezoidalFuzzyNumber(
            self.r1 + other.r1, self.r2 + other.r2, self.r3 + other.r3, self.r4 + other.r4
        )

    def __mul__(self, s):
        if not isinstance(s, Real):
            return NotImplemented
        if s < 0:
            raise ValueError("only nonnegative scaling keeps r1 <= ... <= r4")
        return TrapezoidalFuzzyNumber(self.r1 * s, self.r2 * s, self.r3 * s, self.r4 * s)

    __rmul__ = __mul__

    def membership(self, x: float) -> float:
        return membership(self, x)


def membership(D: TrapezoidalFuzzyNumber, x: float) -> float:
    """Membership degree of ``x``; collapsed shoulders take the plateau value."""
    if x < D.r1 or x > D.r4:
        return 0.0
    if D.r2 <= x <= D.r3:
        return 1.0
    if x < D.r2:
        return (x - D.r1) / (D.r2 - D.r1)
    return (D.r4 - x) / (D.r4 - D.r3)


# Possibility of threshold events: sup of the membership over the event.
# Strict events ({xi < x}, {xi > x}) are the complements used for necessity.

def possibility_leq(D: TrapezoidalFuzzyNumber, x: float) -> float:
    if x < D.r1:
        return 0.0
    if x >= D.r2:
        return 1.0
    return (x - D.r1) / (D.r2 - D.r1)


def _possibility_lt(D: TrapezoidalFuzzyNumber, x: float) -> float:
    if x <= D.r1:
        return 0.0
    if x > D.r2:
        return 1.0
    # r1 < x <= r2, so the shoulder has positive width
    return (x - D.r1) / (D.r2 - D.r1)


def possibility_geq(D: TrapezoidalFuzzyNumber, x: float) -> float:
    if x > D.r4:
        return 0.0
    if x <= D.r3:
        return 1.0
    return (D.r4 - x) / (D.r4 - D.r3)


def _possibility_gt(D: TrapezoidalFuzzyNumber, x: float) -> float:
    if x >= D.r4:
        return 0.0
    if x < D.r3:
        return 1.0
    return (D.r4 - x) / (D.r4 - D.r3)


def necessity_leq(D: TrapezoidalFuzzyNumber, x: float) -> float:
    return 1.0 - _possibility_gt(D, x)


def necessity_geq(D: TrapezoidalFuzzyNumber, x: float) -> float:
    return 1.0 - _possibility_lt(D, x)


def credibility_leq(D: TrapezoidalFuzzyNumber, x: float) -> float:
    return 0.5 * (possibility_leq(D, x) + necessity_leq(D, x))


def m_lambda_leq(D: TrapezoidalFuzzyNumber, lam: LambdaLike, x: float) -> float:
    """``m_lambda(xi <= x)`` in closed piecewise form.

    0 below r1, ``lam (x - r1)/(r2 - r1)`` on the left shoulder, ``lam`` on the
    core, ``[lam (r4 - x) + x - r3]/(r4 - r3)`` on the right shoulder and 1
    from r4 on. Right-continuous where a shoulder has zero width.
    """
    lam = as_lambda(lam)
    r1, r2, r3, r4 = D.r1, D.r2, D.r3, D.r4
    if x >= r4:
        return 1.0
    if x < r1:
        return 0.0
    if x < r2:
        return lam * (x - r1) / (r2 - r1)
    if x < r3:
        return lam
    return (lam * (r4 - x) + x - r3) / (r4 - r3)


def m_lambda_geq(D: TrapezoidalFuzzyNumber, lam: LambdaLike, x: float) -> float:
    """``m_lambda(xi >= x)``: nonincreasing, 1 up to r1 and 0 past r4."""
    lam = as_lambda(lam)
    return lam * possibility_geq(D, x) + (1.0 - lam) * necessity_geq(D, x)
