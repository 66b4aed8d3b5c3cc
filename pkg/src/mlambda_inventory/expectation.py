"""m_lambda expected values of trapezoidal demands and their reciprocals.

Each quantity has a closed form and a quadrature route that integrates the
defining Choquet-type integral

    E(xi) = int_{-inf}^0 [m(xi >= r) - 1] dr + int_0^inf m(xi >= r) dr

directly. The two routes are independent and are meant to check each other.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exceptions import NonpositiveSupport
from .fuzzy import LambdaLike, TrapezoidalFuzzyNumber, as_lambda, m_lambda_geq, m_lambda_leq
from .quadrature import integrate_piecewise

__all__ = [
    "ExpectationResult",
    "Method",
    "expected_value_closed",
    "expected_value_quadrature",
    "expected_reciprocal_closed",
    "expected_reciprocal_quadrature",
    "mean_reciprocal",
]

QUAD_REL_TOL = 1e-9


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class ExpectationResult:
    value: float
    method: Method
    est_abs_error: float = 0.0

    def __post_init__(self):
        if not self.est_abs_error >= 0:
            raise ValueError("est_abs_error must be nonnegative")

    def __float__(self):
        return self.value


def expected_value_closed(D: TrapezoidalFuzzyNumber, lam: LambdaLike) -> float:
    """``(1 - lam)(r1 + r2)/2 + lam (r3 + r4)/2``."""
    lam = as_lambda(lam)
    return (1.0 - lam) * (D.r1 + D.r2) / 2.0 + lam * (D.r3 + D.r4) / 2.0


def expected_value_quadrature(D: TrapezoidalFuzzyNumber, lam: LambdaLike) -> ExpectationResult:
    lam = as_lambda(lam)
    if D.r1 >= 0.0:
        # integrand is 1 on [0, r1]
        value, err = integrate_piecewise(
            lambda r: m_lambda_geq(D, lam, r), [D.r1, D.r2, D.r3, D.r4],
            rel_tol=QUAD_REL_TOL / 10,
        )
        value += D.r1
    elif D.r4 <= 0.0:
        # integrand m - 1 vanishes on [r4, 0]
        value, err = integrate_piecewise(
            lambda r: m_lambda_geq(D, lam, r) - 1.0, [D.r1, D.r2, D.r3, D.r4],
            rel_tol=QUAD_REL_TOL / 10,
        )
        value += D.r4
    else:
        pts = [D.r1, D.r2, D.r3, D.r4, 0.0]
        neg, e1 = integrate_piecewise(
            lambda r: m_lambda_geq(D, lam, r) - 1.0, [p for p in pts if p <= 0.0],
            rel_tol=QUAD_REL_TOL / 10, scale=max(1.0, abs(D.r1)),
        )
        pos, e2 = integrate_piecewise(
            lambda r: m_lambda_geq(D, lam, r), [p for p in pts if p >= 0.0],
            rel_tol=QUAD_REL_TOL / 10, scale=max(1.0, abs(D.r4)),
        )
        value, err = neg + pos, e1 + e2
    return ExpectationResult(value, Method.QUADRATURE, err)


def mean_reciprocal(lo: float, hi: float) -> float:
    """Average of ``1/x`` over ``[lo, hi]``: ``ln(hi/lo)/(hi - lo)``, or ``1/lo`` when ``lo == hi``.

    Evaluated as ``-log1p(-w/hi)/w`` so the limit is approached smoothly as the
    width ``w`` shrinks.
    """
    w = hi - lo
    if w == 0.0:
        return 1.0 / hi
    return -math.log1p(-w / hi) / w


def _require_positive(D: TrapezoidalFuzzyNumber):
    if not D.r1 > 0.0:
        raise NonpositiveSupport(
            f"E(1/D) needs a demand with r1 > 0, got r1 = {D.r1:g}"
        )


def expected_reciprocal_closed(D: TrapezoidalFuzzyNumber, lam: LambdaLike) -> float:
    """``E_lam(1/D) = lam ln(r2/r1)/(r2 - r1) + (1 - lam) ln(r4/r3)/(r4 - r3)``.

    Zero-width shoulders use their limit ``1/r``. Raises
    :class:`NonpositiveSupport` unless ``r1 > 0``.
    """
    _require_positive(D)
    lam = as_lambda(lam)
    return lam * mean_reciprocal(D.r1, D.r2) + (1.0 - lam) * mean_reciprocal(D.r3, D.r4)


def expected_reciprocal_quadrature(
    D: TrapezoidalFuzzyNumber, lam: LambdaLike
) -> ExpectationResult:
    """Integrate ``m(1/D >= r) = m(D <= 1/r)`` over ``[0, 1/r1]``."""
    _require_positive(D)
    lam = as_lambda(lam)
    lo = 1.0 / D.r4
    value, err = integrate_piecewise(
        lambda r: m_lambda_leq(D, lam, 1.0 / r),
        [lo, 1.0 / D.r3, 1.0 / D.r2, 1.0 / D.r1],
        rel_tol=QUAD_REL_TOL / 10,
        # the integral is at least 1/r4, so this makes the target relative
        scale=lo,
    )
    # integrand is identically 1 on (0, 1/r4]
    return ExpectationResult(lo + value, Method.QUADRATURE, err)
