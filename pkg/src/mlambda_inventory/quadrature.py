"""Adaptive Simpson quadrature for bounded, piecewise-smooth integrands."""
from __future__ import annotations

import math
from typing import Callable, Iterable

__all__ = ["adaptive_simpson", "integrate_piecewise"]

_MAX_DEPTH = 60
_INSET = 1e-12


def _inset(f, lo, hi, inset):
    def g(x):
        if x <= lo:
            return f(lo + inset)
        if x >= hi:
            return f(hi - inset)
        return f(x)

    return g


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> tuple[float, float]:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Returns ``(value, est_abs_error)``. Each accepted panel is Richardson
    corrected, and its error is estimated as ``|S2 - S1| / 15``.
    """
    if b <= a:
        return 0.0, 0.0
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    err = 0.0
    # explicit stack: (a, b, fa, fm, fb, simpson(a, b), tol, depth)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        a, b, fa, fm, fb, s, tol, depth = stack.pop()
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        h = (b - a) / 12.0
        left = h * (fa + 4.0 * flm + fm)
        right = h * (fm + 4.0 * frm + fb)
        delta = left + right - s
        if abs(delta) <= 15.0 * tol or depth >= _MAX_DEPTH or m <= a or m >= b:
            total += left + right + delta / 15.0
            err += abs(delta) / 15.0
            continue
        stack.append((m, b, fm, frm, fb, right, 0.5 * tol, depth + 1))
        stack.append((a, m, fa, flm, fm, left, 0.5 * tol, depth + 1))
    return total, err


def integrate_piecewise(
    f: Callable[[float], float],
    breakpoints: Iterable[float],
    rel_tol: float = 1e-10,
    scale: float | None = None,
) -> tuple[float, float]:
    """Integrate ``f`` between consecutive sorted ``breakpoints``.

    ``f`` should be smooth on each open piece. The absolute target is
    ``rel_tol * scale``; when ``scale`` is omitted it is taken from a coarse
    Simpson pass, floored at 1. Zero-width pieces are skipped.
    """
    pts = sorted(set(float(p) for p in breakpoints))
    pieces = [(lo, hi) for lo, hi in zip(pts, pts[1:]) if hi > lo]
    if not pieces:
        return 0.0, 0.0
    if scale is None:
        coarse = sum(
            (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi)) for lo, hi in pieces
        )
        scale = max(1.0, abs(coarse))
    budget = rel_tol * scale
    total_width = pts[-1] - pts[0]
    value = 0.0
    err = 0.0
    for lo, hi in pieces:
        # endpoints are sampled just inside the piece, so a jump at a breakpoint
        # is seen from the correct side
        inset = _INSET * (hi - lo)
        g = _inset(f, lo, hi, inset)
        # share the budget in proportion to piece width, with a floor so tiny
        # pieces are not driven to machine precision
        tol = budget * max((hi - lo) / total_width, 1.0 / (4 * len(pieces)))
        v, e = adaptive_simpson(g, lo, hi, tol)
        value += v
        err += e
    if not math.isfinite(value):
        raise FloatingPointError("quadrature produced a non-finite value")
    return value, err
