"""Risk-neutral multi-item inventory model under the m_lambda expectation.

For item ``i`` with fuzzy demand ``D_i`` the expected profit is

    d_i x - c_i - (h_i x^2 / 2) E_lam(1/D_i),

a concave quadratic in ``x`` maximised at ``x_i* = d_i / (h_i E_lam(1/D_i))``.
Items do not interact, so each is solved on its own.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exceptions import NonpositiveSupport, ZeroRevenueWarning
from .expectation import expected_reciprocal_closed
from .fuzzy import Lambda, LambdaLike, TrapezoidalFuzzyNumber, as_lambda

__all__ = [
    "InventoryItem",
    "InventoryModel",
    "ItemSolution",
    "Solution",
    "expected_profit",
    "optimal_order",
    "solve",
    "lambda_sweep",
]


@dataclass(frozen=True)
class InventoryItem:
    """One stocked item.

    ``c`` is the unit fixed cost, ``d`` the unit revenue and ``h`` the unit
    holding cost. ``demand`` must be strictly positive (``r1 > 0``).
    """

    name: str
    c: float
    d: float
    h: float
    demand: TrapezoidalFuzzyNumber

    def __post_init__(self):
        for attr in ("c", "d", "h"):
            v = float(getattr(self, attr))
            if not math.isfinite(v):
                raise ValueError(f"{self.name}: {attr} must be finite")
            object.__setattr__(self, attr, v)
        if self.c < 0 or self.d < 0:
            raise ValueError(f"{self.name}: need c >= 0 and d >= 0")
        if not self.h > 0:
            raise ValueError(f"{self.name}: holding cost h must be > 0, got {self.h}")
        if not self.demand.is_positive:
            raise NonpositiveSupport(
                f"{self.name}: demand support must be positive, got r1 = {self.demand.r1:g}"
            )


@dataclass(frozen=True)
class InventoryModel:
    items: tuple[InventoryItem, ...]

    def __init__(self, items: Iterable[InventoryItem]):
        items = tuple(items)
        if not items:
            raise ValueError("an inventory model needs at least one item")
        names = [it.name for it in items]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ValueError(f"duplicate item names: {', '.join(dupes)}")
        object.__setattr__(self, "items", items)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@dataclass(frozen=True)
class ItemSolution:
    name: str
    x_star: float
    expected_reciprocal: float
    expected_profit: float


@dataclass(frozen=True)
class Solution:
    lam: Lambda
    per_item: tuple[ItemSolution, ...]
    total_expected_profit: float
    warnings: tuple[str, ...] = field(default=())

    @property
    def x_star(self) -> tuple[float, ...]:
        return tuple(s.x_star for s in self.per_item)

    def __getitem__(self, name: str) -> ItemSolution:
        for s in self.per_item:
            if s.name == name:
                return s
        raise KeyError(name)


def _profit(item: InventoryItem, x: float, e_recip: float) -> float:
    return item.d * x - item.c - 0.5 * item.h * x * x * e_recip


def expected_profit(item: InventoryItem, x: float, lam: LambdaLike) -> float:
    """m_lambda expected profit of ordering ``x >= 0`` units of ``item``."""
    if x < 0:
        raise ValueError(f"order quantity must be >= 0, got {x}")
    return _profit(item, x, expected_reciprocal_closed(item.demand, lam))


def optimal_order(item: InventoryItem, lam: LambdaLike) -> tuple[float, float]:
    """Return ``(x*, E_lam(1/D))`` for a single item."""
    e_recip = expected_reciprocal_closed(item.demand, lam)
    curvature = item.h * e_recip
    # stationary point is a maximum only if the quadratic term is negative
    if not (curvature > 0 and math.isfinite(curvature)):
        raise ArithmeticError(f"{item.name}: objective is not strictly concave")
    return item.d / curvature, e_recip


def solve(model: InventoryModel, lam: LambdaLike) -> Solution:
    """Optimal order quantities for every item of ``model`` at ``lam``.

    Items with ``d == 0`` get the boundary optimum ``x* = 0`` and a
    :class:`ZeroRevenueWarning`, recorded on the solution as well.
    """
    lam_obj = lam if isinstance(lam, Lambda) else Lambda(as_lambda(lam))
    per_item = []
    notes = []
    for item in model:
        x, e_recip = optimal_order(item, lam_obj.value)
        if item.d == 0:
            msg = f"{item.name}: zero unit revenue, optimal order is 0"
            warnings.warn(msg, ZeroRevenueWarning, stacklevel=2)
            notes.append(msg)
        per_item.append(ItemSolution(item.name, x, e_recip, _profit(item, x, e_recip)))
    total = math.fsum(s.expected_profit for s in per_item)
    return Solution(lam_obj, tuple(per_item), total, tuple(notes))


def lambda_sweep(model: InventoryModel, lambdas: Sequence[LambdaLike]) -> list[Solution]:
    if not lambdas:
        raise ValueError("lambda_sweep needs at least one lambda")
    return [solve(model, lam) for lam in lambdas]
