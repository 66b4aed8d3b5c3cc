"""scikit-learn compatible wrappers.

``X`` is always a demand sample matrix of shape ``(n_observations, n_items)``.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, validate_data

from .fuzzy import as_lambda, membership
from .ingestion import fit_trapezoid
from .inventory import InventoryItem, InventoryModel, expected_profit, lambda_sweep, solve


class PercentileTrapezoidFitter(TransformerMixin, BaseEstimator):
    """Fit one trapezoidal fuzzy number per column from its sample percentiles.

    Attributes
    ----------
    trapezoids_ : ndarray of shape (n_features, 4)
        ``(r1, r2, r3, r4) = (P5, P40, P60, P95)`` for each column.
    demands_ : list of TrapezoidalFuzzyNumber
    """

    def fit(self, X, y=None):
        X = validate_data(self, X, dtype=np.float64, ensure_min_samples=1)
        self.demands_ = [fit_trapezoid(X[:, j]) for j in range(X.shape[1])]
        self.trapezoids_ = np.array([D.as_tuple() for D in self.demands_])
        return self

    def transform(self, X):
        """Membership degree of every entry under its column's fitted trapezoid."""
        check_is_fitted(self)
        X = validate_data(self, X, dtype=np.float64, reset=False)
        out = np.empty_like(X)
        for j, D in enumerate(self.demands_):
            out[:, j] = [membership(D, v) for v in X[:, j]]
        return out


class FuzzyInventoryOptimizer(BaseEstimator):
    """Order quantities maximising m_lambda expected profit for sampled demands.

    Parameters
    ----------
    revenue, fixed_cost, holding_cost : array-like of shape (n_items,)
        Unit revenue ``d``, unit fixed cost ``c`` and unit holding cost ``h``.
    lam : float, default=0.5
        Optimism weight; 0.5 is the credibilistic model.
    item_names : list of str, optional
    """

    def __init__(self, revenue, fixed_cost, holding_cost, lam=0.5, item_names=None):
        self.revenue = revenue
        self.fixed_cost = fixed_cost
        self.holding_cost = holding_cost
        self.lam = lam
        self.item_names = item_names

    def _costs(self, n_items):
        cols = [check_array(np.atleast_1d(v), ensure_2d=False, dtype=np.float64)
                for v in (self.revenue, self.fixed_cost, self.holding_cost)]
        if any(v.shape != (n_items,) for v in cols):
            raise ValueError(f"cost vectors must have shape ({n_items},) to match X")
        return cols

    def _names(self, n_items):
        if self.item_names is not None:
            names = [str(n) for n in self.item_names]
        elif hasattr(self, "feature_names_in_"):
            names = [str(n) for n in self.feature_names_in_]
        else:
            names = [f"item{j + 1}" for j in range(n_items)]
        if len(names) != n_items:
            raise ValueError("item_names length does not match the number of columns")
        return names

    def _model(self, demands):
        d, c, h = self._costs(len(demands))
        names = self._names(len(demands))
        return InventoryModel(
            InventoryItem(n, c=ci, d=di, h=hi, demand=D)
            for n, di, ci, hi, D in zip(names, d, c, h, demands)
        )

    def fit(self, X, y=None):
        as_lambda(self.lam)
        self.fitter_ = PercentileTrapezoidFitter().fit(X)
        self.n_features_in_ = self.fitter_.n_features_in_
        if hasattr(self.fitter_, "feature_names_in_"):
            self.feature_names_in_ = self.fitter_.feature_names_in_
        self.demands_ = list(self.fitter_.demands_)
        self.model_ = self._model(self.demands_)
        self.solution_ = solve(self.model_, self.lam)
        self.order_quantities_ = np.array(self.solution_.x_star)
        return self

    def predict(self, X=None):
        """Fitted order quantities, one per item. ``X`` is ignored."""
        check_is_fitted(self)
        return self.order_quantities_.copy()

    def score(self, X, y=None):
        """m_lambda expected total profit of the fitted orders under demands fitted to ``X``."""
        check_is_fitted(self)
        X = validate_data(self, X, dtype=np.float64, reset=False)
        held_out = self._model([fit_trapezoid(X[:, j]) for j in range(X.shape[1])])
        return float(sum(
            expected_profit(it, x, self.lam) for it, x in zip(held_out, self.order_quantities_)
        ))

    def sweep(self, lambdas):
        """Order quantities of shape ``(len(lambdas), n_items)`` on the fitted demands."""
        check_is_fitted(self)
        return np.array([s.x_star for s in lambda_sweep(self.model_, list(lambdas))])


__all__ = ["PercentileTrapezoidFitter", "FuzzyInventoryOptimizer"]
