"""Multi-item inventory optimisation with trapezoidal fuzzy demands under the
m_lambda (optimism-weighted possibility/necessity) expected value."""

from .exceptions import (
    ConfigError,
    EmptySample,
    MLambdaError,
    NonpositiveFitWarning,
    NonpositiveSupport,
    ParseError,
    ZeroRevenueWarning,
)
from .expectation import (
    ExpectationResult,
    Method,
    expected_reciprocal_closed,
    expected_reciprocal_quadrature,
    expected_value_closed,
    expected_value_quadrature,
)
from .fuzzy import (
    Lambda,
    TrapezoidalFuzzyNumber,
    credibility_leq,
    m_lambda_geq,
    m_lambda_leq,
    membership,
)
from .ingestion import SampleTable, fit_trapezoid, parse_samples, percentile
from .inventory import (
    InventoryItem,
    InventoryModel,
    ItemSolution,
    Solution,
    expected_profit,
    lambda_sweep,
    solve,
)

__version__ = "0.1.0"
