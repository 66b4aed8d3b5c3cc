"""Exit criteria. Each check returns ``(passed, detail)``; run this file
directly for a plain pass/fail listing, or under pytest for the summary
section."""
import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import DATA, REF_COSTS, REF_DEMANDS, REF_XSTAR  # noqa: E402
from mlambda_inventory import (  # noqa: E402
    InventoryItem,
    InventoryModel,
    TrapezoidalFuzzyNumber as T,
    expected_profit,
    expected_reciprocal_closed,
    expected_reciprocal_quadrature,
    expected_value_closed,
    expected_value_quadrature,
    solve,
)
from mlambda_inventory.expectation import mean_reciprocal  # noqa: E402
from mlambda_inventory.ingestion import fit_table, read_samples  # noqa: E402

SEED = 20261015


def random_trapezoid(rng, hi=1e3):
    r = np.sort(rng.uniform(0, hi, 4))
    while r[0] <= 0:
        r = np.sort(rng.uniform(0, hi, 4))
    return T(*r)


def random_triangular(rng, hi=1e3):
    r1, r2, r4 = np.sort(rng.uniform(0, hi, 3))
    return T.triangular(max(r1, 1e-9), r2, r4)


def random_item(rng, name="x"):
    return InventoryItem(name, c=rng.uniform(0, 10), d=rng.uniform(0.1, 50),
                         h=rng.uniform(0.05, 5), demand=random_trapezoid(rng))


def criterion_1():
    """Percentile fit reproduces the printed trapezoids A_1..A_10."""
    t0 = time.perf_counter()
    fitted = list(fit_table(read_samples(DATA / "demand_samples.csv")).values())
    elapsed = time.perf_counter() - t0
    bad = [
        f"A{i + 1}: got {tuple(round(v, 1) for v in D.as_abab())} printed {printed}"
        for i, (D, printed) in enumerate(zip(fitted, REF_DEMANDS))
        if tuple(round(v, 1) for v in D.as_abab()) != tuple(float(v) for v in printed)
    ]
    ok = not bad and elapsed < 1.0
    return ok, f"{10 - len(bad)}/10 match, {elapsed:.3f}s" + ("; " + "; ".join(bad) if bad else "")


def criterion_2():
    """x* within 0.5% of all 30 printed cells."""
    t0 = time.perf_counter()
    model = InventoryModel(
        InventoryItem(f"Item{i + 1}", c=c, d=d, h=h, demand=T.from_abab(*abab))
        for i, ((d, c, h), abab) in enumerate(zip(REF_COSTS, REF_DEMANDS))
    )
    worst = 0.0
    for lam, printed in REF_XSTAR.items():
        for x, p in zip(solve(model, lam).x_star, printed):
            worst = max(worst, abs(x - p) / p)
    elapsed = time.perf_counter() - t0
    return worst <= 5e-3 and elapsed < 1.0, f"worst rel dev {worst:.2e}, {elapsed:.3f}s"


def criterion_3():
    """Closed form vs quadrature on 1000 random trapezoids."""
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        D, lam = random_trapezoid(rng), rng.uniform()
        for closed, quad in ((expected_value_closed, expected_value_quadrature),
                             (expected_reciprocal_closed, expected_reciprocal_quadrature)):
            c = closed(D, lam)
            worst = max(worst, abs(c - quad(D, lam).value) / max(1.0, abs(c)))
    elapsed = time.perf_counter() - t0
    return worst <= 1e-8 and elapsed < 30.0, f"worst scaled dev {worst:.2e}, {elapsed:.2f}s"


def _credibilistic_reciprocal(D):
    r1, r2, r3, r4 = D.as_tuple()
    if r2 == r3:
        return math.log(r2 / r1) / (2 * (r2 - r1)) + math.log(r4 / r2) / (2 * (r4 - r2))
    return math.log(r2 / r1) / (2 * (r2 - r1)) + math.log(r4 / r3) / (2 * (r4 - r3))


def criterion_4():
    """lam = 1/2 agrees with the credibilistic formulas to 1e-12 relative."""
    rng = np.random.default_rng(SEED + 4)
    demands = [random_trapezoid(rng) for _ in range(100)] + [random_triangular(rng) for _ in range(100)]
    worst = max(
        abs(expected_reciprocal_closed(D, 0.5) - _credibilistic_reciprocal(D)) / _credibilistic_reciprocal(D)
        for D in demands
    )
    return worst <= 1e-12, f"worst rel dev {worst:.2e} over 200 demands"


def criterion_5():
    """(a) E nondecreasing in lam; (b) x* nonincreasing in lam."""
    rng = np.random.default_rng(SEED + 5)
    grid = np.linspace(0, 1, 101)
    viol_e = 0
    for _ in range(100):
        D = random_trapezoid(rng)
        for f in (expected_value_closed, expected_reciprocal_closed):
            vals = [f(D, lam) for lam in grid]
            viol_e += sum(b < a for a, b in zip(vals, vals[1:]))
    viol_x = 0
    for _ in range(100):
        model = InventoryModel(random_item(rng, f"i{k}") for k in range(rng.integers(1, 11)))
        xs = np.array([solve(model, lam).x_star for lam in grid])
        viol_x += int((np.diff(xs, axis=0) > 0).sum())
    return viol_e == 0 and viol_x == 0, f"{viol_e} expectation violations, {viol_x} order violations"


def criterion_6():
    """x* beats x*(1 +/- eps) and satisfies the first-order condition."""
    rng = np.random.default_rng(SEED + 6)
    failures = 0
    worst_residual = 0.0
    for _ in range(100):
        item, lam = random_item(rng), rng.uniform()
        x = solve(InventoryModel([item]), lam).x_star[0]
        best = expected_profit(item, x, lam)
        for eps in (1e-3, 1e-2):
            for xx in (x * (1 + eps), x * (1 - eps)):
                failures += not best > expected_profit(item, xx, lam)
        residual = abs(item.d - item.h * expected_reciprocal_closed(item.demand, lam) * x) / item.d
        worst_residual = max(worst_residual, residual)
    ok = failures == 0 and worst_residual <= 1e-10
    return ok, f"{failures} perturbation failures, worst FOC residual {worst_residual:.1e}*d"


def criterion_7():
    """E(sA + tB) = s E(A) + t E(B) to 1e-12 relative."""
    rng = np.random.default_rng(SEED + 7)
    worst = 0.0
    for _ in range(100):
        A, B = random_trapezoid(rng), random_trapezoid(rng)
        s, t, lam = rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform()
        lhs = expected_value_closed(s * A + t * B, lam)
        rhs = s * expected_value_closed(A, lam) + t * expected_value_closed(B, lam)
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    return worst <= 1e-12, f"worst rel dev {worst:.1e}"


def criterion_8():
    """Left shoulder term -> 1/a as alpha -> 0+, exact limit at alpha = 0."""
    details = []
    ok = True
    for a, b, beta in ((28.0, 30.0, 10.5), (1.0, 2.0, 1.0), (1e3, 1e3, 0.0)):
        limit = 1.0 / a
        prev_err = math.inf
        for alpha in 10.0 ** -np.arange(1, 13):
            D = T.from_abab(a, b, alpha, beta)
            term = mean_reciprocal(D.r1, D.r2)
            err = abs(term - limit)
            ok &= math.isfinite(term) and math.isfinite(expected_reciprocal_closed(D, 0.5))
            # first-order bound alpha/(2a^2) plus rounding slack
            ok &= err <= alpha / a**2 + 8 * np.finfo(float).eps * limit
            ok &= err <= prev_err + 8 * np.finfo(float).eps * limit
            prev_err = err
        at_zero = T.from_abab(a, b, 0.0, beta)
        ok &= mean_reciprocal(at_zero.r1, at_zero.r2) == limit
        ok &= math.isfinite(expected_reciprocal_closed(at_zero, 0.3))
        details.append(f"a={a:g}: err at alpha=1e-12 {prev_err:.1e}")
    return bool(ok), "; ".join(details)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check, acceptance_report):
    ok, detail = check()
    n = check.__name__.split("_")[1]
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {check.__doc__.strip()} -- {detail}"
    print(line)
    acceptance_report.append(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        ok, detail = check()
        failed += not ok
        n = check.__name__.split("_")[1]
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {check.__doc__.strip()} -- {detail}")
    sys.exit(1 if failed else 0)
