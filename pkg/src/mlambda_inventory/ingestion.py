"""Demand samples: CSV parsing and percentile-based trapezoid fitting.

A column of observations is turned into the trapezoid with support
``[P5, P95]`` and core ``[P40, P60]``, i.e. ``(a, b, alpha, beta) =
(P40, P60, P40 - P5, P95 - P60)``. Percentiles interpolate linearly at rank
``(n - 1) k / 100`` of the sorted sample.
"""
from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Sequence, TextIO, Union

import numpy as np

from .exceptions import EmptySample, NonpositiveFitWarning, ParseError
from .fuzzy import TrapezoidalFuzzyNumber

__all__ = [
    "SampleTable",
    "percentile",
    "fit_trapezoid",
    "fit_table",
    "parse_samples",
    "read_samples",
    "write_fitted",
    "parse_fitted",
    "read_fitted",
    "FITTED_HEADER",
]

FIT_PERCENTILES = (5, 40, 60, 95)
FITTED_HEADER = ("name", "a", "b", "alpha", "beta")


@dataclass(frozen=True)
class SampleTable:
    item_names: tuple[str, ...]
    columns: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.item_names) != len(self.columns):
            raise ValueError("one column per item name is required")
        for name, col in zip(self.item_names, self.columns):
            if not col:
                raise EmptySample(f"column {name!r} has no observations")
            if not all(math.isfinite(v) for v in col):
                raise ValueError(f"column {name!r} contains non-finite values")

    def __getitem__(self, name: str) -> tuple[float, ...]:
        try:
            return self.columns[self.item_names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def to_array(self) -> np.ndarray:
        """Observations as an ``(n_obs, n_items)`` array; columns must be equal length."""
        return np.column_stack([np.asarray(c, dtype=float) for c in self.columns])


def percentile(sample: Sequence[float], k: float) -> float:
    """``k``-th percentile, ``0 <= k <= 100``, by linear interpolation."""
    if len(sample) == 0:
        raise EmptySample("cannot take a percentile of an empty sample")
    if not 0 <= k <= 100:
        raise ValueError(f"percentile rank must be in [0, 100], got {k}")
    return float(np.percentile(np.asarray(sample, dtype=float), k, method="linear"))


def fit_trapezoid(sample: Sequence[float], name: str | None = None) -> TrapezoidalFuzzyNumber:
    """Fit ``(P5, P40, P60, P95)`` to ``sample``.

    Emits :class:`NonpositiveFitWarning` when ``P5 <= 0``; such a demand is
    valid as a fuzzy number but unusable in the inventory model.
    """
    if len(sample) == 0:
        raise EmptySample("cannot fit a trapezoid to an empty sample")
    p5, p40, p60, p95 = np.percentile(np.asarray(sample, dtype=float), FIT_PERCENTILES)
    if p5 <= 0:
        label = f"{name}: " if name else ""
        warnings.warn(
            f"{label}fitted support starts at P5 = {p5:g} <= 0; E(1/D) is undefined",
            NonpositiveFitWarning,
            stacklevel=2,
        )
    return TrapezoidalFuzzyNumber(float(p5), float(p40), float(p60), float(p95))


def fit_table(table: SampleTable) -> dict[str, TrapezoidalFuzzyNumber]:
    return {name: fit_trapezoid(col, name) for name, col in zip(table.item_names, table.columns)}


def _as_text(source: Union[bytes, str, BinaryIO, TextIO]) -> str:
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str):
        data = source
    else:
        data = source.read()
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data.lstrip("﻿")


def _rows(text: str) -> list[list[str]]:
    # newline="" semantics: csv handles both LF and CRLF
    rows = list(csv.reader(io.StringIO(text, newline="")))
    # a trailing blank line is not a data row
    while rows and not any(cell.strip() for cell in rows[-1]):
        rows.pop()
    return rows


def _number(cell: str, row: int, col: int) -> float:
    try:
        v = float(cell.strip())
    except ValueError:
        raise ParseError(f"non-numeric cell {cell!r}", row=row, column=col) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite cell {cell!r}", row=row, column=col)
    return v


def parse_samples(source: Union[bytes, str, BinaryIO, TextIO]) -> SampleTable:
    """Parse a samples CSV: a header of item names, then numeric rows.

    Comma separated, ``.`` as decimal point, optional UTF-8 BOM, LF or CRLF.
    Every row must have one cell per item. Raises :class:`ParseError` with
    1-based row/column locations.
    """
    rows = _rows(_as_text(source))
    if not rows:
        raise ParseError("empty file")
    header = [h.strip() for h in rows[0]]
    if not all(header):
        raise ParseError("blank item name in header", row=1)
    if len(set(header)) != len(header):
        raise ParseError("duplicate item names in header", row=1)
    if len(rows) == 1:
        raise ParseError("no data rows (empty data)")
    cols: list[list[float]] = [[] for _ in header]
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise ParseError(
                f"expected {len(header)} cells, found {len(row)}", row=r
            )
        for c, cell in enumerate(row, start=1):
            cols[c - 1].append(_number(cell, r, c))
    return SampleTable(tuple(header), tuple(tuple(c) for c in cols))


def read_samples(path) -> SampleTable:
    with open(path, "rb") as fh:
        return parse_samples(fh)


def _fmt(v: float) -> str:
    return repr(float(v))


def write_fitted(demands: dict[str, TrapezoidalFuzzyNumber], out: TextIO) -> None:
    """Write ``name,a,b,alpha,beta`` rows at full precision."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(FITTED_HEADER)
    for name, D in demands.items():
        w.writerow([name, *(_fmt(v) for v in D.as_abab())])


def parse_fitted(source) -> dict[str, TrapezoidalFuzzyNumber]:
    """Parse a fitted-demands CSV as written by :func:`write_fitted`."""
    rows = _rows(_as_text(source))
    if not rows or tuple(h.strip() for h in rows[0]) != FITTED_HEADER:
        raise ParseError(f"fitted demands need header {','.join(FITTED_HEADER)}", row=1)
    out: dict[str, TrapezoidalFuzzyNumber] = {}
    for r, row in enumerate(rows[1:], start=2):
        if len(row) != len(FITTED_HEADER):
            raise ParseError(f"expected {len(FITTED_HEADER)} cells, found {len(row)}", row=r)
        name = row[0].strip()
        if name in out:
            raise ParseError(f"duplicate item {name!r}", row=r)
        a, b, alpha, beta = (_number(cell, r, c) for c, cell in enumerate(row[1:], start=2))
        try:
            out[name] = TrapezoidalFuzzyNumber.from_abab(a, b, alpha, beta)
        except ValueError as exc:
            raise ParseError(str(exc), row=r) from None
    return out


def read_fitted(path) -> dict[str, TrapezoidalFuzzyNumber]:
    with open(path, "rb") as fh:
        return parse_fitted(fh)
