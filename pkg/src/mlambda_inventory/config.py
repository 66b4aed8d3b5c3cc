"""Run configuration for the command line tool.

INI syntax, one ``[run]`` section and one ``[item NAME]`` section per item,
in the order the items should appear::

    [run]
    lambdas = 1/3, 1/2, 2/3
    output_format = text_table      ; or csv

    [item Item1]
    d = 12
    c = 2
    h = 0.5
    demand = 28, 30, 9, 10.5        ; a, b, alpha, beta

Each item gives its demand with exactly one of

* ``demand = a, b, alpha, beta``
* ``trapezoid = r1, r2, r3, r4``
* ``fitted = PATH[#NAME]``   row of a fitted-demands CSV (default NAME is the item name)
* ``samples = PATH[#NAME]``  column of a samples CSV, fitted on load

Relative paths are resolved against the config file's directory.
"""
from __future__ import annotations

import configparser
import os
from dataclasses import dataclass
from pathlib import Path

from .exceptions import ConfigError, MLambdaError
from .fuzzy import Lambda, TrapezoidalFuzzyNumber
from .ingestion import fit_trapezoid, read_fitted, read_samples
from .inventory import InventoryItem, InventoryModel

OUTPUT_FORMATS = ("text_table", "csv")
DEMAND_KEYS = ("demand", "trapezoid", "fitted", "samples")


@dataclass(frozen=True)
class RunConfig:
    model: InventoryModel
    lambdas: tuple[Lambda, ...]
    output_format: str = "text_table"


def parse_lambdas(text: str) -> tuple[Lambda, ...]:
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    return tuple(Lambda.parse(p) for p in parts)


def _floats(text: str, n: int, what: str) -> list[float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise ConfigError(f"{what}: expected {n} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise ConfigError(f"{what}: non-numeric value in {text!r}") from None


def _split_ref(ref: str, default_name: str, base: Path) -> tuple[Path, str]:
    path, _, name = ref.partition("#")
    p = Path(path.strip())
    if not p.is_absolute():
        p = base / p
    return p, (name.strip() or default_name)


class _Loader:
    def __init__(self, base: Path):
        self.base = base
        self._fitted: dict[Path, dict] = {}
        self._samples: dict[Path, object] = {}

    def demand(self, name: str, section) -> TrapezoidalFuzzyNumber:
        keys = [k for k in DEMAND_KEYS if k in section]
        if len(keys) != 1:
            raise ConfigError(
                f"item {name!r}: give exactly one of {', '.join(DEMAND_KEYS)}"
            )
        key = keys[0]
        value = section[key]
        what = f"item {name!r} {key}"
        try:
            if key == "demand":
                return TrapezoidalFuzzyNumber.from_abab(*_floats(value, 4, what))
            if key == "trapezoid":
                return TrapezoidalFuzzyNumber(*_floats(value, 4, what))
        except ValueError as exc:
            if isinstance(exc, MLambdaError):
                raise
            raise ConfigError(f"{what}: {exc}") from None
        path, ref = _split_ref(value, name, self.base)
        if key == "fitted":
            if path not in self._fitted:
                self._fitted[path] = read_fitted(path)
            table = self._fitted[path]
            if ref not in table:
                raise ConfigError(f"{what}: no row {ref!r} in {path}")
            return table[ref]
        if path not in self._samples:
            self._samples[path] = read_samples(path)
        try:
            column = self._samples[path][ref]
        except KeyError:
            raise ConfigError(f"{what}: no column {ref!r} in {path}") from None
        return fit_trapezoid(column, ref)


def _number(section, key: str, item: str) -> float:
    if key not in section:
        raise ConfigError(f"item {item!r}: missing {key}")
    try:
        return float(section[key])
    except ValueError:
        raise ConfigError(f"item {item!r}: {key} is not a number: {section[key]!r}") from None


def parse_config(text: str, base: Path | str = ".") -> RunConfig:
    """Parse config text. File references resolve against ``base``.

    Raises :class:`ConfigError` for malformed input, ``OSError`` for
    unreadable referenced files and ``NonpositiveSupport`` for demands that
    are not strictly positive.
    """
    # keep the '#NAME' suffix of file references intact
    cp = configparser.ConfigParser(inline_comment_prefixes=(";",), interpolation=None)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from None
    loader = _Loader(Path(base))

    lambdas: tuple[Lambda, ...] = ()
    fmt = "text_table"
    if cp.has_section("run"):
        run = cp["run"]
        try:
            lambdas = parse_lambdas(run.get("lambdas", ""))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        fmt = run.get("output_format", fmt).strip()
        if fmt not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {OUTPUT_FORMATS}, got {fmt!r}")

    items = []
    for sec in cp.sections():
        if sec == "run":
            continue
        kind, _, name = sec.partition(" ")
        name = name.strip()
        if kind != "item" or not name:
            raise ConfigError(f"unknown section [{sec}]; expected [run] or [item NAME]")
        s = cp[sec]
        d, c, h = (_number(s, k, name) for k in ("d", "c", "h"))
        demand = loader.demand(name, s)
        try:
            items.append(InventoryItem(name, c=c, d=d, h=h, demand=demand))
        except ValueError as exc:
            if isinstance(exc, MLambdaError):
                raise
            raise ConfigError(str(exc)) from None
    if not items:
        raise ConfigError("config defines no [item NAME] sections")
    try:
        model = InventoryModel(items)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return RunConfig(model, lambdas, fmt)


def load_config(path: str | os.PathLike) -> RunConfig:
    path = Path(path)
    with open(path, encoding="utf-8-sig") as fh:
        text = fh.read()
    return parse_config(text, base=path.parent)
