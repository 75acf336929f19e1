"""Metric configuration files (TOML) and their validation.

A config names either a solution family with its constants, or the three
defining functions explicitly as polynomial term lists / exponential
triples; see README for the grammar.  All validation problems raise
:class:`ConfigError` with the offending field in the message.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:  # pragma: no cover - exercised only on 3.10
    import tomli as _toml

from . import families
from .classify import SamplePlan
from .jets import ScalarField2, const_field, exp_field, poly_field
from .metric import WalkerMetric

__all__ = ["ConfigError", "MetricConfig", "load_config", "parse_config"]

_FAMILY_NAMES = ("einstein", "conformally-flat", "exponential", "zero-a", "zero-b", "quadratic-4k")


class ConfigError(ValueError):
    """A metric configuration failed to parse or validate."""


@dataclass(frozen=True)
class MetricConfig:
    metric: WalkerMetric
    plan: SamplePlan


def load_config(path) -> MetricConfig:
    try:
        with open(path, "rb") as fh:
            data = _toml.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except _toml.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: TOML parse error: {exc}")
    return parse_config(data)


def parse_config(data: dict) -> MetricConfig:
    if "metric" not in data or not isinstance(data["metric"], dict):
        raise ConfigError("missing [metric] table")
    mtab = data["metric"]
    has_family = "family" in mtab
    has_explicit = any(k in mtab for k in ("a", "b", "c"))
    if has_family and has_explicit:
        raise ConfigError("metric: give either 'family' or explicit a/b/c, not both")
    if has_family:
        metric = _family_metric(mtab)
    elif has_explicit:
        metric = _explicit_metric(mtab)
    else:
        raise ConfigError("metric: needs a 'family' name or explicit a/b/c fields")
    if "name" in mtab:
        metric = WalkerMetric(a=metric.a, b=metric.b, c=metric.c, name=str(mtab["name"]))
    return MetricConfig(metric=metric, plan=_plan(data.get("plan", {})))


def _number(tab, key, where, default=None):
    if key not in tab:
        if default is not None:
            return default
        raise ConfigError(f"{where}: missing field {key!r}")
    v = tab[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{where}.{key}: expected a number, got {v!r}")
    v = float(v)
    if v != v or v in (float("inf"), float("-inf")):
        raise ConfigError(f"{where}.{key}: must be finite")
    return v


def _power_table(tab, key, where):
    raw = tab.get(key, [])
    if not isinstance(raw, list):
        raise ConfigError(f"{where}.{key}: expected a list of [power, coeff] pairs")
    out = []
    for n, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 2):
            raise ConfigError(f"{where}.{key}[{n}]: expected [power, coeff]")
        power, coeff = item
        if isinstance(power, bool) or not isinstance(power, int) or power < 0:
            raise ConfigError(f"{where}.{key}[{n}]: power must be a non-negative integer")
        out.append((power, float(coeff)))
    return out


def _family_metric(mtab) -> WalkerMetric:
    name = str(mtab["family"]).lower()
    params = mtab.get("params", {})
    if not isinstance(params, dict):
        raise ConfigError("metric.params: expected a table")
    where = "metric.params"
    try:
        if name == "einstein":
            p = families.EinsteinFamilyParams.from_tables(
                K=_number(params, "K", where, 0.0),
                A=_number(params, "A", where, 0.0),
                C=_number(params, "C", where, 0.0),
                B=_power_table(params, "B", where),
                D=_power_table(params, "D", where),
            )
            return families.make_einstein_family(p)
        if name == "conformally-flat":
            kwargs = {
                k: _number(params, k, where, 0.0)
                for k in "EFGHIJKLMNPQR"
            }
            return families.make_conformally_flat_family(
                families.ConformallyFlatFamilyParams(**kwargs)
            )
        if name == "exponential":
            return families.make_exponential_example(
                families.ExponentialExampleParams(
                    r1=_number(params, "r1", where), r2=_number(params, "r2", where)
                )
            )
        if name in ("zero-a", "zero-b"):
            return families.make_simple_examples(
                name,
                K=_number(params, "K", where, 0.0),
                shift=_number(params, "shift", where, 0.0),
            )
        if name == "quadratic-4k":
            return families.make_simple_examples(name, K=_number(params, "K", where, 0.0))
    except (families.ConstraintViolation, families.InvalidParameter) as exc:
        raise ConfigError(f"metric.params: {exc}")
    raise ConfigError(
        f"metric.family: unknown family {name!r}; choose one of {', '.join(_FAMILY_NAMES)}"
    )


def _field_from_table(tab, key) -> ScalarField2:
    if key not in tab:
        raise ConfigError(f"metric: missing field {key!r}")
    spec = tab[key]
    where = f"metric.{key}"
    if not isinstance(spec, dict):
        raise ConfigError(f"{where}: expected a table with one of poly / exp / constant")
    kinds = [k for k in ("poly", "exp", "constant") if k in spec]
    if len(kinds) != 1:
        raise ConfigError(f"{where}: give exactly one of poly / exp / constant")
    kind = kinds[0]
    if kind == "constant":
        return const_field(_number(spec, "constant", where))
    if kind == "exp":
        triple = spec["exp"]
        if not (isinstance(triple, list) and len(triple) == 3):
            raise ConfigError(f"{where}.exp: expected [s, p, q]")
        s, p, q = (float(x) for x in triple)
        return exp_field(s, p, q)
    raw = spec["poly"]
    if not isinstance(raw, list):
        raise ConfigError(f"{where}.poly: expected a list of [i, j, coeff] terms")
    terms = []
    for n, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 3):
            raise ConfigError(f"{where}.poly[{n}]: expected [i, j, coeff]")
        i, j, coeff = item
        for expo in (i, j):
            if isinstance(expo, bool) or not isinstance(expo, int) or expo < 0:
                raise ConfigError(
                    f"{where}.poly[{n}]: exponents must be non-negative integers"
                )
        terms.append((i, j, float(coeff)))
    return poly_field(terms)


def _explicit_metric(mtab) -> WalkerMetric:
    return WalkerMetric(
        a=_field_from_table(mtab, "a"),
        b=_field_from_table(mtab, "b"),
        c=_field_from_table(mtab, "c"),
    )


def _plan(ptab) -> SamplePlan:
    if not isinstance(ptab, dict):
        raise ConfigError("[plan]: expected a table")
    kwargs = {}
    if "count" in ptab:
        v = ptab["count"]
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ConfigError("plan.count: expected a positive integer")
        kwargs["count"] = v
    if "seed" in ptab:
        v = ptab["seed"]
        if isinstance(v, bool) or not isinstance(v, int):
            raise ConfigError("plan.seed: expected an integer")
        kwargs["seed"] = v
    if "box" in ptab:
        v = ptab["box"]
        if not (isinstance(v, list) and len(v) == 2):
            raise ConfigError("plan.box: expected [lo, hi]")
        kwargs["box"] = (float(v[0]), float(v[1]))
    if "tolerance" in ptab:
        kwargs["tolerance"] = _number(ptab, "tolerance", "plan")
    try:
        return SamplePlan(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"plan: {exc}")
