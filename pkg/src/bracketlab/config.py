"""YAML input files for family specs and search configurations.

A family spec looks like::

    n: 2          # number of variables
    d: 2
    N: 3
    t: 1          # optional; must equal deg h when given
    h: "x2"
    F:            # components F_1..F_(d-1), missing ones are zero
      1: "x1"
    a:            # constants a_j, missing ones are zero
      3: 1
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

import yaml

from .conjecture import CandidateConfig
from .errors import InvalidSpec, ParseError
from .family import FamilySpec
from .parse import parse_poly


def _read_yaml(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidSpec(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}: " if mark else ""
        problem = getattr(exc, "problem", None) or str(exc)
        raise ParseError(f"{path}: {where}{problem}") from exc


def _int(data: Mapping, key: str, default=None) -> int:
    if key not in data:
        if default is None:
            raise InvalidSpec(f"missing required field '{key}'")
        return default
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidSpec(f"field '{key}' must be an integer (got {v!r})")
    return v


def _rational(v, where: str) -> Fraction:
    if isinstance(v, bool):
        raise InvalidSpec(f"{where} must be a rational number")
    try:
        return Fraction(str(v).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidSpec(f"{where} must be a rational number like 3 or -7/4 (got {v!r})") from exc


def _poly(text, nvars: int, where: str):
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise InvalidSpec(f"{where} must be a polynomial string")
    try:
        return parse_poly(text, nvars)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _indexed(data: Mapping, key: str) -> dict[int, Any]:
    raw = data.get(key) or {}
    if not isinstance(raw, Mapping):
        raise InvalidSpec(f"field '{key}' must be a mapping from index to value")
    out = {}
    for k, v in raw.items():
        try:
            idx = int(k)
        except (TypeError, ValueError) as exc:
            raise InvalidSpec(f"bad index {k!r} in '{key}'") from exc
        out[idx] = v
    return out


def spec_from_mapping(data: Mapping) -> FamilySpec:
    if not isinstance(data, Mapping):
        raise InvalidSpec("a family spec must be a mapping")
    n = _int(data, "n")
    d = _int(data, "d")
    N = _int(data, "N")
    if "h" not in data:
        raise InvalidSpec("missing required field 'h'")
    h = _poly(data["h"], n, "h")
    if "t" in data:
        t = _int(data, "t")
        if t < 1:
            raise InvalidSpec("t must be positive")
        if N % t:
            raise InvalidSpec(f"divisibility constraint t | N violated (t={t}, N={N})")
        if d % t:
            raise InvalidSpec(f"divisibility constraint t | d violated (t={t}, d={d})")
        if h.degree != t:
            raise InvalidSpec(f"deg h = {h.degree} differs from t = {t}")
    comps = {l: _poly(v, n, f"F[{l}]") for l, v in _indexed(data, "F").items()}
    consts = {j: _rational(v, f"a[{j}]") for j, v in _indexed(data, "a").items()}
    return FamilySpec(n, d, N, h, comps, consts)


def load_spec(path: str) -> FamilySpec:
    """Read and validate a family spec file."""
    return spec_from_mapping(_read_yaml(path))


_SEARCH_KEYS = {"nvars": int, "n": int, "d": int, "N": int, "t": int, "samples": int, "seed": int,
                "terms": int, "num": int, "den": int, "mode": str, "degenerate": bool}


def search_config_from_mapping(data: Mapping, **overrides) -> CandidateConfig:
    if not isinstance(data, Mapping):
        raise InvalidSpec("a search configuration must be a mapping")
    kw = {}
    for key, value in data.items():
        if key not in _SEARCH_KEYS:
            raise InvalidSpec(f"unknown search setting '{key}'")
        typ = _SEARCH_KEYS[key]
        if typ is int and (isinstance(value, bool) or not isinstance(value, int)):
            raise InvalidSpec(f"setting '{key}' must be an integer")
        if not isinstance(value, typ):
            raise InvalidSpec(f"setting '{key}' must be of type {typ.__name__}")
        kw["nvars" if key == "n" else key] = value
    kw.update({k: v for k, v in overrides.items() if v is not None})
    return CandidateConfig(**kw)


def load_search_config(path: str, **overrides) -> CandidateConfig:
    return search_config_from_mapping(_read_yaml(path) or {}, **overrides)
