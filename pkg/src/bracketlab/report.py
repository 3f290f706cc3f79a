"""Byte-stable JSON output."""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    to_json = getattr(obj, "to_json", None)
    if callable(to_json):
        return to_json()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


def dumps(obj) -> str:
    """Sorted keys, two-space indent, rationals as "p/q", trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_default, ensure_ascii=True) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
