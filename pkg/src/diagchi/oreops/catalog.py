"""Bundled store of named differential operators and numeric fixtures.

Operators live in ``data/operators.json`` as a list of serialized
operators (see DiffOp.to_dict); fixtures -- integer series, rational
lists, decimal constants, exponent tables -- live in ``data/fixtures.json``
keyed by name.  The environment variable DIAGCHI_DATA points the loader
at an alternative directory, letting users override or extend the
bundled data without touching the installed package.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from ..exactcore import QQ
from .diffops import DiffOp

_ENV_VAR = "DIAGCHI_DATA"


def data_dir():
    """Directory holding the JSON data files (honors DIAGCHI_DATA)."""
    override = os.environ.get(_ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent.parent / "data"


def _load_json(filename):
    path = data_dir() / filename
    if not path.exists():
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _operator_index():
    raw = _load_json("operators.json")
    entries = raw.get("operators", []) if isinstance(raw, dict) else raw
    return {e["name"]: e for e in entries}


def operator_names():
    """Sorted names of all operators available in the store."""
    return sorted(_operator_index())


def load_operator(name, field=QQ):
    """Load a named operator from the store."""
    index = _operator_index()
    if name not in index:
        known = ", ".join(sorted(index)) or "(store is empty)"
        raise KeyError("no operator named %r; available: %s" % (name, known))
    return DiffOp.from_dict(index[name], field=field)


def load_operator_file(path, field=QQ):
    """Load one operator from a standalone JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return DiffOp.from_dict(json.load(fh), field=field)


def dump_operator(op, name, path):
    """Write one operator to a standalone JSON file (round-trip exact)."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(op.to_dict(name=name), fh, indent=1)
        fh.write("\n")


def fixture_names():
    return sorted(_load_json("fixtures.json"))


def fixture(name):
    """Fetch a named fixture (shape depends on the fixture)."""
    table = _load_json("fixtures.json")
    if name not in table:
        known = ", ".join(sorted(table)) or "(store is empty)"
        raise KeyError("no fixture named %r; available: %s" % (name, known))
    return table[name]
