"""JSON formats for models and switches, and name-or-path resolution.

Models::

    {"kind": "quandle", "table": [[...], ...]}
    {"kind": "group", "table": [[...]], "inverse": [...], "identity": 0}
    {"kind": "dihedral", "n": 3}            {"kind": "trivial", "n": 2}
    {"kind": "conjugation", "group": <group model or fixture name>}
    {"kind": "multi", "quandle": <quandle model>, "trivial_subset": [0, 1, 2]}

Switches::

    {"kind": "tabulated", "carriers": [N], "map": [[[l, r], ...], ...],
     "virtual": <optional tabulated switch, default the twist>}
    {"kind": "builtin", "name": "2q", "model": "conjS3"}
    {"kind": "builtin", "name": "alexander", "params": {"modulus": 5, "s": 2, "t": 3}}

Fixture and builtin names always win over file paths.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from . import fixtures
from .algebra.models import (
    FiniteGroup,
    FiniteQuandle,
    TrivialSubset,
    conj_quandle,
    dihedral_quandle,
    trivial_quandle,
)
from .errors import FormatError
from .switch.builtins import BUILTINS, builtin
from .switch.finite import FiniteSwitch, twist
from .switch.linear import LinearSwitchDef
from .switch.symbolic import interpret_pair

DEFAULT_ALEXANDER = {"modulus": 5, "s": 2, "t": 3}


def read_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg}, line {exc.lineno})") from None


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


# ------------------------------------------------------------------ models


def model_from_json(obj) -> list:
    if isinstance(obj, str):
        return load_model(obj)
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("model must be an object with a 'kind' field")
    kind = obj["kind"]
    name = obj.get("name", "")
    if kind == "quandle":
        return [FiniteQuandle(np.asarray(obj["table"]), name)]
    if kind == "group":
        return [FiniteGroup(np.asarray(obj["table"]), np.asarray(obj["inverse"]),
                            int(obj.get("identity", 0)), name)]
    if kind == "dihedral":
        return [dihedral_quandle(int(obj["n"]))]
    if kind == "trivial":
        return [trivial_quandle(int(obj["n"]))]
    if kind == "conjugation":
        G = model_from_json(obj["group"])[0]
        if not isinstance(G, FiniteGroup):
            raise FormatError("conjugation model needs a group")
        return [conj_quandle(G)]
    if kind == "multi":
        Q = model_from_json(obj["quandle"])[0]
        return [Q, TrivialSubset(Q, tuple(obj["trivial_subset"]))]
    raise FormatError(f"unknown model kind {kind!r}")


def model_to_json(models) -> dict:
    first = models[0]
    if len(models) == 1:
        return first.to_json()
    return {"kind": "multi", "quandle": first.to_json(),
            "trivial_subset": list(models[1].elements)}


def load_model(spec: str) -> list:
    if spec in fixtures.MODELS:
        return fixtures.model(spec)
    if os.path.exists(spec):
        return model_from_json(read_json(spec))
    stem = Path(spec).name.removesuffix(".json")
    if stem in fixtures.MODELS:
        return fixtures.model(stem)
    raise FormatError(f"unknown model {spec!r}: not a fixture name ({', '.join(fixtures.MODELS)}) or a file")


# ---------------------------------------------------------------- switches


def _parse_params(text: str) -> dict:
    out = {}
    for part in text.split(","):
        key, eq, val = part.partition("=")
        if not eq:
            raise FormatError(f"parameter {part!r} is not key=value")
        out[key.strip()] = int(val)
    return out


def tabulated_from_json(obj) -> FiniteSwitch:
    try:
        return FiniteSwitch(tuple(obj["carriers"]), np.asarray(obj["map"]), obj.get("name", ""))
    except KeyError as exc:
        raise FormatError(f"tabulated switch lacks field {exc.args[0]!r}") from None


def _builtin_pair(name: str, model=None, params=None):
    sdef = builtin(name)
    if isinstance(sdef, LinearSwitchDef):
        p = dict(DEFAULT_ALEXANDER)
        if isinstance(params, str):
            params = _parse_params(params)
        p.update(params or {})
        if "p" in p:
            p["modulus"] = p.pop("p")
        return _linear_pair(sdef, p), sdef
    if model is None:
        model = "conjS3" if sdef.m >= 1 else ("S3" if sdef.signature == "group" else "R3")
    models = model_from_json(model) if isinstance(model, dict) else load_model(model)
    return interpret_pair(sdef, models), sdef


def _linear_pair(sdef, params):
    from .switch.linear import interpret_linear
    S = interpret_linear(sdef, params, "S")
    V = interpret_linear(sdef, params, "V")
    S_inv = interpret_linear(sdef, params, "S_inv")
    if not np.array_equal(S_inv.table, S.inverse.table):
        raise FormatError("shipped inverse of alexander does not invert S")
    return S, V


def switch_from_json(obj):
    """``((S, V), definition_or_None)`` from a parsed switch file."""
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind == "tabulated":
        S = tabulated_from_json(obj)
        V = tabulated_from_json(obj["virtual"]) if "virtual" in obj else twist(S.carriers)
        return (S, V), None
    if kind == "builtin":
        return _builtin_pair(obj["name"], obj.get("model"), obj.get("params"))
    raise FormatError("switch file must have kind 'tabulated' or 'builtin'")


def load_switch(spec: str, model: str | None = None, params: str | None = None):
    """Resolve ``NAME``, ``NAME:MODEL`` (builtin names first) or a JSON path.

    For ``alexander`` the part after the colon is ``p=5,s=2,t=3``.
    """
    name, sep, rest = spec.partition(":")
    if name in BUILTINS:
        if sep:
            if name == "alexander":
                params = rest
            else:
                model = rest
        return _builtin_pair(name, model, params)
    if os.path.exists(spec):
        return switch_from_json(read_json(spec))
    raise FormatError(f"unknown switch {spec!r}: not a builtin ({', '.join(BUILTINS)}) or a file")


def load_virtual(spec: str | None, S: FiniteSwitch, default: FiniteSwitch) -> FiniteSwitch:
    """``twist`` means the twist on ``S``'s carriers; anything else is a switch spec."""
    if spec is None:
        return default
    if spec == "twist":
        return twist(S.carriers)
    (V, _), _ = load_switch(spec)
    return V


def load_diagram_text(spec: str) -> str:
    stem = Path(spec).name
    if stem.endswith(".pd"):
        stem = stem[:-3]
    if spec in fixtures.DIAGRAMS:
        return fixtures.diagram_text(spec)
    if not os.path.exists(spec) and stem in fixtures.DIAGRAMS:
        return fixtures.diagram_text(stem)
    return read_text(spec)
