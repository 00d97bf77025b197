"""Named switch definitions: twist, Artin, quandle, Kauffman group,
generalized Alexander, and the virtual 2-switch on ``Q * T`` (``2q``)."""

from __future__ import annotations

from ..errors import FormatError
from .linear import LinearSwitchDef, alexander_def
from .symbolic import SwitchDef, SymbolicMap


def _def(name, sig, S, S_inv, V=None, structural=()):
    return SwitchDef(
        name,
        sig,
        SymbolicMap.parse(S),
        SymbolicMap.parse(S_inv),
        SymbolicMap.parse(V) if V is not None else None,
        frozenset(structural),
    )


def twist_def(signature: str = "quandle") -> SwitchDef:
    return _def("twist", signature, [("x2", "x1")], [("x2", "x1")])


def artin_def() -> SwitchDef:
    # S(a, b) = (a b a^-1, a); inverse (c, d) -> (d, d^-1 c d)
    return _def("artin", "group", [("x1.x2.x1^-1", "x1")], [("x2", "x2^-1.x1.x2")])


def quandle_def() -> SwitchDef:
    # S(a, b) = (b, a*b); inverse (c, d) -> (d *~ c, c)
    return _def("quandle", "quandle", [("x2", "x1*x2")], [("x2*~x1", "x1")])


def kauffman_group_def() -> SwitchDef:
    # S(x, y) = (y, y x y^-1); inverse (c, d) -> (c^-1 d c, c)
    return _def("kauffman-group", "group", [("x2", "x2.x1.x2^-1")], [("x1^-1.x2.x1", "x1")])


def two_q_def() -> SwitchDef:
    """Virtual 2-switch on ``Q * X_1`` with ``X_1`` trivial:
    ``S(a,b;x,y) = (b, a*b; y, x)``, ``V(a,b;x,y) = (b *~ x, a*y; y, x)``."""
    return _def(
        "2q",
        "quandle",
        S=[("x2", "x1*x2"), ("y2", "y1")],
        S_inv=[("x2*~x1", "x1"), ("y2", "y1")],
        V=[("x2*~y1", "x1*y2"), ("y2", "y1")],
        structural=("trivial-component-1",),
    )


BUILTINS = {
    "twist": twist_def,
    "artin": artin_def,
    "quandle": quandle_def,
    "kauffman-group": kauffman_group_def,
    "alexander": alexander_def,
    "2q": two_q_def,
}


def builtin(name: str) -> SwitchDef | LinearSwitchDef:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise FormatError(f"unknown builtin switch {name!r}; known: {', '.join(BUILTINS)}") from None
