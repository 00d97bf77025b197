"""Symbolic (multi-)switch definitions and their finite interpretations.

A :class:`SymbolicMap` gives, for every component ``i``, the pair of output
terms ``(S_i^l, S_i^r)`` written in the designated inputs: strand 1 is the
left input point and strand 2 the right one, so ``x1, x2`` are the
component-0 inputs and ``y1, y2`` the component-1 inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..algebra.models import FiniteGroup, FiniteQuandle, TrivialSubset, eval_term
from ..algebra.terms import Generator, Term, leaves, parse_term, signature
from ..errors import ClosureError, FormatError, SignatureError
from .finite import FiniteSwitch

LEFT, RIGHT = 1, 2


@dataclass(frozen=True)
class SymbolicMap:
    components: tuple[tuple[Term, Term], ...]

    def __post_init__(self):
        comps = tuple((l, r) for l, r in self.components)
        for i, (l, r) in enumerate(comps):
            for t in (l, r):
                for g in leaves(t):
                    if g.strand not in (LEFT, RIGHT):
                        raise FormatError(f"input generator {g} must use strand 1 or 2")
                    if g.component >= len(comps):
                        raise FormatError(f"generator {g} beyond the declared components")
                    if i >= 1 and g.component != i:
                        raise FormatError(
                            f"component {i} output {t} mentions {g}; "
                            f"component maps i >= 1 may only use component-{i} inputs"
                        )
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, pairs: Sequence[Sequence[str]]) -> "SymbolicMap":
        return cls(tuple((parse_term(l), parse_term(r)) for l, r in pairs))

    @property
    def m(self) -> int:
        return len(self.components) - 1

    def terms(self):
        for l, r in self.components:
            yield l
            yield r

    def __str__(self) -> str:
        parts = []
        for l, r in self.components:
            parts.append(f"{l}, {r}")
        return "(" + "; ".join(parts) + ")"


def twist_map(m: int) -> SymbolicMap:
    return SymbolicMap(tuple((Generator(i, RIGHT), Generator(i, LEFT)) for i in range(m + 1)))


@dataclass(frozen=True)
class SwitchDef:
    """A virtual (multi-)switch given by words in the operations of X.

    ``S_inv`` is needed for negative crossings and ``sigma^-1``; ``V``
    defaults to the twist.  ``structural`` names relations that the free
    object underlying component 1 imposes (``"trivial-component-1"`` for a
    trivial quandle).
    """

    name: str
    signature: str
    S: SymbolicMap
    S_inv: SymbolicMap | None = None
    V: SymbolicMap | None = None
    structural: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.V is None:
            object.__setattr__(self, "V", twist_map(self.S.m))
        for label, smap in (("S", self.S), ("S_inv", self.S_inv), ("V", self.V)):
            if smap is None:
                continue
            if smap.m != self.S.m:
                raise FormatError(f"{label} has {smap.m + 1} components, S has {self.S.m + 1}")
            for t in smap.terms():
                sig = signature(t)
                if sig is not None and sig != self.signature:
                    raise SignatureError(f"{label} term {t} is not a {self.signature} term")
        object.__setattr__(self, "structural", frozenset(self.structural))

    @property
    def m(self) -> int:
        return self.S.m

    def part(self, which: str) -> SymbolicMap:
        smap = {"S": self.S, "S_inv": self.S_inv, "V": self.V}[which]
        if smap is None:
            from ..errors import MissingInverseError
            raise MissingInverseError(f"switch {self.name} has no inverse map")
        return smap


def _carrier_elements(model, comp_models, i) -> np.ndarray:
    if i == 0:
        return np.arange(model.order)
    sub = comp_models[i]
    if isinstance(sub, TrivialSubset):
        if sub.carrier is not model:
            raise FormatError("trivial subset must live in the component-0 model")
        return np.asarray(sub.elements, dtype=np.int64)
    return np.asarray(list(sub), dtype=np.int64)


def _normalize_models(models):
    if isinstance(models, (FiniteQuandle, FiniteGroup)):
        return [models]
    return list(models)


def interpret(sdef: SwitchDef, models, which: str = "S") -> FiniteSwitch:
    """Tabulate one map of ``sdef`` on finite models.

    ``models[0]`` is the finite quandle or group interpreting component 0;
    ``models[i]`` for ``i >= 1`` is a :class:`TrivialSubset` (or a plain list
    of elements) of ``models[0]`` serving as carrier ``X_i``.  All terms are
    evaluated in ``models[0]``.
    """
    from .linear import LinearSwitchDef, interpret_linear
    if isinstance(sdef, LinearSwitchDef):
        return interpret_linear(sdef, models, which)
    comp_models = _normalize_models(models)
    if len(comp_models) != sdef.m + 1:
        raise FormatError(f"{sdef.name} needs {sdef.m + 1} component models, got {len(comp_models)}")
    model = comp_models[0]
    if sdef.signature == "quandle" and not isinstance(model, FiniteQuandle):
        raise SignatureError(f"{sdef.name} needs a quandle model")
    if sdef.signature == "group" and not isinstance(model, FiniteGroup):
        raise SignatureError(f"{sdef.name} needs a group model")
    smap = sdef.part(which)

    elements = [_carrier_elements(model, comp_models, i) for i in range(sdef.m + 1)]
    carriers = tuple(len(e) for e in elements)
    n = int(np.prod(carriers))
    pts = np.arange(n)
    comps = np.unravel_index(pts, carriers)
    pa, pb = np.meshgrid(pts, pts, indexing="ij")
    pa, pb = pa.ravel(), pb.ravel()
    env = {}
    for i in range(sdef.m + 1):
        env[Generator(i, LEFT)] = elements[i][comps[i][pa]]
        env[Generator(i, RIGHT)] = elements[i][comps[i][pb]]

    out_l, out_r = [], []
    for i, (lt, rt) in enumerate(smap.components):
        lookup = np.full(model.order, -1, dtype=np.int64)
        lookup[elements[i]] = np.arange(len(elements[i]))
        for t, sink in ((lt, out_l), (rt, out_r)):
            vals = np.broadcast_to(np.asarray(eval_term(t, env, model)), pa.shape)
            idx = lookup[vals]
            if (idx < 0).any():
                k = int(np.nonzero(idx < 0)[0][0])
                raise ClosureError(
                    f"{sdef.name}.{which} component {i} term {t} leaves carrier X_{i} "
                    f"at input pair ({int(pa[k])}, {int(pb[k])})"
                )
            sink.append(idx)
    left = np.ravel_multi_index(tuple(out_l), carriers)
    right = np.ravel_multi_index(tuple(out_r), carriers)
    table = np.stack([left, right], axis=-1).reshape(n, n, 2)
    labels = tuple(tuple(int(v) for v in e) for e in elements)
    suffix = "" if which == "S" else f".{which}"
    return FiniteSwitch(carriers, table, f"{sdef.name}{suffix}", labels)


def interpret_pair(sdef: SwitchDef, models) -> tuple[FiniteSwitch, FiniteSwitch]:
    """``(S, V)`` on finite models; a shipped ``S_inv`` is validated against ``S``."""
    S = interpret(sdef, models, "S")
    V = interpret(sdef, models, "V")
    if getattr(sdef, "S_inv", None) is not None:
        S_inv = interpret(sdef, models, "S_inv")
        if not S.is_bijective or not np.array_equal(S_inv.table, S.inverse.table):
            raise FormatError(f"shipped inverse of {sdef.name} does not invert S on these models")
    return S, V
