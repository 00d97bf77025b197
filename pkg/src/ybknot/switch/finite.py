"""Tabulated (multi-)switches on finite product sets and their axiom checks.

A :class:`FiniteSwitch` acts on pairs of points of ``X x X_1 x ... x X_m``.
Points are encoded as flat indices (C order over the component carriers), and
the map is a ``(N, N, 2)`` table of output point indices.  Every check below is
exhaustive over all pairs or triples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from ..errors import CarrierTooLargeError, DegenerateError, FormatError
from ..report import Check, Report

DEFAULT_MAX_CARRIER = 64


def max_carrier() -> int:
    """Cap on the point count N of a checked switch (env ``YBKNOT_MAX_CARRIER``)."""
    raw = os.environ.get("YBKNOT_MAX_CARRIER")
    if raw is None:
        return DEFAULT_MAX_CARRIER
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"YBKNOT_MAX_CARRIER must be an integer, got {raw!r}") from None


def _guard(S: "FiniteSwitch"):
    cap = max_carrier()
    if S.size > cap:
        raise CarrierTooLargeError(
            f"switch on {S.size} points exceeds the exhaustive-check cap {cap} "
            "(set YBKNOT_MAX_CARRIER to raise it)"
        )


@dataclass(frozen=True, eq=False)
class FiniteSwitch:
    """Map on ``(X x X_1 x ... x X_m)^2`` given by a lookup table.

    ``carriers`` lists the sizes of the factors; ``table[a, b] = (l, r)`` with
    ``a, b, l, r`` flat point indices.  ``labels`` optionally names the
    elements of each factor (e.g. the quandle elements a trivial subset
    consists of).
    """

    carriers: tuple[int, ...]
    table: np.ndarray
    name: str = ""
    labels: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        carriers = tuple(int(c) for c in self.carriers)
        if not carriers or min(carriers) < 1:
            raise FormatError("carriers must be a non-empty list of positive sizes")
        n = int(np.prod(carriers))
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (n, n, 2):
            raise FormatError(f"switch table must have shape {(n, n, 2)}, got {t.shape}")
        if t.min() < 0 or t.max() >= n:
            raise FormatError(f"switch table entries must lie in 0..{n - 1}")
        t.setflags(write=False)
        object.__setattr__(self, "carriers", carriers)
        object.__setattr__(self, "table", t)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @property
    def m(self) -> int:
        return len(self.carriers) - 1

    @property
    def left(self) -> np.ndarray:
        return self.table[:, :, 0]

    @property
    def right(self) -> np.ndarray:
        return self.table[:, :, 1]

    def __call__(self, a, b):
        return self.table[a, b, 0], self.table[a, b, 1]

    def decode(self, point: int) -> tuple[int, ...]:
        return tuple(int(v) for v in np.unravel_index(point, self.carriers))

    def encode(self, comps: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(comps), self.carriers))

    @cached_property
    def is_bijective(self) -> bool:
        flat = self.table[:, :, 0] * self.size + self.table[:, :, 1]
        return len(np.unique(flat)) == self.size ** 2

    @cached_property
    def inverse(self) -> "FiniteSwitch":
        if not self.is_bijective:
            raise FormatError(f"switch {self.name or ''} is not bijective")
        n = self.size
        inv = np.empty_like(self.table)
        a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        inv[self.table[:, :, 0], self.table[:, :, 1], 0] = a
        inv[self.table[:, :, 0], self.table[:, :, 1], 1] = b
        return FiniteSwitch(self.carriers, inv, f"{self.name}^-1" if self.name else "", self.labels)

    def __eq__(self, other):
        return (isinstance(other, FiniteSwitch) and self.carriers == other.carriers
                and np.array_equal(self.table, other.table))

    __hash__ = object.__hash__

    def to_json(self) -> dict:
        return {"kind": "tabulated", "carriers": list(self.carriers),
                "map": self.table.tolist()}

    def __repr__(self) -> str:
        return f"FiniteSwitch({self.name or '?'}, carriers={list(self.carriers)})"


def from_function(carriers: Sequence[int], fn: Callable, name: str = "") -> FiniteSwitch:
    """Tabulate ``fn(a, b) -> (l, r)`` acting on flat point indices."""
    n = int(np.prod(carriers))
    table = np.empty((n, n, 2), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            table[a, b] = fn(a, b)
    return FiniteSwitch(tuple(carriers), table, name)


def twist(carriers: Sequence[int] | int) -> FiniteSwitch:
    if isinstance(carriers, int):
        carriers = (carriers,)
    n = int(np.prod(carriers))
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return FiniteSwitch(tuple(carriers), np.stack([b, a], axis=-1), "twist")


def identity_switch(carriers: Sequence[int] | int) -> FiniteSwitch:
    if isinstance(carriers, int):
        carriers = (carriers,)
    n = int(np.prod(carriers))
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return FiniteSwitch(tuple(carriers), np.stack([a, b], axis=-1), "identity")


def product_switch(factors: Sequence[FiniteSwitch]) -> FiniteSwitch:
    """``S x S_1 x ... x S_m`` acting componentwise on one-factor switches."""
    carriers = tuple(f.size for f in factors)
    n = int(np.prod(carriers))
    pts = np.arange(n)
    comps = np.unravel_index(pts, carriers)
    a_idx, b_idx = np.meshgrid(pts, pts, indexing="ij")
    outs_l, outs_r = [], []
    for i, f in enumerate(factors):
        ca, cb = comps[i][a_idx], comps[i][b_idx]
        outs_l.append(f.table[ca, cb, 0])
        outs_r.append(f.table[ca, cb, 1])
    left = np.ravel_multi_index(tuple(outs_l), carriers)
    right = np.ravel_multi_index(tuple(outs_r), carriers)
    name = " x ".join(f.name or "?" for f in factors)
    return FiniteSwitch(carriers, np.stack([left, right], axis=-1), name)


# ------------------------------------------------------------------ checks


def _triples(n: int):
    idx = np.arange(n)
    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    return a.ravel(), b.ravel(), c.ravel()


def _on_first(S: FiniteSwitch, a, b, c):
    return S.table[a, b, 0], S.table[a, b, 1], c


def _on_second(S: FiniteSwitch, a, b, c):
    return a, S.table[b, c, 0], S.table[b, c, 1]


def _first_mismatch(lhs, rhs, a, b, c):
    bad = np.nonzero((lhs[0] != rhs[0]) | (lhs[1] != rhs[1]) | (lhs[2] != rhs[2]))[0]
    if bad.size == 0:
        return None
    k = bad[0]
    return (int(a[k]), int(b[k]), int(c[k]))


def check_yang_baxter(S: FiniteSwitch) -> Report:
    """``(S x id)(id x S)(S x id) == (id x S)(S x id)(id x S)`` on all triples."""
    _guard(S)
    a, b, c = _triples(S.size)
    lhs = _on_first(S, *_on_second(S, *_on_first(S, a, b, c)))
    rhs = _on_second(S, *_on_first(S, *_on_second(S, a, b, c)))
    wit = _first_mismatch(lhs, rhs, a, b, c)
    return Report(S.name or "switch", [Check("yang-baxter", wit is None, wit)])


def _bijective_check(S: FiniteSwitch) -> Check:
    if S.is_bijective:
        return Check("bijective", True)
    flat = S.table[:, :, 0] * S.size + S.table[:, :, 1]
    seen: dict[int, tuple[int, int]] = {}
    for (a, b), v in np.ndenumerate(flat):
        if v in seen:
            return Check("bijective", False, (seen[v], (a, b)))
        seen[int(v)] = (a, b)
    return Check("bijective", False)


def check_switch(S: FiniteSwitch) -> Report:
    """Yang-Baxter equation plus bijectivity; ``extra['inverse']`` on success."""
    report = check_yang_baxter(S)
    report.checks.append(_bijective_check(S))
    if S.is_bijective:
        report.extra["inverse"] = S.inverse
    return report


def _perm_failures(maps: np.ndarray) -> int | None:
    """Index of the first row of ``maps`` that is not a permutation."""
    n = maps.shape[1]
    srt = np.sort(maps, axis=1)
    bad = np.nonzero((srt != np.arange(n)).any(axis=1))[0]
    return None if bad.size == 0 else int(bad[0])


def check_nondegenerate(S: FiniteSwitch) -> Report:
    """Every ``x -> S^l(a, x)`` and ``x -> S^r(x, a)`` is a permutation."""
    _guard(S)
    bad_l = _perm_failures(S.left)
    bad_r = _perm_failures(S.right.T)
    return Report(S.name or "switch", [
        Check("left-nondegenerate", bad_l is None, bad_l, "x -> S^l(a, x) bijective"),
        Check("right-nondegenerate", bad_r is None, bad_r, "x -> S^r(x, a) bijective"),
    ])


@dataclass(frozen=True, eq=False)
class UpDownOps:
    """Up/down operations of a non-degenerate switch.

    ``up[a, b] = a^b = S^r(a, b)`` and ``down[a, b] = a_b = S^l(b, a)``.
    ``up_inv[a, b]`` is the ``x`` with ``x^b = a``; likewise ``down_inv``.
    """

    up: np.ndarray
    down: np.ndarray
    up_inv: np.ndarray
    down_inv: np.ndarray

    def switch_table(self) -> np.ndarray:
        n = self.up.shape[0]
        a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        return np.stack([self.down[b, a], self.up[a, b]], axis=-1)


def _invert_first_arg(op: np.ndarray) -> np.ndarray:
    n = op.shape[0]
    out = np.empty_like(op)
    xs = np.arange(n)
    for b in range(n):
        out[op[:, b], b] = xs
    return out


def updown(S: FiniteSwitch) -> UpDownOps:
    if not check_nondegenerate(S).ok:
        raise DegenerateError(f"switch {S.name or ''} is degenerate")
    up = S.right.copy()
    down = S.left.T.copy()
    return UpDownOps(up, down, _invert_first_arg(up), _invert_first_arg(down))


BIQUANDLE = "biquandle"
BIRACK = "birack"
NEITHER = "neither"


def check_biquandle(S: FiniteSwitch) -> Report:
    """Classify a switch as biquandle, birack or neither.

    The compatibility condition is checked through the tabulated inverse
    operations: with ``u = a^{a^-1}`` and ``d = a_{a^-1}`` it requires
    ``u == a_u`` and ``d == a^d`` for every ``a``.
    """
    report = check_switch(S)
    nd = check_nondegenerate(S)
    report.checks.extend(nd.checks)
    classification = NEITHER
    if report.ok:
        ops = updown(S)
        idx = np.arange(S.size)
        u = ops.up_inv[idx, idx]
        d = ops.down_inv[idx, idx]
        bad_u = np.nonzero(u != ops.down[idx, u])[0]
        bad_d = np.nonzero(d != ops.up[idx, d])[0]
        report.checks.append(Check("biquandle-up", bad_u.size == 0,
                                   int(bad_u[0]) if bad_u.size else None,
                                   "a^{a^-1} == a_{a^{a^-1}}"))
        report.checks.append(Check("biquandle-down", bad_d.size == 0,
                                   int(bad_d[0]) if bad_d.size else None,
                                   "a_{a^-1} == a^{a_{a^-1}}"))
        classification = BIQUANDLE if report.ok else BIRACK
    report.extra["classification"] = classification
    return report


def check_virtual_pair(S: FiniteSwitch, V: FiniteSwitch) -> Report:
    """``S`` and ``V`` are switches, ``V^2 = id``, and the mixed relation
    ``(id x V)(S x id)(id x V) == (V x id)(id x S)(V x id)`` holds."""
    if S.carriers != V.carriers:
        raise FormatError(f"carrier mismatch: {S.carriers} vs {V.carriers}")
    checks = []
    for label, sw in (("S", S), ("V", V)):
        for c in check_switch(sw).checks:
            checks.append(Check(f"{label} {c.name}", c.ok, c.witness, c.detail))
    n = S.size
    a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    vv_l = V.table[V.table[a, b, 0], V.table[a, b, 1], 0]
    vv_r = V.table[V.table[a, b, 0], V.table[a, b, 1], 1]
    bad = np.argwhere((vv_l != a) | (vv_r != b))
    checks.append(Check("V involutive", bad.size == 0,
                        tuple(int(v) for v in bad[0]) if bad.size else None))
    ta, tb, tc = _triples(n)
    lhs = _on_second(V, *_on_first(S, *_on_second(V, ta, tb, tc)))
    rhs = _on_first(V, *_on_second(S, *_on_first(V, ta, tb, tc)))
    wit = _first_mismatch(lhs, rhs, ta, tb, tc)
    checks.append(Check("mixed relation", wit is None, wit,
                        "(id x V)(S x id)(id x V) == (V x id)(id x S)(V x id)"))
    return Report(f"({S.name or 'S'}, {V.name or 'V'})", checks)


def check_multiswitch_shape(S: FiniteSwitch) -> Report:
    """Output component i >= 1 depends only on input component i.

    ``extra['components']`` holds the extracted switches ``S_1 .. S_m``.
    """
    n = S.size
    pts = np.arange(n)
    comps = np.unravel_index(pts, S.carriers)
    a, b = np.meshgrid(pts, pts, indexing="ij")
    checks = []
    extracted = []
    for i in range(1, len(S.carriers)):
        k = S.carriers[i]
        ci_a, ci_b = comps[i][a], comps[i][b]
        out_l = comps[i][S.table[:, :, 0]]
        out_r = comps[i][S.table[:, :, 1]]
        sub = np.full((k, k, 2), -1, dtype=np.int64)
        wit = None
        for (p, q), l, r, aa, bb in zip(
            zip(ci_a.ravel(), ci_b.ravel()), out_l.ravel(), out_r.ravel(), a.ravel(), b.ravel()
        ):
            if sub[p, q, 0] < 0:
                sub[p, q] = (l, r)
            elif sub[p, q, 0] != l or sub[p, q, 1] != r:
                wit = (int(aa), int(bb))
                break
        checks.append(Check(f"component {i} separated", wit is None, wit,
                            f"output component {i} depends only on input component {i}"))
        if wit is None:
            labels = (S.labels[i],) if S.labels else None
            comp_sw = FiniteSwitch((k,), sub, f"{S.name}_{i}" if S.name else f"S_{i}", labels)
            extracted.append(comp_sw)
            sw_report = check_switch(comp_sw)
            checks.append(Check(f"component {i} switch", sw_report.ok, sw_report.witness))
    report = Report(S.name or "switch", checks)
    report.extra["components"] = extracted
    return report


def mutate(S: FiniteSwitch, a: int, b: int, side: int = 1, shift: int = 1) -> FiniteSwitch:
    """Copy of ``S`` with one output entry replaced; used to plant defects."""
    t = S.table.copy()
    t[a, b, side] = (t[a, b, side] + shift) % S.size
    return FiniteSwitch(S.carriers, t, f"{S.name}~mutated", S.labels)
