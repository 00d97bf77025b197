"""Finite quandles and groups given by operation tables, with exhaustive
axiom checkers and term evaluation.

Elements are 0-indexed integers and tables are row-major:
``table[a][b] == a * b`` for quandles and ``a . b`` for groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ..errors import FormatError, SignatureError, UnboundGeneratorError
from ..report import Check, Report
from .terms import Generator, Inv, Mul, One, QOp, Term


def _as_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"table is not an integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise FormatError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise FormatError(f"table entries must lie in 0..{n - 1}")
    return arr


def check_quandle(table) -> Report:
    """Exhaustively check the three quandle axioms.

    Raises :class:`FormatError` for a non-square table or out-of-range entry.
    Each failing axiom carries its first witness in lexicographic order.
    """
    t = _as_table(table)
    n = t.shape[0]
    idx = np.arange(n)

    bad = np.nonzero(t[idx, idx] != idx)[0]
    idem = Check("idempotence", bad.size == 0, (int(bad[0]),) if bad.size else None,
                 "a*a == a")

    # column b must be a permutation: a -> a*b
    wit = None
    for b in range(n):
        col = t[:, b]
        if len(np.unique(col)) != n:
            a1, a2 = _first_collision(col)
            wit = (a1, a2, b)
            break
    right_inv = Check("right-invertibility", wit is None, wit,
                      "a -> a*b is a bijection for every b")

    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    lhs = t[t[a, b], c]
    rhs = t[t[a, c], t[b, c]]
    bad3 = np.argwhere(lhs != rhs)
    dist = Check("self-distributivity", bad3.size == 0,
                 tuple(int(v) for v in bad3[0]) if bad3.size else None,
                 "(a*b)*c == (a*c)*(b*c)")
    return Report("quandle", [idem, right_inv, dist])


def _first_collision(values: np.ndarray) -> tuple[int, int]:
    seen: dict[int, int] = {}
    for i, v in enumerate(values.tolist()):
        if v in seen:
            return seen[v], i
        seen[v] = i
    raise ValueError("no collision")


def check_group(table, inverse, identity: int) -> Report:
    t = _as_table(table)
    n = t.shape[0]
    inv = np.asarray(inverse, dtype=np.int64)
    if inv.shape != (n,) or inv.min() < 0 or inv.max() >= n or not 0 <= identity < n:
        raise FormatError("inverse/identity do not match the table")
    idx = np.arange(n)
    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    bad = np.argwhere(t[t[a, b], c] != t[a, t[b, c]])
    assoc = Check("associativity", bad.size == 0,
                  tuple(int(v) for v in bad[0]) if bad.size else None)
    bad_id = np.nonzero((t[identity, idx] != idx) | (t[idx, identity] != idx))[0]
    ident = Check("identity", bad_id.size == 0, (int(bad_id[0]),) if bad_id.size else None)
    bad_inv = np.nonzero((t[idx, inv] != identity) | (t[inv, idx] != identity))[0]
    inverses = Check("inverse", bad_inv.size == 0, (int(bad_inv[0]),) if bad_inv.size else None)
    return Report("group", [assoc, ident, inverses])


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """A finite quandle.  The constructor validates all three axioms."""

    table: np.ndarray
    name: str = ""
    inv_table: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = _as_table(self.table)
        report = check_quandle(t)
        if not report.ok:
            bad = report.first_failure()
            raise FormatError(f"not a quandle: {bad.name} fails at {bad.witness}")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        n = t.shape[0]
        inv_t = np.empty_like(t)
        cols = np.arange(n)
        for b in range(n):
            inv_t[t[:, b], b] = cols
        inv_t.setflags(write=False)
        object.__setattr__(self, "inv_table", inv_t)

    kind = "quandle"

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def op(self, a, b):
        return self.table[a, b]

    def op_inv(self, a, b):
        return self.inv_table[a, b]

    def is_trivial(self) -> bool:
        return bool((self.table == np.arange(self.order)[:, None]).all())

    def to_json(self) -> dict:
        return {"kind": "quandle", "order": self.order, "table": self.table.tolist()}

    def __repr__(self) -> str:
        return f"FiniteQuandle({self.name or 'order=' + str(self.order)})"


def quandle_op_inverse(Q: FiniteQuandle, a: int, b: int) -> int:
    """The unique ``c`` with ``c * b == a``."""
    n = Q.order
    if not (0 <= a < n and 0 <= b < n):
        raise FormatError(f"element out of range 0..{n - 1}")
    return int(Q.inv_table[a, b])


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    inverse: np.ndarray
    identity: int
    name: str = ""

    def __post_init__(self):
        report = check_group(self.table, self.inverse, self.identity)
        if not report.ok:
            bad = report.first_failure()
            raise FormatError(f"not a group: {bad.name} fails at {bad.witness}")
        t = _as_table(self.table)
        t.setflags(write=False)
        inv = np.asarray(self.inverse, dtype=np.int64)
        inv.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverse", inv)

    kind = "group"

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a, b):
        return self.table[a, b]

    def inv(self, a):
        return self.inverse[a]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def to_json(self) -> dict:
        return {"kind": "group", "order": self.order, "table": self.table.tolist(),
                "inverse": self.inverse.tolist(), "identity": int(self.identity)}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or 'order=' + str(self.order)})"


def group_from_permutations(perms: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group table of a list of permutations closed under composition.

    The product is ``(p . q)(i) = q(p(i))``: apply ``p`` first.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            prod = tuple(q[p[k]] for k in range(len(p)))
            if prod not in index:
                raise FormatError("permutations are not closed under composition")
            table[i, j] = index[prod]
    ident = index[tuple(range(len(perms[0])))]
    inverse = [int(np.nonzero(table[i] == ident)[0][0]) for i in range(n)]
    return FiniteGroup(table, np.asarray(inverse), ident, name)


def cyclic_group(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, (-idx) % n, 0, f"Z{n}")


def symmetric_group_s3() -> FiniteGroup:
    """S3 ordered as e, r, r^2, s, s.r, s.r^2 with r = (0 1 2), s = (1 2)."""
    e, r, s = (0, 1, 2), (1, 2, 0), (0, 2, 1)

    def comp(p, q):
        return tuple(q[p[k]] for k in range(3))

    r2 = comp(r, r)
    elems = [e, r, r2, s, comp(s, r), comp(s, r2)]
    return group_from_permutations(elems, "S3")


def conj_quandle(G: FiniteGroup) -> FiniteQuandle:
    """Conjugation quandle ``a * b = b^-1 a b``."""
    t, inv = G.table, G.inverse
    idx = np.arange(G.order)
    a, b = np.meshgrid(idx, idx, indexing="ij")
    return FiniteQuandle(t[t[inv[b], a], b], f"Conj({G.name})" if G.name else "")


def dihedral_quandle(n: int) -> FiniteQuandle:
    """``R_n``: ``a * b = 2b - a (mod n)``."""
    idx = np.arange(n)
    return FiniteQuandle((2 * idx[None, :] - idx[:, None]) % n, f"R{n}")


def trivial_quandle(n: int) -> FiniteQuandle:
    idx = np.arange(n)
    return FiniteQuandle(np.repeat(idx[:, None], n, axis=1), f"T{n}")


@dataclass(frozen=True, eq=False)
class TrivialSubset:
    """Subset of a quandle on which ``a * b == a``: a trivial subquandle."""

    carrier: FiniteQuandle
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(e) for e in self.elements)
        if not els:
            raise FormatError("trivial subset must be non-empty")
        if len(set(els)) != len(els):
            raise FormatError("trivial subset has repeated elements")
        n = self.carrier.order
        if min(els) < 0 or max(els) >= n:
            raise FormatError("trivial subset element out of range")
        for a, b in itertools.product(els, repeat=2):
            if self.carrier.table[a, b] != a:
                raise FormatError(f"not trivial: {a}*{b} = {self.carrier.table[a, b]}")
        object.__setattr__(self, "elements", els)

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_json(self, quandle_ref) -> dict:
        return {"quandle": quandle_ref, "elements": list(self.elements)}


# -------------------------------------------------------------- evaluation


def eval_term(t: Term, env: Mapping[Generator, object], model):
    """Value of ``t`` in ``model`` under ``env``.

    Works elementwise when ``env`` maps generators to integer numpy arrays.
    """
    if isinstance(t, Generator):
        try:
            return env[t]
        except KeyError:
            raise UnboundGeneratorError(f"generator {t} is unbound") from None
    if isinstance(t, QOp):
        if not isinstance(model, FiniteQuandle):
            raise SignatureError(f"quandle term evaluated in {model!r}")
        a = eval_term(t.left, env, model)
        b = eval_term(t.right, env, model)
        return model.op_inv(a, b) if t.inverse else model.op(a, b)
    if isinstance(t, Mul):
        if not isinstance(model, FiniteGroup):
            raise SignatureError(f"group term evaluated in {model!r}")
        return model.mul(eval_term(t.left, env, model), eval_term(t.right, env, model))
    if isinstance(t, Inv):
        if not isinstance(model, FiniteGroup):
            raise SignatureError(f"group term evaluated in {model!r}")
        return model.inv(eval_term(t.arg, env, model))
    if isinstance(t, One):
        if not isinstance(model, FiniteGroup):
            raise SignatureError(f"group term evaluated in {model!r}")
        return model.identity
    raise TypeError(f"not a term: {t!r}")


def compile_term(t: Term, model):
    """Compile ``t`` into a function of an environment mapping.

    Shared subterms are evaluated once per call; this matters for braid
    images, whose trees share large subtrees.
    """
    cache: dict[int, object] = {}

    def build(node):
        key = id(node)
        if key in cache:
            return cache[key]
        if isinstance(node, Generator):
            def fn(env, memo, g=node):
                try:
                    return env[g]
                except KeyError:
                    raise UnboundGeneratorError(f"generator {g} is unbound") from None
        elif isinstance(node, QOp):
            if not isinstance(model, FiniteQuandle):
                raise SignatureError(f"quandle term evaluated in {model!r}")
            lf, rf = build(node.left), build(node.right)
            tab = model.inv_table if node.inverse else model.table

            def fn(env, memo, lf=lf, rf=rf, tab=tab, k=key):
                if k not in memo:
                    memo[k] = tab[lf(env, memo), rf(env, memo)]
                return memo[k]
        elif isinstance(node, Mul):
            if not isinstance(model, FiniteGroup):
                raise SignatureError(f"group term evaluated in {model!r}")
            lf, rf = build(node.left), build(node.right)
            tab = model.table

            def fn(env, memo, lf=lf, rf=rf, tab=tab, k=key):
                if k not in memo:
                    memo[k] = tab[lf(env, memo), rf(env, memo)]
                return memo[k]
        elif isinstance(node, Inv):
            if not isinstance(model, FiniteGroup):
                raise SignatureError(f"group term evaluated in {model!r}")
            af = build(node.arg)
            invt = model.inverse

            def fn(env, memo, af=af, invt=invt):
                return invt[af(env, memo)]
        elif isinstance(node, One):
            if not isinstance(model, FiniteGroup):
                raise SignatureError(f"group term evaluated in {model!r}")
            ident = model.identity

            def fn(env, memo, ident=ident):
                return ident
        else:
            raise TypeError(f"not a term: {node!r}")
        cache[key] = fn
        return fn

    root = build(t)
    return lambda env: root(env, {})
