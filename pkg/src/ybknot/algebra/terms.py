"""Symbolic terms over the quandle signature (``*``, ``*~``) and the group
signature (``.``, ``^-1``, ``1``).

Terms are immutable trees.  Leaves are :class:`Generator` objects carrying a
(component, strand) pair, so that typed generators ``x_j`` (component 0),
``y_j`` (component 1) and ``z{c}_{j}`` (component c >= 2) survive
substitution unchanged.

Text syntax::

    x1*x2            quandle operation
    x1*~x2           inverse quandle operation
    x1.x2^-1.x1      group product and inverse
    1                group identity
    (x1*x2)*~y3      parentheses; all binary operators are left-associative
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from ..errors import FormatError, SignatureError

QUANDLE = "quandle"
GROUP = "group"


@dataclass(frozen=True, order=True)
class Generator:
    """Generator ``x^component_strand``; strands are 1-based."""

    component: int
    strand: int

    def __post_init__(self):
        if self.component < 0 or self.strand < 1:
            raise FormatError(f"bad generator ({self.component}, {self.strand})")

    @property
    def sig(self) -> None:
        return None

    def __str__(self) -> str:
        if self.component == 0:
            return f"x{self.strand}"
        if self.component == 1:
            return f"y{self.strand}"
        return f"z{self.component}_{self.strand}"

    def __repr__(self) -> str:
        return f"Generator({self.component}, {self.strand})"


def _join_sig(*sigs):
    found = {s for s in sigs if s is not None}
    if len(found) > 1:
        raise SignatureError("term mixes quandle and group operations")
    return found.pop() if found else None


@dataclass(frozen=True)
class QOp:
    """``left * right`` (``inverse=False``) or ``left *~ right``."""

    left: "Term"
    right: "Term"
    inverse: bool = False
    sig: str = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _join_sig(self.left.sig, self.right.sig, QUANDLE)
        object.__setattr__(self, "sig", QUANDLE)

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"
    sig: str = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _join_sig(self.left.sig, self.right.sig, GROUP)
        object.__setattr__(self, "sig", GROUP)

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class Inv:
    arg: "Term"
    sig: str = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _join_sig(self.arg.sig, GROUP)
        object.__setattr__(self, "sig", GROUP)

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True)
class One:
    sig: str = field(default=GROUP, init=False, compare=False, repr=False)

    def __str__(self) -> str:
        return "1"


Term = Union[Generator, QOp, Mul, Inv, One]
ONE = One()


def star(a: Term, b: Term) -> QOp:
    return QOp(a, b)


def star_inv(a: Term, b: Term) -> QOp:
    return QOp(a, b, inverse=True)


def mul(*factors: Term) -> Term:
    """Left-associated product; the empty product is ``1``."""
    if not factors:
        return ONE
    out = factors[0]
    for f in factors[1:]:
        out = Mul(out, f)
    return out


def inv(a: Term) -> Inv:
    return Inv(a)


def x(j: int) -> Generator:
    return Generator(0, j)


def y(j: int) -> Generator:
    return Generator(1, j)


def signature(t: Term) -> str | None:
    """``"quandle"``, ``"group"`` or ``None`` for a bare generator."""
    return t.sig


def leaves(t: Term) -> frozenset[Generator]:
    out: set[Generator] = set()
    seen: set[int] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Generator):
            out.add(node)
        elif isinstance(node, (QOp, Mul)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Inv):
            stack.append(node.arg)
    return frozenset(out)


def depth(t: Term) -> int:
    if isinstance(t, (Generator, One)):
        return 0
    if isinstance(t, Inv):
        return 1 + depth(t.arg)
    return 1 + max(depth(t.left), depth(t.right))


def size(t: Term) -> int:
    if isinstance(t, (Generator, One)):
        return 1
    if isinstance(t, Inv):
        return 1 + size(t.arg)
    return 1 + size(t.left) + size(t.right)


def substitute(t: Term, mapping: Mapping[Generator, Term]) -> Term:
    """Simultaneous substitution of generators; unmapped leaves are kept."""
    memo: dict[int, Term] = {}

    def go(node: Term) -> Term:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Generator):
            res = mapping.get(node, node)
        elif isinstance(node, QOp):
            left, right = go(node.left), go(node.right)
            res = node if (left is node.left and right is node.right) else QOp(left, right, node.inverse)
        elif isinstance(node, Mul):
            left, right = go(node.left), go(node.right)
            res = node if (left is node.left and right is node.right) else Mul(left, right)
        elif isinstance(node, Inv):
            arg = go(node.arg)
            res = node if arg is node.arg else Inv(arg)
        else:
            res = node
        memo[key] = res
        return res

    return go(t)


# ---------------------------------------------------------------- printing


def _is_atom(t: Term) -> bool:
    return isinstance(t, (Generator, One))


def format_term(t: Term) -> str:
    if isinstance(t, (Generator, One)):
        return str(t)
    if isinstance(t, QOp):
        op = "*~" if t.inverse else "*"
        left = format_term(t.left)
        right = format_term(t.right)
        if not _is_atom(t.right):
            right = f"({right})"
        return f"{left}{op}{right}"
    if isinstance(t, Mul):
        left = format_term(t.left)
        right = format_term(t.right)
        if isinstance(t.right, Mul):
            right = f"({right})"
        return f"{left}.{right}"
    if isinstance(t, Inv):
        inner = format_term(t.arg)
        if not _is_atom(t.arg):
            inner = f"({inner})"
        return f"{inner}^-1"
    raise TypeError(f"not a term: {t!r}")


# ----------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>[xy]\d+|z\d+_\d+)|(?P<one>1)|(?P<op>\*~|\*|\.)|(?P<inv>\^-1)|(?P<lp>\()|(?P<rp>\)))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormatError(f"bad term syntax at {text[pos:]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def _parse_gen(tok: str) -> Generator:
    if tok[0] == "x":
        return Generator(0, int(tok[1:]))
    if tok[0] == "y":
        return Generator(1, int(tok[1:]))
    comp, strand = tok[1:].split("_")
    return Generator(int(comp), int(strand))


def parse_term(text: str) -> Term:
    """Parse the infix syntax described in the module docstring."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def atom() -> Term:
        nonlocal pos
        kind, val = peek()
        if kind == "gen":
            pos += 1
            node: Term = _parse_gen(val)
        elif kind == "one":
            pos += 1
            node = ONE
        elif kind == "lp":
            pos += 1
            node = expr()
            if peek()[0] != "rp":
                raise FormatError(f"unbalanced parentheses in {text!r}")
            pos += 1
        else:
            raise FormatError(f"unexpected token {val!r} in {text!r}")
        while peek()[0] == "inv":
            pos += 1
            node = Inv(node)
        return node

    def expr() -> Term:
        nonlocal pos
        node = atom()
        while peek()[0] == "op":
            op = peek()[1]
            pos += 1
            rhs = atom()
            try:
                if op == ".":
                    node = Mul(node, rhs)
                else:
                    node = QOp(node, rhs, inverse=(op == "*~"))
            except SignatureError as exc:
                raise FormatError(f"{exc} in {text!r}") from None
        return node

    if not toks:
        raise FormatError("empty term")
    try:
        result = expr()
    except SignatureError as exc:
        raise FormatError(f"{exc} in {text!r}") from None
    if pos != len(toks):
        raise FormatError(f"trailing input in {text!r}")
    return result


def parse_generators(names: Iterable[str]) -> list[Generator]:
    out = []
    for name in names:
        t = parse_term(name)
        if not isinstance(t, Generator):
            raise FormatError(f"not a generator: {name!r}")
        out.append(t)
    return out
