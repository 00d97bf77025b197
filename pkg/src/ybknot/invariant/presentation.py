"""Presentations of the algebraic systems attached to diagrams and braids.

Text form::

    signature: quandle
    generators: x1 x2 y1 y2
    structural: trivial-component-1
    x2 = x1
    x1*x2 = x2

Header lines are optional except ``generators``; ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.terms import (
    GROUP,
    QUANDLE,
    Generator,
    Term,
    format_term,
    leaves,
    parse_generators,
    parse_term,
    signature,
    star,
    substitute,
)
from ..braid import BraidWord, apply_word
from ..diagram import NEGATIVE, POSITIVE, VIRTUAL, VirtualLinkDiagram
from ..errors import FormatError, SignatureError
from ..switch.builtins import two_q_def
from ..switch.symbolic import LEFT, RIGHT, SwitchDef

TRIVIAL_COMPONENT_1 = "trivial-component-1"
KNOWN_STRUCTURAL = frozenset({TRIVIAL_COMPONENT_1})


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...]
    relations: tuple[tuple[Term, Term], ...] = ()
    signature: str = QUANDLE
    structural: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        if len(gens) != len(self.generators):
            raise FormatError("repeated generator in presentation")
        if self.signature not in (QUANDLE, GROUP):
            raise FormatError(f"unknown signature {self.signature!r}")
        unknown = set(self.structural) - KNOWN_STRUCTURAL
        if unknown:
            raise FormatError(f"unknown structural relation {sorted(unknown)}")
        if TRIVIAL_COMPONENT_1 in self.structural and self.signature != QUANDLE:
            raise SignatureError("trivial-component-1 needs the quandle signature")
        declared = set(gens)
        rels = tuple((l, r) for l, r in self.relations)
        for l, r in rels:
            for side in (l, r):
                sig = signature(side)
                if sig is not None and sig != self.signature:
                    raise SignatureError(f"relation side {format_term(side)} is not a {self.signature} term")
                missing = leaves(side) - declared
                if missing:
                    raise FormatError(f"undeclared generator {min(missing)} in relation")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "structural", frozenset(self.structural))

    def component(self, c: int) -> tuple[Generator, ...]:
        return tuple(g for g in self.generators if g.component == c)

    def structural_relations(self) -> list[tuple[Term, Term]]:
        out = []
        if TRIVIAL_COMPONENT_1 in self.structural:
            ys = self.component(1)
            out = [(star(a, b), a) for a in ys for b in ys]
        return out

    def all_relations(self) -> list[tuple[Term, Term]]:
        return list(self.relations) + self.structural_relations()

    def __str__(self) -> str:
        return format_presentation(self)


def format_presentation(P: Presentation) -> str:
    lines = [f"signature: {P.signature}",
             "generators: " + " ".join(str(g) for g in P.generators)]
    if P.structural:
        lines.append("structural: " + " ".join(sorted(P.structural)))
    lines += [f"{format_term(l)} = {format_term(r)}" for l, r in P.relations]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    sig = QUANDLE
    gens = None
    structural: set[str] = set()
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in ("signature", "generators", "structural"):
            key, rest = key.strip(), rest.strip()
            if key == "signature":
                sig = rest
            elif key == "generators":
                gens = parse_generators(rest.replace(",", " ").split())
            else:
                structural.update(rest.replace(",", " ").split())
            continue
        lhs, eq, rhs = line.partition("=")
        if not eq or "=" in rhs:
            raise FormatError(f"line {lineno}: expected 'lhs = rhs'")
        try:
            rels.append((parse_term(lhs.strip()), parse_term(rhs.strip())))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if gens is None:
        raise FormatError("presentation has no 'generators:' line")
    return Presentation(tuple(gens), tuple(rels), sig, frozenset(structural))


# ------------------------------------------------------------- constructions


def _sig_of(sdef) -> str:
    if not isinstance(sdef, SwitchDef):
        raise FormatError(f"{getattr(sdef, 'name', sdef)!r} is not a symbolic switch definition")
    return sdef.signature


def presentation_from_diagram(D: VirtualLinkDiagram, sdef: SwitchDef) -> Presentation:
    """Arc ``k`` (0-based) carries generators ``(c, k + 1)``; free loops get
    the following strand numbers.  Each crossing contributes ``2(m+1)``
    relations ``out = map(in)``."""
    sig = _sig_of(sdef)
    m = sdef.m
    n_total = D.n_arcs + D.free_loops
    gens = tuple(Generator(c, k) for c in range(m + 1) for k in range(1, n_total + 1))
    part = {POSITIVE: "S", NEGATIVE: "S_inv", VIRTUAL: "V"}
    rels = []
    for cr in D.crossings:
        smap = sdef.part(part[cr.kind])
        ren = {}
        for c in range(m + 1):
            ren[Generator(c, LEFT)] = Generator(c, cr.in_left + 1)
            ren[Generator(c, RIGHT)] = Generator(c, cr.in_right + 1)
        for c, (lt, rt) in enumerate(smap.components):
            rels.append((Generator(c, cr.out_left + 1), substitute(lt, ren)))
            rels.append((Generator(c, cr.out_right + 1), substitute(rt, ren)))
    return Presentation(gens, tuple(rels), sig, sdef.structural)


def presentation_from_braid(beta: BraidWord, sdef: SwitchDef) -> Presentation:
    """Relations ``image(g) = g`` for every generator, images from the
    symbolic braid action."""
    sig = _sig_of(sdef)
    images = apply_word(sdef, beta)
    gens = tuple(sorted(images))
    rels = tuple((images[g], g) for g in gens)
    return Presentation(gens, rels, sig, sdef.structural)


def qtilde(beta: BraidWord) -> Presentation:
    """``2n`` generators ``x_j, y_j``, ``2n`` braid relations and the
    ``n^2`` relations ``y_r * y_s = y_r``."""
    return presentation_from_braid(beta, two_q_def())


def manturov(P: Presentation) -> Presentation:
    """Identify every component-1 generator with a single ``y1``."""
    ys = P.component(1)
    if not ys:
        return P
    target = Generator(1, 1)
    ren = {g: target for g in ys}
    gens = tuple(g for g in P.generators if g.component != 1) + (target,)
    rels = tuple((substitute(l, ren), substitute(r, ren)) for l, r in P.relations)
    return Presentation(gens, rels, P.signature, P.structural)
