"""Tietze-style simplification of presentations.

Two moves are repeated until neither applies:

* drop a relation whose sides are already equal in the free object
  (structural equality; free quandle on all generators; free group);
* eliminate a generator ``g`` from a relation ``g = t`` with ``g`` not a
  leaf of ``t``, substituting ``t`` for ``g`` everywhere.

Component-1 generators under a structural flag are only eliminated in
favour of another generator, so that the flag keeps describing the same
relation set on the survivors.
"""

from __future__ import annotations

from ..algebra.free import free_group_reduce, free_quandle_equal
from ..algebra.terms import GROUP, Generator, Term, leaves, mul, inv, substitute, ONE
from .presentation import Presentation


def _to_free_quandle(l: Term, r: Term) -> tuple[Term, Term]:
    gens = sorted(leaves(l) | leaves(r))
    ren = {g: Generator(0, k + 1) for k, g in enumerate(gens)}
    return substitute(l, ren), substitute(r, ren)


def relation_is_trivial(l: Term, r: Term, sig: str) -> bool:
    """Sound (not complete) test that ``l = r`` holds in the free object."""
    if l == r:
        return True
    if sig == GROUP:
        return free_group_reduce(mul(l, inv(r))) == ONE
    # equality in the free quandle on every generator implies equality in
    # any quotient of it
    return free_quandle_equal(*_to_free_quandle(l, r))


def _normalize(t: Term, sig: str) -> Term:
    return free_group_reduce(t) if sig == GROUP else t


def _eliminable(P: Presentation, g, t) -> bool:
    if not isinstance(g, Generator) or g not in P.generators or g in leaves(t):
        return False
    if g.component >= 1 and P.structural:
        return isinstance(t, Generator)
    return True


def _pick(P: Presentation):
    for i, (l, r) in enumerate(P.relations):
        options = [(g, t) for g, t in ((l, r), (r, l)) if _eliminable(P, g, t)]
        if options:
            # keep the smaller generator when both sides are generators
            return i, max(options, key=lambda o: o[0])
    return None


def simplify(P: Presentation) -> Presentation:
    sig = P.signature
    gens = list(P.generators)
    rels = [(_normalize(l, sig), _normalize(r, sig)) for l, r in P.relations]
    while True:
        rels = [(l, r) for l, r in rels if not relation_is_trivial(l, r, sig)]
        cur = Presentation(tuple(gens), tuple(rels), sig, P.structural)
        choice = _pick(cur)
        if choice is None:
            return cur
        i, (g, t) = choice
        sub = {g: t}
        gens.remove(g)
        rels = [(_normalize(substitute(l, sub), sig), _normalize(substitute(r, sub), sig))
                for k, (l, r) in enumerate(rels) if k != i]
