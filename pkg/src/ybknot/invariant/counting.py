"""Homomorphism counts out of presentations and fixed-point counts of braid
actions."""

from __future__ import annotations

import numpy as np

from ..algebra.models import FiniteGroup, FiniteQuandle, TrivialSubset, compile_term
from ..algebra.terms import GROUP, QUANDLE, Generator, leaves
from ..braid import BraidWord, act_on_tuples, tuple_space
from ..errors import CarrierTooLargeError, FormatError, SignatureError
from ..switch.finite import FiniteSwitch
from .presentation import Presentation

MAX_TUPLES = 20_000_000


def _domains(P: Presentation, target, constraint):
    full = np.arange(target.order, dtype=np.int64)
    if constraint is not None:
        if not isinstance(constraint, TrivialSubset):
            raise FormatError("component-1 constraint must be a TrivialSubset")
        same = constraint.carrier is target or (
            isinstance(target, FiniteQuandle)
            and np.array_equal(constraint.carrier.table, target.table))
        if not same:
            raise FormatError("constraint must be a subset of the target")
        sub = np.asarray(constraint.elements, dtype=np.int64)
    dom = {}
    for g in P.generators:
        dom[g] = sub if (g.component >= 1 and constraint is not None) else full
    return dom


def hom_schedule(P: Presentation):
    """Static plan: ``("branch", g)``, ``("force", rel_index, g, side)`` and
    ``("check", rel_index)`` steps.  A relation ``g = t`` with every leaf of
    ``t`` known and ``g`` unknown fixes ``g``."""
    rels = P.all_relations()
    rel_leaves = [leaves(l) | leaves(r) for l, r in rels]
    known: set[Generator] = set()
    pending = set(range(len(rels)))
    steps = []
    order = list(P.generators)
    while True:
        progress = True
        while progress:
            progress = False
            for i in sorted(pending):
                l, r = rels[i]
                if rel_leaves[i] <= known:
                    steps.append(("check", i))
                    pending.discard(i)
                    progress = True
                    continue
                for side, (g, t) in enumerate(((l, r), (r, l))):
                    if isinstance(g, Generator) and g not in known and g not in leaves(t) \
                            and leaves(t) <= known:
                        steps.append(("force", i, g, side))
                        known.add(g)
                        pending.discard(i)
                        progress = True
                        break
        rest = [g for g in order if g not in known]
        if not rest:
            break
        # branch on the unknown generator occurring in the most open relations
        score = {g: sum(g in rel_leaves[i] for i in pending) for g in rest}
        g = max(rest, key=lambda h: (score[h], -order.index(h)))
        steps.append(("branch", g))
        known.add(g)
    return steps


def hom_count(P: Presentation, target, constraint: TrivialSubset | None = None) -> int:
    """Number of assignments of generators to elements of ``target``
    satisfying every relation (structural ones included).

    With ``constraint`` the component-1 generators range over its elements
    only.  All partial assignments are extended in lockstep as numpy arrays.
    """
    if P.signature == QUANDLE and not isinstance(target, FiniteQuandle):
        raise SignatureError("quandle presentation needs a quandle target")
    if P.signature == GROUP and not isinstance(target, FiniteGroup):
        raise SignatureError("group presentation needs a group target")
    dom = _domains(P, target, constraint)
    rels = P.all_relations()
    compiled = [(compile_term(l, target), compile_term(r, target)) for l, r in rels]
    in_dom = {}
    for g, d in dom.items():
        mask = np.zeros(target.order, dtype=bool)
        mask[d] = True
        in_dom[g] = mask

    env: dict[Generator, np.ndarray] = {}
    rows = 1
    for step in hom_schedule(P):
        if step[0] == "branch":
            g = step[1]
            d = dom[g]
            env = {h: np.repeat(v, len(d)) for h, v in env.items()}
            env[g] = np.tile(d, rows)
            rows *= len(d)
            continue
        i = step[1]
        fl, fr = compiled[i]
        if step[0] == "force":
            g, side = step[2], step[3]
            val = np.broadcast_to(np.asarray(fr(env) if side == 0 else fl(env)), (rows,))
            keep = in_dom[g][val]
            env[g] = val
        else:
            lv = np.broadcast_to(np.asarray(fl(env)), (rows,))
            rv = np.broadcast_to(np.asarray(fr(env)), (rows,))
            keep = lv == rv
        if not keep.all():
            env = {h: v[keep] for h, v in env.items()}
            rows = int(keep.sum())
        if rows == 0:
            return 0
    return rows


def hom_count_bruteforce(P: Presentation, target, constraint: TrivialSubset | None = None) -> int:
    """Reference count over the full product of domains (small inputs only)."""
    import itertools
    from ..algebra.models import eval_term
    dom = _domains(P, target, constraint)
    rels = P.all_relations()
    total = 0
    for vals in itertools.product(*(dom[g].tolist() for g in P.generators)):
        env = dict(zip(P.generators, vals))
        total += all(eval_term(l, env, target) == eval_term(r, env, target) for l, r in rels)
    return total


def _constraint_mask(S: FiniteSwitch, tuples: np.ndarray, constraint) -> np.ndarray:
    if S.m < 1:
        raise FormatError("component-1 constraint needs a multi-switch")
    Q = constraint.carrier
    labels = S.labels[1] if S.labels is not None else tuple(range(S.carriers[1]))
    labels = np.asarray(labels, dtype=np.int64)
    comp1 = np.unravel_index(tuples, S.carriers)[1]
    elems = labels[comp1]
    allowed = np.zeros(Q.order, dtype=bool)
    allowed[list(constraint.elements)] = True
    mask = allowed[elems].all(axis=1)
    n = tuples.shape[1]
    for r in range(n):
        for s in range(n):
            mask &= Q.table[elems[:, r], elems[:, s]] == elems[:, r]
    return mask


def fixed_point_count(beta: BraidWord, S: FiniteSwitch, V: FiniteSwitch,
                      constraint: TrivialSubset | None = None) -> int:
    """Number of tuples in ``(X x X_1 x ...)^n`` fixed by the action of ``beta``.

    With ``constraint`` only tuples whose component-1 entries lie in it and
    are pairwise trivial are counted.
    """
    if S.carriers != V.carriers:
        raise FormatError("S and V act on different carriers")
    n = beta.n
    if S.size ** n > MAX_TUPLES:
        raise CarrierTooLargeError(f"{S.size}^{n} tuples exceed the enumeration cap")
    tuples = tuple_space(S.size, n)
    if constraint is not None:
        tuples = tuples[_constraint_mask(S, tuples, constraint)]
    image = act_on_tuples((S, V), beta, tuples)
    return int((image == tuples).all(axis=1).sum())
