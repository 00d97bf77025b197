"""Equality in free groups and free quandles by normal forms.

A group term is flattened to a word of ``(generator, +-1)`` letters and freely
reduced with a stack.  Free-quandle equality goes through the conjugation
embedding of ``FQ_n`` into the free group ``F_n``:
``a * b -> b^-1 a b`` and ``a *~ b -> b a b^-1``.
"""

from __future__ import annotations

from ..errors import SignatureError
from .terms import GROUP, QUANDLE, ONE, Generator, Inv, Mul, One, QOp, Term, leaves

Letter = tuple[Generator, int]
Word = tuple[Letter, ...]


def reduce_word(word) -> Word:
    stack: list[Letter] = []
    for g, e in word:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def invert_word(word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def group_word(t: Term) -> Word:
    """Free-group word of a group-signature term (unreduced)."""
    if t.sig == QUANDLE:
        raise SignatureError("expected a group term")
    if isinstance(t, Generator):
        return ((t, 1),)
    if isinstance(t, One):
        return ()
    if isinstance(t, Mul):
        return group_word(t.left) + group_word(t.right)
    if isinstance(t, Inv):
        return invert_word(group_word(t.arg))
    raise TypeError(f"not a term: {t!r}")


def word_to_term(word) -> Term:
    if not word:
        return ONE
    factors = [g if e == 1 else Inv(g) for g, e in word]
    out = factors[0]
    for f in factors[1:]:
        out = Mul(out, f)
    return out


def free_group_reduce(t: Term) -> Term:
    """Freely reduced normal form, as a left-associated product of letters."""
    return word_to_term(reduce_word(group_word(t)))


def conjugation_word(t: Term) -> Word:
    """Reduced free-group image of a quandle term under the conjugation embedding."""
    if t.sig == GROUP:
        raise SignatureError("expected a quandle term")
    memo: dict[int, Word] = {}

    def go(node) -> Word:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Generator):
            w: Word = ((node, 1),)
        elif isinstance(node, QOp):
            a, b = go(node.left), go(node.right)
            if node.inverse:
                w = reduce_word(b + a + invert_word(b))
            else:
                w = reduce_word(invert_word(b) + a + b)
        else:
            raise TypeError(f"not a quandle term: {node!r}")
        memo[key] = w
        return w

    return go(t)


def free_quandle_equal(s: Term, t: Term) -> bool:
    """Decide ``s == t`` in the free quandle on component-0 generators."""
    for term in (s, t):
        if any(g.component != 0 for g in leaves(term)):
            raise SignatureError(
                "free_quandle_equal only decides equality in FQ_n (component-0 generators)"
            )
    return conjugation_word(s) == conjugation_word(t)
