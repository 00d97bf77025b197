import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ybknot.algebra import (
    ONE,
    Generator,
    check_group,
    check_quandle,
    compile_term,
    conj_quandle,
    dihedral_quandle,
    eval_term,
    format_term,
    free_group_reduce,
    free_quandle_equal,
    inv,
    leaves,
    mul,
    parse_term,
    quandle_op_inverse,
    star,
    star_inv,
    substitute,
    symmetric_group_s3,
    trivial_quandle,
    x,
    y,
)
from ybknot.algebra.models import FiniteQuandle, TrivialSubset, cyclic_group, group_from_permutations
from ybknot.errors import FormatError, SignatureError, UnboundGeneratorError

gens = st.sampled_from([x(1), x(2), x(3), y(1), y(2)])
qterms = st.recursive(
    gens,
    lambda sub: st.builds(star, sub, sub) | st.builds(star_inv, sub, sub),
    max_leaves=8,
)
gterms = st.recursive(
    st.sampled_from([x(1), x(2), x(3)]),
    lambda sub: st.builds(lambda a, b: mul(a, b), sub, sub) | st.builds(inv, sub),
    max_leaves=8,
)


# ------------------------------------------------------------------ terms


@given(qterms)
def test_quandle_term_roundtrip(t):
    assert parse_term(format_term(t)) == t


@given(gterms)
def test_group_term_roundtrip(t):
    assert parse_term(format_term(t)) == t


def test_parse_examples():
    assert parse_term("x1*x2*~y3") == star_inv(star(x(1), x(2)), y(3))
    assert parse_term("x1*(x2*x3)") == star(x(1), star(x(2), x(3)))
    assert parse_term("x1.x2^-1") == mul(x(1), inv(x(2)))
    assert parse_term("z2_4") == Generator(2, 4)
    assert parse_term("1") == ONE


@pytest.mark.parametrize("bad", ["x1*", "(x1", "x1 x2", "q1", "x0", "x1*x2.x3"])
def test_parse_rejects(bad):
    with pytest.raises((FormatError, SignatureError)):
        parse_term(bad)


def test_substitute_and_leaves():
    t = parse_term("x1*x2*~x1")
    s = substitute(t, {x(1): parse_term("y1*y2")})
    assert format_term(s) == "y1*y2*x2*~(y1*y2)"
    assert leaves(s) == {y(1), y(2), x(2)}


# ------------------------------------------------------------------ models


def test_r3_table_by_hand():
    R3 = dihedral_quandle(3)
    # a*b = 2b - a mod 3
    for a, b in itertools.product(range(3), repeat=2):
        assert R3.table[a, b] == (2 * b - a) % 3
    assert quandle_op_inverse(R3, 0, 1) == 2


def test_quandle_checks_name_the_failing_axiom():
    bad = np.array([[0, 0], [0, 1]])  # 0*0 = 1*0 = 0: right translation by 0 not bijective
    rep = check_quandle(bad)
    assert not rep.ok
    assert not rep["right-invertibility"].ok


def test_conj_s3():
    G = symmetric_group_s3()
    assert check_group(G.table, G.inverse, G.identity).ok
    Q = conj_quandle(G)
    assert check_quandle(Q.table).ok
    # r * s = s^-1 r s = r^2
    assert Q.table[1, 3] == 2
    TrivialSubset(Q, (0, 1, 2))
    with pytest.raises(FormatError):
        TrivialSubset(Q, (1, 3))


def test_group_from_permutations_matches_cyclic():
    C3 = group_from_permutations([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert np.array_equal(C3.table, cyclic_group(3).table)


def test_trivial_quandle():
    T2 = trivial_quandle(2)
    assert T2.is_trivial()
    assert not dihedral_quandle(3).is_trivial()


@given(qterms, st.lists(st.integers(0, 2), min_size=5, max_size=5))
def test_eval_matches_compiled(t, vals):
    R3 = dihedral_quandle(3)
    env = dict(zip([x(1), x(2), x(3), y(1), y(2)], vals))
    assert eval_term(t, env, R3) == compile_term(t, R3)(env)


def test_eval_errors():
    with pytest.raises(UnboundGeneratorError):
        eval_term(x(1), {}, dihedral_quandle(3))
    with pytest.raises(SignatureError):
        eval_term(parse_term("x1.x2"), {x(1): 0, x(2): 0}, dihedral_quandle(3))


# ------------------------------------------------------------- free objects


def test_free_group_reduce():
    t = parse_term("x1.x2.x2^-1.x1^-1.x2")
    assert free_group_reduce(t) == x(2)
    assert free_group_reduce(parse_term("x1.x1^-1")) == ONE


@given(gterms)
def test_free_group_reduce_is_sound_in_s3(t):
    # the reduced word evaluates like the original in every assignment to S3
    G = symmetric_group_s3()
    r = free_group_reduce(t)
    for vals in itertools.product(range(6), repeat=3):
        env = dict(zip([x(1), x(2), x(3)], vals))
        assert eval_term(t, env, G) == eval_term(r, env, G)


def test_free_quandle_axioms():
    a, b, c = x(1), x(2), x(3)
    assert free_quandle_equal(star(a, a), a)
    assert free_quandle_equal(star_inv(star(a, b), b), a)
    assert free_quandle_equal(star(star(a, b), c), star(star(a, c), star(b, c)))
    assert not free_quandle_equal(star(a, b), star(b, a))
    with pytest.raises(SignatureError):
        free_quandle_equal(y(1), y(1))


x_only = qterms.filter(lambda t: all(g.component == 0 for g in leaves(t)))


@given(x_only, x_only, x_only)
def test_free_quandle_axioms_on_random_terms(a, b, c):
    assert free_quandle_equal(star(a, a), a)
    assert free_quandle_equal(star(star_inv(a, b), b), a)
    assert free_quandle_equal(star(star(a, b), c), star(star(a, c), star(b, c)))


@given(x_only, x_only)
def test_free_quandle_equality_is_sound(s, t):
    # equality in the free quandle must survive every assignment into Conj(S3)
    if free_quandle_equal(s, t):
        Q = conj_quandle(symmetric_group_s3())
        for vals in itertools.product(range(6), repeat=3):
            env = dict(zip([x(1), x(2), x(3)], vals))
            assert eval_term(s, env, Q) == eval_term(t, env, Q)


def test_finite_quandle_rejects_non_quandle():
    with pytest.raises(FormatError):
        FiniteQuandle(np.array([[1, 0], [1, 0]]))
