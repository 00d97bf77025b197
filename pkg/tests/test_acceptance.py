"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for the bare report; under
pytest the lines are repeated in the terminal summary.
"""

import itertools
import random

import pytest

from ybknot import fixtures
from ybknot.braid import RHO, SIGMA, SIGMA_INV, BraidWord, relation_rewrites, verify_representation, word
from ybknot.diagram import closure, color_count, insert_kink, parse_diagram
from ybknot.invariant import (
    fixed_point_count,
    hom_count,
    presentation_from_braid,
    presentation_from_diagram,
    qtilde,
    sawollek_det,
    simplify,
)
from ybknot.switch import (
    BIQUANDLE,
    builtin,
    check_biquandle,
    check_multiswitch_shape,
    check_switch,
    check_virtual_pair,
    interpret,
    mutate,
)

RESULTS: list[str] = []


def record(number: int, title: str, failures: list[str]) -> bool:
    ok = not failures
    line = f"CRITERION {number} [{'PASS' if ok else 'FAIL'}] {title}"
    if failures:
        line += " :: " + "; ".join(failures[:5])
    RESULTS.append(line)
    print(line)
    return ok


def _pairs():
    return {f"{d}:{m}": fixtures.switch_pair(d, m) for d, m in fixtures.SWITCH_PAIRS}


# ------------------------------------------------------------------ 1


def criterion_1() -> bool:
    failures = []
    for name, model in (("twist", "R3"), ("artin", "S3"), ("quandle", "R3")):
        S = interpret(builtin(name), fixtures.model(model))
        if not check_switch(S).ok:
            failures.append(f"{name} on {model} is not a switch")
        rep = check_biquandle(S)
        if rep.extra["classification"] != BIQUANDLE:
            failures.append(f"{name} on {model} classified {rep.extra['classification']}")
    S, V = fixtures.switch_pair("2q", "conjS3")
    if S.size != 18:
        failures.append(f"2q carrier has {S.size} points, expected 18")
    rep = check_virtual_pair(S, V)
    if not rep.ok:
        failures.append(f"2q virtual pair: {rep.first_failure().name}")
    for label, sw in (("S", S), ("V", V)):
        if not check_multiswitch_shape(sw).ok:
            failures.append(f"2q {label} shape")
    return record(1, "axiom suite (switch, biquandle, virtual pair, multi-switch shape)", failures)


# ------------------------------------------------------------------ 2


def criterion_2() -> bool:
    failures = []
    pairs = _pairs()
    for key, (S, V) in pairs.items():
        rep = verify_representation(S, V, 3)
        if not rep.ok:
            failures.append(f"{key}: {rep.first_failure().name}")
    S, V = pairs["quandle:R3"]
    if verify_representation(mutate(S, 0, 1), V, 3).ok:
        failures.append("mutated table not detected")
    S2, V2 = pairs["2q:conjS3"]
    if verify_representation(mutate(S2, 5, 7), V2, 3).ok:
        failures.append("mutated 2q table not detected")
    return record(2, "VB_3 representation on full tuple spaces; planted defect detected", failures)


# ------------------------------------------------------------------ 3


def _all_words_n2(max_len=5):
    letters = [(SIGMA, 1), (SIGMA_INV, 1), (RHO, 1)]
    for k in range(max_len + 1):
        for ls in itertools.product(letters, repeat=k):
            yield BraidWord(2, ls)


def _random_words_n3(count=50, max_len=6, seed=0):
    rng = random.Random(seed)
    letters = [(k, i) for k in (SIGMA, SIGMA_INV, RHO) for i in (1, 2)]
    return [BraidWord(3, tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len))))
            for _ in range(count)]


def criterion_3() -> bool:
    failures = []
    words = list(_all_words_n2()) + _random_words_n3()
    for key, (S, V) in _pairs().items():
        for beta in words:
            fp = fixed_point_count(beta, S, V)
            cc = color_count(closure(beta), S, V)
            if fp != cc:
                failures.append(f"{key} '{beta}' n={beta.n}: {fp} != {cc}")
    return record(3, f"fixed points == closure colorings on {len(words)} words x 2 pairs", failures)


# ------------------------------------------------------------------ 4


def criterion_4() -> bool:
    failures = []
    pairs = _pairs()
    for name in fixtures.DIAGRAMS:
        D = fixtures.diagram(name)
        for key, (S, V) in pairs.items():
            ref = color_count(D, S, V)
            for arc in (list(range(D.n_arcs)) or [None]):
                for kind in ("R1+", "R1-", "VR1"):
                    for side in ("left", "right"):
                        got = color_count(insert_kink(D, arc, kind, side), S, V)
                        if got != ref:
                            failures.append(f"{name} {kind}/{side} arc {arc} {key}: {got} != {ref}")
    targets = [fixtures.model("R3")[0], fixtures.model("conjS3")[0]]
    for name in fixtures.BRAIDS:
        beta = fixtures.braid(name)
        ref_h = [hom_count(qtilde(beta), t) for t in targets]
        ref_f = {k: fixed_point_count(beta, S, V) for k, (S, V) in pairs.items()}
        for other in relation_rewrites(beta):
            if [hom_count(qtilde(other), t) for t in targets] != ref_h:
                failures.append(f"qtilde homs change: {name} -> '{other}'")
            for k, (S, V) in pairs.items():
                if fixed_point_count(other, S, V) != ref_f[k]:
                    failures.append(f"fixed points change ({k}): {name} -> '{other}'")
    return record(4, "kink invariance of colorings; rewrite invariance of qtilde homs and fixed points", failures)


# ------------------------------------------------------------------ 5


def criterion_5() -> bool:
    failures = []
    S, V = fixtures.switch_pair("quandle", "R3")
    u = color_count(fixtures.diagram("unknot"), S, V)
    t = color_count(fixtures.diagram("trefoil"), S, V)
    if (u, t) != (3, 9):
        failures.append(f"unknot/trefoil colorings into R3 = {u}/{t}, expected 3/9")
    R3 = fixtures.model("R3")[0]
    v = hom_count(qtilde(word(2, "")), R3)
    if v != 27:
        failures.append(f"qtilde(2-unlink) -> R3 = {v}, expected 27")
    Q = fixtures.model("conjS3")[0]
    hu = hom_count(qtilde(fixtures.braid("unknot")), Q)
    hv = hom_count(qtilde(fixtures.braid("virtual-trefoil")), Q)
    if hu == hv:
        failures.append(f"virtual trefoil not distinguished from unknot ({hv} == {hu})")
    return record(5, f"known values: 3 vs 9, 27, qtilde into Conj(S3) unknot {hu} vs virtual trefoil {hv}",
                  failures)


# ------------------------------------------------------------------ 6


def criterion_6() -> bool:
    failures = []
    if not sawollek_det(word(1, "")).is_zero():
        failures.append("empty word nonzero")
    if not sawollek_det(word(2, "")).is_zero():
        failures.append("empty word on 2 strands nonzero")
    if not sawollek_det(word(2, "s1 s1 s1")).is_zero():
        failures.append("s1^3 nonzero")
    vt = sawollek_det(word(2, "s1 s1 r1"))
    if vt.is_zero():
        failures.append("virtual trefoil vanishes")
    rng = random.Random(1)
    for name in fixtures.BRAIDS:
        beta = fixtures.braid(name)
        ref = sawollek_det(beta)
        for other in relation_rewrites(beta):
            if sawollek_det(other) != ref:
                failures.append(f"rewrite changes det: {name} -> '{other}'")
        letters = [(k, i) for k in (SIGMA, SIGMA_INV, RHO) for i in range(1, beta.n)]
        for _ in range(5 if letters else 0):
            alpha = BraidWord(beta.n, tuple(rng.choice(letters) for _ in range(3)))
            if sawollek_det(alpha + beta + alpha.inverse()) != ref:
                failures.append(f"conjugation changes det: {name} by '{alpha}'")
    return record(6, f"Sawollek: 0, 0, virtual trefoil = {vt}; rewrite and conjugation invariance", failures)


# ------------------------------------------------------------------ 7


def _fixture_presentations():
    out = []
    for name in fixtures.BRAIDS:
        beta = fixtures.braid(name)
        out.append((f"qtilde {name}", qtilde(beta)))
        out.append((f"quandle {name}", presentation_from_braid(beta, builtin("quandle"))))
        out.append((f"group {name}", presentation_from_braid(beta, builtin("kauffman-group"))))
    for name in fixtures.DIAGRAMS:
        D = fixtures.diagram(name)
        out.append((f"diagram {name}", presentation_from_diagram(D, builtin("quandle"))))
        out.append((f"2q diagram {name}", presentation_from_diagram(D, builtin("2q"))))
    return out


def criterion_7() -> bool:
    failures = []
    for kind in ("R1+", "R1-", "VR1"):
        K = insert_kink(parse_diagram("O"), None, kind)
        P = simplify(presentation_from_diagram(K, builtin("quandle")))
        if len(P.generators) != 1 or P.relations:
            failures.append(f"{kind} kink simplifies to {len(P.generators)} generators, {len(P.relations)} relations")
    quandles = [fixtures.model(m)[0] for m in ("R3", "T2", "conjS3")]
    groups = [fixtures.model("S3")[0]]
    for label, P in _fixture_presentations():
        Q = simplify(P)
        for target in (groups if P.signature == "group" else quandles):
            a, b = hom_count(P, target), hom_count(Q, target)
            if a != b:
                failures.append(f"{label} into {target.name}: {a} -> {b}")
    return record(7, "simplify: kink to one free generator; hom counts preserved on all fixtures", failures)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 8)])
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
