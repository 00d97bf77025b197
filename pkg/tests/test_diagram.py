import pytest
from hypothesis import given
from hypothesis import strategies as st

from ybknot import fixtures
from ybknot.braid import RHO, SIGMA, SIGMA_INV, BraidWord, word
from ybknot.diagram import (
    NEGATIVE,
    POSITIVE,
    VIRTUAL,
    closure,
    color_count,
    color_count_bruteforce,
    coloring_schedule,
    format_diagram,
    insert_kink,
    parse_diagram,
)
from ybknot.errors import FormatError, PreconditionError
from ybknot.switch import from_function, twist


def test_parse_single_loop():
    D = parse_diagram("O\n")
    assert D.n_arcs == 0 and D.free_loops == 1 and D.components() == 1


def test_parse_kink():
    D = parse_diagram("# curl\nX+ a b a b\n")
    assert D.components() == 1
    assert D.crossings[0].kind == POSITIVE


@pytest.mark.parametrize("text", [
    "X+ a b c d",                # dangling arcs
    "X+ a b a b\nX+ a c d c",    # a used twice as input
    "X* a b a b",                # unknown tag
    "X+ a b a",                  # too few arcs
    "O x",
])
def test_parse_rejects(text):
    with pytest.raises(FormatError):
        parse_diagram(text)


@pytest.mark.parametrize("name", fixtures.DIAGRAMS)
def test_fixture_diagrams_roundtrip(name):
    D = fixtures.diagram(name)
    assert parse_diagram(format_diagram(D)) == D


def test_fixture_component_counts():
    expect = {"unknot": 1, "kink": 1, "trefoil": 1, "figure-eight": 1,
              "virtual-trefoil": 1, "2-unlink": 2}
    for name, comps in expect.items():
        assert fixtures.diagram(name).components() == comps


def test_closure_examples():
    U = closure(word(2, ""))
    assert U.free_loops == 2 and U.n_arcs == 0 and U.components() == 2
    T = closure(word(2, "s1 s1 s1"))
    assert T.components() == 1 and T.count(POSITIVE) == 3
    VT = closure(word(2, "s1 s1 r1"))
    assert VT.components() == 1 and VT.count(VIRTUAL) == 1
    H = closure(word(2, "s1 S1"))
    assert H.count(NEGATIVE) == 1 and H.components() == 2
    # a strand untouched by the word is a free loop
    assert closure(word(3, "s1")).free_loops == 1


@given(st.lists(st.tuples(st.sampled_from([SIGMA, SIGMA_INV, RHO]), st.integers(1, 2)), max_size=6))
def test_closure_components_match_permutation(letters):
    beta = BraidWord(3, tuple(letters))
    perm = list(range(3))
    for _, j in letters:
        perm[j - 1], perm[j] = perm[j], perm[j - 1]
    # cycles of the underlying permutation = components of the closure
    seen, cycles = set(), 0
    for s in range(3):
        if s not in seen:
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    assert closure(beta).components() == cycles


def test_kink_insertion_shapes():
    D = insert_kink(parse_diagram("O"), None, "R1+")
    assert len(D.crossings) == 1 and D.free_loops == 0 and D.components() == 1
    T = fixtures.diagram("trefoil")
    K = insert_kink(T, "a", "VR1")
    assert len(K.crossings) == 4 and K.components() == 1
    K2 = insert_kink(insert_kink(T, 0, "R1+"), 0, "R1-", side="right")
    assert len(K2.crossings) == 5


def test_known_counts(pairs):
    S, V = pairs["quandle:R3"]
    assert color_count(fixtures.diagram("unknot"), S, V) == 3
    assert color_count(fixtures.diagram("trefoil"), S, V) == 9
    assert color_count(fixtures.diagram("2-unlink"), S, V) == 9
    S2, V2 = pairs["2q:conjS3"]
    assert color_count(fixtures.diagram("unknot"), S2, V2) == 18
    assert color_count(fixtures.diagram("virtual-trefoil"), S2, V2) != 18


@pytest.mark.parametrize("name", fixtures.DIAGRAMS)
def test_matches_bruteforce(name, pairs):
    D = fixtures.diagram(name)
    S, V = pairs["quandle:R3"]
    assert color_count(D, S, V) == color_count_bruteforce(D, S, V)
    if D.n_arcs <= 4:
        S2, V2 = pairs["2q:conjS3"]
        assert color_count(D, S2, V2) == color_count_bruteforce(D, S2, V2)


@pytest.mark.parametrize("name", fixtures.DIAGRAMS)
@pytest.mark.parametrize("kind", ["R1+", "R1-", "VR1"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_kinks_preserve_counts(name, kind, side, pairs):
    D = fixtures.diagram(name)
    for S, V in pairs.values():
        ref = color_count(D, S, V)
        targets = list(range(D.n_arcs)) or [None]
        for arc in targets:
            assert color_count(insert_kink(D, arc, kind, side), S, V) == ref


def test_schedule_branches_only_when_needed():
    steps = coloring_schedule(fixtures.diagram("trefoil"))
    assert sum(1 for s in steps if s[0] == "branch") == 2


def test_refuses_birack_unless_forced():
    B = from_function((3,), lambda a, b: (b, (a + 1) % 3))
    D = fixtures.diagram("trefoil")
    with pytest.raises(PreconditionError):
        color_count(D, B, twist(3))
    assert color_count(D, B, twist(3), force=True) == color_count_bruteforce(D, B, twist(3))


def test_kink_errors():
    with pytest.raises(FormatError):
        insert_kink(fixtures.diagram("trefoil"), None, "R1+")
    with pytest.raises(FormatError):
        insert_kink(fixtures.diagram("trefoil"), "zz", "R1+")
    with pytest.raises(FormatError):
        insert_kink(fixtures.diagram("trefoil"), 0, "R2")
