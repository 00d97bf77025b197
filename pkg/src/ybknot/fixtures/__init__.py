"""Named braid words, diagrams, models and switch pairs used by the tests,
the command line and the demos."""

from __future__ import annotations

from functools import cache
from importlib import resources

from ..algebra.models import (
    TrivialSubset,
    conj_quandle,
    dihedral_quandle,
    symmetric_group_s3,
    trivial_quandle,
)
from ..braid import BraidWord, word
from ..diagram import VirtualLinkDiagram, parse_diagram
from ..errors import FormatError

BRAIDS: dict[str, tuple[int, str]] = {
    "unknot": (1, ""),
    "trefoil": (2, "s1 s1 s1"),
    "figure-eight": (3, "s1 S2 s1 S2"),
    "virtual-trefoil": (2, "s1 s1 r1"),
    "2-unlink": (2, ""),
}

DIAGRAMS = ("unknot", "kink", "trefoil", "figure-eight", "virtual-trefoil", "2-unlink")


def braid(name: str) -> BraidWord:
    try:
        n, text = BRAIDS[name]
    except KeyError:
        raise FormatError(f"unknown fixture braid {name!r}; known: {', '.join(BRAIDS)}") from None
    return word(n, text)


def diagram_text(name: str) -> str:
    if name not in DIAGRAMS:
        raise FormatError(f"unknown fixture diagram {name!r}; known: {', '.join(DIAGRAMS)}")
    return resources.files(__package__).joinpath("data", f"{name}.pd").read_text()


def diagram(name: str) -> VirtualLinkDiagram:
    return parse_diagram(diagram_text(name))


# cached so that a trivial subset and its carrier stay the same objects
# across calls (constraints are matched to targets by identity)
@cache
def _s3():
    return symmetric_group_s3()


@cache
def _conj():
    return conj_quandle(_s3())


def model(name: str) -> list:
    """Component models: ``[X]`` or ``[X, X_1]`` for multi-switches.

    ``conjS3`` is the conjugation quandle of ``S_3`` together with its
    trivial subquandle ``{e, r, r^2}`` (elements 0, 1, 2).
    """
    if name == "R3":
        return [dihedral_quandle(3)]
    if name == "T2":
        return [trivial_quandle(2)]
    if name == "S3":
        return [_s3()]
    if name == "conjS3":
        Q = _conj()
        return [Q, TrivialSubset(Q, (0, 1, 2))]
    raise FormatError(f"unknown fixture model {name!r}; known: {', '.join(MODELS)}")


MODELS = ("R3", "T2", "S3", "conjS3")

# (switch definition, model) pairs every invariant test runs against
SWITCH_PAIRS = (("quandle", "R3"), ("2q", "conjS3"))


def switch_pair(def_name: str, model_name: str):
    from ..switch.builtins import builtin
    from ..switch.symbolic import interpret_pair
    return interpret_pair(builtin(def_name), model(model_name))
