"""Set-theoretic Yang-Baxter switches and the virtual link invariants they
define: coloring counts, braid fixed points, presented quandles and the
two-variable Alexander determinant."""

from .braid import BraidWord, apply_word, parse_braid, verify_representation, word
from .diagram import VirtualLinkDiagram, closure, color_count, insert_kink, parse_diagram
from .errors import YBKnotError
from .invariant import (
    Presentation,
    fixed_point_count,
    hom_count,
    manturov,
    presentation_from_braid,
    presentation_from_diagram,
    qtilde,
    sawollek_det,
    simplify,
)
from .switch import (
    FiniteSwitch,
    SwitchDef,
    builtin,
    check_biquandle,
    check_switch,
    check_virtual_pair,
    interpret,
    interpret_pair,
)

__version__ = "0.1.0"
