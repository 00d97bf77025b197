"""Virtual link diagrams, braid closure, kink insertion and biquandle
coloring counts.

A crossing is ``(kind, in_left, in_right, out_left, out_right)`` with the
strands oriented downward: the inputs are read left to right at the top and
the outputs left to right at the bottom.  The strand entering at the top-left
leaves at the bottom-right and vice versa.  A positive crossing imposes
``S(in_left, in_right) = (out_left, out_right)``, a negative one the same
with ``S^-1`` and a virtual one with ``V``.

Text format (``.pd``), one crossing per line, ``#`` starts a comment::

    X+ a b c d      positive crossing
    X- a b c d      negative crossing
    V  a b c d      virtual crossing
    O               free loop (a component without crossings)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .braid import RHO, SIGMA, SIGMA_INV, BraidWord
from .errors import FormatError, PreconditionError
from .switch.finite import BIQUANDLE, FiniteSwitch, check_biquandle, check_virtual_pair

POSITIVE, NEGATIVE, VIRTUAL = "positive", "negative", "virtual"
_TAG = {"X+": POSITIVE, "X-": NEGATIVE, "V": VIRTUAL}
_TAG_OF = {v: k for k, v in _TAG.items()}
_BRAID_KIND = {SIGMA: POSITIVE, SIGMA_INV: NEGATIVE, RHO: VIRTUAL}


@dataclass(frozen=True)
class Crossing:
    kind: str
    in_left: int
    in_right: int
    out_left: int
    out_right: int

    @property
    def inputs(self) -> tuple[int, int]:
        return self.in_left, self.in_right

    @property
    def outputs(self) -> tuple[int, int]:
        return self.out_left, self.out_right


@dataclass(frozen=True)
class VirtualLinkDiagram:
    arcs: tuple[str, ...]
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        n = len(self.arcs)
        as_input = [0] * n
        as_output = [0] * n
        for c in self.crossings:
            if c.kind not in _TAG_OF:
                raise FormatError(f"unknown crossing kind {c.kind!r}")
            for a in c.inputs + c.outputs:
                if not 0 <= a < n:
                    raise FormatError(f"arc index {a} out of range")
            for a in c.inputs:
                as_input[a] += 1
            for a in c.outputs:
                as_output[a] += 1
        for a in range(n):
            if as_input[a] > 1:
                raise FormatError(f"arc {self.arcs[a]!r} used twice as an input")
            if as_output[a] > 1:
                raise FormatError(f"arc {self.arcs[a]!r} used twice as an output")
            if as_input[a] == 0 or as_output[a] == 0:
                raise FormatError(f"arc {self.arcs[a]!r} is dangling")
        if self.free_loops < 0:
            raise FormatError("negative free-loop count")

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    def count(self, kind: str) -> int:
        return sum(1 for c in self.crossings if c.kind == kind)

    def components(self) -> int:
        """Number of link components, free loops included."""
        nxt = {}
        for c in self.crossings:
            nxt[c.in_left] = c.out_right
            nxt[c.in_right] = c.out_left
        seen = set()
        comps = 0
        for a in range(self.n_arcs):
            if a in seen:
                continue
            comps += 1
            while a not in seen:
                seen.add(a)
                a = nxt[a]
        return comps + self.free_loops

    def arc_index(self, name: str) -> int:
        try:
            return self.arcs.index(name)
        except ValueError:
            raise FormatError(f"no arc named {name!r}") from None


def parse_diagram(text: str) -> VirtualLinkDiagram:
    arcs: list[str] = []
    index: dict[str, int] = {}
    crossings = []
    loops = 0

    def arc(name):
        if name not in index:
            index[name] = len(arcs)
            arcs.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "O":
            if len(parts) != 1:
                raise FormatError(f"line {lineno}: free loop takes no arcs")
            loops += 1
            continue
        if tag not in _TAG:
            raise FormatError(f"line {lineno}: unknown crossing tag {tag!r}")
        if len(parts) != 5:
            raise FormatError(f"line {lineno}: crossing needs exactly four arcs")
        il, ir, ol, orr = (arc(p) for p in parts[1:])
        crossings.append(Crossing(_TAG[tag], il, ir, ol, orr))
    return VirtualLinkDiagram(tuple(arcs), tuple(crossings), loops)


def format_diagram(D: VirtualLinkDiagram) -> str:
    lines = []
    for c in D.crossings:
        names = [D.arcs[a] for a in (c.in_left, c.in_right, c.out_left, c.out_right)]
        lines.append(f"{_TAG_OF[c.kind]} " + " ".join(names))
    lines += ["O"] * D.free_loops
    return "\n".join(lines) + "\n"


def closure(beta: BraidWord) -> VirtualLinkDiagram:
    """Standard closure: bottom endpoints joined to top endpoints.

    The segment entering level ``i`` at slot ``r`` is named ``a{i}_{r}``;
    segments that merely pass a level are identified.  Strands that meet no
    letter at all become free loops.
    """
    n, k = beta.n, len(beta.letters)
    parent = {}

    def find(u):
        while parent.setdefault(u, u) != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    def union(u, v):
        parent[find(u)] = find(v)

    raw = []
    for i, (kind, j) in enumerate(beta.letters):
        for r in range(1, n + 1):
            if r not in (j, j + 1):
                union((i + 1, r), (i, r))
        raw.append((_BRAID_KIND[kind], (i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)))
    for r in range(1, n + 1):
        union((k, r), (0, r))

    touched = {find((i, r)) for _, *ends in raw for (i, r) in ends}
    loops = len({find((0, r)) for r in range(1, n + 1)} - touched)

    names: dict = {}
    arcs: list[str] = []
    crossings = []
    for kind, *ends in raw:
        ids = []
        for seg in ends:
            root = find(seg)
            if root not in names:
                names[root] = len(arcs)
                arcs.append(f"a{seg[0]}_{seg[1]}")
            ids.append(names[root])
        crossings.append(Crossing(kind, *ids))
    return VirtualLinkDiagram(tuple(arcs), tuple(crossings), loops)


R1_POS, R1_NEG, VR1 = "R1+", "R1-", "VR1"
_KINK_KIND = {R1_POS: POSITIVE, R1_NEG: NEGATIVE, VR1: VIRTUAL}


def insert_kink(D: VirtualLinkDiagram, arc, kind: str, side: str = "left") -> VirtualLinkDiagram:
    """Add a one-crossing curl on ``arc`` (an index, a name, or a free loop
    when ``arc is None``).

    The arc is cut; its old end now enters the new crossing, a fresh arc
    leaves it, and a loop arc joins the other output back to the other
    input.  ``side="left"`` puts the loop on the left
    (``in_left == out_left``), ``side="right"`` on the right.
    """
    if kind not in _KINK_KIND:
        raise FormatError(f"unknown kink kind {kind!r}")
    if side not in ("left", "right"):
        raise FormatError("side must be 'left' or 'right'")
    arcs = list(D.arcs)
    crossings = list(D.crossings)
    loops = D.free_loops

    def fresh(stem):
        k = 0
        while f"{stem}{k}" in arcs:
            k += 1
        arcs.append(f"{stem}{k}")
        return len(arcs) - 1

    if arc is None:
        if loops == 0:
            raise FormatError("diagram has no free loop to kink")
        loops -= 1
        incoming = fresh("k")
        outgoing = incoming
    else:
        a = D.arc_index(arc) if isinstance(arc, str) else int(arc)
        if not 0 <= a < D.n_arcs:
            raise FormatError(f"arc index {a} out of range")
        incoming = a
        outgoing = fresh("k")
        # the crossing that consumed `a` now consumes `outgoing`
        for idx, c in enumerate(crossings):
            if c.in_left == a:
                crossings[idx] = Crossing(c.kind, outgoing, c.in_right, c.out_left, c.out_right)
                break
            if c.in_right == a:
                crossings[idx] = Crossing(c.kind, c.in_left, outgoing, c.out_left, c.out_right)
                break
    loop = fresh("l")
    ck = _KINK_KIND[kind]
    if side == "left":
        crossings.append(Crossing(ck, loop, incoming, loop, outgoing))
    else:
        crossings.append(Crossing(ck, incoming, loop, outgoing, loop))
    return VirtualLinkDiagram(tuple(arcs), tuple(crossings), loops)


# ----------------------------------------------------------------- colorings


def _require_biquandle(S: FiniteSwitch, V: FiniteSwitch):
    cls = check_biquandle(S).extra["classification"]
    if cls != BIQUANDLE:
        raise PreconditionError(f"switch {S.name or ''} is a {cls}, not a biquandle (use force=True)")
    if not check_virtual_pair(S, V).ok:
        raise PreconditionError("(S, V) is not a virtual pair (use force=True)")


def coloring_schedule(D: VirtualLinkDiagram):
    """Static propagation plan shared by every partial coloring.

    Crossings are visited in input order; whenever both inputs (or both
    outputs) of a crossing are known the other pair is forced, and otherwise
    the first unknown input arc is branched on.  Returns a list of
    ``("branch", arc)``, ``("fwd", crossing)`` and ``("bwd", crossing)`` steps.
    """
    known = [False] * D.n_arcs
    done = [False] * len(D.crossings)
    steps = []
    while not all(done):
        progress = True
        while progress:
            progress = False
            for ci, c in enumerate(D.crossings):
                if done[ci]:
                    continue
                if known[c.in_left] and known[c.in_right]:
                    steps.append(("fwd", ci))
                elif known[c.out_left] and known[c.out_right]:
                    steps.append(("bwd", ci))
                else:
                    continue
                for a in c.inputs + c.outputs:
                    known[a] = True
                done[ci] = True
                progress = True
        if all(done):
            break
        ci = next(i for i, d in enumerate(done) if not d)
        c = D.crossings[ci]
        target = next(a for a in c.inputs + c.outputs if not known[a])
        steps.append(("branch", target))
        known[target] = True
    return steps


def color_count(D: VirtualLinkDiagram, S: FiniteSwitch, V: FiniteSwitch, force: bool = False) -> int:
    """Number of labelings of the arcs of ``D`` by points of ``S``'s carrier.

    The search runs breadth-first over all partial labelings at once:
    branch steps extend every survivor by every point, forced steps compute
    the other side of a crossing and discard rows that contradict an earlier
    label.
    """
    if not force:
        _require_biquandle(S, V)
    N = S.size
    if not D.crossings:
        return N ** D.free_loops
    tables = {POSITIVE: (S.table, S.inverse.table),
              NEGATIVE: (S.inverse.table, S.table),
              VIRTUAL: (V.table, V.inverse.table)}
    rows = np.full((1, D.n_arcs), -1, dtype=np.int64)
    known = np.zeros(D.n_arcs, dtype=bool)
    for step, ref in coloring_schedule(D):
        if step == "branch":
            rows = np.repeat(rows, N, axis=0)
            rows[:, ref] = np.tile(np.arange(N), len(rows) // N)
            known[ref] = True
            continue
        c = D.crossings[ref]
        fwd, bwd = tables[c.kind]
        if step == "fwd":
            src, dst, tab = c.inputs, c.outputs, fwd
        else:
            src, dst, tab = c.outputs, c.inputs, bwd
        a, b = rows[:, src[0]], rows[:, src[1]]
        vals = (tab[a, b, 0], tab[a, b, 1])
        keep = np.ones(len(rows), dtype=bool)
        for arc, v in zip(dst, vals):
            if known[arc]:
                keep &= rows[:, arc] == v
        rows = rows[keep]
        vals = (vals[0][keep], vals[1][keep])
        for arc, v in zip(dst, vals):
            if not known[arc]:
                rows[:, arc] = v
                known[arc] = True
            # an arc can appear twice at one crossing (a kink): recheck
            keep = rows[:, arc] == v
            if not keep.all():
                rows = rows[keep]
                vals = (vals[0][keep], vals[1][keep])
        if len(rows) == 0:
            return 0
    return len(rows) * N ** D.free_loops


def color_count_bruteforce(D: VirtualLinkDiagram, S: FiniteSwitch, V: FiniteSwitch) -> int:
    """Reference count by enumerating all ``N^arcs`` labelings (small inputs only)."""
    import itertools
    N = S.size
    S_inv = S.inverse
    total = 0
    for lab in itertools.product(range(N), repeat=D.n_arcs):
        ok = True
        for c in D.crossings:
            sw = {POSITIVE: S, NEGATIVE: S_inv, VIRTUAL: V}[c.kind]
            l, r = sw.table[lab[c.in_left], lab[c.in_right]]
            if l != lab[c.out_left] or r != lab[c.out_right]:
                ok = False
                break
        total += ok
    return total * N ** D.free_loops
