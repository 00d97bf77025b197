"""Virtual braid words and the action of a virtual (multi-)switch on them.

Letters are ``s<k>`` (sigma_k), ``S<k>`` (sigma_k^-1) and ``r<k>`` (rho_k)
with 1-based strand indices ``k``; slot ``k`` of a tuple is position
``k - 1``.

A word ``b_1 b_2 ... b_k`` acts by applying ``b_1`` first.  Symbolically the
image of a generator is built the same way: the tuple of images starts as the
generators themselves and each letter rewrites slots ``j, j+1`` with the
switch words evaluated on the current images.  Evaluating a symbolic image at
a point therefore equals the concrete action at that point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .algebra.terms import Generator, Term, substitute
from .errors import FormatError
from .report import Check, Report
from .switch.finite import FiniteSwitch
from .switch.linear import LinearSwitchDef
from .switch.symbolic import LEFT, RIGHT, SwitchDef

SIGMA, SIGMA_INV, RHO = "sigma", "sigma_inv", "rho"
_PREFIX = {SIGMA: "s", SIGMA_INV: "S", RHO: "r"}
_KIND = {v: k for k, v in _PREFIX.items()}
_LETTER = re.compile(r"^([sSr])(\d+)$")


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise FormatError("a braid needs at least one strand")
        letters = tuple((k, int(i)) for k, i in self.letters)
        for kind, i in letters:
            if kind not in _PREFIX:
                raise FormatError(f"unknown letter kind {kind!r}")
            if not 1 <= i <= self.n - 1:
                raise FormatError(f"letter index {i} out of range for {self.n} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(f"{_PREFIX[k]}{i}" for k, i in self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise FormatError("cannot concatenate braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        flip = {SIGMA: SIGMA_INV, SIGMA_INV: SIGMA, RHO: RHO}
        return BraidWord(self.n, tuple((flip[k], i) for k, i in reversed(self.letters)))

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)


def parse_braid(text: str, n: int | None = None) -> BraidWord:
    """Parse whitespace-separated ``s<k>``, ``S<k>``, ``r<k>`` tokens.

    Without ``n`` the strand count is the largest index plus one (1 for the
    empty word).
    """
    letters = []
    for tok in text.replace(",", " ").split():
        m = _LETTER.match(tok)
        if not m:
            raise FormatError(f"bad braid token {tok!r}")
        letters.append((_KIND[m.group(1)], int(m.group(2))))
    if n is None:
        n = max((i for _, i in letters), default=0) + 1
    return BraidWord(n, tuple(letters))


def word(n: int, text: str) -> BraidWord:
    return parse_braid(text, n)


def vbn_relations(n: int) -> list[tuple[str, BraidWord, BraidWord]]:
    """The seven defining relation families of ``VB_n``, as (name, lhs, rhs)."""
    out = []

    def w(*letters):
        return BraidWord(n, tuple(letters))

    s, r = SIGMA, RHO
    for i in range(1, n - 1):
        out.append((f"s{i}s{i+1}s{i}=s{i+1}s{i}s{i+1}",
                    w((s, i), (s, i + 1), (s, i)), w((s, i + 1), (s, i), (s, i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"s{i}s{j}=s{j}s{i}", w((s, i), (s, j)), w((s, j), (s, i))))
    for i in range(1, n - 1):
        out.append((f"r{i}r{i+1}r{i}=r{i+1}r{i}r{i+1}",
                    w((r, i), (r, i + 1), (r, i)), w((r, i + 1), (r, i), (r, i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"r{i}r{j}=r{j}r{i}", w((r, i), (r, j)), w((r, j), (r, i))))
    for i in range(1, n):
        out.append((f"r{i}r{i}=1", w((r, i), (r, i)), w()))
    for i in range(1, n - 1):
        out.append((f"r{i+1}s{i}r{i+1}=r{i}s{i+1}r{i}",
                    w((r, i + 1), (s, i), (r, i + 1)), w((r, i), (s, i + 1), (r, i))))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                out.append((f"s{i}r{j}=r{j}s{i}", w((s, i), (r, j)), w((r, j), (s, i))))
    return out


def relation_rewrites(beta: BraidWord) -> list[BraidWord]:
    """All words obtained from ``beta`` by one relation application.

    Each occurrence of a relation side is replaced by the other side, and
    every relation ``lhs = rhs`` is also inserted as ``lhs rhs^-1`` at every
    position.  Also includes cancelling pairs ``s_i S_i`` inserted anywhere.
    """
    n = beta.n
    letters = beta.letters
    seen: dict[tuple, BraidWord] = {}
    rels = [(lhs, rhs) for _, lhs, rhs in vbn_relations(n)]
    rels += [(BraidWord(n, ((SIGMA, i), (SIGMA_INV, i))), BraidWord(n)) for i in range(1, n)]
    for lhs, rhs in rels:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            k = len(a.letters)
            if k:
                for pos in range(len(letters) - k + 1):
                    if letters[pos:pos + k] == a.letters:
                        new = letters[:pos] + b.letters + letters[pos + k:]
                        seen.setdefault(new, BraidWord(n, new))
        insert = (lhs + rhs.inverse()).letters
        for pos in range(len(letters) + 1):
            new = letters[:pos] + insert + letters[pos:]
            seen.setdefault(new, BraidWord(n, new))
    seen.pop(letters, None)
    return list(seen.values())


# --------------------------------------------------------------- symbolic


def _part_for(kind: str) -> str:
    return {SIGMA: "S", SIGMA_INV: "S_inv", RHO: "V"}[kind]


def generator_endo(sdef, letter: tuple[str, int], n: int):
    """Image map of one letter.

    For a :class:`SwitchDef` this is the substitution ``Generator -> Term``
    (identity off slots ``j, j+1``).  For a pair ``(S, V)`` of finite
    switches it is a permutation array of the flat tuple space ``N^n``.
    """
    kind, j = letter
    if not 1 <= j <= n - 1:
        raise FormatError(f"letter index {j} out of range for {n} strands")
    if isinstance(sdef, SwitchDef):
        smap = sdef.part(_part_for(kind))
        m = sdef.m
        ren = {}
        for c in range(m + 1):
            ren[Generator(c, LEFT)] = Generator(c, j)
            ren[Generator(c, RIGHT)] = Generator(c, j + 1)
        out = {Generator(c, k): Generator(c, k) for c in range(m + 1) for k in range(1, n + 1)}
        for c, (lt, rt) in enumerate(smap.components):
            out[Generator(c, j)] = substitute(lt, ren)
            out[Generator(c, j + 1)] = substitute(rt, ren)
        return out
    if isinstance(sdef, LinearSwitchDef):
        from .invariant.alexander import letter_matrix
        return letter_matrix(sdef, letter, n)
    S, V = sdef
    tuples = tuple_space(S.size, n)
    image = act_on_tuples((S, V), BraidWord(n, (letter,)), tuples)
    return np.ravel_multi_index(tuple(image.T), (S.size,) * n)


def identity_images(m: int, n: int) -> dict[Generator, Term]:
    return {Generator(c, k): Generator(c, k) for c in range(m + 1) for k in range(1, n + 1)}


def apply_word(sdef, beta: BraidWord, target=None):
    """Apply ``beta`` (first letter first) to ``target``.

    * ``sdef`` a :class:`SwitchDef`: ``target`` maps every generator
      ``(c, k)``, ``k <= n``, to a term (default: the generators themselves);
      returns the mapping of images.
    * ``sdef`` a pair ``(S, V)`` of finite switches: ``target`` is a length-n
      sequence of flat point indices, or an ``(K, n)`` array of such tuples.
    """
    n = beta.n
    if isinstance(sdef, SwitchDef):
        m = sdef.m
        images = dict(identity_images(m, n) if target is None else target)
        expected = {Generator(c, k) for c in range(m + 1) for k in range(1, n + 1)}
        if set(images) != expected:
            raise FormatError(f"symbolic target must cover exactly the {len(expected)} generators of arity {n}")
        for letter in beta.letters:
            endo = generator_endo(sdef, letter, n)
            _, j = letter
            new = dict(images)
            for c in range(m + 1):
                for k in (j, j + 1):
                    new[Generator(c, k)] = substitute(endo[Generator(c, k)], images)
            images = new
        return images
    arr = np.asarray(target, dtype=np.int64)
    single = arr.ndim == 1
    if single:
        arr = arr[None, :]
    if arr.shape[1] != n:
        raise FormatError(f"target arity {arr.shape[1]} does not match {n} strands")
    out = act_on_tuples(sdef, beta, arr)
    return tuple(int(v) for v in out[0]) if single else out


# --------------------------------------------------------------- concrete


def tuple_space(N: int, n: int) -> np.ndarray:
    """All ``N^n`` tuples in C order, shape ``(N^n, n)``."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*([np.arange(N)] * n), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def act_on_tuples(pair, beta: BraidWord, tuples: np.ndarray) -> np.ndarray:
    S, V = pair
    out = np.array(tuples, dtype=np.int64, copy=True)
    tables = {SIGMA: S.table, RHO: V.table}
    if any(k == SIGMA_INV for k, _ in beta.letters):
        tables[SIGMA_INV] = S.inverse.table
    for kind, j in beta.letters:
        t = tables[kind]
        a, b = out[:, j - 1], out[:, j]
        out[:, j - 1], out[:, j] = t[a, b, 0], t[a, b, 1]
    return out


def verify_representation(S: FiniteSwitch, V: FiniteSwitch, n: int) -> Report:
    """Every ``VB_n`` relation induces equal permutations of ``(X x ...)^n``."""
    tuples = tuple_space(S.size, n)
    checks = []
    for name, lhs, rhs in vbn_relations(n):
        left = act_on_tuples((S, V), lhs, tuples)
        right = act_on_tuples((S, V), rhs, tuples)
        bad = np.nonzero((left != right).any(axis=1))[0]
        wit = None if bad.size == 0 else tuple(int(v) for v in tuples[bad[0]])
        checks.append(Check(name, wit is None, wit))
    return Report(f"VB_{n} via ({S.name or 'S'}, {V.name or 'V'})", checks)

