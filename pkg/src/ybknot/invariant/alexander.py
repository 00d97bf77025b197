"""Matrix of a braid under a module switch and the determinant
``det(M(beta) - I)`` (the generalized Alexander, or Sawollek, polynomial,
up to the representative computed here)."""

from __future__ import annotations

from ..braid import RHO, SIGMA, SIGMA_INV, BraidWord
from ..errors import FormatError
from ..laurent import ONE, ZERO, LaurentMatrix, LaurentPoly
from ..switch.linear import LinearSwitchDef, alexander_def

_PART = {SIGMA: "S", SIGMA_INV: "S_inv", RHO: "V"}


def letter_matrix(sdef: LinearSwitchDef, letter: tuple[str, int], n: int) -> LaurentMatrix:
    """``n x n`` matrix acting on coordinate columns: identity except for the
    switch block on rows/columns ``j-1, j``."""
    kind, j = letter
    if not 1 <= j <= n - 1:
        raise FormatError(f"letter index {j} out of range for {n} strands")
    blk = sdef.part(_PART[kind])
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for a in range(2):
        for b in range(2):
            rows[j - 1 + a][j - 1 + b] = blk[a, b]
    return LaurentMatrix(rows)


def alexander_matrix(beta: BraidWord, sdef: LinearSwitchDef | None = None) -> LaurentMatrix:
    """``M(beta) = A_k ... A_1`` for ``beta = b_1 ... b_k`` (first letter acts first)."""
    sdef = sdef or alexander_def()
    M = LaurentMatrix.identity(beta.n)
    for letter in beta.letters:
        M = letter_matrix(sdef, letter, beta.n) @ M
    return M


def sawollek_det(beta: BraidWord, sdef: LinearSwitchDef | None = None) -> LaurentPoly:
    M = alexander_matrix(beta, sdef)
    return (M - LaurentMatrix.identity(beta.n)).det()
