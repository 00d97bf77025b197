"""Module switches given by 2x2 blocks over ``Z[s^+-1, t^+-1]``.

The generalized Alexander switch ``S(x, y) = (s y, t x + (1 - s t) y)`` acts
on the free module with basis ``x_1, x_2, ...``; a finite interpretation
substitutes units ``s, t`` of ``Z/p`` and tabulates on the carrier ``Z/p``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import FormatError
from ..laurent import ONE, S, T, ZERO, LaurentMatrix
from .finite import FiniteSwitch


@dataclass(frozen=True, eq=False)
class LinearSwitchDef:
    """``S(x, y) = (a x + b y, c x + d y)`` with block ``[[a, b], [c, d]]``."""

    name: str
    block: LaurentMatrix
    inverse_block: LaurentMatrix
    virtual_block: LaurentMatrix

    signature = "module"
    m = 0

    def part(self, which: str) -> LaurentMatrix:
        return {"S": self.block, "S_inv": self.inverse_block, "V": self.virtual_block}[which]


def alexander_def() -> LinearSwitchDef:
    s_inv, t_inv = S ** -1, T ** -1
    block = LaurentMatrix([[ZERO, S], [T, ONE - S * T]])
    inverse = LaurentMatrix([[ONE - s_inv * t_inv, t_inv], [s_inv, ZERO]])
    twist = LaurentMatrix([[ZERO, ONE], [ONE, ZERO]])
    return LinearSwitchDef("alexander", block, inverse, twist)


def _params(models):
    if isinstance(models, dict):
        return int(models["modulus"]), int(models["s"]), int(models["t"])
    p, s, t = models
    return int(p), int(s), int(t)


def interpret_linear(sdef: LinearSwitchDef, models, which: str = "S") -> FiniteSwitch:
    """Tabulate on ``Z/p`` with ``models = {"modulus": p, "s": s, "t": t}``."""
    p, s, t = _params(models)
    if p < 2:
        raise FormatError("modulus must be at least 2")
    import math
    if math.gcd(s, p) != 1 or math.gcd(t, p) != 1:
        raise FormatError(f"s={s} and t={t} must be units modulo {p}")
    blk = sdef.part(which)
    coef = [[blk[i, j].evaluate(s, t, p) for j in range(2)] for i in range(2)]
    a, b = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    left = (coef[0][0] * a + coef[0][1] * b) % p
    right = (coef[1][0] * a + coef[1][1] * b) % p
    suffix = "" if which == "S" else f".{which}"
    return FiniteSwitch((p,), np.stack([left, right], axis=-1), f"{sdef.name}{suffix}")
