"""Exact Laurent polynomials in two variables ``s, t`` over the integers.

Coefficients live in a dense window: a 2-D object array of Python ints whose
``[0, 0]`` entry is the coefficient of ``s^smin t^tmin``.  The window is
trimmed after every operation, so equal polynomials have equal windows.
"""

from __future__ import annotations

from typing import Iterator, Mapping

import numpy as np

from .errors import YBKnotError


class LaurentPoly:
    __slots__ = ("coeffs", "smin", "tmin")

    def __init__(self, coeffs=None, smin: int = 0, tmin: int = 0):
        if coeffs is None:
            arr = np.zeros((0, 0), dtype=object)
        else:
            arr = np.array(coeffs, dtype=object)
            if arr.ndim == 0:
                arr = arr.reshape(1, 1)
        self.coeffs, self.smin, self.tmin = _trim(arr, smin, tmin)

    # ------------------------------------------------------------ builders
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls([[int(c)]])

    @classmethod
    def monomial(cls, c: int, i: int, j: int) -> "LaurentPoly":
        return cls([[int(c)]], i, j)

    @classmethod
    def from_dict(cls, terms: Mapping[tuple[int, int], int]) -> "LaurentPoly":
        terms = {k: int(v) for k, v in terms.items() if v}
        if not terms:
            return cls()
        smin = min(i for i, _ in terms)
        tmin = min(j for _, j in terms)
        smax = max(i for i, _ in terms)
        tmax = max(j for _, j in terms)
        arr = np.zeros((smax - smin + 1, tmax - tmin + 1), dtype=object)
        for (i, j), c in terms.items():
            arr[i - smin, j - tmin] = c
        return cls(arr, smin, tmin)

    # --------------------------------------------------------------- views
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    def terms(self) -> Iterator[tuple[int, int, int]]:
        for (a, b), c in np.ndenumerate(self.coeffs):
            if c:
                yield a + self.smin, b + self.tmin, int(c)

    def to_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, j, c in self.terms()}

    def leading(self) -> tuple[int, int, int]:
        """Lexicographically largest ``(s_exp, t_exp)`` term."""
        if self.is_zero():
            raise YBKnotError("zero polynomial has no leading term")
        a = self.coeffs.shape[0] - 1
        row = self.coeffs[a]
        b = max(k for k in range(len(row)) if row[k])
        return a + self.smin, b + self.tmin, int(row[b])

    def evaluate(self, s, t, modulus: int | None = None):
        total = 0
        for i, j, c in self.terms():
            if modulus is None:
                total += c * s ** i * t ** j
            else:
                total += c * pow(s, i, modulus) * pow(t, j, modulus)
        return total % modulus if modulus is not None else total

    # ----------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        smin = min(self.smin, other.smin)
        tmin = min(self.tmin, other.tmin)
        smax = max(self.smin + self.coeffs.shape[0], other.smin + other.coeffs.shape[0])
        tmax = max(self.tmin + self.coeffs.shape[1], other.tmin + other.coeffs.shape[1])
        out = np.zeros((smax - smin, tmax - tmin), dtype=object)
        for p in (self, other):
            i0, j0 = p.smin - smin, p.tmin - tmin
            out[i0:i0 + p.coeffs.shape[0], j0:j0 + p.coeffs.shape[1]] += p.coeffs
        return LaurentPoly(out, smin, tmin)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.coeffs, self.smin, self.tmin)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        h1, w1 = self.coeffs.shape
        h2, w2 = other.coeffs.shape
        out = np.zeros((h1 + h2 - 1, w1 + w2 - 1), dtype=object)
        for (a, b), c in np.ndenumerate(self.coeffs):
            if c:
                out[a:a + h2, b:b + w2] += c * other.coeffs
        return LaurentPoly(out, self.smin + other.smin, self.tmin + other.tmin)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.to_dict()) != 1:
                raise YBKnotError("only monomials are invertible")
            (i, j), c = next(iter(self.to_dict().items()))
            if c not in (1, -1):
                raise YBKnotError("only unit monomials are invertible")
            return LaurentPoly.monomial(c ** (-k), i * k, j * k)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises unless the division is exact."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = self
        quot = LaurentPoly()
        di, dj, dc = other.leading()
        budget = (self.coeffs.size + 1) * (other.coeffs.size + 1) + 16
        while not rem.is_zero():
            budget -= 1
            if budget < 0:
                raise YBKnotError("inexact polynomial division")
            ri, rj, rc = rem.leading()
            if rc % dc:
                raise YBKnotError("inexact polynomial division")
            term = LaurentPoly.monomial(rc // dc, ri - di, rj - dj)
            quot = quot + term
            rem = rem - term * other
        return quot

    # ------------------------------------------------------------- equality
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.smin, self.tmin, self.coeffs.shape) == (other.smin, other.tmin, other.coeffs.shape) \
            and bool((self.coeffs == other.coeffs).all())

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_poly(self)


def _coerce(v) -> LaurentPoly:
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, (int, np.integer)):
        return LaurentPoly.const(int(v))
    raise TypeError(f"cannot use {v!r} as a Laurent polynomial")


def _trim(arr: np.ndarray, smin: int, tmin: int):
    if arr.size == 0:
        return np.zeros((0, 0), dtype=object), 0, 0
    nz = np.argwhere(arr != 0)
    if nz.size == 0:
        return np.zeros((0, 0), dtype=object), 0, 0
    (a0, b0), (a1, b1) = nz.min(axis=0), nz.max(axis=0)
    return arr[a0:a1 + 1, b0:b1 + 1].copy(), smin + int(a0), tmin + int(b0)


def _monomial_str(i: int, j: int) -> str:
    parts = []
    for var, e in (("s", i), ("t", j)):
        if e == 1:
            parts.append(var)
        elif e:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Terms in ascending total degree, ties broken by the ``s`` exponent."""
    terms = sorted(p.terms(), key=lambda x: (x[0] + x[1], x[0]))
    if not terms:
        return "0"
    out = ""
    for k, (i, j, c) in enumerate(terms):
        mono = _monomial_str(i, j)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if k == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


S = LaurentPoly.monomial(1, 1, 0)
T = LaurentPoly.monomial(1, 0, 1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


class LaurentMatrix:
    """Square matrix of :class:`LaurentPoly` entries."""

    def __init__(self, rows):
        self.rows = [[_coerce(v) for v in row] for row in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise YBKnotError("LaurentMatrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def det(self) -> LaurentPoly:
        """Fraction-free (Bareiss) elimination; every division is exact."""
        n = self.n
        if n == 0:
            return ONE
        M = [row[:] for row in self.rows]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if M[k][k].is_zero():
                pivot = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
                if pivot is None:
                    return ZERO
                M[k], M[pivot] = M[pivot], M[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).divexact(prev)
            prev = M[k][k]
        return M[n - 1][n - 1] if sign == 1 else -M[n - 1][n - 1]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows)
