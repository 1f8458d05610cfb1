"""Rational big Witt vectors ``num/den`` in ``1 + tQ[[t]]``.

Addition is multiplication of series. Multiplication ``*`` is the product
that multiplies ghost components, where the ghost components of ``w`` are
the coefficients of ``t d/dt log w``. With this convention
``(1 - at)^-1 * (1 - bt)^-1 = (1 - abt)^-1`` and the unit is ``(1 - t)^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    Polynomial,
    PowerSeries,
    as_rational,
    kron_char_series,
    poly_gcd,
    rational_to_series,
    series_exp,
    series_log,
)


class WittVector:
    """Reduced quotient ``num/den`` with ``num(0) = den(0) = 1``.

    The constructor cancels common factors, so equal elements have equal
    ``(num, den)`` pairs and ``==`` is exact equality in W(Q).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Iterable = (1,), den: Polynomial | Iterable = (1,)):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if num[0] == 0 or den[0] == 0:
            raise ValueError("numerator and denominator need a nonzero constant term")
        num = num.scale(1 / num[0])
        den = den.scale(1 / den[0])
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("WittVector is immutable")

    @classmethod
    def zero(cls) -> WittVector:
        return cls()

    @classmethod
    def one(cls) -> WittVector:
        return w_one()

    @classmethod
    def geometric(cls, a) -> WittVector:
        """``(1 - a t)^-1``, the class of a single eigenvalue ``a``."""
        return cls((1,), (1, -as_rational(a)))

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"WittVector(num={[str(c) for c in self.num]}, den={[str(c) for c in self.den]})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def series(self, order: int) -> PowerSeries:
        return rational_to_series(self.num, self.den, order)

    def __add__(self, other):
        return w_add(self, other)

    def __neg__(self):
        return w_neg(self)

    def __sub__(self, other):
        return w_add(self, w_neg(other))

    def __mul__(self, other):
        return w_mul(self, other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative Witt power")
        result, base = w_one(), self
        while n:
            if n & 1:
                result = w_mul(result, base)
            base = w_mul(base, base)
            n >>= 1
        return result


@dataclass(frozen=True)
class GhostSequence:
    """Ghost components ``(g_1, ..., g_N)``; ``values[n - 1]`` is ``g_n``."""

    values: tuple

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in values))

    @property
    def order(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __add__(self, other: GhostSequence) -> GhostSequence:
        return GhostSequence(a + b for a, b in zip(self, other))

    def __mul__(self, other: GhostSequence) -> GhostSequence:
        return GhostSequence(a * b for a, b in zip(self, other))

    def __neg__(self) -> GhostSequence:
        return GhostSequence(-a for a in self)


def w_one() -> WittVector:
    return WittVector((1,), (1, -1))


def w_add(u: WittVector, v: WittVector) -> WittVector:
    return WittVector(u.num * v.num, u.den * v.den)


def w_neg(u: WittVector) -> WittVector:
    return WittVector(u.den, u.num)


def w_mul(u: WittVector, v: WittVector) -> WittVector:
    """Witt product of rational vectors.

    Writing ``u = char(B_u)/char(A_u)`` (companion matrices of the
    denominator and numerator), ghost(u) = Tr(A_u^n) - Tr(B_u^n), so

        u * v = char(A_u(x)B_v) char(B_u(x)A_v) / (char(A_u(x)A_v) char(B_u(x)B_v)).

    The Kronecker characteristic series are computed from power sums.
    """
    k = kron_char_series
    num = k(u.den, v.num) * k(u.num, v.den)
    den = k(u.den, v.den) * k(u.num, v.num)
    return WittVector(num, den)


def _log_derivative(p: Polynomial, order: int) -> list[Fraction]:
    lg = series_log(p.to_series(order))
    return [n * lg[n] for n in range(1, order + 1)]


def ghost(u: WittVector, order: int) -> GhostSequence:
    """First ``order`` coefficients of ``t d/dt log u``."""
    if order < 1:
        raise ValueError("ghost order must be at least 1")
    a = _log_derivative(u.num, order)
    b = _log_derivative(u.den, order)
    return GhostSequence(x - y for x, y in zip(a, b))


def from_counts(g: GhostSequence | Sequence) -> PowerSeries:
    """``exp(sum g_n t^n / n)`` truncated at order ``len(g)``."""
    g = g if isinstance(g, GhostSequence) else GhostSequence(g)
    N = len(g)
    s = PowerSeries([0] + [g[n - 1] / n for n in range(1, N + 1)], N)
    return series_exp(s)


def flip_convention(w: WittVector) -> WittVector:
    """The involution ``w(t) -> 1 / w(-t)``.

    It carries the other common normalization of the product, in which
    ``(1 + at) * (1 + bt) = 1 + abt`` and the unit is ``1 + t``, onto the
    one used here. Being an involution it also converts back.
    """

    def sub(p: Polynomial) -> Polynomial:
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs))

    return WittVector(sub(w.den), sub(w.num))
