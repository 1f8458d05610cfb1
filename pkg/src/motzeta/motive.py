"""Virtual motives over F_q as expression trees, evaluated into W(Q)_rat.

Evaluation is a ring map: ``+`` goes to Witt addition, ``*`` to the Witt
product. Only the generators ``Point(m)`` and ``L`` have closed forms;
affine spaces, projective spaces and tori are assembled from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .endo import EndoComplex, euler_char, zeta
from .finite_field import prime_power
from .witt import GhostSequence, WittVector, ghost, w_add, w_mul, w_neg, w_one


class MotiveExpr:
    """Base class for expression nodes; supports ``+``, ``-`` and ``*``."""

    def __add__(self, other: MotiveExpr) -> MotiveExpr:
        return Sum(self, other)

    def __sub__(self, other: MotiveExpr) -> MotiveExpr:
        return Diff(self, other)

    def __mul__(self, other: MotiveExpr) -> MotiveExpr:
        return Prod(self, other)


def _check_nat(name: str, value: int, minimum: int = 0):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class Point(MotiveExpr):
    """Spec F_{q^m}."""

    m: int = 1

    def __post_init__(self):
        _check_nat("Point degree", self.m, 1)


@dataclass(frozen=True)
class Lefschetz(MotiveExpr):
    """The class L of the affine line."""


@dataclass(frozen=True)
class Affine(MotiveExpr):
    n: int

    def __post_init__(self):
        _check_nat("affine dimension", self.n)


@dataclass(frozen=True)
class Projective(MotiveExpr):
    n: int

    def __post_init__(self):
        _check_nat("projective dimension", self.n)


@dataclass(frozen=True)
class Torus(MotiveExpr):
    """(G_m)^r."""

    r: int

    def __post_init__(self):
        _check_nat("torus rank", self.r)


@dataclass(frozen=True)
class Cohomology(MotiveExpr):
    """User-supplied Frobenius data; ``source`` is the file it came from, if any."""

    complex: EndoComplex
    source: str | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Sum(MotiveExpr):
    left: MotiveExpr
    right: MotiveExpr


@dataclass(frozen=True)
class Diff(MotiveExpr):
    left: MotiveExpr
    right: MotiveExpr


@dataclass(frozen=True)
class Prod(MotiveExpr):
    left: MotiveExpr
    right: MotiveExpr


@dataclass(frozen=True)
class ZetaContext:
    q: int
    order: int = 10

    def __post_init__(self):
        p, k = prime_power(self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        if self.order < 1:
            raise ValueError("order must be at least 1")


def _lefschetz(q: int) -> WittVector:
    return WittVector.geometric(q)


def _point(m: int) -> WittVector:
    return WittVector((1,), [1] + [0] * (m - 1) + [-1])


def _affine(n: int, q: int) -> WittVector:
    return reduce(w_mul, [_lefschetz(q)] * n, w_one())


def _power(w: WittVector, r: int) -> WittVector:
    return reduce(w_mul, [w] * r, w_one())


def eval_zeta(x: MotiveExpr, ctx: ZetaContext) -> WittVector:
    q = ctx.q
    if isinstance(x, Point):
        return _point(x.m)
    if isinstance(x, Lefschetz):
        return _lefschetz(q)
    if isinstance(x, Affine):
        return _affine(x.n, q)
    if isinstance(x, Projective):
        # P^n = A^n + A^(n-1) + ... + A^0
        return reduce(w_add, (_affine(i, q) for i in range(x.n + 1)))
    if isinstance(x, Torus):
        gm = w_add(_lefschetz(q), w_neg(_point(1)))
        return _power(gm, x.r)
    if isinstance(x, Cohomology):
        return zeta(x.complex)
    if isinstance(x, Sum):
        return w_add(eval_zeta(x.left, ctx), eval_zeta(x.right, ctx))
    if isinstance(x, Diff):
        return w_add(eval_zeta(x.left, ctx), w_neg(eval_zeta(x.right, ctx)))
    if isinstance(x, Prod):
        return w_mul(eval_zeta(x.left, ctx), eval_zeta(x.right, ctx))
    raise TypeError(f"not a motive expression: {x!r}")


def point_counts(x: MotiveExpr, ctx: ZetaContext, n_max: int) -> GhostSequence:
    """Virtual counts ``#X(F_{q^n})`` for n = 1..n_max."""
    return ghost(eval_zeta(x, ctx), n_max)


def euler_char_c(x: MotiveExpr) -> int:
    """Compactly supported Euler characteristic; ``Point(m)`` counts its m geometric points."""
    if isinstance(x, Point):
        return x.m
    if isinstance(x, (Lefschetz, Affine)):
        return 1
    if isinstance(x, Projective):
        return x.n + 1
    if isinstance(x, Torus):
        return 1 if x.r == 0 else 0
    if isinstance(x, Cohomology):
        return euler_char(x.complex)
    if isinstance(x, Sum):
        return euler_char_c(x.left) + euler_char_c(x.right)
    if isinstance(x, Diff):
        return euler_char_c(x.left) - euler_char_c(x.right)
    if isinstance(x, Prod):
        return euler_char_c(x.left) * euler_char_c(x.right)
    raise TypeError(f"not a motive expression: {x!r}")


def is_effective(x: MotiveExpr) -> bool:
    if isinstance(x, Diff):
        return False
    if isinstance(x, (Sum, Prod)):
        return is_effective(x.left) and is_effective(x.right)
    return True
