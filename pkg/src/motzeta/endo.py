"""Graded complexes with an endomorphism: the matrix model of Perf(Q)^N.

A complex is a finite map ``degree -> Matrix`` (the endomorphism acting in
that degree) plus a Tate-twist counter that never enters traces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exact import Matrix, Polynomial, block_diag, char_series, kronecker
from .witt import WittVector


class EndoComplex:
    __slots__ = ("components", "twist")

    def __init__(self, components: Mapping[int, Matrix] | Iterable[tuple[int, Matrix]] = (), twist: int = 0):
        items = components.items() if isinstance(components, Mapping) else components
        comps: dict[int, Matrix] = {}
        for deg, m in items:
            if not isinstance(m, Matrix):
                m = Matrix(m)
            if int(deg) in comps:
                raise ValueError(f"degree {deg} given twice")
            if m.dim:
                comps[int(deg)] = m
        object.__setattr__(self, "components", tuple(sorted(comps.items())))
        object.__setattr__(self, "twist", int(twist))

    def __setattr__(self, name, value):
        raise AttributeError("EndoComplex is immutable")

    @classmethod
    def zero(cls) -> EndoComplex:
        return cls()

    @classmethod
    def unit(cls) -> EndoComplex:
        return cls({0: Matrix.scalar(1)})

    def __getitem__(self, degree: int) -> Matrix:
        return dict(self.components).get(degree, Matrix())

    def degrees(self) -> list[int]:
        return [d for d, _ in self.components]

    def dims(self) -> dict[int, int]:
        return {d: m.dim for d, m in self.components}

    @property
    def total_dim(self) -> int:
        return sum(m.dim for _, m in self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, EndoComplex):
            return NotImplemented
        return self.components == other.components and self.twist == other.twist

    def __hash__(self):
        return hash((self.components, self.twist))

    def __repr__(self):
        inner = ", ".join(f"{d}: {m!r}" for d, m in self.components)
        return f"EndoComplex({{{inner}}}, twist={self.twist})"


def _sign(i: int) -> int:
    return -1 if i % 2 else 1


def euler_trace(e: EndoComplex) -> Fraction:
    return sum((_sign(i) * m.trace() for i, m in e.components), Fraction(0))


def trace_of_power(e: EndoComplex, n: int) -> Fraction:
    """Alternating trace of ``f^n``."""
    return sum(((_sign(i) * (m**n).trace()) for i, m in e.components), Fraction(0))


def euler_char(e: EndoComplex) -> int:
    return sum(_sign(i) * m.dim for i, m in e.components)


def zeta(e: EndoComplex) -> WittVector:
    """Product of ``char_series(f_i) ** (-1)**(i+1)``: even degrees in the denominator."""
    num, den = Polynomial.one(), Polynomial.one()
    for i, m in e.components:
        if i % 2:
            num = num * char_series(m)
        else:
            den = den * char_series(m)
    return WittVector(num, den)


def shift(e: EndoComplex, k: int) -> EndoComplex:
    return EndoComplex(((i + k, m) for i, m in e.components), e.twist)


def tate_twist(e: EndoComplex, n: int) -> EndoComplex:
    return EndoComplex(e.components, e.twist + n)


def dsum(e1: EndoComplex, e2: EndoComplex) -> EndoComplex:
    """Degreewise block-diagonal sum. Twists must agree unless one side is zero."""
    if e1.is_zero():
        return e2
    if e2.is_zero():
        return e1
    if e1.twist != e2.twist:
        raise ValueError(f"cannot sum complexes with twists {e1.twist} and {e2.twist}")
    a, b = dict(e1.components), dict(e2.components)
    comps = {d: block_diag(a.get(d, Matrix()), b.get(d, Matrix())) for d in sorted(set(a) | set(b))}
    return EndoComplex(comps, e1.twist)


def tensor(e1: EndoComplex, e2: EndoComplex) -> EndoComplex:
    """Total-degree tensor product; twists add."""
    blocks: dict[int, list[Matrix]] = {}
    for i, f in e1.components:
        for j, g in e2.components:
            blocks.setdefault(i + j, []).append(kronecker(f, g))
    return EndoComplex({k: block_diag(*bs) for k, bs in blocks.items()}, e1.twist + e2.twist)


def from_witt(w: WittVector) -> EndoComplex:
    """Two-term complex with ``zeta(from_witt(w)) == w``.

    Degree 0 carries a companion matrix of the denominator, degree 1 one of
    the numerator.
    """
    return EndoComplex({0: Matrix.companion(w.den), 1: Matrix.companion(w.num)})
