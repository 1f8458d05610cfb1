"""Bundled varieties paired with the Frobenius data of their cohomology."""

from __future__ import annotations

from dataclasses import dataclass

from .endo import EndoComplex
from .exact import Matrix, Polynomial
from .ffcount import VarietySpec


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    variety: VarietySpec
    cohomology: EndoComplex
    n_max: int


def projective_space(n: int, q: int) -> EndoComplex:
    """H^{2i}_c(P^n) is one-dimensional with Frobenius eigenvalue q^i."""
    return EndoComplex({2 * i: Matrix.scalar(q**i) for i in range(n + 1)})


def torus(q: int) -> EndoComplex:
    return EndoComplex({1: Matrix.scalar(1), 2: Matrix.scalar(q)})


def elliptic_curve(a: int, q: int) -> EndoComplex:
    """H^1 carries a companion matrix of ``1 - a t + q t^2``."""
    return EndoComplex(
        {0: Matrix.scalar(1), 1: Matrix.companion(Polynomial([1, -a, q])), 2: Matrix.scalar(q)}
    )


def point_of_degree_two() -> EndoComplex:
    """Frobenius swaps the two geometric points of Spec F_{q^2}."""
    return EndoComplex({0: Matrix([[0, 1], [1, 0]])})


def weierstrass(p: int, a4: int, a6: int) -> VarietySpec:
    """Projective closure of ``y^2 = x^3 + a4 x + a6`` in variables (x, y, z)."""
    eq = ((1, (0, 2, 1)), (-1, (3, 0, 0)), (-a4, (1, 0, 2)), (-a6, (0, 0, 3)))
    return VarietySpec("projective", 2, p, (eq,))


# Frobenius traces a = q + 1 - N_1, with N_1 taken from brute counts:
# y^2 = x^3 + x + 1 has 9 points over F_5 and 5 points over F_7.
ELLIPTIC_TRACE_F5 = -3
ELLIPTIC_TRACE_F7 = 3


def bundled() -> list[CorpusEntry]:
    return [
        CorpusEntry("P0/F2", VarietySpec("projective", 0, 2), projective_space(0, 2), 4),
        CorpusEntry("P1/F2", VarietySpec("projective", 1, 2), projective_space(1, 2), 4),
        CorpusEntry("P2/F3", VarietySpec("projective", 2, 3), projective_space(2, 3), 2),
        CorpusEntry(
            "Gm/F2",
            VarietySpec("affine", 2, 2, (((1, (1, 1)), (-1, (0, 0))),)),
            torus(2),
            3,
        ),
        CorpusEntry(
            "Spec F4/F2",
            VarietySpec("affine", 1, 2, (((1, (2,)), (1, (1,)), (1, (0,))),)),
            point_of_degree_two(),
            4,
        ),
        CorpusEntry("E/F5", weierstrass(5, 1, 1), elliptic_curve(ELLIPTIC_TRACE_F5, 5), 3),
        CorpusEntry("E/F7", weierstrass(7, 1, 1), elliptic_curve(ELLIPTIC_TRACE_F7, 7), 2),
    ]


def by_name(name: str) -> CorpusEntry:
    for entry in bundled():
        if entry.name == name:
            return entry
    raise KeyError(name)
