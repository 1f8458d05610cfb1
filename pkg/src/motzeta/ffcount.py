"""Brute-force point counts over finite fields and checks built on them.

Counting is the ground truth that the cohomological side (zeta functions
of Frobenius data) is compared against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .endo import EndoComplex, zeta
from .exact import Polynomial, as_rational
from .finite_field import FiniteField, gf_make, is_prime, prime_power
from .witt import GhostSequence, WittVector, from_counts, ghost

DEFAULT_BUDGET = 1 << 24
BUDGET_ENV = "MOTZETA_BUDGET"


class BudgetExceeded(RuntimeError):
    """The enumeration would visit more candidate tuples than allowed."""


class NoRationalFit(ValueError):
    """No rational function of admissible degree reproduces the counts."""


class PreconditionError(ValueError):
    """Input does not have the shape a check requires (distinct from a failed check)."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


@dataclass(frozen=True)
class VarietySpec:
    """Polynomial equations with integer coefficients over F_q, q = p^k.

    Each equation is a sequence of ``(coeff, exponents)`` terms; exponent
    vectors have length ``dim`` for affine space and ``dim + 1`` for
    projective space. An empty equation list is the whole ambient space.
    """

    ambient: str
    dim: int
    p: int
    equations: tuple = ()
    k: int = 1

    def __post_init__(self):
        if self.ambient not in ("affine", "projective"):
            raise ValueError(f"ambient must be 'affine' or 'projective', got {self.ambient!r}")
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("k must be positive")
        nvars = self.nvars
        eqs = []
        for eq in self.equations:
            terms = []
            for coeff, exps in eq:
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"exponent vector {exps} must have {nvars} non-negative entries")
                terms.append((int(coeff), exps))
            if self.ambient == "projective" and len({sum(e) for c, e in terms if c % self.p}) > 1:
                raise ValueError("projective equations must be homogeneous")
            eqs.append(tuple(terms))
        object.__setattr__(self, "equations", tuple(eqs))

    @property
    def nvars(self) -> int:
        return self.dim + (1 if self.ambient == "projective" else 0)

    @property
    def q(self) -> int:
        return self.p**self.k

    def candidates(self, n: int) -> int:
        """Number of tuples enumerated when counting over F_{q^n}."""
        Q = self.q**n
        if self.ambient == "affine":
            return Q**self.dim
        return (Q ** (self.dim + 1) - 1) // (Q - 1)


def _compile(eq, F: FiniteField):
    out = []
    for coeff, exps in eq:
        c = F.from_int(coeff)
        if c:
            out.append((c, tuple((i, e) for i, e in enumerate(exps) if e)))
    return out


def _eval(terms, point, F: FiniteField) -> int:
    acc = 0
    for c, exps in terms:
        v = c
        for i, e in exps:
            x = point[i]
            if x == 0:
                v = 0
                break
            v = F.mul(v, F.pow(x, e))
        if v:
            acc = F.add(acc, v)
    return acc


def _projective_points(F: FiniteField, nvars: int):
    """Representatives with first nonzero coordinate equal to 1."""
    codes = range(F.q)
    for lead in range(nvars):
        head = (0,) * lead + (1,)
        for tail in product(codes, repeat=nvars - lead - 1):
            yield head + tail


def count_points(v: VarietySpec, n: int = 1, budget: int | None = None) -> int:
    """Number of F_{q^n}-points of ``v``, by enumeration."""
    if n < 1:
        raise ValueError("extension degree must be at least 1")
    budget = default_budget() if budget is None else budget
    needed = v.candidates(n)
    if needed > budget:
        raise BudgetExceeded(f"counting over F_{{{v.q}^{n}}} needs {needed} candidates, budget is {budget}")
    F = gf_make(v.p, v.k * n)
    eqs = [_compile(eq, F) for eq in v.equations]
    if v.ambient == "affine":
        points = product(range(F.q), repeat=v.dim)
    else:
        points = _projective_points(F, v.nvars)
    if not eqs:
        return needed
    count = 0
    for pt in points:
        for terms in eqs:
            if _eval(terms, pt, F):
                break
        else:
            count += 1
    return count


def counts_tower(v: VarietySpec, n_max: int, budget: int | None = None) -> GhostSequence:
    return GhostSequence(count_points(v, n, budget) for n in range(1, n_max + 1))


def _solve(rows: list[list[Fraction]], rhs: list[Fraction], nunk: int) -> list[Fraction] | None:
    """One exact solution of an (over/under-determined) linear system, or None."""
    m = [r[:] + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(nunk):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in m[r:]):
        return None
    sol = [Fraction(0)] * nunk
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return sol


def reconstruct_zeta(counts: GhostSequence | Sequence) -> WittVector:
    """Minimal-degree rational function whose ghost sequence starts with ``counts``.

    Candidates ``(deg num, deg den)`` are tried by total degree, then by
    denominator degree, and only while ``2 * (max degree + 1) <= len(counts)``
    so that the fit is determined by the data.
    """
    counts = counts if isinstance(counts, GhostSequence) else GhostSequence(counts)
    L = len(counts)
    if L < 2:
        raise ValueError("need at least two counts")
    s = from_counts(counts)
    dmax = L // 2 - 1
    for total in range(0, 2 * dmax + 1):
        for b in range(0, total + 1):
            a = total - b
            if a > dmax or b > dmax:
                continue
            # den * s == num mod t^(L+1): coefficients a+1..L of den * s vanish
            rows = [[s[n - j] if n - j >= 0 else Fraction(0) for j in range(1, b + 1)] for n in range(a + 1, L + 1)]
            rhs = [-s[n] for n in range(a + 1, L + 1)]
            sol = _solve(rows, rhs, b)
            if sol is None:
                continue
            den = Polynomial([1] + sol)
            prod = den.to_series(L) * s
            num = Polynomial(prod[i] for i in range(a + 1))
            w = WittVector(num, den)
            if ghost(w, L) == counts:
                return w
    raise NoRationalFit(f"no rational zeta of degree <= {dmax} fits {L} counts")


@dataclass(frozen=True)
class Row:
    n: int
    brute: int
    predicted: Fraction
    passed: bool


@dataclass(frozen=True)
class Report:
    rows: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def first_failure(self) -> Row | None:
        return next((r for r in self.rows if not r.passed), None)


def verify_lefschetz(v: VarietySpec, e: EndoComplex, n_max: int, budget: int | None = None) -> Report:
    """Compare brute counts with the alternating Frobenius traces ``ghost_n(zeta(e))``."""
    brute = counts_tower(v, n_max, budget)
    predicted = ghost(zeta(e), n_max)
    rows = tuple(
        Row(n, int(b), pr, b == pr) for n, (b, pr) in enumerate(zip(brute, predicted), start=1)
    )
    return Report(rows)


def _curve_denominator(q: int) -> Polynomial:
    return Polynomial([1, -1]) * Polynomial([1, -q])


def check_functional_equation(w: WittVector, q: int, g: int) -> bool:
    """Curve-case symmetry ``c_{2g-i} = q^(g-i) c_i`` of the zeta numerator."""
    prime_power(q)
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    if w.num.degree != 2 * g:
        raise PreconditionError(f"numerator has degree {w.num.degree}, expected {2 * g}")
    if w.den != _curve_denominator(q):
        raise PreconditionError(f"denominator is {w.den}, expected (1 - t)(1 - {q}t)")
    c = w.num
    return all(c[2 * g - i] == Fraction(q) ** (g - i) * c[i] for i in range(2 * g + 1))


def check_weil_bound(w: WittVector, q: int) -> bool:
    """``a^2 <= 4q`` for a numerator ``1 - a t + q t^2``, in exact arithmetic."""
    prime_power(q)
    if w.num.degree != 2 or w.num[2] != q:
        raise PreconditionError(f"numerator {w.num} is not of the form 1 - a t + {q} t^2")
    a = -w.num[1]
    return a * a <= 4 * q


def elliptic_zeta(a, q: int) -> WittVector:
    """``(1 - a t + q t^2) / ((1 - t)(1 - q t))`` for Frobenius trace ``a``."""
    a = as_rational(a)
    return WittVector(Polynomial([1, -a, q]), _curve_denominator(q))
