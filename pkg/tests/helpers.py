"""Random generators and brute-force oracles shared by the tests."""

import random
from fractions import Fraction
from itertools import permutations

from motzeta.endo import EndoComplex
from motzeta.exact import Matrix, Polynomial
from motzeta.witt import WittVector


def random_poly(rng: random.Random, max_deg: int = 3, lo: int = -3, hi: int = 3) -> Polynomial:
    d = rng.randint(0, max_deg)
    return Polynomial([1] + [rng.randint(lo, hi) for _ in range(d)])


def random_witt(rng: random.Random, max_deg: int = 3) -> WittVector:
    return WittVector(random_poly(rng, max_deg), random_poly(rng, max_deg))


def random_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> Matrix:
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_complex(rng: random.Random, max_total: int = 4, degrees=(0, 1, 2)) -> EndoComplex:
    total = rng.randint(0, max_total)
    comps: dict[int, list] = {}
    for _ in range(total):
        comps.setdefault(rng.choice(degrees), []).append(None)
    return EndoComplex({d: random_matrix(rng, len(v)) for d, v in comps.items()})


def leibniz_det_poly(rows) -> Polynomial:
    """det of a matrix with Polynomial entries by the permutation expansion."""
    n = len(rows)
    total = Polynomial()
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Polynomial.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term.scale(sign)
    return total


def det_one_minus_tA(a: Matrix) -> Polynomial:
    t = Polynomial([0, 1])
    rows = [[(Polynomial.one() if i == j else Polynomial()) - t.scale(a[i, j]) for j in range(a.dim)] for i in range(a.dim)]
    return leibniz_det_poly(rows) if a.dim else Polynomial.one()


def witt_from_roots(pos, neg) -> WittVector:
    """prod (1 - b t) / prod (1 - a t) for eigenvalues a in ``pos``, b in ``neg``."""
    num, den = Polynomial.one(), Polynomial.one()
    for a in pos:
        den = den * Polynomial([1, -a])
    for b in neg:
        num = num * Polynomial([1, -b])
    return WittVector(num, den)



def random_rational_witt(rng: random.Random, max_deg: int = 3) -> WittVector:
    """Like ``random_witt`` but with small non-integral coefficients mixed in."""

    def coeff():
        return Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2, 3]))

    def poly():
        return Polynomial([1] + [coeff() for _ in range(rng.randint(0, max_deg))])

    return WittVector(poly(), poly())
