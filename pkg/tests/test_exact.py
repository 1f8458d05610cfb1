from fractions import Fraction as F

import pytest

from helpers import det_one_minus_tA, random_matrix
from motzeta.exact import (
    Matrix,
    Polynomial,
    PowerSeries,
    block_diag,
    char_series,
    kron_char_series,
    kronecker,
    poly_gcd,
    power_sums,
    rational_to_series,
    series_exp,
    series_log,
)


def test_rational_normalization():
    p = Polynomial([F(2, 4), "-6/8", 0, 0])
    assert p.coeffs == (F(1, 2), F(-3, 4))
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([0]).degree == -1


def test_polynomial_divmod_roundtrip(rng):
    for _ in range(30):
        a = Polynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 7))])
        b = Polynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 3)])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_gcd_finds_common_factor(rng):
    for _ in range(20):
        g = Polynomial([1, rng.randint(-3, 3), rng.choice([1, 2, -1])])
        a = g * Polynomial([1, rng.randint(-4, 4)])
        b = g * Polynomial([1, 0, rng.randint(1, 5)])
        d = poly_gcd(a, b)
        assert a % d == Polynomial() and b % d == Polynomial()
        assert d.degree >= 2 and d[0] == 1


def test_gcd_of_coprime_is_one():
    assert poly_gcd(Polynomial([1, -1]), Polynomial([1, -2])) == Polynomial.one()
    assert poly_gcd(Polynomial(), Polynomial([2, 4])) == Polynomial([1, 2])


class TestCharSeries:
    def test_empty_matrix(self):
        assert char_series(Matrix()) == Polynomial.one()

    def test_scalar(self):
        assert char_series(Matrix([[3]])) == Polynomial([1, -3])

    def test_companion_two_by_two(self):
        # det(1 - tA) = 1 - tr(A) t + det(A) t^2 = 1 - 3t + 5t^2 for trace 3, det 5
        a = Matrix([[0, -5], [1, 3]])
        assert char_series(a) == Polynomial([1, -3, 5])
        assert Matrix.companion(Polynomial([1, -3, 5])) == a

    def test_against_permutation_expansion(self, rng):
        for n in range(1, 5):
            for _ in range(5):
                a = random_matrix(rng, n)
                assert char_series(a) == det_one_minus_tA(a)

    def test_rational_entries(self):
        a = Matrix([[F(1, 2), 1], [F(-1, 3), 2]])
        assert char_series(a) == det_one_minus_tA(a)

    def test_companion_realizes_polynomial(self, rng):
        for _ in range(20):
            p = Polynomial([1] + [rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
            m = Matrix.companion(p)
            assert m.dim == p.degree
            assert char_series(m) == p

    def test_block_diagonal_multiplies(self, rng):
        for _ in range(20):
            a = random_matrix(rng, rng.randint(0, 4))
            b = random_matrix(rng, rng.randint(0, 4))
            assert char_series(block_diag(a, b)) == char_series(a) * char_series(b)

    def test_newton_identity(self, rng):
        # t d/dt log(1 / char_series(A)) has n-th coefficient Tr(A^n)
        for _ in range(15):
            a = random_matrix(rng, rng.randint(1, 4))
            N = rng.randint(1, 10)
            lg = series_log(char_series(a).to_series(N))
            for n in range(1, N + 1):
                assert -n * lg[n] == (a**n).trace()


class TestKronecker:
    def test_scalars(self):
        assert kronecker(Matrix([[2]]), Matrix([[3]])) == Matrix([[6]])

    def test_identity_gives_block_diagonal(self, rng):
        b = random_matrix(rng, 3)
        assert kronecker(Matrix.identity(2), b) == block_diag(b, b)

    def test_blocks(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 5], [6, 7]])
        k = kronecker(a, b)
        for i in range(2):
            for j in range(2):
                for r in range(2):
                    for c in range(2):
                        assert k[2 * i + r, 2 * j + c] == a[i, j] * b[r, c]

    @pytest.mark.parametrize("n,m", [(2, 2), (3, 3), (2, 3)])
    def test_trace_multiplies(self, rng, n, m):
        a, b = random_matrix(rng, n), random_matrix(rng, m)
        assert kronecker(a, b).trace() == a.trace() * b.trace()

    def test_power_trace_identity(self, rng):
        for _ in range(5):
            a, b = random_matrix(rng, rng.randint(1, 3)), random_matrix(rng, rng.randint(1, 3))
            k = kronecker(a, b)
            for n in range(1, 7):
                assert (k**n).trace() == (a**n).trace() * (b**n).trace()

    def test_kron_char_series_matches_explicit_kronecker(self, rng):
        for _ in range(20):
            a = random_matrix(rng, rng.randint(0, 3))
            b = random_matrix(rng, rng.randint(0, 3))
            assert kron_char_series(char_series(a), char_series(b)) == char_series(kronecker(a, b))

    def test_power_sums(self, rng):
        a = random_matrix(rng, 3)
        assert power_sums(char_series(a), 6) == [(a**n).trace() for n in range(1, 7)]


class TestSeries:
    def test_log_of_one(self):
        assert series_log(PowerSeries([1], 5)) == PowerSeries([], 5)

    def test_mercator(self):
        assert series_log(PowerSeries([1, 1], 3)) == PowerSeries([0, 1, F(-1, 2), F(1, 3)], 3)

    def test_log_rejects_bad_constant(self):
        with pytest.raises(ValueError):
            series_log(PowerSeries([2, 1], 3))

    def test_exp_of_zero(self):
        assert series_exp(PowerSeries([], 5)) == PowerSeries([1], 5)

    def test_exp_rejects_bad_constant(self):
        with pytest.raises(ValueError):
            series_exp(PowerSeries([1, 1], 3))

    def test_exp_of_log_geometric(self):
        s = PowerSeries([0] + [F(2**n, n) for n in range(1, 5)], 4)
        e = series_exp(s)
        assert e == PowerSeries([1, 2, 4, 8, 16], 4)
        # oracle: multiplying by (1 - 2t) must give 1
        assert e * Polynomial([1, -2]).to_series(4) == PowerSeries([1], 4)

    def test_exp_log_roundtrip(self, rng):
        for _ in range(100):
            s = PowerSeries([1] + [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(10)], 10)
            assert series_exp(series_log(s)) == s

    def test_exp_is_homomorphism(self, rng):
        for _ in range(20):
            a = PowerSeries([0] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8)], 8)
            b = PowerSeries([0] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(8)], 8)
            assert series_exp(a) * series_exp(b) == series_exp(a + b)

    def test_mixed_orders_take_minimum(self):
        a = PowerSeries([1, 1, 1, 1], 3)
        b = PowerSeries([1, 2], 1)
        assert (a + b).order == 1
        assert (a * b) == PowerSeries([1, 3], 1)

    def test_inverse(self):
        s = Polynomial([1, -1]).to_series(4)
        assert s.inverse() == PowerSeries([1, 1, 1, 1, 1], 4)


class TestRationalToSeries:
    def test_geometric(self):
        assert rational_to_series(Polynomial.one(), Polynomial([1, -1]), 4) == PowerSeries([1] * 5, 4)

    def test_polynomial(self):
        assert rational_to_series(Polynomial([1, -1]), Polynomial.one(), 3) == PowerSeries([1, -1], 3)

    def test_projective_line_over_f2(self):
        den = Polynomial([1, -1]) * Polynomial([1, -2])
        # partial fractions: 2/(1-2t) - 1/(1-t), coefficient 2^(n+1) - 1
        assert list(rational_to_series(Polynomial.one(), den, 3)) == [2 ** (n + 1) - 1 for n in range(4)]

    def test_rejects_vanishing_denominator(self):
        with pytest.raises(ValueError):
            rational_to_series(Polynomial.one(), Polynomial([0, 1]), 3)


def test_values_are_immutable():
    p = Polynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()
    with pytest.raises(AttributeError):
        Matrix([[1]]).dim = 2


def test_deterministic(rng):
    a = random_matrix(rng, 4)
    assert repr(char_series(a)) == repr(char_series(Matrix(a.rows)))
