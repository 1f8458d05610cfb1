"""Exact rational arithmetic: dense polynomials, truncated power series and
square matrices over Q, plus the characteristic series ``det(1 - tA)``.

Scalars are :class:`fractions.Fraction`; every value here is immutable.
Polynomials and series are indexed by powers of ``t`` (index ``i`` is the
coefficient of ``t**i``).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

_MOD_PRIME = (1 << 61) - 1


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Polynomial:
    """Dense univariate polynomial over Q; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, c, n: int) -> Polynomial:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            quo[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= f * b
        return Polynomial(quo), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c) -> Polynomial:
        c = as_rational(c)
        return Polynomial(c * a for a in self.coeffs)

    def reversed(self, degree: int | None = None) -> Polynomial:
        """``t**degree * P(1/t)``; ``degree`` defaults to the actual degree."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return Polynomial(self[d - i] for i in range(d + 1))

    def to_series(self, order: int) -> PowerSeries:
        return PowerSeries([self[i] for i in range(order + 1)], order)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial((as_rational(x),))


def _integer_content_form(p: Polynomial) -> list[int]:
    den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    return [int(c * den) for c in p.coeffs]


def _mod_gcd_degree(a: list[int], b: list[int], m: int) -> int:
    """Degree of gcd(a, b) over Z/m (m prime), a and b given low-degree-first."""

    def trim(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a = trim([c % m for c in a])
    b = trim([c % m for c in b])
    while b:
        inv = pow(b[-1], -1, m)
        while len(a) >= len(b):
            f = a[-1] * inv % m
            shift = len(a) - len(b)
            for j, c in enumerate(b):
                a[shift + j] = (a[shift + j] - f * c) % m
            trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Q.

    Normalized to constant term 1 when the constant term is nonzero,
    otherwise to a monic polynomial. ``gcd(0, 0) = 0``.
    """
    if a.is_zero() and b.is_zero():
        return Polynomial()
    if not a.is_zero() and not b.is_zero():
        ia, ib = _integer_content_form(a), _integer_content_form(b)
        # a good prime keeps both degrees, so deg gcd over Z/m bounds deg gcd over Q
        if ia[-1] % _MOD_PRIME and ib[-1] % _MOD_PRIME and _mod_gcd_degree(ia, ib, _MOD_PRIME) == 0:
            return Polynomial.one()
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = b.scale(1 / b.coeffs[-1])
    return _normalize(a)


def _normalize(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    c = p.coeffs[0] if p.coeffs[0] != 0 else p.coeffs[-1]
    return p.scale(1 / c)


class PowerSeries:
    """Power series truncated at ``order`` (inclusive); ``order + 1`` coefficients.

    Binary arithmetic between series of different orders truncates to the
    smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PowerSeries", self.coeffs))

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def __neg__(self):
        return PowerSeries((-c for c in self.coeffs), self.order)

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries((self[i] + other[i] for i in range(n + 1)), n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = as_rational(other)
            return PowerSeries((c * a for a in self.coeffs), self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> PowerSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-acc / c0)
        return PowerSeries(out, self.order)


def series_log(s: PowerSeries) -> PowerSeries:
    """log(s) for a series with constant term 1."""
    if s[0] != 1:
        raise ValueError(f"series_log needs constant term 1, got {s[0]}")
    N = s.order
    # n l_n = n s_n - sum_{k<n} k l_k s_{n-k}
    l = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        acc = n * s[n]
        for k in range(1, n):
            if l[k]:
                acc -= k * l[k] * s[n - k]
        l[n] = acc / n
    return PowerSeries(l, N)


def series_exp(s: PowerSeries) -> PowerSeries:
    """exp(s) for a series with constant term 0."""
    if s[0] != 0:
        raise ValueError(f"series_exp needs constant term 0, got {s[0]}")
    N = s.order
    e = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if s[k]:
                acc += k * s[k] * e[n - k]
        e[n] = acc / n
    return PowerSeries(e, N)


def rational_to_series(num: Polynomial, den: Polynomial, order: int) -> PowerSeries:
    """Expand ``num / den`` to the given order; ``den(0)`` must be nonzero."""
    d0 = den[0]
    if d0 == 0:
        raise ValueError("denominator vanishes at t = 0")
    out: list[Fraction] = []
    dd = den.degree
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, min(n, dd) + 1):
            acc -= den.coeffs[k] * out[n - k]
        out.append(acc / d0)
    return PowerSeries(out, order)


def power_sums(char: Polynomial, count: int) -> list[Fraction]:
    """Traces ``Tr(A^n)``, n = 1..count, of any A with ``det(1 - tA) = char``.

    Newton's identities in the ``t``-reversed form.
    """
    if char[0] != 1:
        raise ValueError("characteristic series must have constant term 1")
    d = char.degree
    c: list[Fraction] = [Fraction(0)]
    for n in range(1, count + 1):
        acc = -n * char[n]
        for k in range(1, min(n - 1, d) + 1):
            acc -= char.coeffs[k] * c[n - k]
        c.append(acc)
    return c[1:]


def from_power_sums(sums: Sequence[Fraction]) -> Polynomial:
    """The polynomial ``det(1 - tA)`` of degree ``<= len(sums)`` with Tr(A^n) = sums[n-1]."""
    D = len(sums)
    p = [Fraction(1)]
    for n in range(1, D + 1):
        acc = sums[n - 1]
        for k in range(1, n):
            acc += p[k] * sums[n - k - 1]
        p.append(-acc / n)
    return Polynomial(p)


def kron_char_series(p: Polynomial, q: Polynomial) -> Polynomial:
    """``char_series(A (x) B)`` from ``p = char_series(A)``, ``q = char_series(B)``.

    Uses Tr((A (x) B)^n) = Tr(A^n) Tr(B^n) and recovers the degree
    ``deg p * deg q`` polynomial from its power sums; no matrices are formed.
    """
    D = p.degree * q.degree
    if D <= 0:
        return Polynomial.one()
    sp, sq = power_sums(p, D), power_sums(q, D)
    return from_power_sums([a * b for a, b in zip(sp, sq)])


class Matrix:
    """Square matrix over Q. ``dim`` may be 0."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Iterable[Iterable] = ()):
        rs = tuple(tuple(as_rational(x) for x in row) for row in rows)
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> Matrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def scalar(cls, a) -> Matrix:
        return cls([[a]])

    @classmethod
    def companion(cls, char: Polynomial) -> Matrix:
        """Matrix of dimension ``deg char`` whose characteristic series is ``char``.

        For char = 1 + c_1 t + ... + c_d t^d the characteristic polynomial is
        x^d + c_1 x^(d-1) + ... + c_d, realized by the usual companion form.
        """
        if char[0] != 1:
            raise ValueError("companion needs a polynomial with constant term 1")
        d = char.degree
        m = [[Fraction(0)] * d for _ in range(d)]
        for i in range(1, d):
            m[i][i - 1] = Fraction(1)
        for i in range(d):
            m[i][d - 1] = -char[d - i]
        return cls(m)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(("Matrix", self.rows))

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> Matrix:
        c = as_rational(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return Matrix([[sum((a * b for a, b in zip(r, c) if a), Fraction(0)) for c in cols] for r in self.rows])

    def __pow__(self, n: int) -> Matrix:
        if n < 0:
            raise ValueError("negative matrix power")
        result, base = Matrix.identity(self.dim), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.rows for x in r)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.dim for b in blocks)
    m = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.dim):
            for j in range(b.dim):
                m[off + i][off + j] = b.rows[i][j]
        off += b.dim
    return Matrix(m)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) is ``a[i, j] * b``."""
    n, m = a.dim, b.dim
    return Matrix(
        [[a.rows[i // m][j // m] * b.rows[i % m][j % m] for j in range(n * m)] for i in range(n * m)]
    )


def char_series(a: Matrix) -> Polynomial:
    """``det(I - tA)`` by Faddeev-LeVerrier over exact rationals."""
    n = a.dim
    if n == 0:
        return Polynomial.one()
    # det(xI - A) = sum c_k x^k with c_n = 1; det(I - tA) = sum c_{n-k} t^k
    coeffs = [Fraction(1)]
    m = Matrix.zero(n)
    ident = Matrix.identity(n)
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        m = a @ m + ident.scale(c_prev)
        c_prev = -(a @ m).trace() / k
        coeffs.append(c_prev)
    return Polynomial(coeffs)
