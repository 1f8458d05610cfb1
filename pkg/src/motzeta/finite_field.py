"""GF(p^k) with a deterministic modulus, for brute-force point counting.

Elements are encoded as integers ``0 <= x < p**k`` whose base-``p`` digits
are the polynomial coefficients (lowest degree first). :class:`FieldElement`
wraps such a code for operator-style use; the counting loops work on raw
codes through the ``FiniteField`` methods.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

MAX_EXTENSION_DEGREE = 12
MAX_FIELD_SIZE = 1 << 20
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _factor(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polymod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] % p
        if c:
            f = c * inv % p
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - f * m[j]) % p
    a = [c % p for c in a[:dm]]
    return a


def _lex_monic(p: int, d: int) -> Iterator[list[int]]:
    """Monic degree-d polynomials over Z/p, ordered with c_0 as the most significant key."""
    for tail in product(range(p), repeat=d):
        yield list(tail) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Brute-force factor search: no monic factor of degree 1..deg/2."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for f in _lex_monic(p, d):
            if not any(_polymod(list(modulus), f, p)):
                return False
    return True


class FiniteField:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 1 <= k <= MAX_EXTENSION_DEGREE or p**k > MAX_FIELD_SIZE:
            raise ValueError(f"GF({p}^{k}) exceeds the supported size (k <= {MAX_EXTENSION_DEGREE}, p^k <= 2^20)")
        if modulus is None:
            modulus = _smallest_irreducible(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1 or not is_irreducible(modulus, p):
                raise ValueError(f"{modulus} is not a monic irreducible of degree {k} over F_{p}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add: list[list[int]] | None = None

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    @property
    def order(self) -> int:
        return self.q

    def encode(self, coeffs: Sequence[int]) -> int:
        cs = list(coeffs)
        if len(cs) > self.k:
            cs = _polymod(cs, self.modulus, self.p)
        x = 0
        for c in reversed(cs):
            x = x * self.p + c % self.p
        return x

    def decode(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> GF(q)."""
        return n % self.p

    def _slow_mul(self, a: int, b: int) -> int:
        pa, pb = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
        return self.encode(_polymod(prod, self.modulus, self.p) if len(prod) > self.k else prod)

    def _build_tables(self):
        q = self.q
        exp = [0] * (q - 1)
        log = [0] * q
        primes = _factor(q - 1)
        for g in range(1, q):
            if q == 2 or all(self._slow_pow(g, (q - 1) // r) != 1 for r in primes):
                break
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        self._exp, self._log = exp, log

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return result

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= _ADD_TABLE_LIMIT:
            if self._add is None:
                self._add = [[self._digit_add(x, y) for y in range(self.q)] for x in range(self.q)]
            return self._add[a][b]
        return self._digit_add(a, b)

    def _digit_add(self, a: int, b: int) -> int:
        p, out, scale = self.p, 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.encode([-c for c in self.decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        if self._exp is None:
            self._build_tables()
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, -1)

    def codes(self) -> range:
        return range(self.q)

    def element(self, coeffs: Sequence[int] | int) -> FieldElement:
        if isinstance(coeffs, int):
            return FieldElement(self, self.from_int(coeffs))
        return FieldElement(self, self.encode(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, x) for x in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)


class FieldElement:
    __slots__ = ("owner", "code")

    def __init__(self, owner: FiniteField, code: int):
        self.owner = owner
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.owner.decode(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.owner.from_int(other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.code == o

    def __hash__(self):
        return hash((self.owner, self.code))

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} mod {list(self.owner.modulus)} over F_{self.owner.p})"

    def __add__(self, other):
        return FieldElement(self.owner, self.owner.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.code))

    def __sub__(self, other):
        return FieldElement(self.owner, self.owner.sub(self.code, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.owner, self.owner.sub(self._coerce(other), self.code))

    def __mul__(self, other):
        return FieldElement(self.owner, self.owner.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElement(self.owner, self.owner.inv(self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow(self.code, e))

    def __bool__(self):
        return self.code != 0


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _lex_monic(p, k):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


@lru_cache(maxsize=64)
def gf_make(p: int, k: int = 1) -> FiniteField:
    """GF(p^k), cached so repeated towers share log tables."""
    return FiniteField(p, k)
