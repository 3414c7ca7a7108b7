"""Arithmetic in GF(p) and GF(p)[x], irreducibility/primitivity tests, factoring.

Polynomials are stored lowest degree first.  The zero polynomial has degree
``NEG_INF``, a sentinel that orders below every integer but refuses arithmetic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class _NegInf:
    """Degree of the zero polynomial.  Comparable, but not usable in arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")


NEG_INF = _NegInf()


# --------------------------------------------------------------------------
# integers

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24 with the fixed base set."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        y = x = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]  # sorted (prime, exponent)

    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def factor_integer(N: int) -> FactoredInteger:
    """Complete factorization: trial division up to 10**6, then Pollard rho."""
    if N < 1:
        raise ValueError("factor_integer needs N >= 1")
    counts: dict[int, int] = {}
    rest = N
    q = 2
    while q * q <= rest and q <= 10**6:
        while rest % q == 0:
            counts[q] = counts.get(q, 0) + 1
            rest //= q
        q += 1 if q == 2 else 2
    rng = random.Random(0x5EED)
    stack = [rest] if rest > 1 else []
    while stack:
        r = stack.pop()
        if is_prime(r):
            counts[r] = counts.get(r, 0) + 1
            continue
        d = _pollard_rho(r, rng)
        stack.extend((d, r // d))
    return FactoredInteger(N, tuple(sorted(counts.items())))


# --------------------------------------------------------------------------
# prime field


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def primitive_root(self) -> int:
        primes = factor_integer(self.p - 1).primes()
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in primes):
                return g
        raise AssertionError("no primitive root")  # unreachable for prime p


# --------------------------------------------------------------------------
# polynomials over GF(p)


def _trim(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PrimeFieldPolynomial:
    p: int
    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs, self.p))

    @classmethod
    def from_string(cls, p: int, text: str) -> "PrimeFieldPolynomial":
        """Parse the comma-separated, lowest-first coefficient format."""
        text = text.strip()
        if not text:
            return cls(p, ())
        return cls(p, tuple(int(t) for t in text.split(",")))

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> "PrimeFieldPolynomial":
        return cls(p, (0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self) -> str:
        """Human form, e.g. ``x^6 + 3x^5 + 2x^3 + 2x^2 + 4``."""
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return self.pretty()

    def _check(self, other: "PrimeFieldPolynomial"):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return PrimeFieldPolynomial(
            self.p, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def __neg__(self):
        return PrimeFieldPolynomial(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def scale(self, c: int) -> "PrimeFieldPolynomial":
        return PrimeFieldPolynomial(self.p, [c * x for x in self.coeffs])

    def monic(self) -> "PrimeFieldPolynomial":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(pow(self.lead(), -1, self.p))


Poly = PrimeFieldPolynomial


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Poly(a.p, ())
    p = a.p
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return Poly(p, out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = a.p
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) - 1 < db:
        return Poly(p, ()), a
    inv_lead = pow(b.coeffs[-1], -1, p)
    quot = [0] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % p
        if not c:
            continue
        f = c * inv_lead % p
        quot[k - db] = f
        off = k - db
        for i in range(db + 1):
            rem[off + i] -= f * bc[i]
    return Poly(p, quot), Poly(p, rem[:db])


def poly_mod(a: Poly, b: Poly) -> Poly:
    return poly_divmod(a, b)[1]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    return a.monic() if not a.is_zero() else a


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly(base.p, (1,))
    base = poly_mod(base, mod)
    while e:
        if e & 1:
            result = poly_mod(result * base, mod)
        e >>= 1
        if e:
            base = poly_mod(base * base, mod)
    return poly_mod(result, mod)


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/q)) - x, f) = 1 for primes q | d."""
    if not f.is_monic():
        raise ValueError("is_irreducible expects a monic polynomial")
    d = f.degree
    if d < 1:
        raise ValueError("is_irreducible expects degree >= 1")
    if d == 1:
        return True
    p = f.p
    x = Poly(p, (0, 1))
    for q in factor_integer(d).primes():
        h = poly_powmod(x, p ** (d // q), f)
        if poly_gcd(h - x, f).degree != 0:
            return False
    return poly_powmod(x, p**d, f) == poly_mod(x, f)


def is_primitive(f: Poly, factored_group_order: FactoredInteger | None = None) -> bool:
    """True iff x generates the multiplicative group of GF(p)[x]/(f)."""
    if not is_irreducible(f):
        raise ValueError(f"{f.pretty()} is reducible over GF({f.p})")
    order = f.p ** f.degree - 1
    if factored_group_order is None:
        factored_group_order = factor_integer(order)
    if factored_group_order.value != order:
        raise ValueError("factored_group_order does not match p^m - 1")
    x = Poly(f.p, (0, 1))
    one = Poly(f.p, (1,))
    if poly_mod(x, f) == one:  # degree-1 modulus x - 1
        return order == 1
    return all(poly_powmod(x, order // q, f) != one for q in factored_group_order.primes())


def monic_polys(p: int, d: int) -> Iterable[Poly]:
    """All monic polynomials of degree d, ordered lexicographically on (c_0, ..., c_{d-1})."""
    for k in range(p**d):
        digits = []
        for _ in range(d):
            k, r = divmod(k, p)
            digits.append(r)
        # most significant digit is c_0
        yield Poly(p, tuple(reversed(digits)) + (1,))


def parse_coeffs(text: str) -> list[int]:
    return [int(t) for t in text.split(",")] if text.strip() else []


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for c in v if c)
