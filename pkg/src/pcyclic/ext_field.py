"""GF(p^m) in polynomial basis with a canonical primitive modulus.

Elements are packed into integers: the coefficient vector (a_0, ..., a_{m-1})
becomes a_0 + a_1 p + ... + a_{m-1} p^(m-1).  Codes below p are exactly the
prime subfield.  When p^m <= 2**24 the field also carries exp/log tables
(numpy) and a Zech logarithm table; the search code in ``distance`` and
``audit`` runs entirely on those tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .field_core import (
    FactoredInteger,
    Poly,
    PrimeField,
    factor_integer,
    is_irreducible,
    is_primitive,
    monic_polys,
)

TABLE_LIMIT = 2**24


class ExtensionField:
    """GF(p^m) with primitive element pi = x mod modulus."""

    def __init__(self, p: int, m: int, modulus: Poly):
        PrimeField(p)
        if m < 1:
            raise ValueError("extension degree m must be >= 1")
        if modulus.p != p or modulus.degree != m or not modulus.is_monic():
            raise ValueError("modulus must be monic of degree m over GF(p)")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.group_order = self.q - 1
        self.factored_order: FactoredInteger = factor_integer(self.group_order)
        self.n = 2 * self.group_order // (p - 1)
        self.half = (p - 1) // 2  # sigma = pi^half
        self._weights = np.array([p**i for i in range(m)], dtype=np.int64)
        # x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        self._reduce = [(-c) % p for c in modulus.coeffs[:m]]
        self.exp = self.log = self.zech = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # ---------------------------------------------------------------- codes

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients for this field")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _times_x(self, a: int) -> int:
        c = self.to_coeffs(a)
        top = c[-1]
        shifted = [0] + c[:-1]
        if top:
            shifted = [(s + top * r) % self.p for s, r in zip(shifted, self._reduce)]
        return self.from_coeffs(shifted)

    def _build_tables(self):
        Q = self.group_order
        exp = np.empty(Q, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        a = 1
        for k in range(Q):
            exp[k] = a
            log[a] = k
            a = self._times_x(a)
        if a != 1 or (log[1:] < 0).any():
            raise AssertionError("modulus is not primitive")  # guarded by make_field
        self.exp, self.log = exp, log
        self.digits = (np.arange(self.q, dtype=np.int64)[:, None] // self._weights) % self.p
        self.neg_table = ((-self.digits) % self.p) @ self._weights
        # Zech: 1 + pi^k = pi^zech[k]; -1 where the sum is zero
        one_plus = self.add_codes(np.ones(Q, dtype=np.int64), exp)
        self.zech = log[one_plus]

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    def require_tables(self):
        if not self.has_tables:
            raise ValueError(
                f"GF({self.p}^{self.m}) is too large for table-driven search (limit {TABLE_LIMIT})"
            )

    # vectorized operations on packed codes (tables required)

    def add_codes(self, a, b):
        return ((self.digits[a] + self.digits[b]) % self.p) @ self._weights

    def neg_codes(self, a):
        return self.neg_table[a]

    def mul_codes(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % self.group_order]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_codes(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        la = self.log[a]
        out = self.exp[(la * (e % self.group_order)) % self.group_order]
        if e == 0:
            return np.ones_like(a)
        if e < 0 and (a == 0).any():
            raise ZeroDivisionError("zero to a negative power")
        return np.where(a == 0, 0, out)

    def sum_codes(self, a) -> int:
        """Sum of a 1-d array of codes."""
        a = np.asarray(a, dtype=np.int64)
        if a.size == 0:
            return 0
        return int((self.digits[a].sum(axis=0) % self.p) @ self._weights)

    # scalar operations on packed codes (work with or without tables)

    def add(self, a: int, b: int) -> int:
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        return self.from_coeffs(x + y for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        return self.from_coeffs(-x for x in self.to_coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return int(self.exp[(self.log[a] + self.log[b]) % self.group_order])
        # schoolbook in the polynomial basis
        acc = 0
        for c in reversed(self.to_coeffs(b)):
            acc = self._times_x(acc)
            if c:
                acc = self.add(acc, self.from_coeffs(c * x for x in self.to_coeffs(a)))
        return acc

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        e %= self.group_order
        if self.has_tables:
            return int(self.exp[(int(self.log[a]) * e) % self.group_order])
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def order(self, a: int) -> int:
        """Multiplicative order by stripping prime divisors of p^m - 1."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k = self.group_order
        for q, e in self.factored_order.factors:
            for _ in range(e):
                if self.pow(a, k // q) == 1:
                    k //= q
                else:
                    break
        return k

    def pi_pow(self, k: int) -> int:
        """pi^k as a code."""
        if self.has_tables:
            return int(self.exp[k % self.group_order])
        return self.pow(self.from_coeffs([0, 1]) if self.m > 1 else self._x_code(), k)

    def _x_code(self) -> int:
        # m = 1: x reduces to -c_0
        return self._reduce[0]

    def sigma_pow(self, k: int) -> int:
        """sigma^k where sigma = pi^((p-1)/2) has order n."""
        return self.pi_pow(self.half * (k % self.n))

    # ---------------------------------------------------------------- misc

    def element(self, code: int) -> "ExtElement":
        return ExtElement(self, int(code))

    @cached_property
    def pi(self) -> "ExtElement":
        return self.element(self.pi_pow(1))

    def describe(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": self.modulus.to_string(), "n": self.n}

    def to_json(self) -> str:
        return json.dumps(self.describe())

    def __repr__(self):
        return f"ExtensionField(p={self.p}, m={self.m}, modulus={self.modulus.pretty()!r})"


@dataclass(frozen=True)
class ExtElement:
    field: ExtensionField
    code: int

    def __eq__(self, other):
        return isinstance(other, ExtElement) and self.field is other.field and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    @property
    def coeffs(self) -> list[int]:
        return self.field.to_coeffs(self.code)

    def __add__(self, other):
        return ExtElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        return ExtElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self):
        return ExtElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return ExtElement(self.field, self.field.mul(self.code, other.code))

    def __pow__(self, e: int):
        return pow_element(self, e)

    def is_zero(self) -> bool:
        return self.code == 0

    def to_string(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"ExtElement({self.to_string()})"


def pow_element(a: ExtElement, e: int) -> ExtElement:
    return ExtElement(a.field, a.field.pow(a.code, e))


def element_order(a: ExtElement) -> int:
    return a.field.order(a.code)


def root_of_unity(field: ExtensionField) -> ExtElement:
    """sigma = pi^((p-1)/2), a primitive n-th root of unity."""
    return field.element(field.pi_pow(field.half))


def primitive_moduli(p: int, m: int):
    """Monic primitive polynomials of degree m, lexicographic on (c_0, ..., c_{m-1})."""
    order = factor_integer(p**m - 1)
    for f in monic_polys(p, m):
        if f.coeffs[0] == 0:
            continue
        if is_irreducible(f) and is_primitive(f, order):
            yield f


_CANONICAL: dict[tuple[int, int], Poly] = {}


def canonical_modulus(p: int, m: int) -> Poly:
    key = (p, m)
    if key not in _CANONICAL:
        _CANONICAL[key] = next(primitive_moduli(p, m))
    return _CANONICAL[key]


def make_field(p: int, m: int, modulus_override: Poly | None = None) -> ExtensionField:
    PrimeField(p)
    if modulus_override is not None:
        f = modulus_override
        if f.p != p or f.degree != m or not f.is_monic():
            raise ValueError("modulus override must be monic of degree m over GF(p)")
        if not is_irreducible(f):
            raise ValueError(f"modulus {f.pretty()} is not irreducible")
        if not is_primitive(f):
            raise ValueError(f"modulus {f.pretty()} is not primitive")
        return ExtensionField(p, m, f)
    return ExtensionField(p, m, canonical_modulus(p, m))
