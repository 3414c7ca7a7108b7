"""Minimal polynomials, the codes C_p(u, v), systematic encoding and single-error decoding."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import CosetTable
from .ext_field import ExtensionField
from .field_core import Poly, poly_divmod

log = logging.getLogger(__name__)


class SameCosetError(ValueError):
    """u and v lie in the same cyclotomic coset, so m_u = m_v."""


def minimal_polynomial(field: ExtensionField, table: CosetTable, j: int) -> Poly:
    """prod_{i in C_j} (x - sigma^i), pulled back to GF(p)[x]."""
    if not 0 <= j < field.n:
        raise ValueError(f"j = {j} out of range [0, {field.n})")
    # coefficients in GF(p^m), lowest first
    acc = [1]
    for i in table.coset(j):
        root = field.neg(field.sigma_pow(i))
        nxt = [0] * (len(acc) + 1)
        for k, c in enumerate(acc):
            nxt[k + 1] = field.add(nxt[k + 1], c)
            nxt[k] = field.add(nxt[k], field.mul(c, root))
        acc = nxt
    if any(c >= field.p for c in acc):
        raise AssertionError(f"minimal polynomial of sigma^{j} left the prime field: {acc}")
    return Poly(field.p, acc)


def x_n_minus_1(p: int, n: int) -> Poly:
    return Poly(p, (p - 1,) + (0,) * (n - 1) + (1,))


@dataclass(frozen=True)
class CyclicCode:
    field: ExtensionField
    table: CosetTable
    u: int
    v: int
    generator: Poly
    claimed_distance: int | None = None

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    def describe(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "u": self.u,
            "v": self.v,
            "generator": self.generator.to_string(),
            "dimension": self.dimension,
        }

    def to_json(self) -> str:
        return json.dumps(self.describe())


def reduce_exponent(v: int, n: int) -> int:
    if not 0 <= v < n:
        r = v % n
        log.warning("v = %d reduced mod n = %d to %d", v, n, r)
        return r
    return v


def build_code(field: ExtensionField, table: CosetTable, u: int = 1, v: int = 0) -> CyclicCode:
    u = reduce_exponent(u, field.n)
    v = reduce_exponent(v, field.n)
    if table.same_coset(u, v):
        raise SameCosetError(
            f"u = {u} and v = {v} lie in the same cyclotomic coset (leader {table.leader_of[u]})"
        )
    g = minimal_polynomial(field, table, u) * minimal_polynomial(field, table, v)
    return CyclicCode(field, table, u, v, g)


# --------------------------------------------------------------------------
# evaluation and syndromes


def evaluate_at_sigma_power(code: CyclicCode, word, k: int) -> int:
    """word(sigma^k) as a packed field code."""
    f = code.field
    word = np.asarray(word, dtype=np.int64) % f.p
    idx = np.nonzero(word)[0]
    if idx.size == 0:
        return 0
    if f.has_tables:
        powers = f.exp[(f.half * ((k * idx) % f.n)) % f.group_order]
        terms = f.mul_codes(word[idx], powers)
        return f.sum_codes(terms)
    acc = 0
    for i in idx:
        acc = f.add(acc, f.mul(int(word[i]), f.sigma_pow(k * int(i))))
    return acc


def syndromes(code: CyclicCode, word) -> tuple[int, int]:
    return evaluate_at_sigma_power(code, word, code.u), evaluate_at_sigma_power(code, word, code.v)


def is_codeword(code: CyclicCode, word) -> bool:
    return syndromes(code, word) == (0, 0)


# --------------------------------------------------------------------------
# encode / decode


def encode(code: CyclicCode, message) -> list[int]:
    """Systematic: c(x) = x^r msg(x) - (x^r msg(x) mod g), r = deg g."""
    message = [int(c) % code.p for c in message]
    if len(message) != code.dimension:
        raise ValueError(f"message length {len(message)} != dimension {code.dimension}")
    r = code.generator.degree
    shifted = Poly(code.p, [0] * r + message)
    _, rem = poly_divmod(shifted, code.generator)
    word = [0] * code.n
    for i, c in enumerate(message):
        word[r + i] = c
    for i, c in enumerate(rem.coeffs):
        word[i] = (word[i] - c) % code.p
    return word


def extract_message(code: CyclicCode, word) -> list[int]:
    r = code.generator.degree
    return [int(c) for c in word[r:]]


@dataclass
class CorrectionReport:
    status: str  # "accepted" | "corrected" | "detected, uncorrectable"
    syndromes: tuple[int, int]
    position: int | None = None
    magnitude: int | None = None

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "syndromes": list(self.syndromes),
            "position": self.position,
            "magnitude": self.magnitude,
        }


@dataclass
class SingleErrorDecoder:
    """Syndrome table for all e * x^i, i in Z_n, e in GF(p)^*.

    Keys pack (e sigma^(ui), e sigma^(vi)) into one integer.
    """

    code: CyclicCode
    _table: dict = field(init=False, repr=False)

    def __post_init__(self):
        f = self.code.field
        tab = {}
        for i in range(self.code.n):
            a = f.sigma_pow(self.code.u * i)
            b = f.sigma_pow(self.code.v * i)
            for e in range(1, f.p):
                key = f.mul(e, a) * f.q + f.mul(e, b)
                if key in tab:
                    # two single errors share a syndrome: a weight <= 2 codeword exists
                    raise ValueError("code does not correct single errors (d < 3)")
                tab[key] = (i, e)
        self._table = tab

    def decode(self, received) -> tuple[list[int], CorrectionReport]:
        received = [int(c) % self.code.p for c in received]
        if len(received) != self.code.n:
            raise ValueError(f"received length {len(received)} != n = {self.code.n}")
        s = syndromes(self.code, received)
        if s == (0, 0):
            return received, CorrectionReport("accepted", s)
        hit = self._table.get(s[0] * self.code.field.q + s[1])
        if hit is None:
            return received, CorrectionReport("detected, uncorrectable", s)
        i, e = hit
        fixed = list(received)
        fixed[i] = (fixed[i] - e) % self.code.p
        return fixed, CorrectionReport("corrected", s, i, e)


def decode_single_error(code: CyclicCode, received, decoder: SingleErrorDecoder | None = None):
    if decoder is None:
        decoder = SingleErrorDecoder(code)
    return decoder.decode(received)
