import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import is_codeword_by_division
from pcyclic.code_algebra import (
    SameCosetError,
    SingleErrorDecoder,
    build_code,
    decode_single_error,
    encode,
    evaluate_at_sigma_power,
    extract_message,
    is_codeword,
    minimal_polynomial,
    x_n_minus_1,
)
from pcyclic.cyclotomic import build_cosets
from pcyclic.ext_field import make_field
from pcyclic.field_core import Poly, is_irreducible, poly_divmod


def test_minimal_polynomial_basics(gf125):
    F, T = gf125
    assert minimal_polynomial(F, T, 0) == Poly(5, (4, 1))
    assert minimal_polynomial(F, T, 1).degree == 3
    assert minimal_polynomial(F, T, 10).degree == 3


@pytest.mark.parametrize("p,m", [(3, 3), (5, 3), (7, 3), (3, 4)])
def test_minimal_polys_factor_x_n_minus_1(p, m):
    F = make_field(p, m)
    T = build_cosets(p, F.n)
    prod = Poly(p, (1,))
    for ld in T.leaders:
        f = minimal_polynomial(F, T, ld)
        assert f.is_monic() and f.degree == T.length(ld)
        assert is_irreducible(f)
        assert f == minimal_polynomial(F, T, ld * p % F.n)
        prod = prod * f
    assert prod == x_n_minus_1(p, F.n)


def test_build_code_examples(gf125, gf16807):
    F, T = gf125
    c = build_code(F, T, 1, 10)
    assert c.generator.degree == 6 and c.dimension == 56 == F.n - 2 * F.m
    with pytest.raises(SameCosetError):
        build_code(F, T, 1, 5)
    F7, T7 = gf16807
    c = build_code(F7, T7, 1, 400)
    assert (c.n, c.dimension, c.generator.degree) == (5602, 5592, 10)


def test_generator_divides_x_n_minus_1(gf125):
    F, T = gf125
    for v in T.leaders:
        if T.same_coset(v, 1):
            continue
        c = build_code(F, T, 1, v)
        assert poly_divmod(x_n_minus_1(5, F.n), c.generator)[1].is_zero()
        assert evaluate_at_sigma_power(c, list(c.generator.coeffs), 1) == 0
        assert evaluate_at_sigma_power(c, list(c.generator.coeffs), v) == 0
        assert c.dimension == F.n - T.length(1) - T.length(v)


def test_out_of_range_v_is_reduced(gf125, caplog):
    F, T = gf125
    assert build_code(F, T, 1, 10 + 62).v == 10
    assert "reduced mod n" in caplog.text


@pytest.fixture(scope="module")
def c10(gf125):
    F, T = gf125
    return build_code(F, T, 1, 10)


def test_encode_examples(c10):
    assert encode(c10, [0] * c10.dimension) == [0] * c10.n
    msg = [1] + [0] * (c10.dimension - 1)
    w = encode(c10, msg)
    assert is_codeword(c10, w) and is_codeword_by_division(c10.generator, w)
    with pytest.raises(ValueError):
        encode(c10, [1, 2])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=56, max_size=56))
def test_encode_is_systematic_and_round_trips(c10, msg):
    w = encode(c10, msg)
    assert extract_message(c10, w) == msg
    assert is_codeword_by_division(c10.generator, w)
    out, rep = decode_single_error(c10, w)
    assert out == w and rep.status == "accepted"


def test_single_errors_corrected(c10):
    rng = random.Random(7)
    dec = SingleErrorDecoder(c10)
    for _ in range(100):
        w = encode(c10, [rng.randrange(5) for _ in range(c10.dimension)])
        i, e = rng.randrange(c10.n), rng.randrange(1, 5)
        r = list(w)
        r[i] = (r[i] + e) % 5
        out, rep = dec.decode(r)
        assert out == w and rep.status == "corrected" and (rep.position, rep.magnitude) == (i, e)


def test_double_errors_flagged_brute_force(c10):
    # Oracle: a double error is miscorrectable only if some single error
    # lands on the same syndrome, i.e. a weight <= 3 word exists.
    rng = random.Random(8)
    dec = SingleErrorDecoder(c10)
    w = encode(c10, [rng.randrange(5) for _ in range(c10.dimension)])
    for _ in range(200):
        i, j = rng.sample(range(c10.n), 2)
        r = list(w)
        r[i] = (r[i] + rng.randrange(1, 5)) % 5
        r[j] = (r[j] + rng.randrange(1, 5)) % 5
        out, rep = dec.decode(r)
        single_hits = [
            (k, e) for k in range(c10.n) for e in range(1, 5)
            if is_codeword_by_division(c10.generator, [(x - (e if t == k else 0)) % 5 for t, x in enumerate(r)])
        ]
        assert single_hits == []
        assert rep.status == "detected, uncorrectable"


def test_decoder_requires_distance_three():
    F = make_field(5, 2)
    T = build_cosets(5, F.n)
    c = build_code(F, T, 1, 3)  # has a weight-2 word
    with pytest.raises(ValueError):
        SingleErrorDecoder(c)


def test_decode_length_check(c10):
    with pytest.raises(ValueError):
        decode_single_error(c10, [0] * 5)


def test_code_json(c10):
    assert c10.describe() == {
        "p": 5, "m": 3, "n": 62, "u": 1, "v": 10, "generator": "4,2,0,3,3,0,1", "dimension": 56,
    }
