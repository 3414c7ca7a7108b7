import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import is_codeword_by_division, min_distance, sphere_volume_independent
from pcyclic.code_algebra import build_code, is_codeword
from pcyclic.cyclotomic import build_cosets
from pcyclic.distance import (
    ColumnTable,
    exists_codeword_of_weight,
    find_weight4_witness,
    optimality_verdict,
    sphere_packing_volume,
)
from pcyclic.ext_field import make_field


@pytest.fixture(scope="module")
def c10(gf125):
    F, T = gf125
    return build_code(F, T, 1, 10)


def test_sphere_packing_examples():
    assert sphere_packing_volume(62, 0, 5) == 1
    assert sphere_packing_volume(62, 2, 5) == 30505
    for n, p in [(10, 3), (62, 5), (5602, 7)]:
        assert sphere_packing_volume(n, 1, p) == 1 + n * (p - 1)
    with pytest.raises(ValueError):
        sphere_packing_volume(5, 6, 3)


@given(st.integers(1, 300), st.sampled_from([3, 5, 7, 11]))
def test_sphere_packing_matches_independent(n, p):
    vols = [sphere_packing_volume(n, t, p) for t in range(min(n, 4) + 1)]
    assert vols == [sphere_volume_independent(n, t, p) for t in range(min(n, 4) + 1)]
    assert all(a < b for a, b in zip(vols, vols[1:]))


def test_low_weight_searches(c10):
    cols = ColumnTable(c10)
    for w in (1, 2, 3):
        assert exists_codeword_of_weight(c10, w, cols) is None


def test_weight2_absent_when_gcd_one():
    F = make_field(3, 5)
    T = build_cosets(3, F.n)
    for v in range(F.n):
        if T.same_coset(v, 1) or math.gcd(v - 1, F.n) != 1:
            continue
        assert exists_codeword_of_weight(build_code(F, T, 1, v), 2) is None


def test_witnesses_revalidate_and_scale():
    F = make_field(3, 4)
    T = build_cosets(3, F.n)
    seen = 0
    for v in T.leaders:
        if T.same_coset(v, 1):
            continue
        c = build_code(F, T, 1, v)
        for w in (2, 3):
            wit = exists_codeword_of_weight(c, w)
            if wit is None:
                continue
            seen += 1
            word = wit.word(c.n)
            assert wit.weight == w and is_codeword(c, word)
            assert is_codeword_by_division(c.generator, word)
            for s in (1, 2):
                assert is_codeword(c, [s * x % 3 for x in word])
    assert seen > 0


def test_weight4_witness(c10):
    wit = find_weight4_witness(c10, budget=10**6)
    assert wit is not None and wit.weight == 4
    assert is_codeword_by_division(c10.generator, wit.word(62))
    assert find_weight4_witness(c10, budget=0) is None


def test_weight4_generator_shortcut():
    F = make_field(3, 3)
    T = build_cosets(3, F.n)
    for v in T.leaders:
        if T.same_coset(v, 1):
            continue
        c = build_code(F, T, 1, v)
        if c.generator.weight() == 4:
            wit = find_weight4_witness(c, budget=1)
            assert wit.support == tuple(i for i, x in enumerate(c.generator.coeffs) if x)
            return
    pytest.skip("no weight-4 generator in this family")


def test_verdict_example(c10):
    rep = optimality_verdict(c10, witness_budget=10**5)
    assert rep.optimal and rep.triple == (62, 56, 4)
    assert rep.distance.bound_value == 30505 and rep.distance.bound_capacity == 15625
    d = rep.as_dict()
    assert d["witness"]["support"][0] == 0 and len(d["witness"]["coeffs"]) == 4


@pytest.mark.parametrize("p,m", [(3, 3), (3, 4), (5, 2)])
def test_oracle_equivalence(p, m):
    F = make_field(p, m)
    T = build_cosets(p, F.n)
    for v in T.leaders:
        if T.same_coset(v, 1):
            continue
        c = build_code(F, T, 1, v)
        assert optimality_verdict(c).distance.distance == min_distance(c.generator, F.n), v


def test_non_regime_dimension_downgrades():
    F = make_field(3, 3)
    T = build_cosets(3, F.n)
    rep = optimality_verdict(build_code(F, T, 1, 0))
    assert not rep.optimal and "note" in rep.extra
