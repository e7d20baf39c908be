import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from isc.algebra import RSCode, field_new, rs_decode, rs_encode
from isc.errors import DecodeFailure


@pytest.fixture(scope="module")
def rs75():
    return RSCode(field_new(3), 7, 5)


@pytest.fixture(scope="module")
def rs75_codewords(rs75):
    return [tuple(rs_encode(list(d), rs75)) for d in product(range(8), repeat=5)]


def test_zero_data_gives_zero_codeword(rs75):
    assert rs_encode([0] * 5, rs75) == [0] * 7


def test_encode_length_checked(rs75):
    with pytest.raises(ValueError):
        rs_encode([1, 2], rs75)


def test_systematic_and_is_codeword(rs75):
    data = [3, 1, 4, 1, 5]
    cw = rs_encode(data, rs75)
    assert cw[:5] == data
    assert rs75.is_codeword(cw)
    assert rs_decode(cw, (), rs75) == cw


def test_minimum_distance_is_mds(rs75_codewords):
    # linear code: min distance = min nonzero weight
    wmin = min(sum(1 for s in c if s) for c in rs75_codewords if any(c))
    assert wmin == 3


def test_every_single_error_corrected(rs75, rs75_codewords):
    rnd = random.Random(1)
    for cw in [rs75_codewords[0]] + rnd.sample(rs75_codewords, 30):
        for pos in range(7):
            for val in range(1, 8):
                w = list(cw)
                w[pos] ^= val
                assert rs_decode(w, (), rs75) == list(cw)


def test_every_erasure_pair_corrected(rs75, rs75_codewords):
    rnd = random.Random(2)
    for cw in rnd.sample(rs75_codewords, 30):
        for er in combinations(range(7), 2):
            w = list(cw)
            for p in er:
                w[p] = rnd.randrange(8)
            assert rs_decode(w, er, rs75) == list(cw)


def test_brute_force_nearest_codeword_agrees(rs75, rs75_codewords):
    """Compare with exhaustive search over all 8^5 codewords."""
    rnd = random.Random(3)
    for _ in range(40):
        w = [rnd.randrange(8) for _ in range(7)]
        er = tuple(sorted(rnd.sample(range(7), rnd.choice([0, 1]))))
        keep = [i for i in range(7) if i not in er]
        budget = (2 - len(er)) // 2
        near = [c for c in rs75_codewords
                if sum(1 for i in keep if c[i] != w[i]) <= budget]
        assert len(near) <= 1
        if near:
            assert rs_decode(w, er, rs75) == list(near[0])


def test_too_many_erasures_fail(rs75):
    with pytest.raises(DecodeFailure):
        rs_decode([0] * 7, (0, 1, 2), rs75)


def test_zero_redundancy_code():
    code = RSCode(field_new(4), 5, 5)
    assert rs_encode([1, 2, 3, 4, 5], code) == [1, 2, 3, 4, 5]
    assert rs_decode([1, 2, 3, 4, 5], (), code) == [1, 2, 3, 4, 5]


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_randomized_error_erasure_budget(data):
    m = data.draw(st.sampled_from([8, 12, 16]))
    f = field_new(m)
    n = data.draw(st.integers(8, 80))
    nk = data.draw(st.integers(1, min(12, n - 1)))
    code = RSCode(f, n, n - nk)
    msg = data.draw(st.lists(st.integers(0, f.order), min_size=n - nk, max_size=n - nk))
    cw = rs_encode(msg, code)
    f_count = data.draw(st.integers(0, nk))
    e_count = data.draw(st.integers(0, (nk - f_count) // 2))
    positions = data.draw(st.permutations(range(n)))[:f_count + e_count]
    erasures, errors = positions[:f_count], positions[f_count:]
    w = list(cw)
    for p in erasures:
        w[p] = data.draw(st.integers(0, f.order))
    for p in errors:
        w[p] ^= data.draw(st.integers(1, f.order))
    assert rs_decode(w, erasures, code) == cw
