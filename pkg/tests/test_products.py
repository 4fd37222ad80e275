from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import span_oracle
from schurcodes.code import code_from_rows, codeword_iter, full_code, min_distance, repetition_code, zero_code
from schurcodes.errors import FieldMismatch, LengthMismatch, TooLarge, ZeroCode
from schurcodes.field import field_make
from schurcodes.products import (
    all_codes,
    count_subspaces,
    power,
    power_params,
    schur_span,
    search_a_t,
    square_root_census,
    support,
)


def random_code(rng, q, n, k):
    F = field_make(q)
    return code_from_rows(F, n, [[rng.randrange(q) for _ in range(n)] for _ in range(k)])


@st.composite
def small_codes(draw, qs=(2, 3), n_max=6, k_max=3):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, n_max))
    k = draw(st.integers(1, k_max))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return code_from_rows(field_make(q), n, rows)


def pair_oracle(C, C2):
    """Span of c*c' over all codeword pairs, by brute force."""
    F = C.field
    prods = {tuple(F.mul(a, b) for a, b in zip(u, v)) for u in codeword_iter(C) for v in codeword_iter(C2)}
    basis = code_from_rows(F, C.n, list(prods)) if prods else zero_code(F, C.n)
    return basis


def test_repetition_is_identity(F2):
    rng = random.Random(0)
    for _ in range(20):
        C = random_code(rng, 2, 5, 3)
        assert schur_span(C, repetition_code(F2, 5)) == C


def test_parity_square_is_full(F2):
    parity = code_from_rows(F2, 3, [[1, 1, 0], [0, 1, 1]])
    assert schur_span(parity, parity) == full_code(F2, 3)


def test_schur_span_matches_pair_oracle():
    rng = random.Random(11)
    for q in (2, 3):
        for _ in range(25):
            n = rng.randint(1, 6)
            C, C2 = random_code(rng, q, n, rng.randint(1, 3)), random_code(rng, q, n, rng.randint(1, 3))
            oracle = pair_oracle(C, C2)
            assert schur_span(C, C2) == oracle
            # the oracle's span is also what brute-force spanning gives
            if oracle.k:
                assert set(codeword_iter(oracle)) == span_oracle(C.field, [list(r) for r in oracle.rows])


def test_schur_span_errors(F2, F8):
    with pytest.raises(LengthMismatch):
        schur_span(full_code(F2, 3), full_code(F2, 4))
    with pytest.raises(FieldMismatch):
        schur_span(full_code(F2, 3), full_code(F8, 3))


def test_power_basics(F2):
    C = code_from_rows(F2, 5, [[1, 1, 0, 0, 1], [0, 1, 1, 1, 0]])
    assert power(C, 0) == repetition_code(F2, 5)
    assert power(C, 1) == C
    with pytest.raises(ValueError):
        power(C, -1)


def test_binary_square_contains_code():
    rng = random.Random(4)
    for _ in range(40):
        C = random_code(rng, 2, rng.randint(1, 7), rng.randint(1, 4))
        assert C <= power(C, 2)


def test_power_of_power():
    rng = random.Random(6)
    for q in (2, 3):
        for _ in range(10):
            C = random_code(rng, q, rng.randint(2, 6), 2)
            assert power(power(C, 2), 2) == power(C, 4)
            assert power(power(C, 2), 3) == power(C, 6)


def test_power_params_repetition(F2):
    table = power_params(repetition_code(F2, 5), 4)
    assert [(k, d) for _, k, d in table.rows] == [(1, 5)] * 4


def test_power_params_rs(rs72):
    table = power_params(rs72, 3)
    assert table.rows == [(1, 2, 6), (2, 3, 5), (3, 4, 4)]
    assert "t\tdim\tdmin" in table.format()


def test_power_params_truncates_at_cap(F2):
    from schurcodes.code import cap_override

    C = code_from_rows(F2, 8, [[1, 1, 0, 0, 1, 0, 1, 1], [0, 1, 1, 1, 0, 1, 0, 1], [1, 0, 1, 0, 1, 1, 1, 0]])
    with cap_override(2**3):
        table = power_params(C, 3)
    # dim 3 fits under the cap, the dim-4 square does not
    assert table.truncated and table.rows == [(1, 3, table.rows[0][2])]


def test_power_params_zero_code(F2):
    with pytest.raises(ZeroCode):
        power_params(zero_code(F2, 3), 2)


@settings(max_examples=60, deadline=None)
@given(small_codes(n_max=8, k_max=4), st.integers(1, 3))
def test_monotonicity(C, t):
    if C.k == 0:
        return
    P, Q = power(C, t), power(C, t + 1)
    assert Q.k >= P.k
    assert min_distance(Q) <= min_distance(P)


@settings(max_examples=40, deadline=None)
@given(small_codes(k_max=3), st.integers(1, 3))
def test_support_lemma(C, t):
    supp = support(C)
    for w in codeword_iter(power(C, t)):
        assert {i for i, x in enumerate(w) if x} <= supp


@settings(max_examples=40, deadline=None)
@given(small_codes(), small_codes())
def test_commutative(C, D):
    if C.n != D.n or C.field != D.field:
        return
    assert schur_span(C, D) == schur_span(D, C)


def test_monotone_in_each_argument():
    rng = random.Random(8)
    for _ in range(30):
        q = rng.choice((2, 3))
        n = rng.randint(2, 6)
        C = random_code(rng, q, n, 2)
        bigger = code_from_rows(C.field, n, [*C.rows, [rng.randrange(q) for _ in range(n)]])
        D = random_code(rng, q, n, 2)
        assert schur_span(C, D) <= schur_span(bigger, D)


@pytest.mark.parametrize("t,u", [(1, 1), (1, 2), (2, 2), (0, 3)])
def test_natural_identity(t, u):
    rng = random.Random(t * 10 + u)
    for q in (2, 3):
        for _ in range(10):
            C = random_code(rng, q, rng.randint(2, 6), rng.randint(1, 3))
            assert schur_span(power(C, t), power(C, u)) == power(C, t + u)


def test_all_codes_counts():
    F2, F3 = field_make(2), field_make(3)
    for n in range(1, 6):
        codes = list(all_codes(F2, n))
        assert len(codes) == len(set(codes)) == count_subspaces(n, 2)
    assert len(set(all_codes(F3, 3))) == count_subspaces(3, 3) == 28


def test_census_length_3(F2):
    roots = square_root_census(3)
    parity = code_from_rows(F2, 3, [[1, 1, 0], [0, 1, 1]])
    full = full_code(F2, 3)
    assert len(roots) == 16
    assert roots[parity] == []
    assert set(roots[full]) == {full, parity}
    others = [C for C in roots if C not in (parity, full)]
    assert all(roots[C] == [C] for C in others)


def test_census_is_a_partition():
    roots = square_root_census(4)
    assert sum(len(v) for v in roots.values()) == count_subspaces(4, 2)
    with pytest.raises(TooLarge):
        square_root_census(5)


def test_search_a_t_values():
    assert search_a_t(3, 2, 2) == 1
    for n in range(1, 6):
        assert search_a_t(n, n, 1) == 1
    with pytest.raises(TooLarge):
        search_a_t(7, 2, 2)


def test_search_a_t_matches_direct_scan():
    # oracle: a^<t>(n,d) by brute force over every set of generator rows
    F2 = field_make(2)
    n = 4
    vecs = [v for v in itertools.product(range(2), repeat=n) if any(v)]
    for t in (1, 2):
        for d in range(1, n + 1):
            best = 0
            for k in range(1, n + 1):
                for rows in itertools.combinations(vecs, k):
                    C = code_from_rows(F2, n, rows)
                    if C.k == k and min_distance(power(C, t)) >= d:
                        best = max(best, k)
            assert search_a_t(n, d, t) == best


def test_a_t_decreasing_in_t():
    for n in range(1, 6):
        for d in range(1, n + 1):
            vals = [search_a_t(n, d, t) for t in (1, 2, 3)]
            assert vals[0] >= vals[1] >= vals[2]
