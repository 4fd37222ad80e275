from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcodes import kernels


def brute_block_weight(B, p, block):
    k, n = B.shape
    best = None
    for c in itertools.product(range(p), repeat=k):
        if not any(c):
            continue
        w = (np.asarray(c) @ B) % p
        wt = int((w.reshape(-1, block) != 0).any(axis=1).sum())
        best = wt if best is None else min(best, wt)
    return best


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_kernels_match_brute_force(data):
    p = data.draw(st.sampled_from([2, 3, 5]))
    block = data.draw(st.integers(1, 4))
    k = data.draw(st.integers(1, 5 if p == 2 else 3))
    nblocks = data.draw(st.integers(1, 6))
    entries = data.draw(st.lists(st.integers(0, p - 1), min_size=k * nblocks * block, max_size=k * nblocks * block))
    B = np.asarray(entries).reshape(k, nblocks * block)
    want = brute_block_weight(B, p, block)
    for be in kernels.available_backends():
        assert kernels.min_block_weight(B, p, block, stop=0, backend=be) == want


def test_wide_binary_rows_span_several_words(backend):
    rng = np.random.default_rng(7)
    B = rng.integers(0, 2, (8, 150))
    assert kernels.min_block_weight(B, 2, 1, stop=0, backend=backend) == brute_block_weight(B, 2, 1)
    assert kernels.min_block_weight(B, 2, 5, stop=0, backend=backend) == brute_block_weight(B, 2, 5)


def test_large_block_uses_generic_path(backend):
    B = np.zeros((2, 140), dtype=int)
    B[0, 0] = 1
    B[1, 100] = 1
    assert kernels.min_block_weight(B, 2, 70, stop=0, backend=backend) == 1


def test_repetition_weight(backend):
    assert kernels.min_block_weight([[1] * 9], 2, 1, backend=backend) == 9
    assert kernels.min_block_weight([[1] * 6], 2, 3, backend=backend) == 2


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.min_block_weight([[1]], 2, backend="fortran")


def test_backend_flag_is_consistent():
    assert kernels.BACKEND in kernels.available_backends()
