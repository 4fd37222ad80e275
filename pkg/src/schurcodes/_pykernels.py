"""Pure-numpy fallback for the enumeration kernels.

Enumerates codewords in chunks: a table of all combinations of the low
rows is built once, then shifted by each combination of the high rows.
"""

from __future__ import annotations

import itertools

import numpy as np

_CHUNK = 1 << 16


def _all_combinations(rows: np.ndarray, p: int) -> np.ndarray:
    table = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for row in rows:
        table = np.concatenate([(table + c * row) % p for c in range(p)])
    return table


def min_block_weight(basis: np.ndarray, p: int, block: int, stop: int = 1) -> int:
    k, length = basis.shape
    nblocks = length // block
    low = 0
    while low < k and p ** (low + 1) <= _CHUNK:
        low += 1
    low_rows = basis[:low].astype(np.int64)
    high_rows = basis[low:].astype(np.int64)
    table = _all_combinations(low_rows, p)
    best = None
    for combo in itertools.product(range(p), repeat=k - low):
        offset = (np.asarray(combo, dtype=np.int64) @ high_rows) % p if combo else 0
        words = (table + offset) % p
        nz = (words.reshape(len(words), nblocks, block) != 0).any(axis=2).sum(axis=1)
        if not any(combo):
            nz = nz[1:]
        if nz.size:
            w = int(nz.min())
            if best is None or w < best:
                best = w
                if best <= stop:
                    break
    return best if best is not None else 1 << 30
