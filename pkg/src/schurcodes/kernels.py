"""Backend selection for the exhaustive minimum-weight search.

The compiled Cython module is used when it imports; otherwise (or when
``SCHURCODES_PURE=1`` is set) the numpy fallback runs.  Both return
identical results; :data:`BACKEND` records which one is active.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _pykernels

try:
    if os.environ.get("SCHURCODES_PURE"):
        raise ImportError("pure backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_NO_WORD = 1 << 30


def _pack_gf2(basis: np.ndarray, block: int) -> tuple[np.ndarray, int]:
    k, length = basis.shape
    per_word = 64 // block
    nblocks = length // block
    nwords = max(1, -(-nblocks // per_word))
    packed = np.zeros((k, nwords), dtype=np.uint64)
    for b in range(nblocks):
        w, slot = divmod(b, per_word)
        for off in range(block):
            bit = np.uint64(1) << np.uint64(slot * block + off)
            col = basis[:, b * block + off].astype(bool)
            packed[col, w] |= bit
    startmask = 0
    for slot in range(per_word):
        startmask |= 1 << (slot * block)
    return packed, startmask


def min_block_weight(
    basis: Sequence[Sequence[int]] | np.ndarray,
    p: int,
    block: int = 1,
    *,
    stop: int = 1,
    backend: str | None = None,
) -> int:
    """Minimum number of nonzero length-``block`` blocks over nonzero span elements.

    ``basis`` must have linearly independent rows over F_p (otherwise the
    zero word is hit and 0 is returned).  ``stop`` lets the search end as
    soon as a word that light is seen.
    """
    arr = np.ascontiguousarray(np.asarray(basis, dtype=np.uint8) % p, dtype=np.uint8)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValueError("basis must be a nonempty 2-d array")
    use = backend or BACKEND
    if use == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if p == 2 and block <= 64:
            packed, startmask = _pack_gf2(arr, block)
            w = _ckernels.gf2_min_block_weight(packed, block, startmask, stop)
        else:
            w = _ckernels.gfp_min_block_weight(arr, p, block, stop)
    elif use == "python":
        w = _pykernels.min_block_weight(arr, p, block, stop)
    else:
        raise ValueError(f"unknown backend {use!r}")
    return int(w)


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]
