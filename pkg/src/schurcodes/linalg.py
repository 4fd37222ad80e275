"""Dense linear algebra over a :class:`~schurcodes.field.FiniteField`.

Matrices are lists of rows of integer element encodings.  Nothing here is
performance critical: the largest systems in the package are a few dozen
rows wide.  GF(2) gets a bit-packed fast path because the census code
calls :func:`rref` tens of thousands of times.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .field import FiniteField

Matrix = list[list[int]]


def _rref_gf2(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, list[int]]:
    packed = [sum(1 << j for j, v in enumerate(row) if v & 1) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        for i in range(r, len(packed)):
            if packed[i] & bit:
                packed[r], packed[i] = packed[i], packed[r]
                break
        else:
            continue
        pr = packed[r]
        for i in range(len(packed)):
            if i != r and packed[i] & bit:
                packed[i] ^= pr
        pivots.append(c)
        r += 1
        if r == len(packed):
            break
    out = [[(packed[i] >> j) & 1 for j in range(ncols)] for i in range(r)]
    return out, pivots


def rref(rows: Sequence[Sequence[int]], F: FiniteField, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if F.order == 2:
        return _rref_gf2(rows, ncols)
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead_inv = F.inv(mat[r][c])
        if lead_inv != 1:
            mat[r] = [F.mul(lead_inv, v) for v in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            f = mat[i][c]
            if i != r and f:
                nf = F.neg(f)
                mat[i] = [F.add(a, F.mul(nf, b)) if b else a for a, b in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[int]], F: FiniteField, ncols: int | None = None) -> int:
    return len(rref(rows, F, ncols)[1])


def reduce_vector(vec: Sequence[int], basis: Matrix, pivots: Sequence[int], F: FiniteField) -> list[int]:
    """Reduce ``vec`` against an RREF basis; the result is zero iff ``vec`` is in the span."""
    v = list(vec)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            nf = F.neg(f)
            v = [F.add(a, F.mul(nf, b)) if b else a for a, b in zip(v, row)]
    return v


def mat_mul(A: Matrix, B: Matrix, F: FiniteField) -> Matrix:
    cols = list(zip(*B))
    out = []
    for row in A:
        new = []
        for col in cols:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            new.append(acc)
        out.append(new)
    return out


def mat_vec(A: Matrix, v: Sequence[int], F: FiniteField) -> list[int]:
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*A)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matrix_inverse(A: Matrix, F: FiniteField) -> Matrix | None:
    """Inverse of a square matrix, or ``None`` when singular."""
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(n))]
    red, pivots = rref(aug, F, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [row[n:] for row in red[:n]]


def nullspace(A: Matrix, F: FiniteField, ncols: int) -> Matrix:
    """Basis of {x : A x = 0}."""
    red, pivots = rref(A, F, ncols) if A else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, c in zip(red, pivots):
            if row[f]:
                x[c] = F.neg(row[f])
        basis.append(x)
    return basis
