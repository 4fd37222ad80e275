"""Linear codes stored by their reduced row-echelon generator matrix."""

from __future__ import annotations

import contextlib
import itertools
from fractions import Fraction
from pathlib import Path
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import FieldMismatch, LengthMismatch, TooLarge, ZeroCode
from .field import FiniteField, parse_field_spec
from .linalg import reduce_vector, rref

DEFAULT_CAP = 1 << 24
_cap = DEFAULT_CAP


def enumeration_cap() -> int:
    return _cap


@contextlib.contextmanager
def cap_override(cap: int) -> Iterator[None]:
    """Temporarily change the codeword-enumeration cap."""
    global _cap
    old, _cap = _cap, cap
    try:
        yield
    finally:
        _cap = old


def set_enumeration_cap(cap: int) -> None:
    global _cap
    _cap = cap


class LinearCode:
    """A linear code of length ``n`` over ``field``.

    Two codes compare equal iff they live over the same field, have the
    same length and identical RREF generator matrices.
    """

    __slots__ = ("field", "n", "rows", "pivots", "_dmin")

    def __init__(self, field: FiniteField, n: int, rows: Sequence[Sequence[int]], pivots: Sequence[int]):
        self.field = field
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self._dmin: int | None = None

    @property
    def k(self) -> int:
        return len(self.rows)

    dim = k

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field.key, self.n, self.rows))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field.spec})"

    def contains(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.n:
            raise LengthMismatch(f"vector of length {len(vec)} vs code length {self.n}")
        return not any(reduce_vector(vec, [list(r) for r in self.rows], self.pivots, self.field))

    def __le__(self, other: LinearCode) -> bool:
        """Subcode test."""
        _check_compatible(self, other)
        return all(other.contains(r) for r in self.rows)

    def __ge__(self, other: LinearCode) -> bool:
        return other <= self

    def prime_basis(self) -> np.ndarray:
        """Basis of the code as an F_p-space, each symbol expanded in gamma coordinates.

        Shape ``(k*r, n*r)``; rows are gamma^l * g_i for generator rows g_i.
        """
        F = self.field
        out = []
        for g in self.rows:
            for b in F.basis:
                out.append([c for x in g for c in F.coords(F.mul(b, x))])
        return np.asarray(out, dtype=np.int64).reshape(len(out), self.n * F.r)


def _check_compatible(a: LinearCode, b: LinearCode) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.spec} vs {b.field.spec}")
    if a.n != b.n:
        raise LengthMismatch(f"lengths {a.n} and {b.n} differ")


def code_from_rows(field: FiniteField, n: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    for row in rows:
        if len(row) != n:
            raise LengthMismatch(f"row of length {len(row)} in a length-{n} code")
    red, pivots = rref([[x % field.order for x in row] for row in rows], field, n) if rows else ([], [])
    return LinearCode(field, n, red, pivots)


def repetition_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, [[1] * n], [0])


def full_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, [[int(i == j) for j in range(n)] for i in range(n)], range(n))


def zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, [], [])


def _check_cap(field: FiniteField, k: int, cap: int | None) -> None:
    cap = _cap if cap is None else cap
    if field.order**k > cap:
        raise TooLarge(f"{field.order}^{k} codewords exceeds cap {cap}")


def min_block_weight_of_basis(basis: np.ndarray, p: int, block: int, cap: int | None = None) -> int:
    """Exhaustive minimum block weight of the F_p-span of independent rows."""
    cap = _cap if cap is None else cap
    if basis.shape[0] == 0:
        raise ZeroCode("minimum distance of the zero code")
    if p ** basis.shape[0] > cap:
        raise TooLarge(f"{p}^{basis.shape[0]} codewords exceeds cap {cap}")
    return kernels.min_block_weight(basis, p, block)


def min_distance(C: LinearCode, cap: int | None = None) -> int:
    """Exact minimum Hamming distance by enumerating all nonzero codewords."""
    if C._dmin is not None:
        return C._dmin
    if C.k == 0:
        raise ZeroCode("minimum distance of the zero code")
    _check_cap(C.field, C.k, cap)
    C._dmin = min_block_weight_of_basis(C.prime_basis(), C.field.p, C.field.r, cap=None if cap is None else cap)
    return C._dmin


class CodeParams(NamedTuple):
    n: int
    k: int
    d: int
    rate: Fraction
    drel: Fraction


def code_params(C: LinearCode, cap: int | None = None) -> CodeParams:
    d = min_distance(C, cap)
    return CodeParams(C.n, C.k, d, Fraction(C.k, C.n), Fraction(d, C.n))


def codeword_iter(C: LinearCode, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    F = C.field
    _check_cap(F, C.k, cap)
    rows = C.rows
    for coeffs in itertools.product(F.elements(), repeat=C.k):
        word = [0] * C.n
        for c, row in zip(coeffs, rows):
            if c:
                word = [F.add(w, F.mul(c, x)) for w, x in zip(word, row)]
        yield tuple(word)


# -- text format ----------------------------------------------------------


def format_code(C: LinearCode) -> str:
    lines = [C.field.spec, f"{C.n} {C.k}"]
    lines += [" ".join(str(x) for x in row) for row in C.rows]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) < 2:
        raise ValueError("code file needs a field line and an 'n k' line")
    F = parse_field_spec(lines[0])
    n, k = (int(v) for v in lines[1].split())
    rows = [[int(v) for v in ln.split()] for ln in lines[2 : 2 + k]]
    if len(rows) != k:
        raise ValueError(f"expected {k} generator rows, found {len(rows)}")
    return code_from_rows(F, n, rows)


def write_code(C: LinearCode, path: str | Path) -> None:
    Path(path).write_text(format_code(C))


def read_code(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text())
