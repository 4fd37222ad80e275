"""Schur (coordinatewise) products of codes and their powers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .code import (
    LinearCode,
    _check_compatible,
    code_from_rows,
    min_distance,
    repetition_code,
)
from .errors import TooLarge, ZeroCode
from .field import FiniteField, field_make

_SUBSPACE_LIMIT = 50_000


def schur_product(u, v, F: FiniteField) -> list[int]:
    return [F.mul(a, b) for a, b in zip(u, v)]


def schur_span(C: LinearCode, C2: LinearCode) -> LinearCode:
    """Span of all coordinatewise products c * c' with c in C, c' in C2.

    Products of generator rows already span it by bilinearity.
    """
    _check_compatible(C, C2)
    F = C.field
    rows = [schur_product(a, b, F) for a in C.rows for b in C2.rows]
    return code_from_rows(F, C.n, rows)


def power(C: LinearCode, t: int) -> LinearCode:
    """C^<t>, with C^<0> the repetition code."""
    if t < 0:
        raise ValueError("power exponent must be nonnegative")
    P = repetition_code(C.field, C.n)
    for _ in range(t):
        P = schur_span(P, C)
    return P


def support(C: LinearCode) -> set[int]:
    return {i for row in C.rows for i, x in enumerate(row) if x}


@dataclass
class PowerTable:
    rows: list[tuple[int, int, int]] = field(default_factory=list)
    truncated: bool = False

    def format(self) -> str:
        lines = ["t\tdim\tdmin"] + [f"{t}\t{k}\t{d}" for t, k, d in self.rows]
        if self.truncated:
            lines.append("# truncated: next power exceeds the enumeration cap")
        return "\n".join(lines) + "\n"


def power_params(C: LinearCode, t_max: int, cap: int | None = None) -> PowerTable:
    """(t, dim C^<t>, dmin C^<t>) for t = 1..t_max, checking monotonicity."""
    if C.k == 0:
        raise ZeroCode("powers of the zero code have no distance")
    table = PowerTable()
    P = repetition_code(C.field, C.n)
    prev = (1, C.n)
    for t in range(1, t_max + 1):
        P = schur_span(P, C)
        try:
            d = min_distance(P, cap)
        except TooLarge:
            table.truncated = True
            break
        assert P.k >= prev[0] and d <= prev[1], f"monotonicity broken at t={t}"
        prev = (P.k, d)
        table.rows.append((t, P.k, d))
    return table


# -- exhaustive enumeration of small codes --------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def all_codes(F: FiniteField, n: int) -> Iterator[LinearCode]:
    """Every linear code of length n over F, each exactly once (RREF recursion)."""
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pset = set(pivots)
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pset]
            for values in itertools.product(F.elements(), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield LinearCode(F, n, rows, pivots)


def square_root_census(n: int, q: int = 2) -> dict[LinearCode, list[LinearCode]]:
    """For every code of length n, the list of codes whose square it is."""
    if n > 4 or count_subspaces(n, q) > _SUBSPACE_LIMIT:
        raise TooLarge(f"census over length {n}, q={q} is too large")
    F = field_make(q)
    codes = list(all_codes(F, n))
    roots: dict[LinearCode, list[LinearCode]] = {C: [] for C in codes}
    for C0 in codes:
        roots[power(C0, 2)].append(C0)
    return roots


def search_a_t(n: int, d: int, t: int, q: int = 2) -> int:
    """Largest k such that some [n, k] code C has dmin(C^<t>) >= d (0 if none)."""
    if n > 6 or count_subspaces(n, q) > _SUBSPACE_LIMIT:
        raise TooLarge(f"search over length {n}, q={q} is too large")
    F = field_make(q)
    best = 0
    for C in all_codes(F, n):
        if C.k <= best:
            continue
        P = power(C, t)
        if P.k and min_distance(P) >= d:
            best = C.k
    return best


def format_a_t_table(n_max: int, t_max: int, q: int = 2) -> str:
    lines = ["n\td\tt\ta"]
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            for t in range(1, t_max + 1):
                lines.append(f"{n}\t{d}\t{t}\t{search_a_t(n, d, t, q)}")
    return "\n".join(lines) + "\n"
