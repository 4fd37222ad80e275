"""Exact rational bound calculators for the asymptotic construction.

All quantities are :class:`fractions.Fraction`; no floating point is used.
``A`` below always denotes a lower bound on the asymptotic ratio of
rational points to genus for curves over F_{q^(2s+1)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import RegimeInvalid

Rational = Fraction | int


@dataclass(frozen=True)
class AsymptoticRegime:
    q: int
    s: int
    A: Fraction
    mu: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", Fraction(self.A))
        if self.mu is not None:
            object.__setattr__(self, "mu", Fraction(self.mu))

    @property
    def t_star(self) -> int:
        return 1 + self.q**self.s

    def validate(self) -> None:
        if self.A <= self.t_star:
            raise RegimeInvalid(f"A'={self.A} must exceed 1+q^s={self.t_star}")
        if self.mu is not None and not (1 <= self.mu <= self.A / self.t_star):
            raise RegimeInvalid(f"mu={self.mu} outside [1, A'/(1+q^s)]")


def rate_ddrel_bounds(reg: AsymptoticRegime) -> tuple[Fraction, Fraction]:
    """(liminf rate, liminf relative distance of the square) for the code family."""
    reg.validate()
    if reg.mu is None:
        raise RegimeInvalid("mu is required")
    s, A, mu = reg.s, reg.A, reg.mu
    rate = (mu - 1) / ((s + 1) * A)
    ddrel = (1 - reg.t_star * mu / A) / ((s + 1) * (2 * s + 1))
    return rate, ddrel


class AlphaDelta(NamedTuple):
    intercept: Fraction
    slope: Fraction
    delta2: Fraction


def alpha_delta_bounds(q: int, s: int, A: Rational) -> AlphaDelta:
    """alpha_q^<2>(delta) >= intercept - slope*delta and delta_q(2) >= delta2."""
    A = Fraction(A)
    t_star = 1 + q**s
    if A < t_star:
        raise RegimeInvalid(f"A'={A} is below 1+q^s={t_star}")
    intercept = (Fraction(1, t_star) - 1 / A) / (s + 1)
    slope = Fraction(2 * s + 1, t_star)
    delta2 = (1 - t_star / A) / ((s + 1) * (2 * s + 1))
    return AlphaDelta(intercept, slope, delta2)


def gsbb_A_bound(p: int, s: int) -> Fraction:
    """Lower bound on A(p^(2s+1)) from 1/A <= ((p^s-1)^-1 + (p^(s+1)-1)^-1) / 2."""
    a, b = p**s - 1, p ** (s + 1) - 1
    if a <= 0:
        raise RegimeInvalid(f"p^s must exceed 1 (p={p}, s={s})")
    return Fraction(2 * a * b, a + b)


class SearchRow(NamedTuple):
    s: int
    A: Fraction
    valid: bool
    delta2: Fraction


def best_s_search(q: int, s_max: int) -> tuple[list[SearchRow], int]:
    """delta_q(2) lower bound for s = 1..s_max and the maximizing s."""
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    rows = []
    for s in range(1, s_max + 1):
        A = gsbb_A_bound(q, s)
        valid = A > 1 + q**s
        delta2 = alpha_delta_bounds(q, s, A).delta2 if valid else Fraction(0)
        rows.append(SearchRow(s, A, valid, delta2))
    best = max(rows, key=lambda row: (row.delta2, -row.s))
    return rows, best.s


def ag_power_bounds(A: Rational, t: int, delta: Rational = 0) -> tuple[Fraction, Fraction]:
    """Direct evaluation-code bounds over F_q: alpha^<t>(delta) and delta_q(t)."""
    A = Fraction(A)
    return (1 - Fraction(delta)) / t - 1 / A, 1 - t / A


def tau_lower_bound(A: Rational | None = None, q: int | None = None, s_max: int = 16) -> int:
    """Best available lower bound on tau(q).

    2 if some s <= s_max gives a valid regime via the prime-q bound, and
    ceil(A) - 1 from a user-supplied A(q); the larger one wins.
    """
    best = 1
    if A is not None:
        best = max(best, math.ceil(Fraction(A)) - 1)
    if q is not None and any(gsbb_A_bound(q, s) > 1 + q**s for s in range(1, s_max + 1)):
        best = max(best, 2)
    return best


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def format_search(q: int, s_max: int) -> str:
    rows, best = best_s_search(q, s_max)
    lines = ["s\tA_bound\tvalid\tdelta2_bound"]
    for row in rows:
        lines.append(f"{row.s}\t{format_fraction(row.A)}\t{int(row.valid)}\t{format_fraction(row.delta2)}")
    lines.append(f"argmax\t{best}")
    return "\n".join(lines) + "\n"
