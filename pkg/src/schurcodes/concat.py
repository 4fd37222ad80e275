"""Componentwise maps of codes and the concatenated code phi(C).

A code over F_{q^r} that is only F_q-linear (such as the span of m_j(C, C)
for j >= 1) is stored as an F_q-code with every symbol written in gamma
coordinates; its alphabet-level distance is a block distance with block
size r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .bilinear import ConcatScheme, _mj, apply_phi, apply_theta
from .code import (
    LinearCode,
    _check_compatible,
    code_from_rows,
    min_block_weight_of_basis,
    min_distance,
)
from .errors import AlphabetMismatch, BadBlock, FieldMismatch, TooLarge, UnsupportedMap
from .field import FiniteField
from .products import power
from .report import Report


def prime_span_rows(C: LinearCode) -> list[list[int]]:
    """An F_q-basis of C as vectors over C's own alphabet: gamma^l * g_i."""
    F = C.field
    return [[F.mul(b, x) for x in g] for g in C.rows for b in F.basis]


def map_code(
    f: Callable[[int], Sequence[int]],
    C: LinearCode,
    alphabet: FiniteField | None = None,
) -> LinearCode:
    """f(C): apply the F_q-linear map f symbolwise; the output is a code over F_q.

    ``f`` maps an element encoding of C's field to a tuple over F_q.
    """
    if alphabet is not None and alphabet != C.field:
        raise AlphabetMismatch(f"map defined on {alphabet.spec}, code over {C.field.spec}")
    Fp = C.field.prime_field
    width = len(f(0))
    rows = [[c for x in row for c in f(x)] for row in prime_span_rows(C)]
    return code_from_rows(Fp, C.n * width, rows)


def expand_code(C: LinearCode) -> LinearCode:
    """C written over F_q with each symbol in gamma coordinates (block size r)."""
    return map_code(C.field.coords, C)


@dataclass(frozen=True)
class BilinearMap:
    """A symmetric F_q-bilinear map on an alphabet, with outputs written over F_q."""

    name: str
    field: FiniteField
    width: int
    fn: Callable[[int, int], Sequence[int]]

    def __call__(self, x: int, y: int) -> Sequence[int]:
        return self.fn(x, y)


def twisted_map(F: FiniteField, j: int) -> BilinearMap:
    return BilinearMap(f"m{j}", F, F.r, lambda x, y: F.coords(_mj(F, j, x, y)))


def Phi_map(S: ConcatScheme) -> BilinearMap:
    q = S.q

    def fn(x: int, y: int) -> list[int]:
        return [(a * b) % q for a, b in zip(apply_phi(S, x), apply_phi(S, y))]

    return BilinearMap("Phi", S.field, S.K, fn)


def Psi_map(S: ConcatScheme) -> BilinearMap:
    F = S.field
    return BilinearMap(
        "Psi", F, S.K, lambda x, y: [c for j in range(S.s + 1) for c in F.coords(_mj(F, j, x, y))]
    )


def resolve_map(name: str, F: FiniteField, scheme: ConcatScheme | None = None) -> BilinearMap:
    if name in ("schur", "*"):
        return twisted_map(F, 0)
    if name.startswith("m") and name[1:].isdigit():
        return twisted_map(F, int(name[1:]))
    if name in ("Phi", "Psi"):
        if scheme is None or scheme.field != F:
            raise UnsupportedMap(f"{name} needs a scheme over {F.spec}")
        return Phi_map(scheme) if name == "Phi" else Psi_map(scheme)
    raise UnsupportedMap(f"unknown bilinear map {name!r}")


def bilinear_span(
    Fmap: BilinearMap | str,
    C: LinearCode,
    C2: LinearCode,
    scheme: ConcatScheme | None = None,
) -> LinearCode:
    """<F(C, C')>: F_q-span of F applied symbolwise to pairs of codewords."""
    _check_compatible(C, C2)
    if isinstance(Fmap, str):
        Fmap = resolve_map(Fmap, C.field, scheme)
    if Fmap.field != C.field:
        raise AlphabetMismatch(f"map on {Fmap.field.spec}, code over {C.field.spec}")
    b1, b2 = prime_span_rows(C), prime_span_rows(C2)
    rows = []
    for u in b1:
        for v in b2:
            rows.append([c for x, y in zip(u, v) for c in Fmap(x, y)])
    return code_from_rows(C.field.prime_field, C.n * Fmap.width, rows)


def block_min_distance(C: LinearCode, block: int, cap: int | None = None) -> int:
    """Minimum number of nonzero length-``block`` blocks over nonzero codewords."""
    if not C.field.is_prime_field:
        raise AlphabetMismatch("block distance is defined for codes over the prime field")
    if block < 1 or C.n % block:
        raise BadBlock(f"block {block} does not divide length {C.n}")
    basis = np.asarray(C.rows, dtype=np.int64).reshape(C.k, C.n)
    return min_block_weight_of_basis(basis, C.field.p, block, cap)


def block_weight(word: Sequence[int], block: int) -> int:
    return sum(any(word[i : i + block]) for i in range(0, len(word), block))


def concat_build(S: ConcatScheme, C: LinearCode) -> LinearCode:
    """phi(C), a code of length (s+1)(2s+1)n over F_q."""
    if C.field != S.field:
        raise FieldMismatch(f"outer code over {C.field.spec}, scheme over {S.field.spec}")
    return map_code(lambda x: apply_phi(S, x), C)


def theta_blockwise(S: ConcatScheme, D: LinearCode) -> LinearCode:
    """Apply theta to every length-K block of a code over F_q; outputs in gamma coordinates."""
    F = S.field
    K = S.K
    if D.n % K:
        raise BadBlock(f"length {D.n} is not a multiple of {K}")
    rows = []
    for row in D.rows:
        out = []
        for i in range(0, D.n, K):
            for e in apply_theta(S, row[i : i + K]):
                out.extend(F.coords(e))
        rows.append(out)
    return code_from_rows(F.prime_field, D.n, rows)


def _try(fn: Callable[[], int]) -> int | None:
    try:
        return fn()
    except TooLarge:
        return None


def verify_sympa(S: ConcatScheme, C: LinearCode, cap: int | None = None) -> Report:
    """Exact parameters of phi(C) and its square next to the bounds they must satisfy."""
    if C.field != S.field:
        raise FieldMismatch(f"outer code over {C.field.spec}, scheme over {S.field.spec}")
    q, s, n, k = S.q, S.s, C.n, C.k
    r, K = S.r, S.K
    t_star = 1 + q**s
    N = K * n
    rep = Report(f"concatenation q={q} s={s} outer=[{n},{k}] over {C.field.spec}")
    rep.set("q", q)
    rep.set("s", s)
    rep.set("n", n)
    rep.set("k", k)
    rep.set("N", N)

    phiC = concat_build(S, C)
    square = power(phiC, 2)
    outer_pow = power(C, t_star)
    rep.set("dim_phiC", phiC.k)
    rep.set("d_phiC", _try(lambda: min_distance(phiC, cap)))
    rep.set("dim_square", square.k)
    rep.set("d_square", _try(lambda: min_distance(square, cap)))
    rep.set("t_star", t_star)
    rep.set("dim_outer_power", outer_pow.k)
    rep.set("d_outer_power", _try(lambda: min_distance(outer_pow, cap)))

    # alphabet-level distances of <m_j(C,C)> and their inclusions in C^<1+q^j>
    d_mj: list[int | None] = []
    inclusions = True
    power_bound = True
    for j in range(s + 1):
        span = bilinear_span(twisted_map(S.field, j), C, C)
        target = power(C, 1 + q**j)
        inclusions &= span <= expand_code(target)
        rep.set(f"dim_m{j}", span.k)
        d = _try(lambda: block_min_distance(span, r, cap)) if span.k else None
        d_mj.append(d)
        rep.set(f"d_m{j}", d)
        dt = _try(lambda: min_distance(target, cap))
        if d is not None and dt is not None:
            power_bound &= d >= dt
    rep.check("m_j_inclusion", inclusions)
    rep.check("m_j_distance_vs_power", power_bound if all(v is not None for v in d_mj) else None)

    rate_phi = Fraction(phiC.k, N)
    rate_outer = Fraction(k, n)
    rep.set("rate_phiC", rate_phi)
    rep.set("rate_outer", rate_outer)
    d_sq = rep.values["d_square"]
    d_op = rep.values["d_outer_power"]
    rep.check("sympa_i", phiC.k == r * k)
    rep.check("sympa_ii", None if d_sq is None or d_op is None else d_sq >= d_op)
    rep.check("sympa_iii", rate_phi == rate_outer / (s + 1))
    if d_sq is not None and d_op is not None:
        rep.set("drel_square", Fraction(d_sq, N))
        rep.set("drel_outer_power_scaled", Fraction(d_op, n) / K)
        rep.check("sympa_iv", Fraction(d_sq, N) >= Fraction(d_op, n) / K)
    else:
        rep.check("sympa_iv", None)

    # Phi(C,C) span equals phi(C)^<2>; theta carries it onto <Psi(C,C)>
    rep.check("Phi_equals_phi_square", bilinear_span(Phi_map(S), C, C) == square)
    psi_span = bilinear_span(Psi_map(S), C, C)
    rep.check("theta_maps_square_onto_Psi", theta_blockwise(S, square) == psi_span)
    if d_sq is not None and all(v is not None for v in d_mj):
        rep.set("min_d_mj", min(d_mj))
        rep.check("inegalite_dmin", d_sq >= min(d_mj))
    else:
        rep.check("inegalite_dmin", None)
    return rep
