"""Symmetric bilinear forms on F_{q^r} and the change of basis theta.

Forms are stored as symmetric Gram matrices over F_q in the power basis
gamma^0..gamma^(r-1).  The coordinate vector of a form is the upper
triangle of its Gram matrix read row by row, so the space of forms (and
dually the symmetric square of F_{q^r}) is F_q^(r(r+1)/2).

For odd r = 2s+1 a :class:`ConcatScheme` bundles the inner map
phi = (t_{a_1}, ..., t_{a_K}), K = (s+1)(2s+1), whose componentwise
square Phi spans the same space as Psi = (m_0, ..., m_s), together with
the invertible matrix theta taking Phi-coordinates to the trace
coordinates of Psi.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import CapExceeded, FieldMismatch, LengthMismatch, SingularGram
from .field import FieldElement, FiniteField, field_make
from .linalg import mat_vec, matrix_inverse, nullspace, rank

MAX_SCHEME_DIM = 300
EXHAUSTIVE_PAIRS = 1 << 16
SAMPLE_PAIRS = 10_000


@dataclass(frozen=True)
class LinearForm:
    """An F_q-linear form on F_{q^r}, stored as (lambda(gamma_1), ..., lambda(gamma_r))."""

    field: FiniteField
    coeffs: tuple[int, ...]

    def __call__(self, x: int) -> int:
        p = self.field.p
        return sum(c * u for c, u in zip(self.coeffs, self.field.coords(x))) % p

    def __add__(self, other: LinearForm) -> LinearForm:
        p = self.field.p
        return LinearForm(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))


@dataclass(frozen=True)
class SymBilinearForm:
    field: FiniteField
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        g = self.gram
        if any(g[i][j] != g[j][i] for i in range(len(g)) for j in range(i)):
            raise ValueError("Gram matrix is not symmetric")

    def __call__(self, x: int, y: int) -> int:
        F = self.field
        u, v = F.coords(x), F.coords(y)
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                total += ui * sum(a * b for a, b in zip(row, v))
        return total % F.p

    def vector(self) -> list[int]:
        r = len(self.gram)
        return [self.gram[i][j] for i in range(r) for j in range(i, r)]

    def __add__(self, other: SymBilinearForm) -> SymBilinearForm:
        p = self.field.p
        return SymBilinearForm(
            self.field,
            tuple(tuple((a + b) % p for a, b in zip(ra, rb)) for ra, rb in zip(self.gram, other.gram)),
        )

    def __sub__(self, other: SymBilinearForm) -> SymBilinearForm:
        p = self.field.p
        return SymBilinearForm(
            self.field,
            tuple(tuple((a - b) % p for a, b in zip(ra, rb)) for ra, rb in zip(self.gram, other.gram)),
        )


def form_from_function(F: FiniteField, fn: Callable[[int, int], int]) -> SymBilinearForm:
    """Gram matrix of a symmetric F_q-bilinear, F_q-valued function."""
    b = F.basis
    return SymBilinearForm(F, tuple(tuple(fn(x, y) % F.p for y in b) for x in b))


def form_from_vector(F: FiniteField, vec: Sequence[int]) -> SymBilinearForm:
    r = F.r
    gram = [[0] * r for _ in range(r)]
    it = iter(vec)
    for i in range(r):
        for j in range(i, r):
            gram[i][j] = gram[j][i] = next(it) % F.p
    return SymBilinearForm(F, tuple(tuple(row) for row in gram))


def trace_form(a: FieldElement | int, F: FiniteField | None = None) -> LinearForm:
    """t_a : x -> Tr(a x)."""
    if isinstance(a, FieldElement):
        F, a = a.field, a.value
    assert F is not None
    return LinearForm(F, tuple(F.trace(F.mul(a, g)) for g in F.basis))


def tensor_square(lam: LinearForm) -> SymBilinearForm:
    """lambda (x) lambda : (u, v) -> lambda(u) lambda(v)."""
    c, p = lam.coeffs, lam.field.p
    return SymBilinearForm(lam.field, tuple(tuple((a * b) % p for b in c) for a in c))


def sym_basis_check(forms: Sequence[SymBilinearForm]) -> tuple[bool, int]:
    """Rank of the forms in the space of symmetric bilinear forms, and whether they are a basis."""
    if not forms:
        return False, 0
    F = forms[0].field
    if any(f.field != F for f in forms):
        raise FieldMismatch("forms live on different fields")
    dim = F.r * (F.r + 1) // 2
    rk = rank([f.vector() for f in forms], F.prime_field, dim)
    return rk == len(forms) == dim, rk


# -- twisted multiplications --------------------------------------------


def _mj(F: FiniteField, j: int, x: int, y: int) -> int:
    if j == 0:
        return F.mul(x, y)
    return F.add(F.mul(x, F.frob(y, j)), F.mul(F.frob(x, j), y))


def twisted_mul(j: int, x: FieldElement, y: FieldElement) -> FieldElement:
    """m_0(x, y) = xy and m_j(x, y) = x y^(q^j) + x^(q^j) y."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if x.field != y.field:
        raise FieldMismatch(f"{x.field.spec} vs {y.field.spec}")
    return FieldElement(x.field, _mj(x.field, j, x.value, y.value))


def psi(F: FiniteField, s: int, x: int, y: int) -> tuple[int, ...]:
    return tuple(_mj(F, j, x, y) for j in range(s + 1))


def twisted_family(F: FiniteField, s: int) -> list[SymBilinearForm]:
    """(t_{gamma_i} o m_j), ordered j-major then i."""
    out = []
    for j in range(s + 1):
        for g in F.basis:
            out.append(form_from_function(F, lambda x, y, g=g, j=j: F.trace(F.mul(g, _mj(F, j, x, y)))))
    return out


# -- the inner map phi ----------------------------------------------------


def phi_parameters(F: FiniteField) -> list[int]:
    """a_k with phi_k = t_{a_k}: singles gamma_i, then gamma_i + gamma_j for i < j lexicographically."""
    b = F.basis
    pairs = [F.add(b[i], b[j]) for i in range(F.r) for j in range(i + 1, F.r)]
    return list(b) + pairs


def phi_generator_matrix(F: FiniteField) -> list[list[int]]:
    """r x K matrix over F_q whose row l is phi(delta_l).

    With x = sum u_l delta_l (u_l = Tr(gamma_l x)), phi(x) = u . G, so the
    columns are the unit vectors followed by all e_i + e_j.
    """
    params = phi_parameters(F)
    return [[F.trace(F.mul(a, d)) for a in params] for d in F.dual_basis]


@dataclass(frozen=True)
class ConcatScheme:
    q: int
    s: int
    field: FiniteField
    phi_params: tuple[int, ...]
    gphi: tuple[tuple[int, ...], ...]
    theta: tuple[tuple[int, ...], ...]
    theta_inv: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return 2 * self.s + 1

    @property
    def K(self) -> int:
        return (self.s + 1) * (2 * self.s + 1)

    def phi_forms(self) -> list[LinearForm]:
        return [trace_form(a, self.field) for a in self.phi_params]


def build_scheme(q: int, s: int, modulus: Sequence[int] | None = None) -> ConcatScheme:
    r = 2 * s + 1
    K = (s + 1) * r
    if s < 0:
        raise ValueError("s must be nonnegative")
    if r * math.log2(q) > 24 or K > MAX_SCHEME_DIM:
        raise CapExceeded(f"scheme q={q}, s={s} beyond the linear-algebra caps")
    F = field_make(q, r, modulus)
    Fp = F.prime_field
    params = phi_parameters(F)
    first = [tensor_square(trace_form(a, F)).vector() for a in params]
    second = [f.vector() for f in twisted_family(F, s)]
    # columns of M are the Phi basis vectors
    M = [list(col) for col in zip(*first)]
    M_inv = matrix_inverse(M, Fp)
    if M_inv is None:
        raise SingularGram("phi_k^2 family is not a basis")
    theta = [mat_vec(M_inv, v, Fp) for v in second]
    theta_inv = matrix_inverse(theta, Fp)
    if theta_inv is None:
        raise SingularGram("theta is not invertible")
    return ConcatScheme(
        q=q,
        s=s,
        field=F,
        phi_params=tuple(params),
        gphi=tuple(tuple(row) for row in phi_generator_matrix(F)),
        theta=tuple(tuple(row) for row in theta),
        theta_inv=tuple(tuple(row) for row in theta_inv),
    )


def apply_phi(S: ConcatScheme, x: FieldElement | int) -> list[int]:
    if isinstance(x, FieldElement):
        if x.field != S.field:
            raise FieldMismatch(f"{x.field.spec} vs {S.field.spec}")
        x = x.value
    F = S.field
    return [F.trace(F.mul(a, x)) for a in S.phi_params]


def apply_Phi(S: ConcatScheme, x: int, y: int) -> list[int]:
    p = S.q
    return [(u * v) % p for u, v in zip(apply_phi(S, x), apply_phi(S, y))]


def apply_theta(S: ConcatScheme, v: Sequence[int]) -> tuple[int, ...]:
    """theta(v) as the tuple of s+1 field elements (encodings)."""
    if len(v) != S.K:
        raise LengthMismatch(f"expected {S.K} coordinates, got {len(v)}")
    F = S.field
    z = mat_vec([list(r) for r in S.theta], list(v), F.prime_field)
    r = S.r
    return tuple(F.from_trace_coords(z[j * r : (j + 1) * r]) for j in range(S.s + 1))


def apply_theta_inverse(S: ConcatScheme, elems: Sequence[int]) -> list[int]:
    if len(elems) != S.s + 1:
        raise LengthMismatch(f"expected {S.s + 1} field elements")
    F = S.field
    z = [c for e in elems for c in F.trace_coords(e)]
    return mat_vec([list(r) for r in S.theta_inv], z, F.prime_field)


def theta_is_invertible(S: ConcatScheme) -> bool:
    return matrix_inverse([list(r) for r in S.theta], S.field.prime_field) is not None


def iter_pairs(F: FiniteField, seed: int = 0) -> Iterator[tuple[int, int]]:
    """All pairs when there are at most EXHAUSTIVE_PAIRS of them, else a seeded sample."""
    if F.order**2 <= EXHAUSTIVE_PAIRS:
        for x in F.elements():
            for y in F.elements():
                yield x, y
    else:
        rng = random.Random(seed)
        for _ in range(SAMPLE_PAIRS):
            yield rng.randrange(F.order), rng.randrange(F.order)


def check_theta_phi_psi(S: ConcatScheme, seed: int = 0) -> bool:
    """theta(Phi(x, y)) == Psi(x, y) over all (or sampled) pairs."""
    F = S.field
    phis = {}
    for x, y in iter_pairs(F, seed):
        for e in (x, y):
            if e not in phis:
                phis[e] = apply_phi(S, e)
        v = [(a * b) % S.q for a, b in zip(phis[x], phis[y])]
        if apply_theta(S, v) != psi(F, S.s, x, y):
            return False
    return True


def even_case_rank(q: int, s: int) -> int:
    """Rank of {t_{gamma_i} o m_j : j < s} together with subfield-trace coordinates of m_s on F_{q^2s}."""
    if s < 1:
        raise ValueError("s must be at least 1")
    r = 2 * s
    if r * math.log2(q) > 24:
        raise CapExceeded(f"F_{q}^{r} beyond caps")
    F = field_make(q, r)
    Fp = F.prime_field
    forms = []
    for j in range(s):
        for g in F.basis:
            forms.append(form_from_function(F, lambda x, y, g=g, j=j: F.trace(F.mul(g, _mj(F, j, x, y)))))
    for beta in subfield_basis(F, s):
        forms.append(
            form_from_function(F, lambda x, y, b=beta: _subfield_trace(F, s, F.mul(b, _mj(F, s, x, y))))
        )
    return rank([f.vector() for f in forms], Fp, r * (r + 1) // 2)


def subfield_basis(F: FiniteField, s: int) -> list[int]:
    """F_q-basis of the subfield F_{q^s} = {z : z^(q^s) = z} of F."""
    Fp = F.prime_field
    # matrix of z -> z^(q^s) - z in gamma coordinates (columns are images of gamma_l)
    cols = [F.coords(F.sub(F.frob(g, s), g)) for g in F.basis]
    A = [list(row) for row in zip(*cols)]
    return [F.from_coords(v) for v in nullspace(A, Fp, F.r)]


def _subfield_trace(F: FiniteField, s: int, z: int) -> int:
    total, x = 0, z
    for _ in range(s):
        total = F.add(total, x)
        x = F.frob(x)
    assert total < F.p, "subfield trace left the prime field"
    return total


def even_case_check(q: int, s: int, seed: int = 0) -> bool:
    F = field_make(q, 2 * s)
    for x, y in iter_pairs(F, seed):
        m = _mj(F, s, x, y)
        if F.frob(m, s) != m:
            return False
    return even_case_rank(q, s) == s * (2 * s + 1)


# -- text dump ------------------------------------------------------------


def format_scheme(S: ConcatScheme) -> str:
    lines = [f"field {S.field.spec}", f"s {S.s}", f"gphi {len(S.gphi)} {S.K}"]
    lines += [" ".join(map(str, row)) for row in S.gphi]
    lines.append(f"theta {S.K} {S.K}")
    lines += [" ".join(map(str, row)) for row in S.theta]
    return "\n".join(lines) + "\n"
