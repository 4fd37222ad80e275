from __future__ import annotations

import itertools
import random

import pytest

from schurcodes.bilinear import (
    SymBilinearForm,
    apply_Phi,
    apply_phi,
    apply_theta,
    apply_theta_inverse,
    build_scheme,
    check_theta_phi_psi,
    even_case_check,
    even_case_rank,
    form_from_function,
    form_from_vector,
    format_scheme,
    phi_generator_matrix,
    phi_parameters,
    psi,
    subfield_basis,
    sym_basis_check,
    tensor_square,
    theta_is_invertible,
    trace_form,
    twisted_family,
    twisted_mul,
)
from schurcodes.errors import CapExceeded, FieldMismatch, LengthMismatch
from schurcodes.field import FieldElement, field_make
from schurcodes.verify import GPHI_R4


def test_trace_forms_are_injective_in_a(F8):
    forms = {trace_form(a, F8).coeffs for a in F8.elements()}
    assert len(forms) == 8
    assert trace_form(0, F8).coeffs == (0, 0, 0)


def test_trace_form_matches_definition(F8):
    for a in F8.elements():
        t = trace_form(FieldElement(F8, a))
        for x in F8.elements():
            assert t(x) == F8.trace(F8.mul(a, x))


def test_tensor_square_cross_term():
    # over F_2, (l+m)^2 - l^2 - m^2 is the symmetrized product l(x)m(y) + m(x)l(y)
    F = field_make(2, 4)
    rng = random.Random(3)
    for _ in range(20):
        a, b = rng.randrange(16), rng.randrange(16)
        la, lb = trace_form(a, F), trace_form(b, F)
        cross = tensor_square(la + lb) - tensor_square(la) - tensor_square(lb)
        for x, y in itertools.product(F.elements(), repeat=2):
            assert cross(x, y) == (la(x) * lb(y) + lb(x) * la(y)) % 2


def test_form_vector_roundtrip(F8):
    rng = random.Random(0)
    for _ in range(10):
        vec = [rng.randrange(2) for _ in range(6)]
        assert form_from_vector(F8, vec).vector() == vec


def test_asymmetric_gram_rejected(F8):
    with pytest.raises(ValueError):
        SymBilinearForm(F8, ((0, 1, 0), (0, 0, 0), (0, 0, 0)))


def test_gram_change_of_basis():
    # evaluating a random form through its Gram matrix agrees with the dual-basis expansion
    F = field_make(3, 3)
    rng = random.Random(12)
    for _ in range(5):
        B = form_from_vector(F, [rng.randrange(3) for _ in range(6)])
        gram_dual = [[B(d1, d2) for d2 in F.dual_basis] for d1 in F.dual_basis]
        for _ in range(30):
            x, y = rng.randrange(27), rng.randrange(27)
            u = [F.trace(F.mul(g, x)) for g in F.basis]
            v = [F.trace(F.mul(g, y)) for g in F.basis]
            direct = sum(u[i] * gram_dual[i][j] * v[j] for i in range(3) for j in range(3)) % 3
            assert direct == B(x, y)


def test_sym_basis_check_examples(F8):
    singles = [tensor_square(trace_form(a, F8)) for a in phi_parameters(F8)]
    assert sym_basis_check(singles) == (True, 6)
    assert sym_basis_check(singles[:5]) == (False, 5)
    assert sym_basis_check(singles + singles[:1]) == (False, 6)
    assert sym_basis_check([]) == (False, 0)
    with pytest.raises(FieldMismatch):
        sym_basis_check([singles[0], tensor_square(trace_form(1, field_make(2, 5)))])


def test_twisted_mul_properties():
    F = field_make(2, 5)
    rng = random.Random(7)
    for _ in range(50):
        x, y, z = (FieldElement(F, rng.randrange(32)) for _ in range(3))
        assert twisted_mul(0, x, y) == x * y
        for j in (1, 2):
            assert twisted_mul(j, x, y) == twisted_mul(j, y, x)
            lhs = twisted_mul(j, x + z, y)
            assert lhs == twisted_mul(j, x, y) + twisted_mul(j, z, y)
            c = FieldElement(F, 1)
            assert twisted_mul(j, c, c) == FieldElement(F, 0)  # 1 + 1 in characteristic 2
    with pytest.raises(ValueError):
        twisted_mul(-1, x, y)
    with pytest.raises(FieldMismatch):
        twisted_mul(0, x, FieldElement(field_make(2, 3), 1))


def test_twisted_family_is_a_basis_odd_degree():
    for q, s in [(2, 1), (3, 1), (2, 2)]:
        F = field_make(q, 2 * s + 1)
        ok, rk = sym_basis_check(twisted_family(F, s))
        assert ok and rk == (s + 1) * (2 * s + 1)


def test_trace_identity_f8():
    # over F_8: Tr(ax)Tr(ay) = Tr(a^2 xy) + Tr(a^3 m_1(x, y))
    F = field_make(2, 3)
    for a, x, y in itertools.product(F.elements(), repeat=3):
        lhs = F.trace(F.mul(a, x)) * F.trace(F.mul(a, y)) % 2
        rhs = F.trace(F.mul(F.mul(a, a), F.mul(x, y)))
        m1 = F.add(F.mul(x, F.frob(y)), F.mul(F.frob(x), y))
        rhs ^= F.trace(F.mul(F.pow(a, 3), m1))
        assert lhs == rhs


def test_phi_parameters_order(F8):
    b = F8.basis
    assert phi_parameters(F8) == [b[0], b[1], b[2], b[0] ^ b[1], b[0] ^ b[2], b[1] ^ b[2]]


def test_gphi_r4_matches_reference():
    F = field_make(2, 4)
    assert phi_generator_matrix(F) == [list(r) for r in GPHI_R4]


def test_gphi_rows_are_phi_of_dual_basis():
    F = field_make(3, 3)
    S = build_scheme(3, 1)
    for row, d in zip(S.gphi, F.dual_basis):
        assert list(row) == apply_phi(S, d)


@pytest.mark.parametrize("q,s", [(2, 0), (3, 0), (2, 1), (3, 1), (5, 1), (2, 2)])
def test_scheme_identity(q, s):
    S = build_scheme(q, s)
    assert (S.r, S.K) == (2 * s + 1, (s + 1) * (2 * s + 1))
    assert len(S.theta) == S.K and theta_is_invertible(S)
    assert check_theta_phi_psi(S)


def test_scheme_s0_is_identity_like():
    S = build_scheme(2, 0)
    assert S.K == 1 and S.theta == ((1,),)
    assert apply_theta(S, apply_Phi(S, 1, 1)) == (1,)


def test_apply_phi_is_injective():
    for q, s in [(2, 1), (3, 1), (2, 2)]:
        S = build_scheme(q, s)
        images = {tuple(apply_phi(S, x)) for x in S.field.elements()}
        assert len(images) == S.field.order


def test_theta_roundtrip():
    S = build_scheme(3, 1)
    rng = random.Random(1)
    assert apply_theta(S, [0] * S.K) == (0, 0)
    for _ in range(50):
        v = [rng.randrange(3) for _ in range(S.K)]
        assert apply_theta_inverse(S, apply_theta(S, v)) == v
        e = (rng.randrange(27), rng.randrange(27))
        assert apply_theta(S, apply_theta_inverse(S, e)) == e
    with pytest.raises(LengthMismatch):
        apply_theta(S, [0] * (S.K - 1))
    with pytest.raises(LengthMismatch):
        apply_theta_inverse(S, [0])


def test_theta_phi_psi_pointwise():
    S = build_scheme(2, 1)
    F = S.field
    for x, y in itertools.product(F.elements(), repeat=2):
        assert apply_theta(S, apply_Phi(S, x, y)) == psi(F, 1, x, y)


def test_corrupted_theta_is_detected():
    import dataclasses

    S = build_scheme(2, 1)
    rows = [list(r) for r in S.theta]
    rows[0][0] ^= 1
    bad = dataclasses.replace(S, theta=tuple(tuple(r) for r in rows))
    assert not check_theta_phi_psi(bad)


def test_scheme_caps():
    with pytest.raises(CapExceeded):
        build_scheme(2, 12)


@pytest.mark.parametrize("q,s", [(2, 1), (3, 1), (2, 2)])
def test_even_degree(q, s):
    F = field_make(q, 2 * s)
    sub = subfield_basis(F, s)
    assert len(sub) == s
    for z in sub:
        assert F.frob(z, s) == z
    assert even_case_rank(q, s) == s * (2 * s + 1)
    assert even_case_check(q, s)


def test_form_from_function_of_product_trace(F8):
    B = form_from_function(F8, lambda x, y: F8.trace(F8.mul(x, y)))
    assert [list(r) for r in B.gram] == [list(r) for r in F8.trace_gram]


def test_format_scheme():
    text = format_scheme(build_scheme(2, 1))
    lines = text.splitlines()
    assert lines[:3] == ["field 2^3/11", "s 1", "gphi 3 6"]
    assert lines[6] == "theta 6 6"
    assert len(lines) == 7 + 6
