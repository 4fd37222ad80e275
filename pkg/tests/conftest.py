from __future__ import annotations

import itertools

import pytest

from schurcodes.bilinear import build_scheme
from schurcodes.code import code_from_rows
from schurcodes.field import field_make
from schurcodes.kernels import available_backends


@pytest.fixture(scope="session")
def F2():
    return field_make(2)


@pytest.fixture(scope="session")
def F8():
    return field_make(2, 3)


@pytest.fixture(scope="session")
def rs72(F8):
    """[7,2] Reed-Solomon code over F_8: evaluations of 1 and x at all nonzero points."""
    return code_from_rows(F8, 7, [[1] * 7, list(range(1, 8))])


@pytest.fixture(scope="session")
def scheme21():
    return build_scheme(2, 1)


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def span_oracle(F, rows):
    """Every F-combination of ``rows``, as a set of tuples (brute force)."""
    n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(F.order), repeat=len(rows)):
        w = [0] * n
        for c, row in zip(coeffs, rows):
            w = [F.add(a, F.mul(c, b)) for a, b in zip(w, row)]
        out.add(tuple(w))
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
