"""Arithmetic in prime fields F_p and simple extensions F_{p^r}.

Elements are encoded as integers ``enc(x) = sum(c_i * p**i)`` where
``x = sum(c_i * gamma**i)`` and ``gamma`` is the class of the polynomial
variable modulo the defining polynomial.  All hot paths work on these
integer encodings; :class:`FieldElement` is a thin operator-friendly
wrapper used at API boundaries.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    Reducible,
    SingularGram,
)

MAX_LOG2_ORDER = 24
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p: coefficient lists, constant term first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``b`` over F_p (``b`` nonzero)."""
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _trim(a)
    return a


def poly_from_enc(enc: int, p: int) -> list[int]:
    out = []
    while enc:
        enc, c = divmod(enc, p)
        out.append(c)
    return out


def poly_to_enc(coeffs: Sequence[int], p: int) -> int:
    enc = 0
    for c in reversed(coeffs):
        enc = enc * p + (c % p)
    return enc


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = _trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            divisor = poly_from_enc(low, p) + [0] * d
            divisor = divisor[:d] + [1]
            if not poly_mod(f, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``r`` with the smallest encoding."""
    for enc in range(p**r, 2 * p**r):
        coeffs = poly_from_enc(enc, p)
        if coeffs[-1] == 1 and is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible of degree {r} over F_{p}")


# -- the field ------------------------------------------------------------


class FiniteField:
    """The field F_{p^r} = F_p[x]/(modulus).

    Use :func:`field_make` rather than calling this directly; it validates
    the arguments and caches instances so equal fields are identical.
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.modulus = modulus
        self.order = p**r
        self._mod_enc = poly_to_enc(modulus, p)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        # gamma: class of x; for r == 1 it is the root of the linear modulus
        self.gamma = (-modulus[0]) % p if r == 1 else p
        self.primitive = self._find_primitive()
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    # identity and text form
    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.r, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.r}/{self._mod_enc}"

    def __repr__(self) -> str:
        return f"FiniteField({self.spec})"

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value % self.order)

    # coordinates in the basis 1, gamma, ..., gamma^(r-1)
    def coords(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.r):
            x, c = divmod(x, p)
            out.append(c)
        return out

    def from_coords(self, coeffs: Sequence[int]) -> int:
        return poly_to_enc(list(coeffs), self.p)

    # additive structure
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.r == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, da = divmod(a, p)
            out += ((-da) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: int) -> int:
        """Multiply ``a`` by the prime-field scalar ``c``."""
        c %= self.p
        if c == 0:
            return 0
        if c == 1:
            return a
        if self.r == 1:
            return (c * a) % self.p
        return self.from_coords([(c * d) % self.p for d in self.coords(a)])

    # multiplicative structure
    def _raw_mul(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        if r == 1:
            return (a * b) % p
        if p == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                b >>= 1
                a <<= 1
            m = self._mod_enc
            for shift in range(prod.bit_length() - r - 1, -1, -1):
                if prod >> (shift + r) & 1:
                    prod ^= m << shift
            return prod
        ca, cb = self.coords(a), self.coords(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return poly_to_enc(poly_mod(prod, self.modulus, p), p)

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        factors = _prime_factors(n)
        first = (self.gamma,) if self.gamma > 1 else ()
        for g in itertools.chain(first, range(2, self.order)):
            if all(self._raw_pow(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        g = self.primitive
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    @property
    def gamma_is_primitive(self) -> bool:
        return self.primitive == self.gamma

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frob(self, a: int, j: int = 1) -> int:
        """``a ** (p ** j)``; exponent reduced modulo ``r``."""
        return self.pow(a, self.p ** (j % self.r))

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in ``0..p-1``."""
        total, x = 0, a
        for _ in range(self.r):
            total = self.add(total, x)
            x = self.frob(x)
        assert total < self.p, "trace left the prime field"
        return total

    # bases
    @cached_property
    def basis(self) -> tuple[int, ...]:
        """gamma_i = gamma^(i-1), i.e. the encodings p^i."""
        return tuple(self.p**i for i in range(self.r))

    @cached_property
    def trace_gram(self) -> tuple[tuple[int, ...], ...]:
        b = self.basis
        return tuple(tuple(self.trace(self.mul(x, y)) for y in b) for x in b)

    @cached_property
    def dual_basis(self) -> tuple[int, ...]:
        """delta_j with Tr(gamma_i * delta_j) = [i == j]."""
        from .linalg import matrix_inverse

        prime = self.prime_field
        inv = matrix_inverse([list(row) for row in self.trace_gram], prime)
        if inv is None:
            raise SingularGram(f"trace form degenerate on {self.spec}")
        return tuple(
            self.from_coords([inv[l][j] for l in range(self.r)]) for j in range(self.r)
        )

    @cached_property
    def prime_field(self) -> FiniteField:
        return self if self.r == 1 else field_make(self.p, 1)

    def trace_coords(self, a: int) -> list[int]:
        """(Tr(gamma_i * a))_i: coordinates of ``a`` in the dual basis."""
        return [self.trace(self.mul(g, a)) for g in self.basis]

    def from_trace_coords(self, u: Sequence[int]) -> int:
        x = 0
        for c, d in zip(u, self.dual_basis):
            x = self.add(x, self.scale(c, d))
        return x


@lru_cache(maxsize=None)
def _field_cached(p: int, r: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, r, modulus)


def field_make(q: int, r: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build (or fetch from cache) the field F_{q^r}.

    ``modulus`` is a coefficient list, constant term first.  When omitted
    the monic irreducible with the smallest encoding is used.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if r < 1 or r * math.log2(q) > MAX_LOG2_ORDER:
        raise DegreeOutOfRange(f"F_{q}^{r} outside the supported range")
    if modulus is None:
        mod = smallest_irreducible(q, r) if r > 1 else (0, 1)
    else:
        mod = tuple(_trim([c % q for c in modulus]))
        if len(mod) - 1 != r:
            raise DegreeOutOfRange(f"modulus has degree {len(mod) - 1}, expected {r}")
        if mod[-1] != 1:
            raise Reducible("modulus must be monic")
        if not is_irreducible(mod, q):
            raise Reducible(f"modulus {mod} factors over F_{q}")
    return _field_cached(q, r, mod)


def parse_field_spec(text: str) -> FiniteField:
    """Inverse of :attr:`FiniteField.spec` (``"q^r/modulus-enc"``)."""
    base, _, mod_enc = text.strip().partition("/")
    q_str, _, r_str = base.partition("^")
    q, r = int(q_str), int(r_str or 1)
    modulus = poly_from_enc(int(mod_enc), q) if mod_enc else None
    return field_make(q, r, modulus)


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    def _check(self, other: FieldElement) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.spec} vs {other.field.spec}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"FieldElement({self.field.spec}, {self.value})"

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, j: int = 1) -> FieldElement:
        return FieldElement(self.field, self.field.frob(self.value, j))

    def trace(self) -> FieldElement:
        return FieldElement(self.field.prime_field, self.field.trace(self.value))

    def coords(self) -> list[int]:
        return self.field.coords(self.value)


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def power(x: FieldElement, e: int) -> FieldElement:
    return x**e


def frobenius(x: FieldElement, j: int) -> FieldElement:
    if j < 0:
        raise ValueError("frobenius exponent must be nonnegative")
    return x.frobenius(j)


def trace(x: FieldElement) -> FieldElement:
    return x.trace()


def trace_dual_basis(F: FiniteField) -> list[FieldElement]:
    return [F(d) for d in F.dual_basis]
