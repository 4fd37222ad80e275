"""Genus-0 evaluation codes C(m*P_inf, P_1 + ... + P_n) (Reed-Solomon codes)."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .bilinear import build_scheme
from .code import LinearCode, code_from_rows, min_distance
from .concat import concat_build, verify_sympa
from .errors import BadSpec, HypothesisViolated, TooLarge
from .field import FiniteField, parse_field_spec
from .products import power
from .report import Report


@dataclass(frozen=True)
class EvalCodeSpec:
    field: FiniteField
    points: tuple[int, ...]
    m: int
    genus: int = 0

    @property
    def n(self) -> int:
        return len(self.points)

    def validate(self) -> None:
        if not self.points:
            raise BadSpec("no evaluation points")
        if len(set(self.points)) != len(self.points):
            raise BadSpec("evaluation points must be distinct")
        if any(not 0 <= x < self.field.order for x in self.points):
            raise BadSpec("evaluation point outside the field")
        if self.m < 0:
            raise BadSpec("pole order must be nonnegative")
        if self.genus != 0:
            raise BadSpec("only genus-0 evaluation codes are implemented")

    def with_m(self, m: int) -> EvalCodeSpec:
        return replace(self, m=m)

    @property
    def text(self) -> str:
        F = self.field
        if self.points == tuple(F.nonzero()):
            pts = "all-nonzero"
        else:
            pts = ",".join(map(str, self.points))
        return f"{F.spec};points={pts};m={self.m}"


def first_points(F: FiniteField, n: int) -> tuple[int, ...]:
    """The first n nonzero elements by encoding; all of F when n = |F|."""
    if n == F.order:
        return tuple(F.elements())
    if not 1 <= n < F.order:
        raise BadSpec(f"cannot pick {n} distinct points in {F.spec}")
    return tuple(range(1, n + 1))


def parse_eval_spec(text: str) -> EvalCodeSpec:
    """Parse ``"field;points=all-nonzero|e1,e2,...;m=<int>"``."""
    parts = [p.strip() for p in text.split(";")]
    F = parse_field_spec(parts[0])
    opts = dict(p.split("=", 1) for p in parts[1:] if p)
    pts = opts.get("points", "all-nonzero")
    points = tuple(F.nonzero()) if pts == "all-nonzero" else tuple(int(v) for v in pts.split(","))
    try:
        m = int(opts["m"])
    except KeyError:
        raise BadSpec("missing m=") from None
    spec = EvalCodeSpec(F, points, m)
    spec.validate()
    return spec


def eval_code(spec: EvalCodeSpec) -> LinearCode:
    """Image of L(m P_inf) = polynomials of degree <= m under evaluation at the points."""
    spec.validate()
    F = spec.field
    top = min(spec.m, spec.n - 1)
    rows = [[F.pow(x, e) for x in spec.points] for e in range(top + 1)]
    return code_from_rows(F, spec.n, rows)


def goppa_check(spec: EvalCodeSpec, cap: int | None = None) -> Report:
    g, m, n = spec.genus, spec.m, spec.n
    if not g <= m < n:
        raise BadSpec(f"need g <= m < n, got g={g}, m={m}, n={n}")
    C = eval_code(spec)
    rep = Report(f"goppa {spec.text}")
    rep.set("dim", C.k)
    rep.set("dim_bound", m + 1 - g)
    rep.check("dim", C.k >= m + 1 - g)
    try:
        d = min_distance(C, cap)
    except TooLarge:
        d = None
    rep.set("dmin", d)
    rep.set("dmin_bound", n - m)
    rep.check("dmin", None if d is None else d >= n - m)
    rep.check("mds", None if d is None else d == n - C.k + 1)
    return rep


def power_inclusion_check(spec: EvalCodeSpec, t: int) -> bool:
    """C(D,G)^<t> is contained in C(tD,G)."""
    C = eval_code(spec)
    return power(C, t) <= eval_code(spec.with_m(t * spec.m))


def construction_finie(q: int, s: int, spec: EvalCodeSpec, cap: int | None = None) -> Report:
    """Concatenate the evaluation code with the (q, s) scheme and check the four bounds."""
    g, m, n = spec.genus, spec.m, spec.n
    t_star = 1 + q**s
    if not n > t_star * g:
        raise HypothesisViolated(f"n={n} must exceed (1+q^s)g={t_star * g}")
    if not (g <= m and t_star * m < n):
        raise HypothesisViolated(f"need g <= m < n/(1+q^s) = {n}/{t_star}, got m={m}")
    if (spec.field.p, spec.field.r) != (q, 2 * s + 1):
        raise BadSpec(f"outer field {spec.field.spec} is not F_{q}^{2 * s + 1}")
    S = build_scheme(q, s, spec.field.modulus)
    outer = eval_code(spec)
    code = concat_build(S, outer)
    N = S.K * n
    rep = verify_sympa(S, outer, cap)
    rep.title = f"construction q={q} s={s} {spec.text}"
    bound_dim = (2 * s + 1) * (m + 1 - g)
    bound_dd = n - t_star * m
    bound_rate = Fraction(m + 1 - g, (s + 1) * n)
    bound_ddrel = (1 - Fraction(t_star * m, n)) / S.K
    rep.set("bound_i_dim", bound_dim)
    rep.set("bound_ii_ddmin", bound_dd)
    rep.set("bound_iii_rate", bound_rate)
    rep.set("bound_iv_ddrel", bound_ddrel)
    rep.set("rate", Fraction(code.k, N))
    d_sq = rep.values["d_square"]
    rep.check("finie_i", code.k >= bound_dim)
    rep.check("finie_ii", None if d_sq is None else d_sq >= bound_dd)
    rep.check("finie_iii", Fraction(code.k, N) >= bound_rate)
    rep.check("finie_iv", None if d_sq is None else Fraction(d_sq, N) >= bound_ddrel)
    return rep
