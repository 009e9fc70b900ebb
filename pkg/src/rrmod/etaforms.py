"""Dedekind eta, generalized eta and their quotients as exact q-series.

Every builder takes ``T``, the relative precision: the returned series is
known for exponents ``lead, lead + 1, ..., lead + T - 1`` (argument-scaled
quotients are known at least that far).
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .qseries import PuiseuxSeries


def bernoulli2(t) -> Fraction:
    t = Fraction(t)
    return t * t - t + Fraction(1, 6)


def _freeze(exps) -> tuple[tuple[int, int], ...]:
    items = exps.items() if isinstance(exps, dict) else exps
    return tuple(sorted((int(k), int(v)) for k, v in items if v))


@dataclass(frozen=True)
class EtaQuotient:
    """prod_{delta | N} eta(delta*tau)^r_delta."""

    level: int
    exps: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "exps", _freeze(self.exps))
        if self.level < 1:
            raise ValueError("level must be positive")
        if not self.exps:
            raise ValueError("eta quotient needs at least one nonzero exponent")
        for d, _ in self.exps:
            if d < 1 or self.level % d:
                raise ValueError(f"{d} does not divide the level {self.level}")

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.exps)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exps), 2)

    def leading_exponent(self) -> Fraction:
        return sum((Fraction(d * r, 24) for d, r in self.exps), Fraction(0))

    def at_level(self, N: int) -> "EtaQuotient":
        """The same function viewed at a multiple N of its level."""
        if N % self.level:
            raise ValueError("new level must be a multiple of the old one")
        return EtaQuotient(N, self.exps)

    def to_text(self) -> str:
        body = ", ".join(f"{d}: {r}" for d, r in self.exps)
        return f"eta {self.level}: {{{body}}}"


@dataclass(frozen=True)
class GenEtaQuotient:
    """prod_g eta_{N,g}(scale*tau)^r_g with 1 <= g <= N/2."""

    level: int
    exps: tuple = field(default=())
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "exps", _freeze(self.exps))
        if self.level < 1 or self.scale < 1:
            raise ValueError("level and scale must be positive")
        if not self.exps:
            raise ValueError("generalized eta quotient needs at least one nonzero exponent")
        for g, _ in self.exps:
            if not 1 <= g <= self.level // 2:
                raise ValueError(f"index g={g} outside 1..{self.level // 2}")

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.exps)

    def scaled(self, n: int) -> "GenEtaQuotient":
        return GenEtaQuotient(self.level, self.exps, self.scale * n)

    def leading_exponent(self) -> Fraction:
        N = self.level
        lead = sum((r * N * bernoulli2(Fraction(g, N)) / 2 for g, r in self.exps), Fraction(0))
        return lead * self.scale

    def to_text(self) -> str:
        body = ", ".join(f"{g}: {r}" for g, r in self.exps)
        return f"geneta {self.level} scale {self.scale}: {{{body}}}"


def rab_quotient(a: int, b: int) -> GenEtaQuotient:
    """r(tau)^a r(2tau)^b written on level 10."""
    if a == 0 and b == 0:
        raise ValueError("(a, b) = (0, 0) is excluded")
    return GenEtaQuotient(10, {1: a, 2: b - a, 3: -a, 4: a - b})


L_QUOTIENT = rab_quotient(-2, 1)
K_QUOTIENT = rab_quotient(1, 2)
R_QUOTIENT = GenEtaQuotient(5, {1: 1, 2: -1})
F_QUOTIENT = EtaQuotient(5, {1: 6, 5: -6})


def parse_spec(text: str):
    """Parse 'eta N: {d: r, ...}' or 'geneta N [scale n]: {g: r, ...}'."""
    m = re.fullmatch(r"\s*(eta|geneta)\s+(\d+)(?:\s+scale\s+(\d+))?\s*:\s*(\{.*\})\s*", text)
    if not m:
        raise ValueError(f"malformed quotient spec: {text!r}")
    kind, N, scale, body = m[1], int(m[2]), m[3], m[4]
    try:
        exps = ast.literal_eval(body)
    except (SyntaxError, ValueError) as exc:
        raise ValueError(f"malformed exponent map: {body!r}") from exc
    if not isinstance(exps, dict):
        raise ValueError("exponent map must be a dict")
    if kind == "eta":
        if scale is not None:
            raise ValueError("eta quotients take no scale")
        return EtaQuotient(N, exps)
    return GenEtaQuotient(N, exps, int(scale or 1))


# ---- integer product kernels --------------------------------------------------


def _times_binomial(c: list[int], k: int, mult: int) -> None:
    """In place: c *= (1 - q^k)^mult, truncated to len(c)."""
    T = len(c)
    if k >= T:
        return
    if mult > 0:
        for _ in range(mult):
            for i in range(T - 1, k - 1, -1):
                c[i] -= c[i - k]
    else:
        for _ in range(-mult):
            for i in range(k, T):
                c[i] += c[i - k]


def euler_product(T: int) -> list[int]:
    """prod_{n>=1} (1 - q^n) mod q^T via pentagonal numbers."""
    c = [0] * T
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        p1 = k * (3 * k - 1) // 2
        p2 = k * (3 * k + 1) // 2
        if p1 >= T:
            break
        c[p1] += sign
        if k and p2 < T:
            c[p2] += sign
        k += 1
    return c


def _geneta_product(N: int, exps: dict[int, int], T: int) -> list[int]:
    c = [0] * T
    if T:
        c[0] = 1
    for g, r in exps.items():
        for k in range(1, T):
            res = k % N
            if res == g % N:
                _times_binomial(c, k, r)
            if res == (-g) % N:
                _times_binomial(c, k, r)
    return c


def _eta_product(exps: dict[int, int], T: int) -> list[int]:
    c = [0] * T
    if T:
        c[0] = 1
    for d, r in exps.items():
        for n in range(1, (T - 1) // d + 1):
            _times_binomial(c, d * n, r)
    return c


# ---- series builders ----------------------------------------------------------


def eta_series(T: int) -> PuiseuxSeries:
    if T <= 0:
        raise ValueError("truncation must be positive")
    return PuiseuxSeries.polynomial(euler_product(T), T).shift(Fraction(1, 24))


def gen_eta_series(N: int, g: int, T: int) -> PuiseuxSeries:
    return quotient_series(GenEtaQuotient(N, {g: 1}), T)


def quotient_series(spec, T: int) -> PuiseuxSeries:
    if T <= 0:
        raise ValueError("truncation must be positive")
    if isinstance(spec, EtaQuotient):
        body = _eta_product(spec.exponents, T)
        return PuiseuxSeries.polynomial(body, T).shift(spec.leading_exponent())
    if isinstance(spec, GenEtaQuotient):
        n = spec.scale
        t = -(-T // n)
        body = _geneta_product(spec.level, spec.exponents, t)
        s = PuiseuxSeries.polynomial(body, t).shift(spec.leading_exponent() / n)
        if n > 1:
            s = s.scale_argument(n)
            s = s.truncate(spec.leading_exponent() + T)
        return s
    raise TypeError(f"not a quotient spec: {spec!r}")


def r_series(T: int) -> PuiseuxSeries:
    """Rogers-Ramanujan continued fraction from its product formula."""
    c = [0] * T
    c[0] = 1
    for k in range(1, T):
        res = k % 5
        if res in (1, 4):
            _times_binomial(c, k, 1)
        elif res in (2, 3):
            _times_binomial(c, k, -1)
    return PuiseuxSeries.polynomial(c, T).shift(Fraction(1, 5))


def rab_series(a: int, b: int, T: int) -> PuiseuxSeries:
    return quotient_series(rab_quotient(a, b), T)


def k_series(T: int) -> PuiseuxSeries:
    return quotient_series(K_QUOTIENT, T)


def l_series(T: int) -> PuiseuxSeries:
    return quotient_series(L_QUOTIENT, T)


def f_series(T: int) -> PuiseuxSeries:
    return quotient_series(F_QUOTIENT, T)


def e4_series(T: int) -> PuiseuxSeries:
    """1 + 240 sum n^3 q^n / (1 - q^n)."""
    c = [0] * T
    c[0] = 1
    for n in range(1, T):
        w = 240 * n**3
        for m in range(n, T, n):
            c[m] += w
    return PuiseuxSeries.polynomial(c, T)


def j_series(T: int) -> PuiseuxSeries:
    eta24 = quotient_series(EtaQuotient(1, {1: 24}), T)
    return e4_series(T) ** 3 * eta24.invert()


NAMED_BUILDERS = {
    "r": r_series,
    "k": k_series,
    "l": l_series,
    "f": f_series,
    "j": j_series,
    "eta": eta_series,
}


def named_series(name: str, T: int) -> PuiseuxSeries:
    m = re.fullmatch(r"rab\((-?\d+),\s*(-?\d+)\)", name.strip())
    if m:
        return rab_series(int(m[1]), int(m[2]), T)
    try:
        return NAMED_BUILDERS[name](T)
    except KeyError:
        raise ValueError(f"unknown function {name!r}") from None


# ---- modularity criteria ------------------------------------------------------


@dataclass(frozen=True)
class NewmanReport:
    weight_integral: bool
    cond24_delta: bool
    cond24_codelta: bool

    def __bool__(self):
        return self.weight_integral and self.cond24_delta and self.cond24_codelta


@dataclass(frozen=True)
class YangReport:
    on_GammaN: bool
    on_Gamma1N: bool


def check_newman(spec: EtaQuotient) -> NewmanReport:
    N = spec.level
    return NewmanReport(
        weight_integral=spec.weight.denominator == 1,
        cond24_delta=sum(d * r for d, r in spec.exps) % 24 == 0,
        cond24_codelta=sum((N // d) * r for d, r in spec.exps) % 24 == 0,
    )


def check_yang(spec: GenEtaQuotient) -> YangReport:
    if spec.scale != 1:
        raise ValueError("modularity criteria apply to unscaled quotients only")
    N = spec.level
    on_gn = sum(r for _, r in spec.exps) % 12 == 0 and sum(g * r for g, r in spec.exps) % 2 == 0
    on_g1 = on_gn and sum(g * g * r for g, r in spec.exps) % (2 * N) == 0
    return YangReport(on_GammaN=on_gn, on_Gamma1N=on_g1)

