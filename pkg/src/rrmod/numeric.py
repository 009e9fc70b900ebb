"""Multiprecision evaluation of eta-type products at points of the upper half-plane."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log2

import mpmath
from mpmath import mp

from .etaforms import (
    F_QUOTIENT,
    K_QUOTIENT,
    L_QUOTIENT,
    EtaQuotient,
    GenEtaQuotient,
    rab_quotient,
)

MIN_PREC = 64
SLOW_CUTOFF = 1 - 2.0**-20
MAX_TERMS = 200_000  # the heaviest class polynomial lifts need under 10^4
GAMMA_10 = ((3, -1), (10, -3))


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class BigComplex:
    """A complex number carried at a stated binary precision."""

    value: mpmath.mpc
    prec: int = 192

    def __post_init__(self):
        if self.prec < MIN_PREC:
            object.__setattr__(self, "prec", MIN_PREC)
        with mp.workprec(self.prec):
            object.__setattr__(self, "value", mp.mpc(self.value))

    @classmethod
    def parse(cls, text: str, prec: int = 192) -> "BigComplex":
        """Accepts 'i', '2i', 'i/2', '0.5+1.25i', '-1/2+sqrt(3)/2*i' and similar."""
        s = text.replace(" ", "").replace("j", "i").replace("I", "i")
        if not s:
            raise ValueError("empty complex number")
        with mp.workprec(prec + 16):
            try:
                return cls(_parse_complex(s), prec)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"malformed complex number {text!r}") from exc

    @property
    def re(self):
        return self.value.real

    @property
    def im(self):
        return self.value.imag

    def _bin(self, other, op):
        if isinstance(other, BigComplex):
            p, o = max(self.prec, other.prec), other.value
        else:
            p, o = self.prec, other
        with mp.workprec(p):
            return BigComplex(op(self.value, mp.mpc(o)), p)

    def __add__(self, other):
        return self._bin(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._bin(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._bin(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._bin(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._bin(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._bin(other, lambda x, y: y / x)

    def __neg__(self):
        return BigComplex(-self.value, self.prec)

    def __abs__(self):
        with mp.workprec(self.prec):
            return abs(self.value)

    def digits(self) -> int:
        """Decimal digits that the precision supports (with a small margin)."""
        return max(int(self.prec * 0.30103) - 4, 6)

    def to_string(self, digits: int | None = None) -> str:
        d = digits or self.digits()
        with mp.workprec(self.prec):
            re, im = self.value.real, self.value.imag
            if im == 0 or abs(im) < abs(re) * mp.mpf(2) ** (-self.prec + 8):
                return mpmath.nstr(re, d)
            sign = "+" if im >= 0 else "-"
            return f"{mpmath.nstr(re, d)} {sign} {mpmath.nstr(abs(im), d)}*i"

    def __str__(self):
        return self.to_string()


def _parse_complex(s: str) -> mpmath.mpc:
    # split into signed terms, each real or imaginary (contains 'i')
    terms, cur = [], ""
    for k, ch in enumerate(s):
        if ch in "+-" and k and s[k - 1] not in "eE":
            if cur:
                terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    total = mp.mpc(0)
    for t in terms:
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        if "i" in t:
            body = t.replace("*", "").replace("i", "", 1)
            if "i" in body:
                raise ValueError("repeated i")
            if body.startswith("/"):
                body = "1" + body
            total += sign * mp.mpc(0, _parse_real(body or "1"))
        else:
            total += sign * _parse_real(t)
    return total


def _parse_real(t: str) -> mpmath.mpf:
    if "/" in t:
        num, den = t.split("/", 1)
        return _parse_real(num or "1") / _parse_real(den)
    if t.startswith("sqrt(") and t.endswith(")"):
        return mp.sqrt(_parse_real(t[5:-1]))
    return mp.mpf(t)


def as_big(tau, prec: int) -> BigComplex:
    if isinstance(tau, BigComplex):
        return BigComplex(tau.value, max(prec, tau.prec))
    if isinstance(tau, str):
        return BigComplex.parse(tau, prec)
    with mp.workprec(prec):
        return BigComplex(mp.mpc(tau), prec)


def _reduce_translation(tau: mpmath.mpc) -> mpmath.mpc:
    """tau + n with real part in [-1/2, 1/2)."""
    n = mp.floor(tau.real + mp.mpf(1) / 2)
    return tau - n


def eval_q(tau, prec: int = 192) -> BigComplex:
    t = as_big(tau, prec)
    if t.im <= 0:
        raise ValueError("not in upper half-plane")
    with mp.workprec(prec + 16):
        return BigComplex(mp.exp(2j * mp.pi * _reduce_translation(t.value)), prec)


def _exp_frac(x: Fraction, tau: mpmath.mpc) -> mpmath.mpc:
    """Principal q^x = exp(2 pi i x tau)."""
    return mp.exp(2j * mp.pi * mp.mpf(x.numerator) / x.denominator * tau)


def _cutoff(absq, weight: int, prec: int) -> int:
    """M with weight * |q|^(M+1) / (1 - |q|)^2 < 2^(-prec-8)."""
    if absq >= SLOW_CUTOFF:
        raise ConvergenceError("convergence too slow; increase im or supply reduced point")
    if absq == 0:
        return 1
    target = -(prec + 8) - log2(max(weight, 1)) + 2 * float(mpmath.log(1 - absq, 2))
    M = max(int(ceil(target / float(mpmath.log(absq, 2)))), 1)
    if M > MAX_TERMS:
        raise ConvergenceError(f"needs {M} product terms; move tau away from the real axis first")
    return M


def _residue_pattern(spec: GenEtaQuotient) -> dict[int, int]:
    """{k mod N: e} so that the product part is prod_k (1 - Q^k)^e."""
    N = spec.level
    pattern: dict[int, int] = {}
    for g, r in spec.exps:
        for res in (g % N, (-g) % N):
            pattern[res] = pattern.get(res, 0) + r  # g = N/2 hits the same residue twice
    return pattern


def _gen_product(spec: GenEtaQuotient, q: mpmath.mpc, prec: int) -> mpmath.mpc:
    N, n = spec.level, spec.scale
    pattern = _residue_pattern(spec)
    Q = q**n
    weight = sum(abs(e) for e in pattern.values())
    M = _cutoff(abs(Q), weight, prec)
    out = mp.mpc(1)
    Qk = mp.mpc(1)
    for k in range(1, M + 1):
        Qk *= Q
        e = pattern.get(k % N)
        if e:
            out *= (1 - Qk) ** e
    return out


def _eta_part(spec: EtaQuotient, q: mpmath.mpc, prec: int) -> mpmath.mpc:
    out = mp.mpc(1)
    for d, r in spec.exps:
        Q = q**d
        M = _cutoff(abs(Q), abs(r), prec)
        acc = mp.mpc(1)
        Qk = mp.mpc(1)
        for _ in range(M):
            Qk *= Q
            acc *= 1 - Qk
        out *= acc**r
    return out


def _e4(q: mpmath.mpc, prec: int) -> mpmath.mpc:
    absq = abs(q)
    if absq >= SLOW_CUTOFF:
        raise ConvergenceError("convergence too slow; increase im or supply reduced point")
    _cutoff(absq, 1, prec)  # same term budget as the products
    eps = mp.mpf(2) ** (-prec - 8)
    total = mp.mpc(0)
    qn = mp.mpc(1)
    n = 0
    while True:
        n += 1
        qn *= q
        term = n**3 * qn / (1 - qn)
        total += term
        # the remaining terms are bounded by a geometric tail dominated by this one
        if n > 8 and abs(term) * 4 / (1 - absq) ** 4 < eps:
            break
    return 1 + 240 * total


def _named(name: str):
    name = name.strip()
    if name.startswith("rab("):
        a, b = name[4:-1].split(",")
        return rab_quotient(int(a), int(b))
    table = {
        "l": L_QUOTIENT,
        "k": K_QUOTIENT,
        "r": GenEtaQuotient(5, {1: 1, 2: -1}),
        "f": F_QUOTIENT,
        "eta": EtaQuotient(1, {1: 1}),
    }
    if name in table:
        return table[name]
    if name == "j":
        return "j"
    raise ValueError(f"unknown function {name!r}")


def eval_product(spec, tau, prec: int = 192) -> BigComplex:
    """Value of an eta quotient, generalized eta quotient, or named function (r, k, l, f, j, eta, rab(a,b))."""
    if isinstance(spec, str):
        spec = _named(spec)
    t = as_big(tau, prec)
    if t.im <= 0:
        raise ValueError("not in upper half-plane")
    wp = prec + 24
    with mp.workprec(wp):
        tv = t.value
        q = mp.exp(2j * mp.pi * _reduce_translation(tv))
        if spec == "j":
            eta = EtaQuotient(1, {1: 24})
            val = _e4(q, wp) ** 3 / (_exp_frac(Fraction(1), tv) * _eta_part(eta, q, wp))
        elif isinstance(spec, GenEtaQuotient):
            val = _exp_frac(spec.leading_exponent(), tv) * _gen_product(spec, q, wp)
        elif isinstance(spec, EtaQuotient):
            val = _exp_frac(spec.leading_exponent(), tv) * _eta_part(spec, q, wp)
        else:
            raise TypeError(f"cannot evaluate {spec!r}")
        return BigComplex(val, prec)


def eval_series_at(series, tau, prec: int = 192) -> BigComplex:
    """Sum a truncated PuiseuxSeries at tau (no tail estimate)."""
    t = as_big(tau, prec)
    with mp.workprec(prec + 24):
        total = mp.mpc(0)
        for e, c in series.terms():
            total += mp.mpf(c.numerator if isinstance(c, Fraction) else c) / (c.denominator if isinstance(c, Fraction) else 1) * _exp_frac(Fraction(e), t.value)
        return BigComplex(total, prec)


def apply_matrix(g, tau: BigComplex) -> BigComplex:
    (a, b), (c, d) = g
    with mp.workprec(tau.prec + 16):
        z = tau.value
        return BigComplex((a * z + b) / (c * z + d), tau.prec)


@dataclass
class TransformationReport:
    tolerance: float
    samples: list = field(default_factory=list)  # (name, tau, residual)

    @property
    def worst(self):
        return max((r for _, _, r in self.samples), default=0.0)

    def __bool__(self):
        return all(r <= self.tolerance for _, _, r in self.samples)


def check_transformations(prec: int = 128, samples: int = 20, seed: int = 0,
                          pairs=((1, 2), (-2, 1), (3, 1), (5, 0))) -> TransformationReport:
    """l(g tau) l(tau) = -1 and F(g tau) F(tau) = (-1)^(b-a) for g = [3 -1; 10 -3]."""
    rng = random.Random(seed)
    tol = 2.0 ** (-prec / 2)
    rep = TransformationReport(tol)
    pts = []
    for _ in range(samples):
        x = rng.uniform(-0.5, 0.5)
        y = rng.uniform(0.3, 2.0)
        pts.append(as_big(complex(x, y), prec))
    for tau in pts:
        gt = apply_matrix(GAMMA_10, tau)
        lv = eval_product(L_QUOTIENT, tau, prec)
        lg = eval_product(L_QUOTIENT, gt, prec)
        rep.samples.append(("l(g tau) l(tau) + 1", tau, float(abs(lg * lv + 1))))
        ident = eval_product(L_QUOTIENT, apply_matrix(((1, 0), (0, 1)), tau), prec)
        rep.samples.append(("l(I tau) - l(tau)", tau, float(abs(ident - lv))))
    for a, b in pairs:
        spec = rab_quotient(a, b)
        sign = -1 if (b - a) % 2 else 1
        for tau in pts[:4]:
            v = eval_product(spec, tau, prec) * eval_product(spec, apply_matrix(GAMMA_10, tau), prec)
            rep.samples.append((f"F({a},{b}) sign law", tau, float(abs(v - sign))))
    return rep
