"""Truncated Puiseux series in q with exact rational coefficients.

A :class:`PuiseuxSeries` stores the coefficients of the exponents
``v/D, (v+1)/D, ..., (T-1)/D``; everything at exponent ``T/D`` or above is
unknown.  Coefficients are Python ints or :class:`fractions.Fraction`
(integral fractions are demoted to ints so integer series stay fast).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence, Union

Coeff = Union[int, Fraction]


class NonInvertibleError(ZeroDivisionError):
    pass


def _exact(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _exact(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _exact(Fraction(c))
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _nonzero(coeffs: Sequence[Coeff]) -> list[tuple[int, Coeff]]:
    return [(i, c) for i, c in enumerate(coeffs) if c]


def _step(coeffs: Sequence[Coeff]) -> int:
    """gcd of the offsets of nonzero entries (0 if none besides index 0)."""
    g = 0
    for i, c in enumerate(coeffs):
        if c and i:
            g = gcd(g, i)
            if g == 1:
                break
    return g


def _convolve(a: Sequence[Coeff], b: Sequence[Coeff], n: int) -> list[Coeff]:
    res: list[Coeff] = [0] * n
    nza, nzb = _nonzero(a[:n]), _nonzero(b[:n])
    if len(nza) > len(nzb):
        nza, nzb = nzb, nza
    for i, x in nza:
        lim = n - i
        for j, y in nzb:
            if j >= lim:
                break
            res[i + j] += x * y
    return res


def _inverse_coeffs(a: Sequence[Coeff], n: int) -> list[Coeff]:
    """First n coefficients of 1/A for a power series A with A[0] != 0."""
    a0 = a[0]
    inv0 = Fraction(1, a0) if a0 not in (1, -1) else a0
    nza = [(i, c) for i, c in _nonzero(a[:n]) if i]
    out: list[Coeff] = [0] * n
    out[0] = _exact(inv0)
    for k in range(1, n):
        acc = 0
        for i, c in nza:
            if i > k:
                break
            acc += c * out[k - i]
        if acc:
            out[k] = _exact(-acc * inv0)
    return out


class PuiseuxSeries:
    """Immutable truncated series sum_k c_k q^((val+k)/denom), known below q^(trunc/denom)."""

    __slots__ = ("denom", "val", "coeffs", "trunc")

    def __init__(self, denom: int, val: int, coeffs: Iterable, trunc: int | None = None):
        if denom < 1:
            raise ValueError("denominator must be positive")
        cs = [_exact(c) for c in coeffs]
        if trunc is None:
            trunc = val + len(cs)
        if trunc < val:
            raise ValueError("truncation below valuation")
        if len(cs) > trunc - val:
            cs = cs[: trunc - val]
        else:
            cs.extend([0] * (trunc - val - len(cs)))
        # strip leading zeros
        k = 0
        while k < len(cs) and not cs[k]:
            k += 1
        val += k
        cs = cs[k:]
        # coarsen the exponent grid only when the bound stays exact
        if not cs:
            g = gcd(denom, trunc)
            denom, val = denom // g, trunc // g
            trunc = val
        else:
            g = gcd(denom, val, _step(cs), trunc)
            if g > 1:
                cs = cs[::g]
                denom //= g
                val //= g
                trunc //= g
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxSeries is immutable")

    # ---- construction helpers -------------------------------------------------

    @classmethod
    def from_dict(cls, terms: dict, prec, denom: int | None = None) -> "PuiseuxSeries":
        """Build from {exponent: coeff}; ``prec`` is the (rational) truncation exponent."""
        exps = [Fraction(e) for e in terms] + [Fraction(prec)]
        D = denom or lcm(*(e.denominator for e in exps))
        T = Fraction(prec) * D
        if T.denominator != 1:
            raise ValueError("truncation not representable with this denominator")
        T = int(T)
        if not terms:
            return cls(D, T, [], T)
        nums = {int(Fraction(e) * D): c for e, c in terms.items()}
        v = min(nums)
        cs = [0] * max(T - v, 0)
        for e, c in nums.items():
            if e < T:
                cs[e - v] = c
        return cls(D, min(v, T), cs, T)

    @classmethod
    def polynomial(cls, coeffs: Sequence, prec: int) -> "PuiseuxSeries":
        """Integer-exponent series c0 + c1 q + ... known below q^prec."""
        return cls(1, 0, list(coeffs), prec)

    @classmethod
    def monomial(cls, exponent, prec, coeff=1) -> "PuiseuxSeries":
        return cls.from_dict({Fraction(exponent): coeff}, prec)

    @classmethod
    def one(cls, prec) -> "PuiseuxSeries":
        return cls.monomial(0, prec)

    # ---- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def precision(self) -> Fraction:
        """Exponent from which coefficients are unknown."""
        return Fraction(self.trunc, self.denom)

    @property
    def rel_precision(self) -> Fraction:
        return Fraction(self.trunc - self.val, self.denom)

    def leading_exponent(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero series has no leading exponent")
        return Fraction(self.val, self.denom)

    def leading_coefficient(self) -> Coeff:
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def coefficient(self, exponent) -> Coeff:
        e = Fraction(exponent) * self.denom
        if e >= self.trunc:
            raise IndexError(f"q^{exponent} lies beyond the truncation q^{self.precision}")
        if e.denominator != 1 or e < self.val:
            return 0
        return self.coeffs[int(e) - self.val]

    __getitem__ = coefficient

    def terms(self) -> Iterator[tuple[Fraction, Coeff]]:
        """Nonzero (exponent, coefficient) pairs in increasing order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.val + i, self.denom), c

    def integer_coefficients(self, n: int | None = None) -> list[Coeff]:
        """Coefficients of q^0 .. q^(n-1) for a series supported on integer exponents >= 0."""
        if n is None:
            n = int(self.precision) if self.precision.denominator == 1 else int(self.precision) + 1
        out: list[Coeff] = []
        for k in range(n):
            out.append(self.coefficient(k))
        return out

    def __repr__(self):
        return f"PuiseuxSeries({self.to_text()!r})"

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
                continue
            mon = "q" if e == 1 else f"q^{e}" if e.denominator == 1 else f"q^({e})"
            if c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        body = " + ".join(parts).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.precision})"

    # ---- equality -------------------------------------------------------------

    def _key(self):
        return (self.denom, self.val, self.coeffs, self.trunc)

    def __eq__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self._key() == other._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def agrees(self, other: "PuiseuxSeries") -> bool:
        """True if both series coincide below the smaller truncation."""
        return (self - other).is_zero()

    # ---- rebasing -------------------------------------------------------------

    def _in_units(self, D: int) -> tuple[int, list[Coeff], int]:
        f = D // self.denom
        if f * self.denom != D:
            raise ValueError("target denominator must be a multiple")
        if f == 1:
            return self.val, list(self.coeffs), self.trunc
        cs: list[Coeff] = [0] * ((len(self.coeffs) - 1) * f + 1) if self.coeffs else []
        cs[::f] = self.coeffs
        return self.val * f, cs, self.trunc * f

    def rebase(self, D: int) -> tuple[int, list[Coeff], int]:
        """(val, coeffs, trunc) of this series with exponents in units 1/D."""
        return self._in_units(D)

    # ---- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            c = _exact(other)
            if not c:
                return self
            if self.trunc <= 0:
                return self
            v, cs, T = self._in_units(self.denom)
            if v > 0:
                cs = [0] * v + cs
                v = 0
            cs[-v] += c
            return PuiseuxSeries(self.denom, v, cs, T)
        D = lcm(self.denom, other.denom)
        v1, a, T1 = self._in_units(D)
        v2, b, T2 = other._in_units(D)
        T = min(T1, T2)
        v = min(v1, v2, T)
        out: list[Coeff] = [0] * (T - v)
        for off, cs in ((v1 - v, a), (v2 - v, b)):
            for i, c in enumerate(cs[: max(T - v - off, 0)]):
                if c:
                    out[off + i] += c
        return PuiseuxSeries(D, v, out, T)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.denom, self.val, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self + (-other)
        return self + (-_exact(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "PuiseuxSeries":
        c = _exact(c)
        return PuiseuxSeries(self.denom, self.val, [c * x for x in self.coeffs], self.trunc)

    def shift(self, exponent) -> "PuiseuxSeries":
        """Multiply by the exact monomial q^exponent."""
        e = Fraction(exponent)
        D = lcm(self.denom, e.denominator)
        v, cs, T = self._in_units(D)
        k = int(e * D)
        return PuiseuxSeries(D, v + k, cs, T + k)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(other)
        D = lcm(self.denom, other.denom)
        v1, a, T1 = self._in_units(D)
        v2, b, T2 = other._in_units(D)
        T = min(T1 + v2, T2 + v1)
        v = v1 + v2
        if self.is_zero() or other.is_zero():
            return PuiseuxSeries(D, T, [], T)
        return PuiseuxSeries(D, v, _convolve(a, b, T - v), T)

    __rmul__ = __mul__

    def invert(self) -> "PuiseuxSeries":
        if self.is_zero():
            raise NonInvertibleError("non-invertible: zero series")
        n = self.trunc - self.val
        g = _step(self.coeffs) or n or 1
        # work in the compressed variable t = q^(g/D)
        compressed = list(self.coeffs[::g])
        m = _ceil_div(n, g)
        inv = _inverse_coeffs(compressed, m)
        cs: list[Coeff] = [0] * ((m - 1) * g + 1)
        cs[::g] = inv
        return PuiseuxSeries(self.denom, -self.val, cs, -self.val + n)

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self * other.invert()
        c = _exact(other)
        if not c:
            raise ZeroDivisionError("division by zero constant")
        return self.scale(Fraction(1) / c)

    def __rtruediv__(self, other):
        return self.invert() * _exact(other)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        if result is None:
            # empty product: exactly 1, known to the operand's relative precision
            return PuiseuxSeries.one(self.rel_precision if not self.is_zero() else max(self.precision, 1))
        return result

    def scale_argument(self, n: int) -> "PuiseuxSeries":
        """The substitution q -> q^n, i.e. tau -> n*tau."""
        if n < 1:
            raise ValueError("scale factor must be positive")
        if n == 1:
            return self
        D = self.denom
        return PuiseuxSeries(D, self.val * n, self._spread(n), self.trunc * n)

    def _spread(self, n: int) -> list[Coeff]:
        if not self.coeffs:
            return []
        cs: list[Coeff] = [0] * ((len(self.coeffs) - 1) * n + 1)
        cs[::n] = self.coeffs
        return cs

    def truncate(self, prec) -> "PuiseuxSeries":
        """Forget everything at exponent >= prec."""
        p = Fraction(prec)
        if p >= self.precision:
            return self
        D = lcm(self.denom, p.denominator)
        v, cs, _ = self._in_units(D)
        T = int(p * D)
        return PuiseuxSeries(D, min(v, T), cs[: max(T - v, 0)], T)

    # ---- serialization --------------------------------------------------------

    def to_text(self) -> str:
        head = f"q^({self.val}/{self.denom}):"
        return head + ("" if not self.coeffs else " " + ", ".join(str(c) for c in self.coeffs))

    @classmethod
    def from_text(cls, text: str) -> "PuiseuxSeries":
        m = re.fullmatch(r"\s*q\^\((-?\d+)/(\d+)\):(.*)", text, re.S)
        if not m:
            raise ValueError(f"malformed series text: {text[:40]!r}")
        val, D, rest = int(m[1]), int(m[2]), m[3].strip()
        cs = [Fraction(t.strip()) for t in rest.split(",")] if rest else []
        return cls(D, val, cs, val + len(cs))

    def to_json(self) -> str:
        return json.dumps(
            {"denom": self.denom, "val": self.val, "trunc": self.trunc, "coeffs": [str(c) for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, data: str | dict) -> "PuiseuxSeries":
        d = json.loads(data) if isinstance(data, str) else data
        return cls(int(d["denom"]), int(d["val"]), [Fraction(c) for c in d["coeffs"]], int(d["trunc"]))


# functional spellings of the operations


def add(s1: PuiseuxSeries, s2: PuiseuxSeries) -> PuiseuxSeries:
    return s1 + s2


def mul(s1: PuiseuxSeries, s2: PuiseuxSeries) -> PuiseuxSeries:
    return s1 * s2


def invert(s: PuiseuxSeries) -> PuiseuxSeries:
    return s.invert()


def power(s: PuiseuxSeries, e: int) -> PuiseuxSeries:
    return s**e


def scale_argument(s: PuiseuxSeries, n: int) -> PuiseuxSeries:
    return s.scale_argument(n)


def leading_exponent(s: PuiseuxSeries) -> Fraction:
    return s.leading_exponent()
