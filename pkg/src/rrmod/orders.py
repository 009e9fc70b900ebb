"""Orders of eta quotients and generalized eta quotients at cusps."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd

from .cusps import (
    Cusp,
    GroupDesc,
    _egcd,
    canonical_cusp,
    cusp_width,
    enumerate_cusps,
    matrix_to,
)
from .etaforms import EtaQuotient, GenEtaQuotient, bernoulli2

Matrix = tuple[tuple[int, int], tuple[int, int]]


def periodic_b2(t) -> Fraction:
    """B2 of the fractional part of t."""
    t = Fraction(t)
    return bernoulli2(t - floor(t))


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _det(x: Matrix) -> int:
    (a, b), (c, d) = x
    return a * d - b * c


def gen_eta_leading_delta(N: int, g: int, gamma: Matrix) -> Fraction:
    """Leading q-exponent of eta_{N,g}(gamma tau)."""
    if _det(gamma) != 1:
        raise ValueError("gamma must have determinant 1")
    (a, _), (c, _) = gamma
    h = gcd(c, N)
    return Fraction(h * h, 2 * N) * periodic_b2(Fraction(a * g, h))


def hermite_split(n: int, gamma: Matrix) -> tuple[Matrix, tuple[int, int, int]]:
    """Write [[n,0],[0,1]] gamma = gamma1 [[A,B],[0,C]] with gamma1 in SL2(Z), A > 0, 0 <= B < C."""
    (a, b), (c, d) = gamma
    M = ((n * a, n * b), (c, d))
    A, u, v = _egcd(n * a, c)  # u*n*a + v*c = A
    # gamma1 has first column (n a / A, c / A); its inverse kills the lower-left entry of M
    p, r = n * a // A, c // A
    gamma1: Matrix = ((p, -v), (r, u))
    inv: Matrix = ((u, v), (-r, p))
    U = _mat_mul(inv, M)
    (A2, B), (z, C) = U
    if z != 0 or A2 != A or A * C != n:
        raise ArithmeticError("Hermite decomposition failed")  # impossible for det n > 0
    k, B = divmod(B, C)
    if k:
        # [[A, B + kC], [0, C]] = [[1, k], [0, 1]] [[A, B], [0, C]]
        gamma1 = _mat_mul(gamma1, ((1, k), (0, 1)))
    return gamma1, (A, B, C)


def leading_exponent_at(spec, gamma: Matrix) -> Fraction:
    """Leading q-exponent of (spec o gamma) for gamma in SL2(Z)."""
    if isinstance(spec, GenEtaQuotient):
        gamma1, (A, _, C) = hermite_split(spec.scale, gamma)
        total = sum(
            (r * gen_eta_leading_delta(spec.level, g, gamma1) for g, r in spec.exps),
            Fraction(0),
        )
        return total * Fraction(A, C)
    if isinstance(spec, EtaQuotient):
        # eta(delta gamma tau): split off delta; eta o gamma1 always starts at q^(1/24)
        c = gamma[1][0]
        return sum((Fraction(gcd(d, c) ** 2 * r, 24 * d) for d, r in spec.exps), Fraction(0))
    raise TypeError(f"not a quotient spec: {spec!r}")


def eta_order_at_cusp(spec: EtaQuotient, cusp: Cusp, N: int | None = None) -> Fraction:
    """Order at c/d (d | N) on Gamma0(N) by the closed form for eta quotients."""
    N = N or spec.level
    d = cusp.c if cusp.c else N
    if N % d:
        raise ValueError(f"denominator {d} does not divide {N}")
    s = sum((Fraction(gcd(d, dl) ** 2 * r, dl) for dl, r in spec.exps), Fraction(0))
    return Fraction(N, 24 * d * gcd(d, N // d)) * s


def _gamma0_normalized(x: Cusp, N: int) -> Cusp:
    """A Gamma0(N)-equivalent cusp whose denominator divides N."""
    G0 = GroupDesc.gamma0(N)
    y = canonical_cusp(G0, x)
    if y.c == 0 or N % y.c == 0:
        return y
    raise AssertionError(f"no normalized Gamma0({N}) representative for {x}")  # c' = gcd(c, N) always exists


def order_at_cusp(spec, G: GroupDesc, x: Cusp, gamma: Matrix | None = None) -> Fraction:
    """Order of spec at x, measured in the local parameter of G at x."""
    h = cusp_width(G, x)
    if isinstance(spec, EtaQuotient) and gamma is None:
        N = spec.level
        y = _gamma0_normalized(x, N)
        exponent = eta_order_at_cusp(spec, y, N) / cusp_width(GroupDesc.gamma0(N), y)
        return h * exponent
    if gamma is None:
        gamma = matrix_to(x)
    (a, _), (c, _) = gamma
    if Cusp(a, c) != x:
        raise ValueError("gamma does not send oo to the cusp")
    return h * leading_exponent_at(spec, gamma)


@dataclass
class OrderTable:
    group: GroupDesc
    entries: dict = field(default_factory=dict)

    def __getitem__(self, cusp: Cusp) -> Fraction:
        return self.entries[cusp]

    def degree(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def poles(self) -> dict:
        return {x: o for x, o in self.entries.items() if o < 0}

    def zeros(self) -> dict:
        return {x: o for x, o in self.entries.items() if o > 0}

    def total_pole_degree(self) -> int:
        bad = [x for x, o in self.entries.items() if Fraction(o).denominator != 1]
        if bad:
            raise ValueError(f"non-integral orders at {', '.join(map(str, bad))}: function not modular on {self.group}")
        return int(-sum(o for o in self.entries.values() if o < 0))

    def lookup(self, x: Cusp) -> Fraction:
        """Order at any cusp, via its equivalent representative."""
        return self.entries[canonical_cusp(self.group, x)]

    def format(self) -> str:
        return "\n".join(f"{x} width={cusp_width(self.group, x)} ord={o}" for x, o in self.entries.items())


def order_table(spec, G: GroupDesc) -> OrderTable:
    return OrderTable(G, {x: order_at_cusp(spec, G, x) for x in enumerate_cusps(G)})


def total_pole_degree(spec, G: GroupDesc) -> int:
    return order_table(spec, G).total_pole_degree()


def classify_pole_zero(n: int, x: Cusp) -> str:
    """'pole', 'zero' or 'neither' for l(n tau) at x, by the congruence criteria."""
    num, den = n * x.a, x.c
    if den == 0:
        return "neither"
    g = gcd(num, den)
    a, c = num // g, den // g
    if c % 10 != 5:
        return "neither"
    if a % 5 in (1, 4):
        return "pole"
    if a % 5 in (2, 3):
        return "zero"
    return "neither"
