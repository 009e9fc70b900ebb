"""Identities for r(tau)^a r(2tau)^b, l, f and j, checked or derived on q-expansions.

Every check here is a one-sided verification: both sides are expanded and
compared through a stated power of q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cusps import GroupDesc, INFINITY, enumerate_cusps
from .etaforms import F_QUOTIENT, L_QUOTIENT, j_series, l_series, quotient_series, r_series, rab_quotient, rab_series
from .linalg import nullspace
from .modeq import BivarPoly, CoefficientPattern, ModEqError, coefficient_pattern, solve_relation
from .orders import OrderTable, order_table
from .qseries import PuiseuxSeries

GAMMA1_10 = GroupDesc.gamma1(10)
GAMMA0_10 = GroupDesc.gamma0(10)

# coefficients of P(X), constant term first
P_COEFFS = (1, -4, 234, -460, 495, 456, -1444, -456, 495, 460, 234, 4, 1)


@dataclass
class Report:
    checks: dict = field(default_factory=dict)

    def __bool__(self):
        return all(self.checks.values())

    def add(self, name: str, ok) -> None:
        self.checks[name] = bool(ok)

    def format(self) -> str:
        return "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in self.checks.items())


def vanishes_through(s: PuiseuxSeries, T) -> bool:
    """True iff every coefficient of s at exponents <= T is zero."""
    if s.precision <= T:
        raise ArithmeticError(f"series known only below q^{s.precision}, cannot decide through q^{T}")
    for e, _ in s.terms():
        return e > T
    return True


# ---- univariate polynomials (coefficient lists, constant term first) ----------


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _padd(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _ppow(p, e):
    out = [1]
    for _ in range(e):
        out = _pmul(out, p)
    return out


def _pdivmod(p, q):
    p = [Fraction(c) for c in _trim(p)]
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        k = len(p) - len(q)
        c = p[-1] / q[-1]
        quo[k] = c
        for i, b in enumerate(q):
            p[i + k] -= c * b
        p = _trim(p)
    return _trim(quo), p


def _pgcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return p


def _primitive_int(p):
    """Scale a rational polynomial to coprime integers; returns (poly, factor used)."""
    p = [Fraction(c) for c in p]
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    return [c // g for c in ints], Fraction(den, g)


def _peval(p, x):
    acc = 0 * x
    for c in reversed(p):
        acc = acc * x + c
    return acc


def format_upoly(p, var: str = "X") -> str:
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        mag = abs(c)
        body = (str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return out + "".join(f" {s} {b}" for s, b in parts[1:])


@dataclass(frozen=True)
class RationalExpr:
    """num(symbol) / den(symbol) in lowest terms with integer coefficients."""

    num: tuple
    den: tuple
    symbol: str = "l"

    def __post_init__(self):
        num, den = _trim(self.num), _trim(self.den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den) if num else den
        if len(g) > 1:
            num, den = _pdivmod(num, g)[0], _pdivmod(den, g)[0]
        if not num:
            num, den = [], [1]
        else:
            num, fn = _primitive_int(num)
            den, fd = _primitive_int(den)
            # value = num/fn divided by den/fd; fold the rational factor into num
            ratio = fd / fn
            num = [c * ratio.numerator for c in num]
            den = [c * ratio.denominator for c in den]
        if den[-1] < 0:
            num, den = [-c for c in num], [-c for c in den]
        object.__setattr__(self, "num", tuple(int(c) for c in num))
        object.__setattr__(self, "den", tuple(int(c) for c in den))

    def __call__(self, x):
        return _peval(list(self.num), x) / _peval(list(self.den), x)

    def __str__(self):
        v = self.symbol
        return f"({format_upoly(self.num, v)}) / ({format_upoly(self.den, v)})"


# ---- generators of A_0(Gamma1(10)) among r^a r(2tau)^b -------------------------


def _order_forms(G: GroupDesc = GAMMA1_10) -> dict:
    """ord_x r^a r(2tau)^b = alpha_x a + beta_x b at each cusp x."""
    ta = order_table(rab_quotient(1, 0), G)
    tb = order_table(rab_quotient(0, 1), G)
    return {x: (ta[x], tb[x]) for x in ta.entries}


def _norm_floor(forms) -> Fraction:
    """min of sum |alpha a + beta b| over max(|a|, |b|) = 1 (piecewise linear, convex)."""
    best = None

    def N(a, b):
        return sum(abs(al * a + be * b) for al, be in forms)

    for fixed in (1, -1):
        for axis in (0, 1):
            cands = {Fraction(-1), Fraction(1)}
            for al, be in forms:
                # zero of the linear form along this edge
                u, w = (al, be) if axis == 0 else (be, al)
                if w:
                    t = Fraction(-u * fixed, w)
                    if -1 <= t <= 1:
                        cands.add(t)
            for t in cands:
                a, b = (fixed, t) if axis == 0 else (t, fixed)
                v = N(a, b)
                best = v if best is None or v < best else best
    return best


def find_generating_pairs() -> set[tuple[int, int]]:
    """All (a, b), a = 3b mod 5, whose r^a r(2tau)^b has total pole degree 1 on Gamma1(10)."""
    forms = list(_order_forms().values())
    floor_ = _norm_floor(forms)
    # sum of |orders| = 2 * (pole degree), and it is at least floor_ * max(|a|, |b|)
    bound = int(2 / floor_)
    out = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) == (0, 0) or (a - 3 * b) % 5:
                continue
            ords = [al * a + be * b for al, be in forms]
            if -sum(o for o in ords if o < 0) == 1:
                out.add((a, b))
    return out


# ---- f_{a,b} as polynomials in u = l - 1/l -----------------------------------


def u_series(T: int) -> PuiseuxSeries:
    l = l_series(T)
    return l - l.invert()


def fab_series(a: int, b: int, T: int) -> PuiseuxSeries:
    """r^a r(2tau)^b + (-1)^(b-a) / (r^a r(2tau)^b)."""
    F = rab_series(a, b, T)
    inv = F.invert()
    return F + (inv if (b - a) % 2 == 0 else -inv)


def _linear_solve(target: PuiseuxSeries, basis: list[PuiseuxSeries], rows: int) -> list[Fraction]:
    cols = basis + [target]
    start = min(c.leading_exponent() for c in cols if not c.is_zero())
    exps = [start + k for k in range(rows)]
    mat = [[c.coefficient(e) for c in cols] for e in exps]
    ker = nullspace(mat, len(cols))
    if len(ker) != 1 or not ker[0][-1]:
        raise ArithmeticError("inconsistent solve: target is not a unique combination of the basis")
    v = ker[0]
    return [Fraction(-x, v[-1]) for x in v[:-1]]


def express_fab(a: int, b: int, extra_rows: int = 24) -> list[Fraction]:
    """Coefficients (a_0, ..., a_d) with u^(|a+2b|/5) f_{a,b} = sum a_i u^i, u = l - 1/l.

    d = (|a+2b| + |2a-b|)/5 is attained when 2a != b.  For 2a = b both r^a r(2tau)^b
    and its inverse are finite at 1/5, f_{a,b} may vanish there and a_d can be 0
    (e.g. u (k - 1/k) = -4).
    """
    if (a, b) == (0, 0) or (a - 3 * b) % 5:
        raise ValueError("need (a, b) != (0, 0) with a = 3b mod 5")
    e = abs(a + 2 * b) // 5
    d = (abs(a + 2 * b) + abs(2 * a - b)) // 5
    rows = d + 1 + extra_rows
    P = rows + 2 * e + 8
    u = u_series(P)
    lhs = u**e * fab_series(a, b, P)
    basis = [PuiseuxSeries.one(P)]
    for _ in range(d):
        basis.append(basis[-1] * u)
    coeffs = _linear_solve(lhs, basis, rows)
    if not coeffs[-1] and 2 * a != b:
        raise ArithmeticError("leading coefficient vanished; degree prediction failed")
    return coeffs


# ---- r^a r(2tau)^b as rational functions of l ------------------------------


RAB_PAIRS = ((1, 2), (-2, 1), (3, 1), (5, 0), (-1, 3), (4, 3))


def rab_in_l_holds(a: int, b: int, T: int) -> bool:
    """r^a r(2tau)^b = l^((b-2a)/5) ((l-1)/(l+1))^((a+2b)/5) through q^T (cross-multiplied)."""
    e1, e2 = (b - 2 * a) // 5, (a + 2 * b) // 5
    P = T + 2 * (abs(e1) + abs(e2)) + 10
    l = l_series(P)
    lm, lp = l - 1, l + 1
    lhs = rab_series(a, b, P) * l ** max(-e1, 0) * lp ** max(e2, 0) * lm ** max(-e2, 0)
    rhs = l ** max(e1, 0) * lm ** max(e2, 0) * lp ** max(-e2, 0)
    return vanishes_through(lhs - rhs, T)


def verify_rab_identities(T: int, pairs=RAB_PAIRS) -> Report:
    if T < 50:
        raise ValueError("use T >= 50")
    rep = Report()
    P = T + 12
    l = l_series(P)
    r = r_series(P)
    r5 = r**5
    r2_5 = r5.scale_argument(2)
    rep.add("r^5 l^2 (l+1) = l - 1", vanishes_through(r5 * l**2 * (l + 1) - (l - 1), T))
    rep.add("r(2tau)^5 (l+1)^2 = l (l-1)^2", vanishes_through(r2_5 * (l + 1) ** 2 - l * (l - 1) ** 2, T))
    for a, b in pairs:
        rep.add(f"r^{a} r(2tau)^{b} in terms of l", rab_in_l_holds(a, b, T))
    return rep


# ---- f = eta^6(tau)/eta^6(5tau) and j -----------------------------------------


def u_order_table() -> OrderTable:
    """Orders of u = l - 1/l on Gamma0(10).

    Poles follow from those of l and 1/l; u starts 4q at infinity; having a
    single simple pole, u has no further zeros.
    """
    tl = order_table(L_QUOTIENT, GAMMA0_10)
    entries = {}
    for x in enumerate_cusps(GAMMA0_10):
        o = tl[x]
        entries[x] = -abs(o) if o else Fraction(0)
    entries[INFINITY] = u_series(8).leading_exponent()  # width of oo is 1
    if sum(entries.values()) != 0:
        raise AssertionError("divisor of l - 1/l is not of degree zero")
    return OrderTable(GAMMA0_10, entries)


def f_u_pattern() -> CoefficientPattern:
    return coefficient_pattern(order_table(F_QUOTIENT, GAMMA0_10), u_order_table())


def derive_f_from_l() -> tuple[BivarPoly, RationalExpr]:
    """F with F(f, l - 1/l) = 0, and f as a rational function of l."""
    pat = f_u_pattern()
    unknowns = [(i, j) for j in range(pat.d1 + 1) for i in range(pat.d2 + 1) if (i, j) not in pat.zero]
    rows = (pat.d1 + 1) * (pat.d2 + 1) + 32
    P = rows + 12
    F = solve_relation(quotient_series(F_QUOTIENT, P), u_series(P), unknowns, rows)
    for ij in pat.nonzero:
        if not F[ij]:
            raise ModEqError(f"predicted nonzero coefficient C{ij} vanished")
    # presented with positive constant term
    F = F.normalized((0, 0))
    if F.degree_x != 1:
        raise ArithmeticError("relation is not linear in f")
    A = [F[(0, j)] for j in range(F.degree_y + 1)]
    B = [F[(1, j)] for j in range(F.degree_y + 1)]
    # f = -A(u)/B(u) with u = (l^2 - 1)/l: clear denominators by l^deg
    deg = max(len(A), len(B)) - 1
    u_num, l1 = [-1, 0, 1], [0, 1]

    def homog(p):
        acc = []
        for k, c in enumerate(p):
            if c:
                acc = _padd(acc, [c * x for x in _pmul(_ppow(u_num, k), _ppow(l1, deg - k))])
        return acc

    return F, RationalExpr(tuple(-c for c in homog(A)), tuple(homog(B)), "l")


def f_in_l_expr() -> RationalExpr:
    """(l^2-l-1)^2 (l^2+4l-1) / (l^2 (l^2-1))."""
    num = _pmul(_ppow([-1, -1, 1], 2), [-1, 4, 1])
    den = _pmul([0, 0, 1], [-1, 0, 1])
    return RationalExpr(tuple(num), tuple(den), "l")


def verify_f_in_l(T: int) -> bool:
    P = T + 12
    l = l_series(P)
    f = quotient_series(F_QUOTIENT, P)
    lhs = f * l**2 * (l**2 - 1)
    rhs = (l**2 - l - 1) ** 2 * (l**2 + 4 * l - 1)
    return vanishes_through(lhs - rhs, T)


def verify_j_in_f(T: int) -> bool:
    P = T + 12
    f = quotient_series(F_QUOTIENT, P)
    j = j_series(P)
    return vanishes_through(j * f**5 - (f**2 + 250 * f + 3125) ** 3, T)


def verify_j_in_l(T: int) -> Report:
    if T < 60:
        raise ValueError("use T >= 60")
    P = T + 12
    l = l_series(P)
    j = j_series(P)
    den = l**2 * (l**2 - 1) * (l**2 + 4 * l - 1) ** 5 * (l**2 - l - 1) ** 10
    Pl = _peval(list(P_COEFFS), l)
    rep = Report()
    rep.add("j l^2 (l^2-1) (l^2+4l-1)^5 (l^2-l-1)^10 = P(l)^3", vanishes_through(j * den - Pl**3, T))
    rep.add("j f^5 = (f^2 + 250 f + 3125)^3", verify_j_in_f(T))
    return rep


def identity_suite(T: int = 120) -> Report:
    """Everything above in one report."""
    rep = Report()
    rep.add("generating pairs are {(1,2),(-1,-2),(-2,1),(2,-1)}",
            find_generating_pairs() == {(1, 2), (-1, -2), (-2, 1), (2, -1)})
    rep.add("express_fab(5,0) = (-4,-4,-2,-1)", express_fab(5, 0) == [-4, -4, -2, -1])
    rep.add("express_fab(-2,1) = (0,1)", express_fab(-2, 1) == [0, 1])
    for name, ok in verify_rab_identities(T).checks.items():
        rep.add(name, ok)
    F, fl = derive_f_from_l()
    rep.add("F(X,Y) = 4 - 7Y - XY + 2Y^2 + Y^3", F == BivarPoly.from_text("4 - 7*Y - X*Y + 2*Y^2 + Y^3"))
    rep.add("f as a rational function of l has the expected closed form", fl == f_in_l_expr())
    rep.add("f l^2 (l^2-1) = (l^2-l-1)^2 (l^2+4l-1)", verify_f_in_l(T))
    for name, ok in verify_j_in_l(T).checks.items():
        rep.add(name, ok)
    return rep
