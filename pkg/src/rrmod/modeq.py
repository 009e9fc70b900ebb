"""Modular equations L_n(X, Y) = 0 between l(tau) and l(n tau).

The equations are found as the one-dimensional kernel of the matrix of
q-expansion coefficients of the monomials l^i l(n tau)^j, after the
coefficients forced to vanish by the cusp data have been removed.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cusps import GroupDesc
from .etaforms import L_QUOTIENT, l_series, quotient_series
from .linalg import nullspace
from .orders import OrderTable, order_table
from .qseries import PuiseuxSeries

Monomial = tuple[int, int]


class ModEqError(ArithmeticError):
    """Raised when the linear system does not determine a unique relation."""


# ---- bivariate polynomials ----------------------------------------------------


class BivarPoly:
    """Sum of C[i, j] X^i Y^j with integer (or rational) coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in polynomial")
            c = Fraction(c)
            c = c.numerator if c.denominator == 1 else c
            if c:
                clean[(int(i), int(j))] = c
        self.coeffs: dict[Monomial, int] = clean

    @classmethod
    def X(cls):
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    # queries

    def __getitem__(self, ij: Monomial):
        return self.coeffs.get(ij, 0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.const(other)
        return isinstance(other, BivarPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.degree_x, self.degree_y

    def content(self) -> int:
        g = 0
        for c in self.coeffs.values():
            g = gcd(g, int(c))
        return g

    # arithmetic

    def _lift(self, other):
        return other if isinstance(other, BivarPoly) else BivarPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict[Monomial, int] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = BivarPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def swap(self) -> "BivarPoly":
        """L(Y, X)."""
        return BivarPoly({(j, i): c for (i, j), c in self.coeffs.items()})

    def primitive(self) -> "BivarPoly":
        """Divide out the content; the first nonzero coefficient in (j, i) order becomes positive."""
        if not self:
            return self
        g = self.content()
        first = self.coeffs[min(self.coeffs, key=lambda k: (k[1], k[0]))]
        if first < 0:
            g = -g
        return BivarPoly({k: c // g for k, c in self.coeffs.items()})

    def normalized(self, corner: Monomial | None = None) -> "BivarPoly":
        """Primitive form with the coefficient at `corner` (if given) made positive."""
        p = self.primitive()
        if corner is not None:
            if not p[corner]:
                raise ValueError(f"coefficient at {corner} is zero")
            if p[corner] < 0:
                p = -p
        return p

    def mod(self, p: int) -> dict[Monomial, int]:
        return {k: c % p for k, c in self.coeffs.items() if c % p}

    def evaluate(self, x, y):
        """Sum C[i,j] x^i y^j for any ring elements x, y (Horner in y)."""
        dx, dy = self.bidegree
        if dy < 0:
            return 0 * x
        xp = [None] * (dx + 1)
        xp[0] = x ** 0
        for i in range(1, dx + 1):
            xp[i] = xp[i - 1] * x
        acc = None
        for j in range(dy, -1, -1):
            row = None
            for i in range(dx + 1):
                c = self.coeffs.get((i, j))
                if c:
                    term = xp[i] * c
                    row = term if row is None else row + term
            if acc is not None:
                acc = acc * y
                if row is not None:
                    acc = acc + row
            else:
                acc = row
        return acc if acc is not None else 0 * x

    # text and JSON

    def ordered_terms(self) -> list[tuple[Monomial, int]]:
        """Terms ordered by the power of Y, then of X."""
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for (i, j), c in self.ordered_terms():
            mono = "*".join(
                s for s in (_power("X", i), _power("Y", j)) if s
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"

    to_text = __str__

    @classmethod
    def from_text(cls, text: str) -> "BivarPoly":
        """Parse an expression in X, Y with + - * ^ (or **) and parentheses."""
        src = text.replace("^", "**")
        # implicit products such as "5 X Y" or ")(" become explicit
        src = re.sub(r"(?<=[\w)])\s+(?=[\w(])", "*", src.strip())
        src = re.sub(r"\)\s*\(", ")*(", src)
        src = re.sub(r"(?<=\d)(?=[XY(])", "*", src)
        try:
            tree = ast.parse(src, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"malformed polynomial: {text!r}") from exc
        return _eval_node(tree.body)

    def to_json(self) -> str:
        data = {f"{i},{j}": str(c) for (i, j), c in self.ordered_terms()}
        return json.dumps(data)

    @classmethod
    def from_json(cls, data) -> "BivarPoly":
        if isinstance(data, str):
            data = json.loads(data)
        out = {}
        for key, c in data.items():
            i, j = key.split(",")
            out[(int(i), int(j))] = Fraction(c)
        return cls(out)


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def _eval_node(node) -> BivarPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return BivarPoly.const(node.value)
    if isinstance(node, ast.Name) and node.id in ("X", "Y"):
        return BivarPoly.X() if node.id == "X" else BivarPoly.Y()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a = _eval_node(node.left)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("exponents must be integer literals")
            return a ** node.right.value
        b = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if b.bidegree != (0, 0) or not b:
                raise ValueError("can only divide by a nonzero constant")
            return a * BivarPoly.const(Fraction(1) / b[0, 0])
    raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")


# ---- coefficient constraints from cusp data -----------------------------------


@dataclass
class CoefficientPattern:
    """Coefficients forced nonzero / zero by the pole and zero sets of f1, f2."""

    d1: int
    d2: int
    nonzero: list[Monomial] = field(default_factory=list)
    zero: set[Monomial] = field(default_factory=set)

    @property
    def corner(self) -> Monomial:
        # C[d2, a]; used to fix the overall sign
        return self.nonzero[0]


def coefficient_pattern(t1: OrderTable, t2: OrderTable) -> CoefficientPattern:
    """Apply the vanishing criteria to F(X,Y) = sum_{i<=d2, j<=d1} C[i,j] X^i Y^j with F(f1, f2) = 0."""
    d1, d2 = t1.total_pole_degree(), t2.total_pole_degree()
    P1, Z1 = set(t1.poles()), set(t1.zeros())
    P2, Z2 = set(t2.poles()), set(t2.zeros())
    pat = CoefficientPattern(d1, d2)

    def side(tf, Pf, Zf, Po, Zo, top, flip):
        # f has pole set Pf and zero set Zf; the other function plays f2
        a = -sum((tf[r] for r in Pf & Zo), Fraction(0))
        b = sum((tf[r] for r in Zf & Zo), Fraction(0))
        a, b = int(a), int(b)
        span = d1 if not flip else d2
        mk = (lambda i, j: (i, j)) if not flip else (lambda i, j: (j, i))
        pat.nonzero.append(mk(top, a))
        pat.nonzero.append(mk(0, b))
        if Pf <= Po | Zo:
            pat.zero.update(mk(top, j) for j in range(span + 1) if j != a)
        if Zf <= Po | Zo:
            pat.zero.update(mk(0, j) for j in range(span + 1) if j != b)

    side(t1, P1, Z1, P2, Z2, d2, False)
    side(t2, P2, Z2, P1, Z1, d1, True)
    clash = set(pat.nonzero) & pat.zero
    if clash:
        raise ModEqError(f"inconsistent coefficient pattern at {sorted(clash)}")
    return pat


# ---- the linear solve ---------------------------------------------------------


def solve_relation(X: PuiseuxSeries, Y: PuiseuxSeries, unknowns: list[Monomial], rows: int) -> BivarPoly:
    """The unique (up to scale) F with support in `unknowns` and F(X, Y) = O(q^(E0 + rows))."""
    dx = max(i for i, _ in unknowns)
    dy = max(j for _, j in unknowns)
    xp = [PuiseuxSeries.one(X.precision + 10 * rows)]
    for _ in range(dx):
        xp.append(xp[-1] * X)
    yp = [PuiseuxSeries.one(Y.precision + 10 * rows)]
    for _ in range(dy):
        yp.append(yp[-1] * Y)
    cols = [xp[i] * yp[j] for i, j in unknowns]
    D = 1
    for c in cols:
        D = D * c.denom // gcd(D, c.denom)
    start = min(c.leading_exponent() for c in cols if not c.is_zero())
    stop = min(c.precision for c in cols)
    exps = [start + Fraction(k, D) for k in range(rows * D)]
    if exps[-1] >= stop:
        raise ModEqError("truncation too small: series not known to enough terms")
    mat = [[c.coefficient(e) for c in cols] for e in exps]
    basis = nullspace(mat, len(cols))
    if not basis:
        raise ModEqError("truncation too small: no relation found")
    if len(basis) > 1:
        raise ModEqError(f"degree bound violated: {len(basis)}-dimensional kernel")
    return BivarPoly(dict(zip(unknowns, basis[0])))


def psi(n: int) -> int:
    """n prod_{p | n} (1 + 1/p)."""
    out = Fraction(n)
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out *= Fraction(p + 1, p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out *= Fraction(m + 1, m)
    return int(out)


@dataclass
class ModEqSetup:
    n: int
    group: GroupDesc
    d1: int
    d2: int
    pattern: CoefficientPattern
    unknowns: list[Monomial]
    rows: int


def modeq_setup(n: int, extra_rows: int = 0, constrained: bool = True) -> ModEqSetup:
    G = GroupDesc.mixed(10, n)
    t1 = order_table(L_QUOTIENT, G)
    t2 = order_table(L_QUOTIENT.scaled(n), G)
    pat = coefficient_pattern(t1, t2)
    d1, d2 = pat.d1, pat.d2
    skip = pat.zero if constrained else set()
    unknowns = [(i, j) for j in range(d1 + 1) for i in range(d2 + 1) if (i, j) not in skip]
    rows = (d1 + 1) * (d2 + 1) + 32 + extra_rows
    return ModEqSetup(n, G, d1, d2, pat, unknowns, rows)


def derive_modeq(n: int, extra_rows: int = 0, constrained: bool = True) -> BivarPoly:
    """L_n with L_n(l(tau), l(n tau)) = 0, primitive, predicted corner coefficient positive."""
    if n < 1:
        raise ValueError("level must be a positive integer")
    if n == 1:
        return BivarPoly({(1, 0): 1, (0, 1): -1})
    st = modeq_setup(n, extra_rows, constrained)
    X = l_series(st.rows + 1)
    Y = quotient_series(L_QUOTIENT.scaled(n), st.rows + 1)
    L = solve_relation(X, Y, st.unknowns, st.rows)
    for ij in st.pattern.nonzero:
        if not L[ij]:
            raise ModEqError(f"predicted nonzero coefficient C{ij} vanished")
    return L.normalized(st.pattern.corner)


def known_modeq(n: int) -> BivarPoly:
    """The tabulated L_n for n in {2, 4, 5, 6, 13}."""
    from ._tables import KNOWN_MODEQ

    if n not in KNOWN_MODEQ:
        raise KeyError(f"no tabulated modular equation of level {n}")
    return BivarPoly.from_text(KNOWN_MODEQ[n])


# ---- checks -------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesCheck:
    ok: bool
    first_failure: Fraction | None = None  # exponent of the first nonzero coefficient

    def __bool__(self):
        return self.ok


def verify_modeq(L: BivarPoly, n: int, T: int) -> SeriesCheck:
    """Does L(l(tau), l(n tau)) vanish through q^T?"""
    X = l_series(T + 1)
    Y = X if n == 1 else quotient_series(L_QUOTIENT.scaled(n), T + 1)
    val = L.evaluate(X, Y)
    if isinstance(val, int):
        return SeriesCheck(val == 0, None if val == 0 else Fraction(0))
    for e, c in val.terms():
        if e <= T:
            return SeriesCheck(False, e)
        break
    if val.precision <= T:
        raise ModEqError("evaluation lost precision")  # leads of l, l(n tau) are 0, so this cannot happen
    return SeriesCheck(True)


def expected_zero_pattern(p: int) -> tuple[set[Monomial], set[Monomial]]:
    """(nonzero, zero) coefficient positions for odd primes p != 5."""
    P = p + 1
    if p % 10 in (1, 9):
        nonzero = {(P, 0), (0, P)}
        zero = {(P, i) for i in range(1, P + 1)} | {(i, P) for i in range(1, P + 1)}
        zero |= {(0, j) for j in range(p + 1)} | {(j, 0) for j in range(p + 1)}
    elif p % 10 in (3, 7):
        nonzero = {(P, p), (0, 1), (1, P), (p, 0)}
        idx = [i for i in range(P + 1) if i != p]
        jdx = [j for j in range(P + 1) if j != 1]
        zero = {(P, i) for i in idx} | {(i, 0) for i in idx}
        zero |= {(0, j) for j in jdx} | {(j, P) for j in jdx}
    else:
        raise ValueError("p must be an odd prime different from 5")
    return nonzero, zero


def check_zero_pattern(L: BivarPoly, p: int) -> bool:
    nonzero, zero = expected_zero_pattern(p)
    return all(L[k] for k in nonzero) and not any(L[k] for k in zero)


def check_symmetry(L: BivarPoly, n: int) -> bool:
    if gcd(n, 10) != 1:
        raise ValueError("symmetry law needs gcd(n, 10) = 1")
    if n % 10 in (1, 9):
        return L == L.swap()
    m = psi(n)
    if L.degree_x > m:
        return False
    # Y^m L(-1/Y, X): X^i Y^j -> (-1)^i X^j Y^(m - i)
    image = BivarPoly({(j, m - i): (-1) ** i * c for (i, j), c in L.coeffs.items()})
    return image == L or image == -L


def check_kronecker(L: BivarPoly, p: int) -> bool:
    X, Y = BivarPoly.X(), BivarPoly.Y()
    if p % 10 in (1, 9):
        target = (X**p - Y) * (X - Y**p)
    elif p % 10 in (3, 7):
        target = (X**p - Y) * (X * Y**p + 1)
    else:
        raise ValueError("p must be an odd prime different from 5")
    got = L.mod(p)
    if not got:
        return False
    ref = target.mod(p)
    # allow a unit multiple modulo p
    k0 = next(iter(ref))
    if k0 not in got:
        return False
    u = got[k0] * pow(ref[k0], -1, p) % p
    return got == {k: c * u % p for k, c in ref.items()}
