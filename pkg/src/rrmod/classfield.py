"""Conjugates of l at imaginary quadratic points and the class polynomial of K_(10).

For theta = sqrt(d_K)/2 the conjugates of l(theta) over K are the values
l^(alpha u_x)(tau_x), alpha running over W_{N,theta}/T and x over the reduced
forms of discriminant d_K.  l has a rational q-expansion, so a matrix
M in GL2(Z/N) acts through its SL2 part only: we write M = diag(1, det M) gamma
and evaluate l(gamma tau_x) for an integral lift of gamma.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from mpmath import mp

from .cusps import _egcd
from .etaforms import L_QUOTIENT, rab_quotient
from .modeq import BivarPoly
from .numeric import BigComplex, apply_matrix, eval_product

LIFT_BOX = 5  # bottom-row search box is +-LIFT_BOX*N


# ---- forms --------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    def tau(self, prec: int = 192) -> BigComplex:
        with mp.workprec(prec + 16):
            return BigComplex((-self.b + mp.sqrt(mp.mpf(self.disc))) / (2 * self.a), prec)

    def __str__(self):
        return f"[{self.a},{self.b},{self.c}]"


def _check_disc(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a negative discriminant")


def reduced_forms(d: int) -> list[QuadForm]:
    """Reduced primitive forms of discriminant d, one per class."""
    _check_disc(d)
    out = []
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = QuadForm(a, b, c)
            if c >= a and gcd(gcd(a, b), c) == 1 and f.is_reduced():
                out.append(f)
    return out


def class_number(d: int) -> int:
    return len(reduced_forms(d))


@dataclass(frozen=True)
class CMPoint:
    """theta = sqrt(d_K)/2, a root of X^2 + B X + C with B = 0, C = -d_K/4."""

    d_K: int

    def __post_init__(self):
        _check_disc(self.d_K)
        if self.d_K % 4:
            raise ValueError("only discriminants divisible by 4 are supported (theta = sqrt(d_K)/2)")

    @property
    def B(self) -> int:
        return 0

    @property
    def C(self) -> int:
        return -self.d_K // 4

    def theta(self, prec: int = 192) -> BigComplex:
        with mp.workprec(prec + 16):
            return BigComplex(mp.sqrt(mp.mpf(self.d_K)) / 2, prec)


# ---- matrices mod N -----------------------------------------------------------


@dataclass(frozen=True, order=True)
class MatModN:
    a: int
    b: int
    c: int
    d: int
    N: int

    def __post_init__(self):
        N = self.N
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % N if N > 1 else 0)
        if gcd(self.det(), N) != 1 and N > 1:
            raise ValueError("determinant is not a unit")

    @classmethod
    def of(cls, m, N: int) -> "MatModN":
        (a, b), (c, d) = m
        return cls(a, b, c, d, N)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.N if self.N > 1 else 0

    def __mul__(self, o: "MatModN") -> "MatModN":
        if o.N != self.N:
            raise ValueError("moduli differ")
        return MatModN(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.N,
        )

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self):
        return f"[{self.a} {self.b}; {self.c} {self.d}] mod {self.N}"


def g_theta(cm: CMPoint, s: int, t: int, N: int) -> MatModN:
    B, C = cm.B, cm.C
    return MatModN(t - B * s, -C * s, s, t, N)


def unit_group_image(cm: CMPoint, N: int) -> list[MatModN]:
    """T = g_theta(O_K^x)."""
    if N == 1:
        return [MatModN(1, 0, 0, 1, 1)]
    I = MatModN(1, 0, 0, 1, N)
    neg = MatModN(-1, 0, 0, -1, N)
    out = [I, neg]
    if cm.d_K == -4:
        j = MatModN(0, -1, 1, 0, N)
        out += [j, j * neg]
    # d_K = -3 has no theta of the form sqrt(d_K)/2 and is rejected by CMPoint
    return out


def weyl_group(cm: CMPoint, N: int) -> list[MatModN]:
    if N == 1:
        return [MatModN(1, 0, 0, 1, 1)]
    out = set()
    for s in range(N):
        for t in range(N):
            det = (t * (t - cm.B * s) + cm.C * s * s) % N
            if gcd(det, N) == 1:
                out.add(g_theta(cm, s, t, N))
    return sorted(out)


def weyl_reps(cm: CMPoint, N: int) -> list[MatModN]:
    """Coset representatives of W_{N,theta}/T (smallest member of each coset)."""
    T = unit_group_image(cm, N)
    seen: set[MatModN] = set()
    reps = []
    for w in weyl_group(cm, N):
        if w in seen:
            continue
        reps.append(w)
        seen.update(w * t for t in T)
    return reps


def _prime_powers(N: int) -> list[tuple[int, int]]:
    out, m, p = [], N, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, p**e))
        p += 1
    if m > 1:
        out.append((m, m))
    return out


def _half(b: int, mod: int) -> int:
    """b/2 modulo mod (exact halving when b is even)."""
    if b % 2 == 0:
        return (b // 2) % mod
    return b * pow(2, -1, mod) % mod


def _crt(residues: list[tuple[int, int]]) -> int:
    x, M = 0, 1
    for r, m in residues:
        # x = r mod m and x = previous mod M
        k = ((r - x) * pow(M, -1, m)) % m
        x += M * k
        M *= m
    return x % M


def u_x_matrix(x: QuadForm, N: int) -> MatModN:
    if N == 1:
        return MatModN(1, 0, 0, 1, 1)
    a, b, c = x.a, x.b, x.c
    parts = []
    for p, q in _prime_powers(N):
        if a % p:
            m = (a, _half(b, q), 0, 1)
        elif c % p:
            m = (-_half(b, q), -c, 1, 0)
        else:
            m = (-_half(b, q) - a, -_half(b, q) - c, 1, -1)
        parts.append((m, q))
    entries = [_crt([(m[k] % q, q) for m, q in parts]) for k in range(4)]
    return MatModN(*entries, N)


# ---- lifting and conjugates ---------------------------------------------------


def galois_split(M: MatModN) -> tuple[MatModN, int]:
    """M = diag(1, d) gamma with d = det M and gamma in SL2(Z/N)."""
    N = M.N
    d = M.det() if N > 1 else 1
    dinv = pow(d, -1, N) if N > 1 else 1
    gamma = MatModN(M.a, M.b, M.c * dinv, M.d * dinv, N)
    return gamma, d


def lift_sl2(gamma: MatModN, tau: BigComplex | None = None):
    """An SL2(Z) matrix with bottom row +-(c, d) mod N, chosen to maximise im(g tau).

    For a function on Gamma1(N) (and invariant under -I) the value at g tau only
    depends on the bottom row of g modulo N up to sign, so any such lift will do.
    """
    N = gamma.N
    if N == 1:
        return ((1, 0), (0, 1))
    c0, d0 = gamma.c, gamma.d
    box = LIFT_BOX * N
    best = None
    for sgn in (1, -1):
        cr, dr = (sgn * c0) % N, (sgn * d0) % N
        # smallest members >= -box of the residue classes
        for c in range(-box + (cr + box) % N, box + 1, N):
            for d in range(-box + (dr + box) % N, box + 1, N):
                if gcd(c, d) != 1:
                    continue
                if tau is None:
                    key = c * c + d * d
                else:
                    key = float(abs(c * tau.value + d) ** 2)
                cand = (key, abs(c), abs(d), c, d)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise ArithmeticError("no coprime bottom row in the search box")
    _, _, _, c, d = best
    g, u, v = _egcd(d, c)  # u d + v c = 1
    a, b = u, -v
    return ((a, b), (c, d))


def conjugate_matrices(cm: CMPoint, N: int = 10):
    """(alpha, x, alpha u_x) over alpha in W/T and reduced forms x."""
    out = []
    for x in reduced_forms(cm.d_K):
        ux = u_x_matrix(x, N)
        for alpha in weyl_reps(cm, N):
            out.append((alpha, x, alpha * ux))
    return out


def conjugates(cm: CMPoint, N: int = 10, prec: int = 192, spec=L_QUOTIENT, box: int | None = None):
    """Values spec(gamma tau_x) for every conjugate, with the lifts used."""
    if N != 10:
        raise ValueError("conjugates of l are implemented for N = 10")
    vals = []
    for alpha, x, M in conjugate_matrices(cm, N):
        tau = x.tau(prec)
        gamma, _ = galois_split(M)
        g = lift_sl2(gamma, tau)
        vals.append((eval_product(spec, apply_matrix(g, tau), prec), g, x, alpha))
    return vals


@dataclass
class ClassPolynomial:
    disc: int
    N: int
    coeffs: list[int]  # leading coefficient first
    roots: list[BigComplex]
    residual: float
    prec: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def format(self, var: str = "X") -> str:
        n = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            e = n - k
            mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
            mag = abs(c)
            body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return out + "".join(f" {s} {b}" for s, b in parts[1:])

    def to_dict(self) -> dict:
        return {
            "disc": self.disc,
            "N": self.N,
            "coeffs": [str(c) for c in self.coeffs],
            "roots": [r.to_string(30) for r in self.roots],
            "residual": f"{self.residual:.3e}",
        }


def _expand(roots, prec: int):
    with mp.workprec(prec):
        poly = [mp.mpc(1)]
        for r in roots:
            nxt = poly + [mp.mpc(0)]
            for k in range(len(poly)):
                nxt[k + 1] -= r * poly[k]
            poly = nxt
        return poly


def class_polynomial(d_K: int, N: int = 10, prec: int = 256, tol: float = 1e-10, retries: int = 4) -> ClassPolynomial:
    """prod (X - conjugate), rounded to integers; precision doubles until the rounding residual is below tol."""
    cm = CMPoint(d_K)
    p = prec
    last = None
    for _ in range(retries + 1):
        vals = conjugates(cm, N, p)
        roots = [v for v, *_ in vals]
        poly = _expand([r.value for r in roots], p + 16)
        with mp.workprec(p):
            ints = [int(mp.nint(c.real)) for c in poly]
            residual = max(float(abs(c - k)) for c, k in zip(poly, ints))
        if residual < tol:
            return ClassPolynomial(d_K, N, ints, roots, residual, p)
        last = residual
        p *= 2
    raise ArithmeticError(f"class polynomial for d_K={d_K} not integral: residual {last:.3e} at prec {p // 2}")


@dataclass
class SingularValue:
    poly: ClassPolynomial
    value: BigComplex
    error_bound: float
    separation: float


def singular_value(d_K: int, prec: int = 256) -> SingularValue:
    """l(theta), certified as the root of F_10 nearest the direct evaluation."""
    cm = CMPoint(d_K)
    F = class_polynomial(d_K, 10, prec)
    direct = eval_product(L_QUOTIENT, cm.theta(F.prec), F.prec)
    dists = sorted((float(abs(r - direct)), k) for k, r in enumerate(F.roots))
    root = F.roots[dists[0][1]]
    sep = min(float(abs(root - r)) for k, r in enumerate(F.roots) if k != dists[0][1]) if len(F.roots) > 1 else float("inf")
    if sep < 2.0 ** (-prec / 4):
        raise ArithmeticError("roots too close to separate; raise the precision")
    with mp.workprec(F.prec):
        x = root.value
        fx = sum(c * x ** (F.degree - k) for k, c in enumerate(F.coeffs))
        dfx = sum(c * (F.degree - k) * x ** (F.degree - k - 1) for k, c in enumerate(F.coeffs[:-1]))
        err = float(abs(fx / dfx)) if dfx else float("inf")
    if dists[0][0] > sep / 2:
        raise ArithmeticError("direct evaluation does not single out a root")
    return SingularValue(F, root, err, sep)


def rab_from_l(lv: BigComplex, a: int, b: int) -> BigComplex:
    """r^a r(2tau)^b = l^((b-2a)/5) ((l-1)/(l+1))^((a+2b)/5)."""
    if (a - 3 * b) % 5:
        raise ValueError("need a = 3b mod 5")
    e1, e2 = (b - 2 * a) // 5, (a + 2 * b) // 5
    with mp.workprec(lv.prec):
        x = lv.value
        return BigComplex(x**e1 * ((x - 1) / (x + 1)) ** e2, lv.prec)


def eval_rab_at(d_K: int, a: int, b: int, prec: int = 256) -> tuple[BigComplex, BigComplex]:
    """(value from the certified l-root, direct product value) of r^a r(2tau)^b at theta."""
    sv = singular_value(d_K, prec)
    cm = CMPoint(d_K)
    via_l = rab_from_l(sv.value, a, b)
    direct = eval_product(rab_quotient(a, b), cm.theta(prec), prec)
    return via_l, direct


L2 = BivarPoly({(0, 0): 1, (1, 0): 1, (1, 1): -2, (1, 2): -1, (2, 2): 1})


def propagate_level2(l_at_tau, tau, direction: str, prec: int = 192) -> BigComplex:
    """l(tau/2) ('halve') or l(2 tau) ('double') from l(tau) by the level-2 equation."""
    from .numeric import as_big

    v = l_at_tau if isinstance(l_at_tau, BigComplex) else as_big(l_at_tau, prec)
    t = as_big(tau, prec)
    with mp.workprec(prec + 16):
        z = v.value
        if direction == "halve":
            # L2(X, z) = z^2 X^2 + (1 - 2z - z^2) X + 1
            A, B, C = sum(L2[(2, j)] * z**j for j in range(3)), sum(L2[(1, j)] * z**j for j in range(3)), sum(L2[(0, j)] * z**j for j in range(3))
            target = t.value / 2
        elif direction == "double":
            A, B, C = sum(L2[(i, 2)] * z**i for i in range(3)), sum(L2[(i, 1)] * z**i for i in range(3)), sum(L2[(i, 0)] * z**i for i in range(3))
            target = t.value * 2
        else:
            raise ValueError("direction must be 'halve' or 'double'")
        disc = B * B - 4 * A * C
        if abs(disc) < mp.mpf(2) ** (-prec // 2):
            raise ArithmeticError("discriminant too close to zero to separate the roots")
        s = mp.sqrt(disc)
        roots = [(-B + s) / (2 * A), (-B - s) / (2 * A)]
    guess = eval_product(L_QUOTIENT, BigComplex(target, 96), 96)
    best = min(roots, key=lambda r: abs(r - guess.value))
    return BigComplex(best, prec)
