"""Cusps of Gamma0(m), Gamma1(N) and Gamma1(N) cap Gamma0(mN).

All three groups are handled as Gamma1(N) cap Gamma0(mN): Gamma0(m) is the
case N = 1 and Gamma1(N) the case m = 1.  Cusps are the pairs (a, c) with
gcd(a, c) = 1, read as a/c, with infinity = 1/0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd



@dataclass(frozen=True, order=True)
class Cusp:
    a: int
    c: int

    def __post_init__(self):
        a, c = self.a, self.c
        if c < 0:
            a, c = -a, -c
        if gcd(a, c) != 1:
            raise ValueError(f"{self.a}/{self.c} is not in lowest terms")
        if c == 0:
            a = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def parse(cls, text: str) -> "Cusp":
        t = text.strip().lower()
        if t in ("oo", "inf", "infinity", "∞", "1/0"):
            return cls(1, 0)
        if "/" in t:
            a, c = t.split("/")
            return cls(int(a), int(c))
        return cls(int(t), 1)

    def is_infinity(self) -> bool:
        return self.c == 0

    def __str__(self):
        return "oo" if self.c == 0 else f"{self.a}/{self.c}"


INFINITY = Cusp(1, 0)


@dataclass(frozen=True)
class GroupDesc:
    kind: str  # "Gamma0" | "Gamma1" | "Gamma1capGamma0"
    N: int
    m: int = 1

    def __post_init__(self):
        if self.kind not in ("Gamma0", "Gamma1", "Gamma1capGamma0"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.N < 1 or self.m < 1:
            raise ValueError("group parameters must be positive")
        if self.kind != "Gamma1capGamma0" and self.m != 1:
            raise ValueError("m is only meaningful for Gamma1(N) cap Gamma0(mN)")

    @classmethod
    def gamma0(cls, m: int) -> "GroupDesc":
        return cls("Gamma0", m)

    @classmethod
    def gamma1(cls, N: int) -> "GroupDesc":
        return cls("Gamma1", N)

    @classmethod
    def mixed(cls, N: int, m: int) -> "GroupDesc":
        return cls("Gamma1capGamma0", N, m)

    @property
    def params(self) -> tuple[int, int]:
        """(N, m) such that the group is Gamma1(N) cap Gamma0(mN)."""
        if self.kind == "Gamma0":
            return 1, self.N
        return self.N, self.m

    @property
    def modulus(self) -> int:
        N, m = self.params
        return N * m

    def contains(self, g) -> bool:
        """Membership of an integer matrix ((a, b), (c, d)) of determinant 1."""
        (a, b), (c, d) = g
        N, m = self.params
        return c % (N * m) == 0 and (a - 1) % N == 0 and (d - 1) % N == 0

    def __str__(self):
        if self.kind == "Gamma0":
            return f"Gamma0({self.N})"
        if self.kind == "Gamma1":
            return f"Gamma1({self.N})"
        return f"Gamma1({self.N}) cap Gamma0({self.N * self.m})"


@lru_cache(maxsize=None)
def delta_group(N: int, m: int) -> tuple[int, ...]:
    """The units +-(1 + N k) modulo mN."""
    M = N * m
    out = set()
    for k in range(m):
        for s in (1 + N * k, -(1 + N * k)):
            if gcd(s, M) == 1:
                out.add(s % M)
    return tuple(sorted(out))


def _orbit_key(N: int, m: int, a: int, c: int) -> tuple[int, int]:
    """Smallest (c', a') mod mN in the class of (a, c) under (a, c) -> (s^-1 a + n c, s c)."""
    M = N * m
    return _orbit_key_reduced(N, m, a % M, c % M)


@lru_cache(maxsize=None)
def _orbit_key_reduced(N: int, m: int, a: int, c: int) -> tuple[int, int]:
    M = N * m
    if M == 1:
        return (0, 0)
    # for fixed s, a' sweeps the residue class of s^-1 a modulo gcd(c, M)
    step = gcd(c, M)
    return min(((s * c) % M, (pow(s, -1, M) * a) % step) for s in delta_group(N, m))


def cusp_equivalent(G: GroupDesc, x: Cusp, y: Cusp) -> bool:
    N, m = G.params
    return _orbit_key(N, m, x.a, x.c) == _orbit_key(N, m, y.a, y.c)


def cusp_equivalent_search(G: GroupDesc, x: Cusp, y: Cusp) -> bool:
    """The same test by exhaustive search over s and n; kept as a cross-check."""
    N, m = G.params
    M = N * m
    for s in delta_group(N, m):
        s_inv = pow(s, -1, M) if M > 1 else 0
        if (y.c - s * x.c) % M:
            continue
        for n in range(M):
            if (y.a - s_inv * x.a - n * x.c) % M == 0:
                return True
    return False


def canonical_cusp(G: GroupDesc, x: Cusp) -> Cusp:
    """Class member with the smallest c >= 0, then the smallest a >= 0."""
    N, m = G.params
    M = N * m
    target = _orbit_key(N, m, x.a, x.c)
    if _orbit_key(N, m, 1, 0) == target:
        return INFINITY
    for c in range(1, M + 1):
        # the class of a/c only depends on a modulo gcd(c, M)
        g = gcd(c, M)
        good = {r for r in range(g) if _orbit_key(N, m, r, c) == target}
        if not good:
            continue
        a = 0
        while not (a % g in good and gcd(a, c) == 1):
            a += 1
        return Cusp(a, c)
    raise AssertionError("no canonical representative found")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _units(n: int) -> list[int]:
    return [u for u in range(n) if gcd(u, n) == 1] if n > 1 else [0]


def _coset_reps(n: int, subgroup: set[int]) -> list[int]:
    """Smallest representatives of (Z/n)^x / subgroup."""
    seen: set[int] = set()
    reps = []
    for u in _units(n):
        if u in seen:
            continue
        reps.append(u)
        seen.update((u * h) % n if n > 1 else 0 for h in subgroup)
    return reps


def cusp_count(G: GroupDesc) -> int:
    """Closed-form number of inequivalent cusps."""
    N, m = G.params
    M = N * m
    total = 0
    for c in _divisors(M):
        x = M // gcd(c, M // c)
        proj = {s % x for s in delta_group(N, m)} if x > 1 else {0}
        total += totient(c) * totient(M // c) // len(proj)
    return total


def _class_reps(N: int, m: int) -> list[tuple[int, int]]:
    """Pairs (x, y) with y/x running over inequivalent cusps, built from the sets S_c and A_c."""
    M = N * m
    D = delta_group(N, m)
    out = []
    for c in _divisors(M):
        mc = M // c
        proj = {s % mc for s in D} if mc > 1 else {0}
        S_c = []
        for sp in _coset_reps(mc, proj):
            s = next(u for u in _units(M) if (u - sp) % mc == 0) if M > 1 else 0
            S_c.append(s)
        kernel = [s for s in D if (s - 1) % mc == 0]
        proj_c = {s % c for s in kernel} if c > 1 else {0}
        A_c = []
        for ap in _coset_reps(c, proj_c):
            a = next(u for u in range(1, max(M, 2)) if gcd(u, M) == 1 and (u - ap) % c == 0)
            A_c.append(a)
        for s in S_c:
            for a in A_c:
                if gcd(gcd(c * s, a), M) != 1:
                    continue
                x = (c * s) % M or M
                y = a
                while gcd(x, y) != 1:
                    y += M
                out.append((x, y))
    return out


def enumerate_cusps(G: GroupDesc) -> list[Cusp]:
    N, m = G.params
    reps = [canonical_cusp(G, Cusp(y, x)) for x, y in _class_reps(N, m)]
    keys = {_orbit_key(N, m, r.a, r.c) for r in reps}
    if len(keys) != len(reps) or len(reps) != cusp_count(G):
        raise AssertionError(f"cusp construction inconsistent for {G}")
    return sorted(reps, key=lambda r: (r.c, r.a))


def cusp_width(G: GroupDesc, x: Cusp) -> int:
    N, m = G.params
    c = x.c
    if N == 4 and m % 2 == 1 and gcd(c, 4) == 2:
        return m // gcd(c * c // 4, m)
    g = gcd(c, N)
    return (m * N) // (g * gcd(m, c * c // g))


def find_in(G: GroupDesc, x: Cusp, reps: list[Cusp]) -> Cusp:
    """The member of ``reps`` equivalent to x."""
    for r in reps:
        if cusp_equivalent(G, x, r):
            return r
    raise KeyError(f"{x} matches none of the given representatives")


def matrix_to(x: Cusp) -> tuple[tuple[int, int], tuple[int, int]]:
    """Some gamma in SL2(Z) with gamma(oo) = x."""
    a, c = x.a, x.c
    if c == 0:
        return ((1, 0), (0, 1))
    g, u, v = _egcd(a, c)  # u a + v c = 1
    return ((a, -v), (c, u))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
