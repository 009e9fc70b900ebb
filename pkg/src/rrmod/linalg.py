"""Exact nullspaces by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from gmpy2 import mpz


def _integer_rows(rows) -> list[list]:
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([mpz(Fraction(x) * den) for x in row])
    return out


def echelon(rows) -> tuple[list[list], list[int]]:
    """Fraction-free row echelon form; returns (nonzero rows, pivot columns)."""
    M = _integer_rows(rows)
    if not M:
        return [], []
    n = len(M[0])
    prev = mpz(1)
    r = 0
    pivots: list[int] = []
    for col in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        top = M[r]
        p = top[col]
        for i in range(r + 1, len(M)):
            row = M[i]
            f = row[col]
            if f:
                M[i] = [(p * x - f * y) // prev for x, y in zip(row, top)]
            elif p != prev:
                M[i] = [(p * x) // prev for x in row]
        prev = p
        pivots.append(col)
        r += 1
        # rows that became zero can be dropped early
        M = M[:r] + [row for row in M[r:] if any(row)]
    return M[:r], pivots


def primitive(vec) -> list[int]:
    """Scale a rational vector to coprime integers."""
    fr = [Fraction(x) for x in vec]
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def nullspace(rows, ncols: int | None = None) -> list[list[int]]:
    """Integer basis (primitive vectors) of {x : rows @ x = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    E, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x: list[Fraction | int] = [0] * ncols
        x[f] = 1
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = E[k]
            s = sum((int(row[j]) * x[j] for j in range(pc + 1, ncols) if x[j] and row[j]), Fraction(0))
            x[pc] = -s / int(row[pc])
        basis.append(primitive(x))
    return basis


def rank(rows) -> int:
    return len(echelon(rows)[1])
