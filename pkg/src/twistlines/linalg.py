"""Exact dense linear algebra over the scalar backends.

Matrices are lists of row lists.  Over the rationals the routines clear
denominators row by row and run fraction-free integer elimination (with
per-row gcd normalization) so that entry growth stays tame; over a prime
field they use ordinary modular elimination.  All pivot choices are
deterministic, which keeps every downstream certificate byte-stable.
"""

from fractions import Fraction
from math import gcd

from .fields import PrimeField, RationalField

__all__ = ["rank", "nullspace", "solve"]


def _int_rows(rows):
    """Scale each row of a Fraction matrix to a primitive integer row."""
    out = []
    for row in rows:
        lcm = 1
        for v in row:
            d = v.denominator if isinstance(v, Fraction) else 1
            lcm = lcm // gcd(lcm, d) * d
        ints = [int(v * lcm) if isinstance(v, Fraction) else int(v) * lcm for v in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _int_echelon(rows, ncols):
    """Fraction-free row echelon form; returns (rows, pivot_cols).

    Pivot rule: in each column take the surviving row whose entry has the
    smallest absolute value (lowest index on ties).
    """
    rows = [r[:] for r in rows]
    pivots = []
    pr = 0
    nrows = len(rows)
    for c in range(ncols):
        best = -1
        for i in range(pr, nrows):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < abs(rows[best][c])):
                best = i
        if best < 0:
            continue
        rows[pr], rows[best] = rows[best], rows[pr]
        rp = rows[pr]
        pv = rp[c]
        for i in range(pr + 1, nrows):
            ri = rows[i]
            v = ri[c]
            if not v:
                continue
            g = 0
            for j in range(c, ncols):
                ri[j] = ri[j] * pv - rp[j] * v
                g = gcd(g, ri[j])
            if g > 1:
                for j in range(c, ncols):
                    ri[j] //= g
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return rows[:pr], pivots


def _mod_echelon(p, rows, ncols):
    rows = [[v % p for v in r] for r in rows]
    pivots = []
    pr = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = -1
        for i in range(pr, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        rp = rows[pr]
        inv = pow(rp[c], p - 2, p)
        for j in range(c, ncols):
            rp[j] = rp[j] * inv % p
        for i in range(pr + 1, nrows):
            ri = rows[i]
            v = ri[c]
            if v:
                for j in range(c, ncols):
                    ri[j] = (ri[j] - v * rp[j]) % p
        pivots.append(c)
        pr += 1
        if pr == nrows:
            break
    return rows[:pr], pivots


def _echelon(field, rows, ncols):
    if isinstance(field, PrimeField):
        return _mod_echelon(field.p, rows, ncols)
    if isinstance(field, RationalField):
        return _int_echelon(_int_rows(rows), ncols)
    raise TypeError(f"unsupported field {field!r}")


def rank(field, rows, ncols=None) -> int:
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return len(_echelon(field, rows, ncols)[1])


def _back_substitute(field, ech, pivots, x):
    """Complete x (free coordinates already set) to a solution of ech*x = 0."""
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = ech[r]
        s = field.zero
        for j in range(pc + 1, len(x)):
            if not field.is_zero(x[j]) and not field.is_zero(field.of(row[j])):
                s = field.add(s, field.mul(field.of(row[j]), x[j]))
        x[pc] = field.neg(field.div(s, field.of(row[pc])))
    return x


def _primitive(vec):
    g = 0
    lcm = 1
    for v in vec:
        d = v.denominator if isinstance(v, Fraction) else 1
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(v * lcm) for v in vec]
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return [Fraction(v) for v in ints]


def nullspace(field, rows, ncols):
    """Canonical kernel basis, one vector per free column in ascending order.

    Over the rationals the vectors are scaled to primitive integer vectors
    with positive leading entry.
    """
    if ncols == 0:
        return []
    if not rows:
        rows = [[field.zero] * ncols]
    ech, pivots = _echelon(field, rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        x = [field.zero] * ncols
        x[fc] = field.one
        _back_substitute(field, ech, pivots, x)
        if isinstance(field, RationalField):
            x = _primitive(x)
        basis.append(x)
    return basis


def solve(field, rows, ncols, rhs):
    """One exact solution of rows * x = rhs (free coordinates 0), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return [field.zero] * ncols
    ech, pivots = _echelon(field, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * (ncols + 1)
    x[ncols] = field.neg(field.one)
    _back_substitute(field, ech, pivots, x)
    return x[:ncols]
