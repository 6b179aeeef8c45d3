"""Shared independent oracles for the test suite.

Everything here is deliberately written against the naive definition (trial
division, exhaustive enumeration, textbook chord-and-tangent formulas) rather
than reusing the library's own algorithms, so that agreement is meaningful.
"""
from __future__ import annotations

import itertools

from dualselmer.arith import FieldContext, FqPoly


def monic_polys(field: FieldContext, degree: int):
    """All monic polynomials of exactly the given degree, in a fixed order."""
    elems = list(field.elements())
    one = field.one()
    for lower in itertools.product(elems, repeat=degree):
        yield FqPoly(field, tuple(lower) + (one,))


def brute_force_factor(f: FqPoly, max_divisor_degree: int) -> dict[FqPoly, int]:
    """Factorization by trial division against every monic polynomial of
    degree <= max_divisor_degree, ascending.

    Valid whenever deg(f) <= 2 * max_divisor_degree: any composite remainder
    would have a factor of degree at most half its own, so a non-constant
    remainder at the end is irreducible.
    """
    assert f.degree <= 2 * max_divisor_degree
    g = f.monic()
    out: dict[FqPoly, int] = {}
    for d in range(1, max_divisor_degree + 1):
        if g.degree < d:
            break
        for cand in monic_polys(f.field, d):
            while g.degree >= d:
                quo, rem = divmod(g, cand)
                if not rem.is_zero():
                    break
                out[cand] = out.get(cand, 0) + 1
                g = quo
            if g.degree == 0:
                break
    if g.degree > 0:
        out[g] = out.get(g, 0) + 1
    return out


def product_of_factors(field, factors, leading):
    acc = FqPoly(field, (leading,))
    for poly, mult in factors:
        for _ in range(mult):
            acc = acc * poly
    return acc


# independent chord-and-tangent group law on y^2 + a1 xy + a3 y = x^3 + ... ----


def oracle_neg(ai, P):
    if P is None:
        return None
    a1, _, a3, _, _ = ai
    x, y = P
    return (x, -y - a1 * x - a3)


def oracle_add(ai, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, _ = ai
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y2 == oracle_neg(ai, P)[1]:
        return None
    if P == Q:
        three = x1 + x1 + x1
        num = three * x1 + (a2 + a2) * x1 + a4 - a1 * y1
        den = y1 + y1 + a1 * x1 + a3
    else:
        num = y2 - y1
        den = x2 - x1
    lam = num / den
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - (y1 - lam * x1) - a3
    return (x3, y3)


def oracle_mul(ai, n, P):
    acc = None
    for _ in range(n):
        acc = oracle_add(ai, acc, P)
    return acc


def curve_points(curve, field):
    """Every affine point by a full (x, y) double loop, plus None for the
    point at infinity."""
    e1, e2, e3, e4, e6 = (field.embed(a) for a in curve.a_invariants)
    points = [None]
    elems = list(field.elements())
    for x in elems:
        for y in elems:
            lhs = y * y + e1 * x * y + e3 * y
            rhs = ((x + e2) * x + e4) * x + e6
            if lhs == rhs:
                points.append((x, y))
    return points


def frobenius_trace_power(a_q: int, q: int, m: int) -> int:
    """t_m with t_0 = 2, t_1 = a_q, t_m = a_q t_(m-1) - q t_(m-2)."""
    t_prev, t = 2, a_q
    if m == 0:
        return 2
    for _ in range(m - 1):
        t_prev, t = t, a_q * t - q * t_prev
    return t
