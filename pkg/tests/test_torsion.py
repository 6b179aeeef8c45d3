from fractions import Fraction

import pytest

from dualselmer.arith import FqPoly, is_irreducible, make_field, poly_factor
from dualselmer.curve import WeierstrassCurve
from dualselmer.errors import (
    BadIndex,
    BadReduction,
    DivisorSearchExhausted,
    SamePrime,
)
from dualselmer.integers import is_prime
from dualselmer.torsion import (
    division_poly,
    embed_curve,
    has_p_torsion_in_cyc_tower,
    point_add,
    point_mul,
    point_neg,
    rational_p_torsion,
    torsion_point_degrees,
)

from helpers import curve_points, monic_polys, oracle_mul

E21A4 = WeierstrassCurve(1, 0, 0, 1, 0)
A1950Y1 = WeierstrassCurve(1, 0, 0, -355303, -89334583)
E_J0 = WeierstrassCurve(0, 0, 0, 0, 1)


# -- division polynomials --------------------------------------------------------


def test_division_poly_base_cases():
    assert division_poly(E21A4, 1) == (1,)
    with pytest.raises(BadIndex):
        division_poly(E21A4, 0)


def test_division_poly_psi3_formula():
    for curve in (E21A4, A1950Y1, E_J0):
        b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
        assert division_poly(curve, 3) == (b8, 3 * b6, 3 * b4, b2, 3)


def test_division_poly_psi3_j0():
    assert division_poly(E_J0, 3) == (0, 12, 0, 0, 3)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_division_poly_degree_and_leading(n):
    psi = division_poly(E21A4, n)
    assert len(psi) - 1 == (n * n - 1) // 2
    assert psi[-1] == n


def test_division_poly_roots_are_torsion_x_coordinates():
    # over primes where E gains 5-torsion, the roots of psi_5 are exactly the
    # x-coordinates of the points annihilated by 5 (checked with an
    # independent chord-and-tangent law and a full point enumeration)
    psi5 = division_poly(E21A4, 5)
    for r in (41, 73):
        field = make_field(r, 1)
        ai = embed_curve(E21A4, field)
        tors_x = set()
        for point in curve_points(E21A4, field):
            if point is not None and oracle_mul(ai, 5, point) is None:
                tors_x.add(point[0])
        roots = {
            x for x in field.elements()
            if FqPoly.from_ints(field, psi5).evaluate(x).is_zero()
        }
        assert tors_x == roots and roots


def test_division_poly_root_lifts_to_point_killed_by_p():
    # take a degree-3 x-factor over F_(2^4); the point lives in the quadratic
    # extension of F_(2^12) built from the y-quadratic itself
    F = make_field(2, 4)
    psi = FqPoly.from_ints(F, division_poly(E21A4, 5))
    factor = poly_factor(psi)[0][0]
    assert factor.degree == 3
    R = F.extension(factor)
    x0 = R.gen()
    e1, e2, e3, e4, e6 = embed_curve(E21A4, R)
    beta = e1 * x0 + e3
    gamma = -(((x0 + e2) * x0 + e4) * x0 + e6)
    yquad = FqPoly(R, (gamma, beta, R.one()))
    assert is_irreducible(yquad)
    R2 = R.extension(yquad)
    x_lift = R2.element([x0])
    y0 = R2.gen()
    ai = embed_curve(E21A4, R2)
    # on the curve by construction of R2
    assert (
        y0 * y0 + ai[0] * x_lift * y0 + ai[2] * y0
        == ((x_lift + ai[1]) * x_lift + ai[3]) * x_lift + ai[4]
    )
    point = (x_lift, y0)
    assert oracle_mul(ai, 5, point) is None
    assert oracle_mul(ai, 1, point) is not None


# -- torsion degree profiles -------------------------------------------------------


def test_profile_21a4_q2():
    prof = torsion_point_degrees(E21A4, 5, 2, 4)
    assert prof.x_factor_degrees == (3, 3, 3, 3)
    assert prof.point_degrees == (6, 6, 6, 6)


def test_profile_21a4_q13():
    prof = torsion_point_degrees(E21A4, 5, 13, 4)
    assert prof.x_factor_degrees == (3, 3, 3, 3)
    assert prof.point_degrees == (6, 6, 6, 6)


def test_profile_x_degrees_sum():
    # leading coefficient p is a unit mod q, so the degrees add to (p^2-1)/2,
    # and each point degree is m or 2m for its aligned x-degree m
    for q, f in ((2, 4), (13, 4), (11, 1)):
        prof = torsion_point_degrees(E21A4, 5, q, f)
        assert sum(prof.x_factor_degrees) == 12
        assert all(
            d in (m, 2 * m)
            for m, d in zip(prof.x_factor_degrees, prof.point_degrees)
        )


def test_profile_rational_torsion_gives_degree_one():
    # A has a rational 5-torsion point and good reduction at 7
    prof = torsion_point_degrees(A1950Y1, 5, 7, 1)
    assert 1 in prof.x_factor_degrees
    assert 1 in prof.point_degrees


def test_profile_errors():
    with pytest.raises(SamePrime):
        torsion_point_degrees(E21A4, 5, 5, 1)
    with pytest.raises(BadReduction):
        torsion_point_degrees(E21A4, 5, 3, 4)


# -- tower torsion criterion ---------------------------------------------------------


def test_tower_torsion_paper_cases():
    assert has_p_torsion_in_cyc_tower(E21A4, 5, 2, 4) is False
    assert has_p_torsion_in_cyc_tower(E21A4, 5, 13, 4) is False


def test_tower_torsion_rational_point():
    assert has_p_torsion_in_cyc_tower(A1950Y1, 5, 7, 1) is True


def test_tower_torsion_monotone_in_f():
    assert has_p_torsion_in_cyc_tower(A1950Y1, 5, 7, 1)
    for f in (2, 3):
        assert has_p_torsion_in_cyc_tower(A1950Y1, 5, 7, f)


def _predicted_order_p_count(profile, s):
    # points of order p over F_(q^(f*s)): an x-factor of degree m whose
    # aligned point degree d divides s contributes its m x-coordinates with
    # two points each (p odd, so P != -P)
    return sum(
        2 * m
        for m, d in zip(profile.x_factor_degrees, profile.point_degrees)
        if s % d == 0
    )


def test_order5_count_prediction_f41():
    profile = torsion_point_degrees(E21A4, 5, 41, 1)
    predicted = _predicted_order_p_count(profile, 1)
    field = make_field(41, 1)
    ai = embed_curve(E21A4, field)
    brute = sum(
        1
        for point in curve_points(E21A4, field)
        if point is not None and oracle_mul(ai, 5, point) is None
    )
    assert predicted == brute == 4


# -- rational p-torsion ----------------------------------------------------------------


def test_rational_5_torsion_of_A():
    point = rational_p_torsion(A1950Y1, 5)
    assert point == (Fraction(806), Fraction(11765))
    ai = tuple(Fraction(a) for a in A1950Y1.a_invariants)
    assert point_mul(ai, 5, point) is None
    for m in (1, 2, 3, 4):
        assert point_mul(ai, m, point) is not None


def test_rational_3_torsion_j0():
    assert rational_p_torsion(E_J0, 3) == (Fraction(0), Fraction(1))


def test_rational_5_torsion_of_E_none():
    assert rational_p_torsion(E21A4, 5) is None


def test_rational_torsion_divisor_search_exhausted():
    # constant term of psi_3 is -p1*p2 with both primes above the trial
    # bound, so the divisor enumeration cannot be certified complete
    p1 = 10 ** 6 + 3
    p2 = next(
        n for n in range(p1 + 1, p1 + 500) if is_prime(n) and p1 * n % 4 == 1
    )
    assert is_prime(p1) and p1 * p2 % 4 == 1
    a6 = (1 - p1 * p2) // 4
    curve = WeierstrassCurve(0, 1, 0, 1, a6)
    assert curve.b8 == -p1 * p2
    with pytest.raises(DivisorSearchExhausted):
        rational_p_torsion(curve, 3)


# -- group law helpers ---------------------------------------------------------------


def test_point_ops_match_oracle_over_prime_field():
    field = make_field(11, 1)
    ai = embed_curve(E21A4, field)
    points = curve_points(E21A4, field)
    for P in points:
        for Q in points[:5]:
            assert point_add(ai, P, Q) == (
                point_add(ai, Q, P)
            )
        assert point_add(ai, P, point_neg(ai, P)) is None
    # associativity spot check
    P, Q, R = points[1], points[2], points[3]
    assert point_add(ai, point_add(ai, P, Q), R) == point_add(
        ai, P, point_add(ai, Q, R)
    )


def test_point_mul_matches_repeated_addition():
    field = make_field(11, 1)
    ai = embed_curve(E21A4, field)
    P = next(p for p in curve_points(E21A4, field) if p is not None)
    acc = None
    for n in range(8):
        assert point_mul(ai, n, P) == acc
        acc = point_add(ai, acc, P)
