"""Exact plane geometry: canonical lines, incidence, general position."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcnlab import (
    DuplicateLine,
    IdenticalLines,
    IdenticalPoints,
    Line,
    ParallelLines,
    Point,
    general_position,
    intersect,
    is_incident,
    line_through,
    to_scalar,
)

rationals = st.fractions(
    min_value=-8, max_value=8, max_denominator=12
)
points = st.builds(Point, rationals, rationals)
line_coeffs = st.tuples(
    st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)
).filter(lambda t: (t[0], t[1]) != (0, 0))
lines = st.builds(lambda t: Line(*t), line_coeffs)


class TestLineCanonicalization:
    def test_gcd_reduced_and_sign_fixed(self):
        assert Line(2, -2, 4).coefficients == (1, -1, 2)
        assert Line(-3, 0, 6).coefficients == (1, 0, -2)
        assert Line(0, -5, 5).coefficients == (0, 1, -1)

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            Line(0, 0, 7)

    def test_rejects_non_integer(self):
        with pytest.raises(TypeError):
            Line(Fraction(1, 2), 1, 0)

    def test_from_rationals_clears_denominators(self):
        assert Line.from_rationals(Fraction(1, 2), Fraction(1, 3), -1).coefficients == (3, 2, -6)

    @given(lines)
    def test_idempotent(self, l):
        assert Line(*l.coefficients) == l


class TestLineThrough:
    def test_diagonal_through_origin(self):
        assert line_through(Point(0, 0), Point(1, 1)) == Line(1, -1, 0)

    def test_y_axis(self):
        assert line_through(Point(0, 0), Point(0, 1)) == Line(1, 0, 0)

    def test_rational_intercepts(self):
        # clears denominators of x/(1/2) + y/(1/3) = 1
        got = line_through(Point(Fraction(1, 2), 0), Point(0, Fraction(1, 3)))
        assert got == Line(2, 3, -1)

    def test_identical_points(self):
        with pytest.raises(IdenticalPoints):
            line_through(Point(1, 2), Point(1, 2))

    @given(points, points)
    def test_symmetric_and_incident(self, p, q):
        if p == q:
            with pytest.raises(IdenticalPoints):
                line_through(p, q)
            return
        l = line_through(p, q)
        assert l == line_through(q, p)
        assert is_incident(p, l) and is_incident(q, l)


class TestIntersect:
    def test_axes(self):
        assert intersect(Line(1, 0, 0), Line(0, 1, 0)) == Point(0, 0)

    def test_parallel(self):
        with pytest.raises(ParallelLines):
            intersect(Line(1, 0, 0), Line(1, 0, -1))

    def test_identical(self):
        with pytest.raises(IdenticalLines):
            intersect(Line(1, 0, 0), Line(2, 0, 0))

    def test_two_by_two_system(self):
        assert intersect(Line(1, 1, -1), Line(1, -1, 0)) == Point(
            Fraction(1, 2), Fraction(1, 2)
        )

    @given(lines, lines)
    def test_intersection_is_incident_to_both(self, l1, l2):
        if l1 == l2 or l1.a * l2.b - l2.a * l1.b == 0:
            return
        p = intersect(l1, l2)
        assert is_incident(p, l1) and is_incident(p, l2)


class TestIsIncident:
    def test_on_diagonal(self):
        assert is_incident(Point(0, 0), Line(1, -1, 0))
        assert is_incident(Point(Fraction(1, 3), Fraction(1, 3)), Line(1, -1, 0))

    def test_off_diagonal(self):
        assert not is_incident(Point(1, 0), Line(1, -1, 0))


class TestGeneralPosition:
    def test_triangle(self):
        assert general_position([Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)])

    def test_concurrent(self):
        assert not general_position([Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0)])

    def test_parallel_pair(self):
        assert not general_position([Line(1, 0, 0), Line(1, 0, -1), Line(0, 1, 0)])

    def test_duplicate(self):
        with pytest.raises(DuplicateLine):
            general_position([Line(1, 0, 0), Line(2, 0, 0)])

    @given(st.lists(lines, min_size=2, max_size=5, unique=True), st.randoms())
    def test_permutation_invariant(self, ls, rng):
        shuffled = list(ls)
        rng.shuffle(shuffled)
        assert general_position(ls) == general_position(shuffled)


class TestScalar:
    def test_rejects_float(self):
        with pytest.raises(TypeError):
            to_scalar(0.5)
        with pytest.raises(TypeError):
            Point(0.5, 0)

    def test_accepts_exact_forms(self):
        assert to_scalar("2/3") == Fraction(2, 3)
        assert to_scalar(7) == 7
        assert Point("1/2", 0).x == Fraction(1, 2)

    @given(rationals)
    def test_lowest_terms_positive_denominator(self, q):
        s = to_scalar(q)
        from math import gcd

        assert s.denominator > 0
        assert gcd(s.numerator, s.denominator) == 1
