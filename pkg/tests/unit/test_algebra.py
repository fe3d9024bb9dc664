"""Unit tests for exact scalars, quartic forms, chart decompositions and series."""

import pytest
from sympy import Rational

from app.core.errors import ArithmeticFailure, DegenerateConfiguration, InputError
from app.core.scalars import (
    ALPHA,
    BETA,
    FIELD,
    evaluate,
    format_scalar,
    integer_pair,
    is_rational,
    parse_scalar,
    polynomial_ring,
    to_scalar,
)
from app.models.algebra import LiftSeries, SeriesTerm, UnknownSlot, monomial_name, quartic_monomials
from app.models.geometry import EDGES, Coordinate, Edge, ProjectivePoint
from app.services.algebra.charts import chart_decompose, chart_roles, evaluate_part
from app.services.algebra.polynomials import (
    binary_coefficients,
    dehomogenize,
    evaluate_form,
    homogenize,
    quartic_from_expression,
    restrict,
)
from app.services.algebra.series import coefficient_of, equation_at, series_collect
from app.services.verification.suite import random_quartic


class TestScalars:
    """Test the coefficient field Q(alpha, beta, gamma, delta, s)."""

    def test_parse_rational(self):
        """Test that p/q parses to an exact rational."""
        assert parse_scalar("3/6") == FIELD(Rational(1, 2))
        assert is_rational(parse_scalar("-7"))

    def test_parse_parameters(self):
        """Test that parameter names and Greek letters parse to the field generators."""
        assert parse_scalar("alpha*beta") == ALPHA * BETA
        assert parse_scalar("β^2") == BETA**2

    def test_parse_unknown_name(self):
        """Test that names outside the grammar are rejected."""
        with pytest.raises(InputError):
            parse_scalar("x + 1")

    def test_format_round_trip(self):
        """Test that formatted scalars parse back to the same element."""
        value = (ALPHA + 1) / (BETA**2 - 3)
        assert parse_scalar(format_scalar(value)) == value
        assert format_scalar(FIELD(Rational(-2, 3))) == "-2/3"

    def test_integer_pair(self):
        """Test coprime integer representatives of projective pairs."""
        assert integer_pair(to_scalar(1), parse_scalar("-1/2")) == (2, -1)
        assert integer_pair(to_scalar(-4), to_scalar(6)) == (2, -3)
        assert integer_pair(to_scalar(0), to_scalar(-5)) == (0, 1)

    def test_integer_pair_rejects_parameters(self):
        """Test that integer pairs need parameter-free scalars."""
        with pytest.raises(ArithmeticFailure):
            integer_pair(ALPHA, to_scalar(1))

    def test_evaluate(self):
        """Test evaluation at a full assignment of the generators."""
        poly = quartic_from_expression("x^3*w + 2*y^4").poly
        assert evaluate(poly, [1, 0, 0, 3]) == 3
        assert evaluate(poly, [ALPHA, 1, 0, 1]) == ALPHA**3 + 2
        assert evaluate(quartic_from_expression("x*y*z*w").poly, [1, 1, 1, 1]) == 1

    def test_evaluate_needs_every_generator(self):
        """Test that a partial assignment is rejected."""
        with pytest.raises(ArithmeticFailure):
            evaluate(quartic_from_expression("x^4").poly, [1, 2])

    def test_to_scalar_rejects_bool(self):
        """Test that booleans are not silently treated as integers."""
        with pytest.raises(InputError):
            to_scalar(True)


class TestQuarticForm:
    """Test quartic forms in x, y, z, w."""

    def test_monomial_count(self):
        """Test that there are 35 quartic monomials, each of degree 4."""
        monomials = quartic_monomials()
        assert len(monomials) == 35
        assert len(set(monomials)) == 35
        assert all(sum(m) == 4 for m in monomials)
        assert monomials[0] == (4, 0, 0, 0)

    def test_monomial_name(self):
        """Test readable monomial names."""
        assert monomial_name((3, 0, 0, 1)) == "x^3*w"
        assert monomial_name((1, 2, 1, 0)) == "x*y^2*z"

    def test_from_expression(self):
        """Test parsing a quartic from an expression."""
        f = quartic_from_expression("x^4 + 2*x*y*z*w - alpha*w^4")
        assert f.coefficient((4, 0, 0, 0)) == 1
        assert f.coefficient((1, 1, 1, 1)) == 2
        assert f.coefficient((0, 0, 0, 4)) == -ALPHA
        assert not f.is_rational()

    def test_from_expression_not_homogeneous(self):
        """Test that non-quartic expressions are rejected."""
        with pytest.raises(InputError):
            quartic_from_expression("x^3 + y^4")

    def test_split_and_add(self):
        """Test that a form is the sum of its single-term parts."""
        f = quartic_from_expression("x^4 - 3*y^2*z*w + z^4")
        parts = f.split()
        assert len(parts) == 3
        total = parts[0]
        for part in parts[1:]:
            total = total + part
        assert total == f
        assert not (f - f)

    def test_evaluate(self):
        """Test evaluation at a point of P^3."""
        f = quartic_from_expression("x*y*z*w + x^4")
        assert evaluate_form(f, ProjectivePoint.of(1, 2, 3, 4)) == 25


class TestPolynomials:
    """Test dehomogenization and restriction to edge lines."""

    def test_dehomogenize_homogenize(self):
        """Test that homogenizing a chart polynomial recovers the form."""
        f = quartic_from_expression("x^4 + x^2*y*w - 5*z^3*w + w^4")
        assert homogenize(dehomogenize(f, "x"), "x") == f

    def test_restrict_to_edge(self):
        """Test that restriction keeps only monomials in the surviving coordinates."""
        f = quartic_from_expression("6*x^4 + 5*x^3*y - 38*x^2*y^2 + 5*x*y^3 + 6*y^4 + z*w^3")
        form = restrict(f, Edge.of("z", "w"))
        assert binary_coefficients(form) == tuple(to_scalar(v) for v in (6, 5, -38, 5, 6))


class TestChartDecomposition:
    """Test the split of f around a point of an edge."""

    def test_roles(self):
        """Test that the pivot defaults to the first nonzero coordinate."""
        roles = chart_roles(ProjectivePoint.of(0, 2, 0, 5))
        assert roles == (Coordinate.Y, Coordinate.W, Coordinate.X, Coordinate.Z)

    def test_off_edge_point_rejected(self):
        """Test that the base point must lie on an edge line."""
        with pytest.raises(DegenerateConfiguration):
            chart_roles(ProjectivePoint.of(1, 1, 1, 0))

    def test_parts(self):
        """Test c0, g1, g2, g3 on a small quartic at [1:2:0:0]."""
        f = quartic_from_expression("x^4 + x^2*y^2 + x^3*z + y^3*w")
        d = chart_decompose(f, ProjectivePoint.of(1, 2, 0, 0))
        assert d.anchor == 2
        # rest = 1 + Y^2 at Y = 2
        assert d.c0 == 5
        # g1 = (Y^2 - 4)/(Y - 2) = Y + 2
        assert evaluate_part(d, "g1") == 4
        # g2 = 1 from x^3 z, g3 = Y^3 from y^3 w
        assert evaluate_part(d, "g2") == 1
        assert evaluate_part(d, "g3") == 8

    @pytest.mark.parametrize("edge", EDGES, ids=lambda e: e.name)
    def test_reassembles_on_every_edge(self, edge, rng):
        """Test that c0 + (Y_F - A) g1 + Y_M g2 + Y_L g3 is f / P^4 at a random point of each edge."""
        f = random_quartic(rng)
        point = edge.point(1, 3)
        for pivot in edge.surviving:
            d = chart_decompose(f, point, pivot)
            assert d.pivot == pivot
            assert set(edge.vanishing) == {d.middle, d.last}
            assert d.reassemble() == dehomogenize(f, pivot)

    @pytest.mark.parametrize("edge", EDGES, ids=lambda e: e.name)
    def test_linear_in_f(self, edge, rng):
        """Test that every part of the decomposition is linear in f."""
        f, g = random_quartic(rng), random_quartic(rng)
        point = edge.point(2, -1)
        total = chart_decompose(f + g.scale(3), point)
        df, dg = chart_decompose(f, point), chart_decompose(g, point)
        assert total.c0 == df.c0 + 3 * dg.c0
        assert total.g1 == df.g1 + dg.g1 * 3
        assert total.g2 == df.g2 + dg.g2 * 3
        assert total.g3 == df.g3 + dg.g3 * 3


class TestSeriesCollect:
    """Test substitution of lift series into chart equations."""

    def test_pole_cancels_against_parameter(self):
        """Test that X = u and Y = t/u give X*Y = t."""
        ring = polynomial_ring(("X", "Y"))
        X, Y = ring.gens
        lift = LiftSeries(
            parameter="u",
            order=1,
            coordinates={
                "X": (SeriesTerm.of((0, 1)),),
                "Y": (SeriesTerm(), SeriesTerm.of(pole=1)),
            },
        )
        equations = series_collect(X * Y, lift, 1, max_u=2)
        assert coefficient_of(equations, 1, 0) == 1
        assert coefficient_of(equations, 0, 0) == 0
        assert coefficient_of(equations, 1, 1) == 0

    def test_missing_coordinate(self):
        """Test that every equation coordinate must be parametrized."""
        ring = polynomial_ring(("X", "Y"))
        X, Y = ring.gens
        lift = LiftSeries(parameter="u", order=0, coordinates={"X": (SeriesTerm.of((0, 1)),)})
        with pytest.raises(ArithmeticFailure):
            series_collect(X * Y, lift, 0)

    def test_unknown_is_affine(self):
        """Test that X = u + 2t and Y = t (3 + e)/u give X*Y + 5X = 5u + t(13 + e) + O(t^2)."""
        ring = polynomial_ring(("X", "Y"))
        X, Y = ring.gens
        lift = LiftSeries(
            parameter="u",
            order=1,
            coordinates={
                "X": (SeriesTerm.of((0, 1)), SeriesTerm.of((2,))),
                "Y": (SeriesTerm(), SeriesTerm.of(pole=3)),
            },
        )
        slots = {"e": (UnknownSlot(coordinate="Y", t_power=1, u_power=-1),)}
        equations = series_collect(X * Y + 5 * X, lift, 1, max_u=1, unknowns=slots)
        eq = equation_at(equations, 1, 0)
        assert eq.value == 13
        assert eq.linear == {"e": 1}
        assert eq.slope("e") == 1
        assert equation_at(equations, 1, 1).slope("e") == 0
        assert coefficient_of(equations, 0, 1) == 5

    def test_unknown_on_missing_coordinate(self):
        """Test that unknowns must sit on a parametrized coordinate with a fresh name."""
        ring = polynomial_ring(("X",))
        (X,) = ring.gens
        lift = LiftSeries(parameter="u", order=1, coordinates={"X": (SeriesTerm.of((0, 1)), SeriesTerm())})
        with pytest.raises(ArithmeticFailure):
            series_collect(X, lift, 1, unknowns={"e": (UnknownSlot(coordinate="Y", t_power=1, u_power=0),)})
        with pytest.raises(ArithmeticFailure):
            series_collect(X, lift, 1, unknowns={"X": (UnknownSlot(coordinate="X", t_power=1, u_power=0),)})

    def test_unknown_slot_bounds(self):
        """Test that unknowns sit at positive powers of t with at most a simple pole."""
        with pytest.raises(ValueError):
            UnknownSlot(coordinate="X", t_power=0, u_power=0)
        with pytest.raises(ValueError):
            UnknownSlot(coordinate="X", t_power=1, u_power=-2)

    def test_unperturbed_pole_rejected(self):
        """Test that the t^0 part of a lift has no pole."""
        with pytest.raises(ValueError):
            LiftSeries(parameter="u", order=0, coordinates={"X": (SeriesTerm.of(pole=1),)})
