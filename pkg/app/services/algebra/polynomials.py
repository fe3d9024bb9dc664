"""
Polynomial plumbing over the coefficient field: evaluation, dehomogenization to affine charts and restriction to edge lines.
"""
import logging
from functools import lru_cache
from typing import Sequence

from sympy.polys.rings import PolyElement, PolyRing

from app.core.errors import ArithmeticFailure, InputError
from app.core.scalars import (
    FIELD,
    Scalar,
    ScalarLike,
    evaluate,
    parse_expression,
    polynomial_ring,
)
from app.models.algebra import QUARTIC_RING, QuarticForm
from app.models.geometry import COORDINATES, Coordinate, Edge, ProjectivePoint, coordinate

logger = logging.getLogger(__name__)


def chart_names(pivot: Coordinate) -> tuple[str, ...]:
    """Affine chart coordinates c/pivot, named ``c_pivot``, in coordinate order."""
    return tuple(f"{c.value}_{pivot.value}" for c in COORDINATES if c != pivot)


@lru_cache(maxsize=None)
def chart_ring(pivot: Coordinate, with_t: bool = False) -> PolyRing:
    names = chart_names(pivot) + (("t",) if with_t else ())
    return polynomial_ring(names)


@lru_cache(maxsize=None)
def edge_ring(edge: Edge) -> PolyRing:
    return polynomial_ring(tuple(c.value for c in edge.surviving))


def evaluate_form(f: QuarticForm, point: "ProjectivePoint | Sequence[ScalarLike]") -> Scalar:
    """f at a point of P^3 (at the given representative)."""
    values = point.coords if isinstance(point, ProjectivePoint) else point
    return evaluate(f.poly, values)


def dehomogenize(f: QuarticForm, pivot: "Coordinate | str") -> PolyElement:
    """f / pivot^4 written in the affine chart where the pivot is 1."""
    pivot = coordinate(pivot)
    target = chart_ring(pivot)
    keep = [c.index for c in COORDINATES if c != pivot]
    data: dict[tuple[int, ...], Scalar] = {}
    for monom, coeff in f.poly.items():
        key = tuple(monom[i] for i in keep)
        data[key] = data.get(key, FIELD.zero) + coeff
    return target.from_dict(data)


def restrict(f: QuarticForm, edge: Edge) -> PolyElement:
    """The binary quartic f restricted to an edge line, in its two surviving coordinates."""
    target = edge_ring(edge)
    s1, s2 = edge.surviving
    data = {
        (monom[s1.index], monom[s2.index]): coeff
        for monom, coeff in f.poly.items()
        if all(monom[c.index] == 0 for c in edge.vanishing)
    }
    return target.from_dict(data)


def binary_coefficients(form: PolyElement) -> tuple[Scalar, ...]:
    """Coefficients of s1^4, s1^3 s2, ..., s2^4."""
    return tuple(form.get((4 - j, j), FIELD.zero) for j in range(5))


def homogenize(poly: PolyElement, pivot: "Coordinate | str") -> QuarticForm:
    """Inverse of ``dehomogenize`` for chart polynomials of degree at most 4."""
    pivot = coordinate(pivot)
    others = [c for c in COORDINATES if c != pivot]
    terms = {}
    for monom, coeff in poly.items():
        degree = sum(monom)
        if degree > 4:
            raise ArithmeticFailure(f"Chart polynomial of degree {degree} does not homogenize to a quartic")
        exponent = [0, 0, 0, 0]
        exponent[pivot.index] = 4 - degree
        for c, e in zip(others, monom):
            exponent[c.index] = e
        terms[tuple(exponent)] = coeff
    return QuarticForm.from_terms(terms)


def quartic_from_expression(expression: str) -> QuarticForm:
    """Parse a quartic written as a polynomial expression in x, y, z, w."""
    expr = parse_expression(expression, tuple(c.value for c in COORDINATES))
    try:
        return QuarticForm(poly=QUARTIC_RING.from_expr(expr))
    except ValueError as e:
        raise InputError(f"'{expression}' is not a homogeneous quartic: {e}")
