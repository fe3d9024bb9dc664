"""Chart decomposition of f around a point of an edge line."""

import logging
from typing import Optional

from app.core.errors import DegenerateConfiguration
from app.core.scalars import FIELD, Scalar, evaluate
from app.models.algebra import ChartDecomposition, QuarticForm
from app.models.geometry import COORDINATES, Coordinate, ProjectivePoint, coordinate
from app.services.algebra.polynomials import chart_names, dehomogenize

logger = logging.getLogger(__name__)


def chart_roles(
    base_point: ProjectivePoint, chart: Optional["Coordinate | str"] = None
) -> tuple[Coordinate, Coordinate, Coordinate, Coordinate]:
    """
    Pivot, first, middle and last coordinates for a point on an edge.

    The pivot defaults to the first coordinate that is nonzero at the point.
    """
    zeros = base_point.zero_coordinates()
    if len(zeros) != 2:
        raise DegenerateConfiguration(
            f"Base point {base_point} is not on an edge line of the central fiber"
        )
    nonzero = [c for c in COORDINATES if c not in zeros]
    pivot = coordinate(chart) if chart is not None else nonzero[0]
    if pivot not in nonzero:
        raise DegenerateConfiguration(
            f"Pivot {pivot.value} vanishes at the base point {base_point}"
        )
    first = next(c for c in nonzero if c != pivot)
    middle, last = zeros
    return pivot, first, middle, last


def chart_decompose(
    f: QuarticForm,
    base_point: ProjectivePoint,
    chart: Optional["Coordinate | str"] = None,
) -> ChartDecomposition:
    """
    Split f / pivot^4 around a node image.

    Monomials containing the last vanishing coordinate go to g3, the remaining
    ones containing the middle coordinate go to g2, and the rest is a polynomial
    in the first coordinate alone, written as c0 + (Y_F - A) g1(Y_F) with
    c0 its value at the base point.

    Args:
        f: The quartic
        base_point: Point in the interior of an edge line
        chart: Pivot coordinate; defaults to the first nonzero coordinate

    Returns:
        The decomposition, verified to reassemble to f / pivot^4
    """
    pivot, first, middle, last = chart_roles(base_point, chart)
    source = dehomogenize(f, pivot)
    ring = source.ring
    names = list(chart_names(pivot))
    i_first = names.index(f"{first.value}_{pivot.value}")
    i_middle = names.index(f"{middle.value}_{pivot.value}")
    i_last = names.index(f"{last.value}_{pivot.value}")
    anchor = base_point[first] / base_point[pivot]

    g2_terms, g3_terms, rest_terms = {}, {}, {}
    for monom, coeff in source.items():
        if monom[i_last] > 0:
            shifted = list(monom)
            shifted[i_last] -= 1
            g3_terms[tuple(shifted)] = coeff
        elif monom[i_middle] > 0:
            shifted = list(monom)
            shifted[i_middle] -= 1
            g2_terms[tuple(shifted)] = coeff
        else:
            rest_terms[monom] = coeff

    rest = ring.from_dict(rest_terms)
    values = [FIELD.zero] * 3
    values[i_first] = anchor
    c0 = evaluate(rest, values)
    y_first = ring.gens[i_first]
    g1 = (rest - c0).exquo(y_first - anchor)

    logger.debug(f"Chart {pivot.value} at {base_point}: c0 = {c0}")
    return ChartDecomposition(
        pivot=pivot,
        first=first,
        middle=middle,
        last=last,
        base_point=base_point,
        anchor=anchor,
        c0=c0,
        g1=g1,
        g2=ring.from_dict(g2_terms),
        g3=ring.from_dict(g3_terms),
        source=source,
    )


def evaluate_part(decomposition: ChartDecomposition, part: str) -> Scalar:
    """g1, g2 or g3 evaluated at the chart coordinates of the base point."""
    poly = {"g1": decomposition.g1, "g2": decomposition.g2, "g3": decomposition.g3}[part]
    return evaluate(poly, decomposition.base_values())
