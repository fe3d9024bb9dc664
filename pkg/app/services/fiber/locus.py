"""Singular points of the total space on the edge lines of the central fiber."""

import logging

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from app.core.errors import ArithmeticFailure, GenericityError
from app.core.scalars import as_rational, integer_pair, to_scalar
from app.models.algebra import QuarticForm
from app.models.fiber import EdgeLocus, SingularLocus
from app.models.geometry import EDGES, Edge, ProjectivePoint
from app.services.algebra.polynomials import binary_coefficients, restrict

logger = logging.getLogger(__name__)

_AFFINE, _T = ring("T", QQ)


def edge_point(edge: Edge, root: tuple[int, int]) -> ProjectivePoint:
    """The point of P^3 with surviving coordinates (s1, s2) = root on the edge."""
    return edge.point(*root)


def rational_roots(edge: Edge, coefficients: tuple) -> list[tuple[int, int]]:
    """
    Rational roots [a:b] of a binary quartic with nonzero extreme coefficients.

    The form is dehomogenized at s1 = 1 and factored over Q; every linear
    factor c*T + d gives the root (1, -d/c).
    """
    affine = _AFFINE.from_dict(
        {(j,): QQ.from_sympy(as_rational(c)) for j, c in enumerate(coefficients) if c}
    )
    _, factors = affine.factor_list()
    roots = []
    for factor, _multiplicity in factors:
        if factor.degree() != 1:
            continue
        slope = QQ.to_sympy(factor.coeff(_T))
        offset = QQ.to_sympy(factor.coeff(1))
        roots.append(integer_pair(to_scalar(1), to_scalar(-offset / slope)))
    roots.sort(key=lambda r: r[1] / r[0])
    logger.debug(f"Edge {edge}: {len(roots)} rational roots {roots}")
    return roots


def edge_locus(f: QuarticForm, edge: Edge) -> EdgeLocus:
    form = restrict(f, edge)
    if not form:
        raise GenericityError(f"f vanishes identically on the edge {edge}", edge=edge.name)
    coefficients = binary_coefficients(form)
    if not coefficients[0] or not coefficients[4]:
        raise GenericityError(
            f"f restricted to the edge {edge} has a root at a vertex", edge=edge.name
        )
    return EdgeLocus(edge=edge, form=form, roots=tuple(rational_roots(edge, coefficients)))


def singular_locus(f: QuarticForm) -> SingularLocus:
    """
    Restrict f to the six edge lines and extract the rational singular points.

    Args:
        f: Quartic with plain rational coefficients

    Returns:
        Per-edge restricted forms and roots; ``complete`` when all 24 are rational
    """
    if not f.is_rational():
        raise ArithmeticFailure("The singular locus needs a quartic with rational coefficients")
    locus = SingularLocus(edges=tuple(edge_locus(f, edge) for edge in EDGES))
    if locus.complete:
        logger.info("All 24 singular points of the total space are rational")
    else:
        logger.warning(f"Only {locus.count} of 24 singular points are rational")
    return locus
