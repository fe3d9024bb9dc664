"""First-order lifts of line branches through node images, solved order by order in u."""

import logging
from typing import Optional

from app.core.config import settings
from app.core.errors import DegenerateConfiguration, InputError, LiftError
from app.core.scalars import FIELD, Scalar
from app.models.algebra import LiftSeries, QuarticForm, SeriesTerm, UnknownSlot
from app.models.fiber import LineInPlane
from app.models.geometry import Hyperplane, ProjectivePoint
from app.models.obstruction import BranchChart
from app.services.algebra.charts import chart_decompose, chart_roles, evaluate_part
from app.services.algebra.polynomials import chart_ring, dehomogenize
from app.services.algebra.series import equation_at, series_collect
from app.services.fiber.hyperplanes import check_torically_transverse

logger = logging.getLogger(__name__)


def branch_chart(
    line: LineInPlane, node: ProjectivePoint, hyperplane: Optional[Hyperplane] = None
) -> BranchChart:
    """Chart data of the branch of ``line`` at ``node``."""
    if not check_torically_transverse(line):
        raise DegenerateConfiguration(f"Line {line} is not torically transverse")
    if not line.contains(node):
        raise DegenerateConfiguration(f"Node {node} is not on the line {line}")
    pivot, first, middle, last = chart_roles(node)
    param = last if line.plane == middle else middle
    a_first = line.coefficient(first)
    transverse = hyperplane[line.plane] if hyperplane is not None else FIELD.one
    if not transverse:
        raise DegenerateConfiguration(f"Hyperplane {hyperplane} contains the plane {line.plane.value}=0")
    return BranchChart(
        pivot=pivot,
        first=first,
        param=param,
        plane=line.plane,
        anchor=node[first] / node[pivot],
        slope=-line.coefficient(param) / a_first,
        transverse=transverse,
    )


def lift_equation(f: QuarticForm, chart: BranchChart):
    """Y_F Y_M Y_L + t f/P^4 in the chart ring with t."""
    ring = chart_ring(chart.pivot, with_t=True)
    names = [str(s) for s in ring.symbols]
    gens = dict(zip(names, ring.gens))
    affine = dehomogenize(f, chart.pivot)
    lifted = ring.from_dict({monom + (0,): coeff for monom, coeff in affine.items()})
    product = ring.one
    for name in names[:-1]:
        product = product * gens[name]
    return product + gens["t"] * lifted


def _lift(chart: BranchChart, unknowns: list[Scalar], a_first: Scalar) -> LiftSeries:
    scale = -a_first / chart.transverse
    return LiftSeries(
        parameter="u",
        order=1,
        coordinates={
            chart.name(chart.first): (
                SeriesTerm(regular=(chart.anchor, chart.slope)),
                SeriesTerm(pole=unknowns[0], regular=tuple(unknowns[1:])),
            ),
            chart.name(chart.param): (SeriesTerm(regular=(FIELD.zero, FIELD.one)), SeriesTerm()),
            chart.name(chart.plane): (
                SeriesTerm(),
                SeriesTerm(pole=scale * unknowns[0], regular=tuple(scale * v for v in unknowns[1:])),
            ),
        },
    )


def local_lift_solve(
    f: QuarticForm,
    line: LineInPlane,
    node: ProjectivePoint,
    order: Optional[int] = None,
    hyperplane: Optional[Hyperplane] = None,
) -> LiftSeries:
    """
    Lift the branch of a line through a node image over C[t]/t^2.

    The first chart coordinate is perturbed by t*E(u) with
    E = eps/u + a1 + b1*u + ..., and the plane coordinate by the multiple of
    t*E that keeps the lift inside the hyperplane. The coefficient of t u^m
    in Y_F Y_M Y_L + t f is affine in the m-th unknown once the earlier ones
    are fixed; it is collected with that unknown left symbolic and solved
    from its slope, one unknown after another.

    Args:
        f: The quartic
        line: Torically transverse line through the node
        node: Node image, in the interior of an edge line
        order: u-depth of the perturbation, the number of regular
            coefficients a1, b1, ... solved after the pole eps. The lift
            itself is always truncated at t^1
        hyperplane: Hyperplane cutting out the line; the transverse
            coefficient is 1 without one

    Returns:
        The solved lift, truncated at t^1
    """
    order = settings.LIFT_ORDER if order is None else order
    if order < 1:
        raise InputError(f"Lift order must be at least 1, got {order}")
    chart = branch_chart(line, node, hyperplane)
    a_first = line.coefficient(chart.first)
    equation = lift_equation(f, chart)

    scale = -a_first / chart.transverse
    unknowns = [FIELD.zero] * (order + 1)
    for m in range(order + 1):
        slots = {
            "e": (
                UnknownSlot(coordinate=chart.name(chart.first), t_power=1, u_power=m - 1),
                UnknownSlot(coordinate=chart.name(chart.plane), t_power=1, u_power=m - 1, scale=scale),
            )
        }
        lift = _lift(chart, unknowns, a_first)
        eq = equation_at(series_collect(equation, lift, 1, m, unknowns=slots), 1, m)
        slope = eq.slope("e")
        if not slope:
            raise LiftError(f"Coefficient of t u^{m} does not depend on unknown {m}; cannot solve")
        unknowns[m] = -eq.value / slope
        logger.debug(f"Lift at {node}, u^{m}: {unknowns[m]}")
    return _lift(chart, unknowns, a_first)


def leading_lift_terms(lift: LiftSeries, chart: BranchChart) -> tuple[Scalar, Scalar]:
    """The pole eps and the constant a1 of the perturbation of the first coordinate."""
    name = chart.name(chart.first)
    return lift.pole(name, 1), lift.coefficient(name, 1, 0)


def closed_form_lift(
    f: QuarticForm,
    line: LineInPlane,
    node: ProjectivePoint,
    hyperplane: Optional[Hyperplane] = None,
) -> tuple[Scalar, Scalar]:
    """
    eps and a1 read off the chart decomposition of f at the node.

    With a_F the line's coefficient of the first coordinate, d the transverse
    coefficient, A the anchor and B the slope:
    eps = d c0 / (a_F A) and a1 = ((d/a_F)(B g1 + g) - B eps) / A, where g is
    g2 when the branch parameter is the middle coordinate and g3 otherwise.
    """
    chart = branch_chart(line, node, hyperplane)
    decomposition = chart_decompose(f, node, chart.pivot)
    a_first = line.coefficient(chart.first)
    ratio = chart.transverse / a_first
    eps = ratio * decomposition.c0 / chart.anchor
    g_param = evaluate_part(decomposition, "g2" if chart.param == decomposition.middle else "g3")
    a1 = (ratio * (chart.slope * evaluate_part(decomposition, "g1") + g_param) - chart.slope * eps) / chart.anchor
    return eps, a1
