"""
First-order obstruction of hyperplane sections.

At every node the two line branches are lifted over C[t]/t^2; each branch
contributes its constant a1 divided by the anchor, weighted by the dual
generator on its component and the residue sign of its plane along the edge.
"""
import logging
from typing import Optional

from app.core.scalars import ALPHA, BETA, GAMMA, FIELD, S, Scalar, scalar_sum
from app.models.algebra import QuarticForm, monomial_name, quartic_monomials
from app.models.curve import Component, CurveGraph, NodeEdge
from app.models.geometry import Edge, Hyperplane
from app.models.obstruction import LineContribution, NodeContribution, ObstructionReport
from app.services.curves.section import hyperplane_section
from app.services.obstruction.lifts import branch_chart, leading_lift_terms, local_lift_solve
from app.services.obstruction.residues import residue_kernel, residue_sign

logger = logging.getLogger(__name__)


def symbolic_hyperplane() -> Hyperplane:
    """alpha x + beta y + gamma z + w."""
    return Hyperplane.of(ALPHA, BETA, GAMMA, 1)


def line_contribution(
    f: QuarticForm,
    component: Component,
    other: Component,
    node: NodeEdge,
    weight: Scalar,
    hyperplane: Hyperplane,
) -> Scalar:
    """weight * sign * a1 / A for the branch of ``component`` at the node."""
    chart = branch_chart(component.line, node.point, hyperplane)
    lift = local_lift_solve(f, component.line, node.point, order=1, hyperplane=hyperplane)
    _, a1 = leading_lift_terms(lift, chart)
    sign = residue_sign(component.plane, Edge.of(component.plane, other.plane))
    return weight * sign * a1 / chart.anchor


def _monomial_contributions(
    exponent, section: CurveGraph, generator: dict[str, Scalar], hyperplane: Hyperplane
) -> dict[tuple[str, str], Scalar]:
    monomial = QuarticForm.monomial(exponent)
    values = {}
    for node in section.nodes:
        first, second = (section.component(e) for e in node.ends)
        values[(node.id, first.id)] = line_contribution(
            monomial, first, second, node, generator[first.id], hyperplane
        )
        values[(node.id, second.id)] = line_contribution(
            monomial, second, first, node, generator[second.id], hyperplane
        )
    return values


def first_order_obstruction(
    f: QuarticForm, hyperplane: Optional[Hyperplane] = None
) -> ObstructionReport:
    """
    Pair the first-order lifts of the section of ``hyperplane`` with the dual generator.

    The obstruction is linear in the coefficients of f, so it is computed
    monomial by monomial and summed.

    Args:
        f: The quartic, rational or symbolic
        hyperplane: Hyperplane with four nonzero coefficients; defaults to
            alpha x + beta y + gamma z + w

    Returns:
        Line, node and monomial contributions and their total
    """
    hyperplane = hyperplane or symbolic_hyperplane()
    section = hyperplane_section(hyperplane)
    generator = residue_kernel(section).generator

    by_line = {(n.id, e): FIELD.zero for n in section.nodes for e in n.ends}
    per_monomial = {}
    for exponent, coeff in f.terms():
        values = _monomial_contributions(exponent, section, generator, hyperplane)
        for key, value in values.items():
            by_line[key] = by_line[key] + coeff * value
        per_monomial[monomial_name(exponent)] = coeff * scalar_sum(values.values())

    nodes = []
    for node in section.nodes:
        lines = tuple(
            LineContribution(
                component=e, line=str(section.component(e).line), value=by_line[(node.id, e)]
            )
            for e in node.ends
        )
        nodes.append(
            NodeContribution(
                node=node.id, point=node.point, lines=lines,
                value=scalar_sum(c.value for c in lines),
            )
        )
    total = scalar_sum(n.value for n in nodes)
    logger.info(f"First-order obstruction of the section of {hyperplane}: total {total}")
    return ObstructionReport(
        hyperplane=str(hyperplane), nodes=tuple(nodes), per_monomial=per_monomial, total=total
    )


def obstruction_along_family(
    f: QuarticForm, base: Hyperplane, direction: Hyperplane
) -> ObstructionReport:
    """Obstruction for the sections of H_s = base + s * direction, as a function of s."""
    return first_order_obstruction(f, base + direction.scale(S))


def symbolic_cancellation(hyperplane: Optional[Hyperplane] = None) -> ObstructionReport:
    """The per-monomial table for all 35 quartic monomials, each with coefficient 1."""
    f = QuarticForm.from_terms({m: 1 for m in quartic_monomials()})
    return first_order_obstruction(f, hyperplane)
