"""
Grafting: cover the auxiliary curve, cut it at lifts of the shared node and
glue the pieces into the base curve cut at the same node.
"""
import logging
from itertools import product
from typing import Optional, Sequence

from app.core.errors import DegenerationError, GraftError, RecipeError
from app.core.scalars import ScalarLike
from app.models.algebra import QuarticForm
from app.models.curve import CurveGraph, NodeEdge, SMark
from app.models.fiber import SingularLocus
from app.models.geometry import Edge, ProjectivePoint
from app.models.graft import GraftKind, GraftRecipe
from app.services.curves.graph import bridge_nodes, genus, is_connected, node_pieces
from app.services.curves.section import on_singular_locus
from app.services.graft.builders import degree4_elliptic, degree4_genus2, degree4_rational
from app.services.graft.cover import cover, sheet_id

logger = logging.getLogger(__name__)


def check_recipe(recipe: GraftRecipe) -> None:
    """The shared node is a base node off the singular locus, met by the auxiliary loop."""
    try:
        shared = recipe.base.node(recipe.shared_node)
    except KeyError:
        raise RecipeError(f"{recipe.shared_node} is not a node-edge of the base curve")
    if recipe.f is not None and on_singular_locus(recipe.f, shared.point):
        raise RecipeError(f"Shared node {recipe.shared_node} lies on the singular locus")
    try:
        auxiliary = recipe.auxiliary.node(recipe.auxiliary_node)
    except KeyError:
        raise RecipeError(f"{recipe.auxiliary_node} is not a node-edge of the auxiliary curve")
    if not auxiliary.point.same_as(shared.point):
        raise RecipeError(
            f"Auxiliary node {recipe.auxiliary_node} at {auxiliary.point} "
            f"does not meet the shared node at {shared.point}"
        )
    expected = 1 if recipe.kind == GraftKind.RATIONAL else 2
    if genus(recipe.auxiliary) != expected:
        raise RecipeError(f"A {recipe.kind.value} graft needs an auxiliary curve of genus {expected}")
    if recipe.auxiliary_node in bridge_nodes(recipe.auxiliary):
        raise RecipeError(f"Auxiliary node {recipe.auxiliary_node} is a bridge; cutting it disconnects the curve")
    if genus(recipe.base) != 0:
        raise RecipeError("The base curve must have genus 0")


def _planes_of(curve: CurveGraph, node: NodeEdge) -> dict:
    """Plane -> end component of a node."""
    return {curve.component(e).plane: e for e in node.ends}


def _base_trees(recipe: GraftRecipe) -> tuple[CurveGraph, dict]:
    """The base with the shared node removed, and its end components by plane."""
    base = recipe.base
    shared = base.node(recipe.shared_node)
    cut = base.model_copy(update={"nodes": tuple(n for n in base.nodes if n.id != shared.id)})
    return cut, _planes_of(base, shared)


def _restrict(curve: CurveGraph, keep: set[str], removed: set[str]) -> tuple[list, list, list]:
    """Components, nodes and marks of a piece; partners outside the piece are dropped."""
    components = [c for c in curve.components if c.id in keep]
    nodes = [n for n in curve.nodes if n.id not in removed and n.ends[0] in keep]
    kept_marks = {m.id for m in curve.marks if m.component in keep}
    marks = [
        m if m.partner is None or m.partner in kept_marks else m.model_copy(update={"partner": None})
        for m in curve.marks
        if m.id in kept_marks
    ]
    return components, nodes, marks


def _equation(recipe: GraftRecipe, power: int) -> str:
    h0 = recipe.base.metadata.get("equation", "H0")
    h1 = recipe.auxiliary.metadata.get("equation", "H1")
    if power == 0:
        return f"({h0})"
    if power == 1:
        return f"({h0})*({h1})"
    return f"({h0})*({h1})^{power}"


def _assert_counts(curve: CurveGraph, components: int, marks: int, expected_genus: int) -> None:
    if not is_connected(curve):
        raise GraftError("Grafted curve is disconnected")
    checks = {
        "genus": (genus(curve), expected_genus),
        "components": (len(curve.components), components),
        "S-marks": (len(curve.marks), marks),
        "degree": (curve.degree, components),
    }
    for name, (computed, expected) in checks.items():
        if computed != expected:
            raise GraftError(f"Grafted curve has {name} {computed}, expected {expected}")


def _choose_piece(curve: CurveGraph, pieces: list[set[str]], first_cut: NodeEdge) -> set[str]:
    """The larger piece; on a tie the one holding the first cut's end in the lower-indexed plane."""
    sizes = sorted(len(p) for p in pieces)
    if sizes[0] != sizes[1]:
        return max(pieces, key=len)
    end = min(first_cut.ends, key=lambda e: curve.component(e).plane.index)
    return next(p for p in pieces if end in p)


def graft_rational(recipe: GraftRecipe) -> CurveGraph:
    """
    The degree-4r degenerate rational curve built from a recipe.

    The r-fold cover of the genus-1 auxiliary curve is cut at two consecutive
    lifts of the auxiliary node, which splits it into a piece with one sheet's
    worth of components and a piece with 4(r-1). The base is cut at the shared
    node into two trees, and the dangling end of the kept piece in each plane
    of the shared edge is glued at the shared point to the tree whose end lies
    in the other plane.

    Args:
        recipe: Rational graft recipe

    Returns:
        Connected genus-0 curve with 4r components and 4r + 2 S-marks
    """
    check_recipe(recipe)
    if recipe.kind != GraftKind.RATIONAL:
        raise RecipeError("graft_rational needs a rational recipe")
    r = recipe.r
    metadata = {
        "construction": "graft_rational",
        "covering_degree": r,
        "equation": _equation(recipe, r - 1),
        "degree": 4 * r,
    }
    if r == 1:
        return recipe.base.with_metadata(**metadata)

    covered = cover(recipe.auxiliary, r)
    cut_ids = set(recipe.cut_nodes)
    pieces = node_pieces(covered, cut_ids)
    if len(pieces) != 2:
        raise GraftError(f"Cutting two lifts of the node left {len(pieces)} pieces, expected 2")
    first_cut = covered.node(recipe.cut_nodes[0])
    keep = _choose_piece(covered, pieces, first_cut)

    components, nodes, marks = _restrict(covered, keep, cut_ids)
    dangling = {}
    for cut_id in recipe.cut_nodes:
        for end in covered.node(cut_id).ends:
            if end in keep:
                dangling[covered.component(end).plane] = end

    base_cut, base_ends = _base_trees(recipe)
    point = recipe.base.node(recipe.shared_node).point
    graft_nodes = _graft_nodes(dangling, base_ends, point)

    curve = CurveGraph(
        components=base_cut.components + tuple(components),
        nodes=base_cut.nodes + tuple(nodes) + tuple(graft_nodes),
        marks=base_cut.marks + tuple(marks),
        metadata=metadata,
    )
    _assert_counts(curve, 4 * r, 4 * r + 2, 0)
    logger.info(f"Grafted rational curve: degree {4 * r}, {len(curve.marks)} S-marks")
    return curve


def _graft_nodes(dangling: dict, base_ends: dict, point: ProjectivePoint) -> list[NodeEdge]:
    """Glue each dangling end to the base end lying in the other plane of the shared edge."""
    if set(dangling) != set(base_ends):
        raise GraftError("Dangling ends do not lie in the two planes of the shared edge")
    nodes = []
    for plane, end in dangling.items():
        partner = next(e for p, e in base_ends.items() if p != plane)
        nodes.append(NodeEdge(id=f"{end}^{partner}", ends=(end, partner), point=point))
    return nodes


def graft_genus(recipe: GraftRecipe) -> CurveGraph:
    """
    The genus-r curve built by chaining r copies of the cut genus-2 auxiliary curve.

    Each copy is the auxiliary curve with its shared node removed; the end of
    copy s in the second plane is glued to the end of copy s + 1 in the first,
    and the two free ends are glued to the base trees.
    """
    check_recipe(recipe)
    if recipe.kind != GraftKind.GENUS:
        raise RecipeError("graft_genus needs a genus recipe")
    r = recipe.r
    auxiliary = recipe.auxiliary
    shared = auxiliary.node(recipe.auxiliary_node)
    aux_ends = _planes_of(auxiliary, shared)
    base_cut, base_ends = _base_trees(recipe)
    if set(aux_ends) != set(base_ends):
        raise RecipeError("Auxiliary and base nodes lie on different edges")
    first_plane, second_plane = (
        recipe.base.component(e).plane for e in recipe.base.node(recipe.shared_node).ends
    )
    point = shared.point

    components, nodes, marks = [], [], []
    for s in range(r):
        components.extend(c.model_copy(update={"id": sheet_id(c.id, s)}) for c in auxiliary.components)
        nodes.extend(
            n.model_copy(update={"id": sheet_id(n.id, s), "ends": tuple(sheet_id(e, s) for e in n.ends)})
            for n in auxiliary.nodes
            if n.id != shared.id
        )
        marks.extend(
            SMark(
                id=sheet_id(m.id, s), component=sheet_id(m.component, s), point=m.point,
                weight=m.weight, partner=sheet_id(m.partner, s) if m.partner else None,
            )
            for m in auxiliary.marks
        )
    for s in range(r - 1):
        a, b = sheet_id(aux_ends[second_plane], s), sheet_id(aux_ends[first_plane], s + 1)
        nodes.append(NodeEdge(id=f"{a}^{b}", ends=(a, b), point=point))
    dangling = {
        first_plane: sheet_id(aux_ends[first_plane], 0),
        second_plane: sheet_id(aux_ends[second_plane], r - 1),
    }
    nodes.extend(_graft_nodes(dangling, base_ends, point))

    curve = CurveGraph(
        components=base_cut.components + tuple(components),
        nodes=base_cut.nodes + tuple(nodes),
        marks=base_cut.marks + tuple(marks),
        metadata={
            "construction": "graft_genus",
            "covering_degree": r,
            "equation": _equation(recipe, r),
            "degree": 4 * r + 4,
        },
    )
    _assert_counts(curve, 4 * r + 4, 2 * r + 6, r)
    logger.info(f"Grafted genus-{r} curve: {len(curve.components)} components")
    return curve


def build_recipe(
    f: QuarticForm,
    base_points: Sequence[ProjectivePoint],
    auxiliary_points: Sequence[ProjectivePoint],
    shared_node: str,
    r: int,
    kind: GraftKind = GraftKind.RATIONAL,
    cut_sheet: int = 0,
    pencil: Optional[ScalarLike] = None,
) -> GraftRecipe:
    """
    Build the base and auxiliary curves and locate the auxiliary node over the shared point.

    Args:
        f: The quartic
        base_points: Three singular points for the base rational curve
        auxiliary_points: Two singular points (rational graft) or one (genus graft)
        shared_node: Node-edge id of the base curve, e.g. ``"l^n"``
        r: Covering degree, or number of chained copies
        kind: Rational or genus graft
        cut_sheet: First cut sheet of the cover
        pencil: Pencil member of the genus-2 auxiliary hyperplane

    Returns:
        A checked recipe
    """
    base = degree4_rational(f, base_points)
    try:
        point = base.node(shared_node).point
    except KeyError:
        raise RecipeError(f"{shared_node} is not a node-edge of the base curve")
    if kind == GraftKind.RATIONAL:
        auxiliary = degree4_elliptic(f, auxiliary_points, point)
    else:
        if len(auxiliary_points) != 1:
            raise RecipeError(f"A genus graft takes 1 auxiliary singular point, got {len(auxiliary_points)}")
        auxiliary = degree4_genus2(f, auxiliary_points[0], point, 1 if pencil is None else pencil)
    aux_node = next((n.id for n in auxiliary.nodes if n.point.same_as(point)), None)
    if aux_node is None:
        raise RecipeError(f"The auxiliary curve has no node at {point}")
    recipe = GraftRecipe(
        base=base, auxiliary=auxiliary, shared_node=shared_node, auxiliary_node=aux_node,
        r=r, kind=kind, cut_sheet=cut_sheet, f=f,
    )
    check_recipe(recipe)
    return recipe


def find_recipe(
    f: QuarticForm,
    locus: SingularLocus,
    r: int,
    kind: GraftKind = GraftKind.RATIONAL,
    shared_node: str = "l^n",
) -> GraftRecipe:
    """
    The first workable recipe over the explicit singular points of f.

    Base points are taken on the edges {z,w}, {x,w}, {x,y}, so the base curve
    has nodes l^n, m^k and n^k. Auxiliary points for rational grafts lie on
    {z,w} and {x,y}, which leaves the auxiliary node l'^n' on a loop of
    length four; genus grafts take one point on {z,w}.
    """
    def points_on(*names: str) -> list[list[ProjectivePoint]]:
        return [locus.on(Edge.of(*name)).points() for name in names]

    failures = 0
    for base_points in product(*points_on("zw", "xw", "xy")):
        try:
            base = degree4_rational(f, base_points)
            point = base.node(shared_node).point
        except (DegenerationError, KeyError):
            failures += 1
            continue
        if kind == GraftKind.RATIONAL:
            candidates = [(list(pair), None) for pair in product(*points_on("zw", "xy"))]
        else:
            candidates = [([p], pencil) for p in points_on("zw")[0] for pencil in (1, 2, 3)]
        for auxiliary_points, pencil in candidates:
            try:
                return build_recipe(
                    f, list(base_points), auxiliary_points, shared_node, r, kind=kind, pencil=pencil
                )
            except DegenerationError:
                failures += 1
    raise RecipeError(f"No {kind.value} recipe over the singular points after {failures} attempts")
