"""Unit tests for degenerate curves: sections, dual graphs, validity and DOT export."""

import pytest

from app.core.errors import DegenerateConfiguration, DisconnectedCurve
from app.core.scalars import ALPHA, BETA, GAMMA
from app.models.curve import Component, CurveGraph, NodeEdge, SMark, ViolationKind
from app.models.fiber import LineInPlane
from app.models.geometry import Edge, Hyperplane, ProjectivePoint
from app.services.algebra.polynomials import evaluate_form, quartic_from_expression
from app.services.curves.graph import bridge_nodes, dual_graph, genus, is_connected, node_pieces
from app.services.curves.render import to_dot
from app.services.curves.section import glue_partners, hyperplane_section, relabel, section_point
from app.services.curves.validity import validate
from app.services.fiber.hyperplanes import edge_points, line_of_hyperplane


class TestHyperplaneSection:
    """Test the four lines cut by a hyperplane."""

    def test_generic_section(self, symbolic_h):
        """Test the generic section: 4 lines, 6 nodes, genus 3."""
        curve = hyperplane_section(symbolic_h)
        assert [c.id for c in curve.components] == ["l", "m", "n", "k"]
        assert sorted(n.id for n in curve.nodes) == ["l^k", "l^m", "l^n", "m^k", "m^n", "n^k"]
        assert not curve.marks
        assert genus(curve) == 3
        assert curve.degree == 4

    def test_nodes_in_central_fiber(self, symbolic_h):
        """Test that xyzw vanishes at every node image."""
        xyzw = quartic_from_expression("x*y*z*w")
        curve = hyperplane_section(symbolic_h)
        assert curve.nodes
        for node in curve.nodes:
            assert evaluate_form(xyzw, node.point) == 0

    def test_node_points(self, symbolic_h):
        """Test the images of l^k, l^n and l^m on alpha x + beta y + gamma z + w."""
        curve = hyperplane_section(symbolic_h)
        assert curve.node("l^k").point.same_as(ProjectivePoint.of(BETA, -ALPHA, 0, 0))
        assert curve.node("l^n").point.same_as(ProjectivePoint.of(GAMMA, 0, -ALPHA, 0))
        assert curve.node("l^m").point.same_as(ProjectivePoint.of(0, GAMMA, -BETA, 0))

    def test_edge_points(self):
        """Test the three points where the line of -8x + 4y - 2z + w in {w=0} meets the edges."""
        line = line_of_hyperplane(Hyperplane.of(-8, 4, -2, 1), "w")
        points = {edge.name: point for edge, point in edge_points(line)}
        assert set(points) == {"xw", "yw", "zw"}
        assert points["xw"].same_as(ProjectivePoint.of(0, 1, 2, 0))
        assert points["yw"].same_as(ProjectivePoint.of(1, 0, -4, 0))
        assert points["zw"].same_as(ProjectivePoint.of(1, 2, 0, 0))

    def test_section_point(self):
        """Test where -8x + 4y - 2z + w meets {y,w}."""
        point = section_point(Hyperplane.of(-8, 4, -2, 1), Edge.of("y", "w"))
        assert point.same_as(ProjectivePoint.of(1, 0, -4, 0))

    def test_marks_on_singular_locus(self, f):
        """Test that singular intersections become partnered S-marks."""
        curve = hyperplane_section(Hyperplane.of(-8, 4, -2, 1), f)
        assert sorted(n.id for n in curve.nodes) == ["l^n", "m^k", "n^k"]
        assert sorted(m.id for m in curve.marks) == ["k|l", "l|k", "l|m", "m|l", "m|n", "n|m"]
        assert curve.mark("l|k").partner == "k|l"
        assert genus(curve) == 0

    def test_vertex_hyperplane_rejected(self):
        """Test that a hyperplane through a vertex is rejected."""
        with pytest.raises(DegenerateConfiguration):
            hyperplane_section(Hyperplane.of(0, 1, 1, 1))

    def test_glue_partners(self, base_curve):
        """Test that gluing the three mark pairs gives back a genus-3 curve."""
        glued = glue_partners(base_curve)
        assert not glued.marks
        assert len(glued.nodes) == 6
        assert "l^k" in [n.id for n in glued.nodes]
        assert genus(glued) == 3

    def test_relabel(self, base_curve):
        """Test that renaming components carries nodes and marks along."""
        renamed = relabel(base_curve, {"l": "L"})
        assert renamed.component("L").plane.value == "w"
        assert renamed.node("l^n").ends == ("L", "n")
        assert renamed.mark("l|k").component == "L"


class TestCurveGraph:
    """Test structural checks of curves."""

    def test_node_off_line_rejected(self):
        """Test that a node image must lie on both end lines."""
        first = Component(id="l", plane="w", line=LineInPlane.of("w", 1, 1, 1))
        m = Component(id="m", plane="x", line=LineInPlane.of("x", 1, 1, 1))
        with pytest.raises(ValueError):
            CurveGraph(
                components=(first, m),
                nodes=(NodeEdge(id="l^m", ends=("l", "m"), point=ProjectivePoint.of(0, 1, 2, 0)),),
            )

    def test_asymmetric_partner_rejected(self, base_curve):
        """Test that partners must point at each other."""
        marks = tuple(
            m.model_copy(update={"partner": None}) if m.id == "k|l" else m for m in base_curve.marks
        )
        with pytest.raises(ValueError):
            CurveGraph(components=base_curve.components, nodes=base_curve.nodes, marks=marks)


class TestDualGraph:
    """Test dual-graph bookkeeping."""

    def test_bridges(self, base_curve, symbolic_h):
        """Test that every node of a tree is a bridge and none of the section's is."""
        assert bridge_nodes(base_curve) == {"l^n", "m^k", "n^k"}
        assert bridge_nodes(hyperplane_section(symbolic_h)) == set()

    def test_pieces(self, base_curve):
        """Test the two trees left after cutting l^n."""
        pieces = node_pieces(base_curve, {"l^n"})
        assert sorted(map(sorted, pieces)) == [["k", "m", "n"], ["l"]]

    def test_disconnected(self, base_curve):
        """Test that genus needs a connected curve."""
        cut = base_curve.model_copy(update={"nodes": base_curve.nodes[1:]})
        assert not is_connected(cut)
        with pytest.raises(DisconnectedCurve):
            genus(cut)

    def test_multigraph(self, symbolic_h):
        """Test one vertex per component and one edge per node."""
        graph = dual_graph(hyperplane_section(symbolic_h))
        assert graph.number_of_nodes() == 4
        assert graph.number_of_edges() == 6


class TestValidity:
    """Test the validity hierarchy."""

    def test_base_curve(self, base_curve, f):
        """Test that the degree-4 rational curve is simply pre-smoothable."""
        report = validate(base_curve, f)
        assert report.simply_pre_smoothable
        assert not report.violations

    def test_weight_mismatch(self, base_curve, f):
        """Test that unequal branch weights break the pre-log condition."""
        node = base_curve.nodes[0].model_copy(update={"weights": (1, 2)})
        curve = base_curve.model_copy(update={"nodes": (node,) + base_curve.nodes[1:]})
        report = validate(curve, f)
        assert report.torically_transverse
        assert not report.pre_log
        assert not report.pre_smoothable
        assert ViolationKind.WEIGHT_MISMATCH in report.kinds()

    def test_mark_not_singular(self, f):
        """Test that a mark must lie over the singular locus."""
        base = hyperplane_section(Hyperplane.of(1, 2, 3, 4))
        point = base.node("l^k").point
        curve = base.model_copy(
            update={
                "nodes": tuple(n for n in base.nodes if n.id != "l^k"),
                "marks": (
                    SMark(id="l|k", component="l", point=point, partner="k|l"),
                    SMark(id="k|l", component="k", point=point, partner="l|k"),
                ),
            }
        )
        report = validate(curve, f)
        assert report.pre_log
        assert not report.pre_smoothable
        assert ViolationKind.MARK_NOT_SINGULAR in report.kinds()

    def test_multiplicity(self, base_curve, f):
        """Test that a double line is pre-smoothable but not simply."""
        double = base_curve.components[0].model_copy(update={"multiplicity": 2})
        curve = base_curve.model_copy(update={"components": (double,) + base_curve.components[1:]})
        report = validate(curve, f)
        assert report.pre_smoothable
        assert not report.simply_pre_smoothable

    def test_missing_node(self):
        """Test that dropping a node leaves two edge points unglued and breaks pre-log."""
        curve = hyperplane_section(Hyperplane.of(-8, 4, -2, 1))
        assert validate(curve).pre_log
        dropped = curve.nodes[0]
        report = validate(curve.model_copy(update={"nodes": curve.nodes[1:]}))
        assert report.torically_transverse
        assert not report.pre_log
        unglued = [v for v in report.violations if v.kind == ViolationKind.EDGE_POINT_UNGLUED]
        assert sorted(v.location for v in unglued) == sorted(dropped.ends)

    def test_marks_cover_edge_points(self, f):
        """Test that S-marks in place of nodes keep every edge point accounted for."""
        report = validate(hyperplane_section(Hyperplane.of(-8, 4, -2, 1), f), f)
        assert ViolationKind.EDGE_POINT_UNGLUED not in report.kinds()

    def test_not_transverse(self):
        """Test that a line through a coordinate point fails transversality."""
        first = Component(id="l", plane="w", line=LineInPlane.of("w", 1, 0, 1))
        report = validate(CurveGraph(components=(first,)))
        assert not report.torically_transverse
        assert not report.pre_log


class TestDot:
    """Test DOT rendering."""

    def test_base_curve(self, base_curve):
        """Test boxes for components, solid node edges, cross leaves and dotted partners."""
        dot = to_dot(base_curve)
        assert dot.startswith('graph "degree4_rational" {')
        assert dot.count("shape=box") == 4
        assert '"l" -- "n" [label="l^n", style=solid];' in dot
        assert dot.count('label="x"') == 6
        assert dot.count("style=dotted") == 3
        assert dot.rstrip().endswith("}")
