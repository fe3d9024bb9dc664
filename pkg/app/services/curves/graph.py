"""Dual-graph bookkeeping with networkx: connectivity, genus, bridges."""

import logging

import networkx as nx

from app.core.errors import DisconnectedCurve
from app.models.curve import CurveGraph

logger = logging.getLogger(__name__)


def dual_graph(curve: CurveGraph) -> nx.MultiGraph:
    """Components as vertices, node-edges as keyed edges; S-marks are not edges."""
    graph = nx.MultiGraph()
    for c in curve.components:
        graph.add_node(c.id, plane=c.plane.value)
    for n in curve.nodes:
        graph.add_edge(n.ends[0], n.ends[1], key=n.id)
    return graph


def is_connected(curve: CurveGraph) -> bool:
    if not curve.components:
        return False
    return nx.is_connected(dual_graph(curve))


def require_connected(curve: CurveGraph) -> None:
    if not is_connected(curve):
        pieces = 0 if not curve.components else nx.number_connected_components(dual_graph(curve))
        raise DisconnectedCurve(f"Curve has {pieces} connected pieces", pieces=pieces)


def genus(curve: CurveGraph) -> int:
    """First Betti number of the dual graph; every component is rational."""
    require_connected(curve)
    return len(curve.nodes) - len(curve.components) + 1


def bridge_nodes(curve: CurveGraph) -> set[str]:
    """Ids of node-edges whose removal disconnects the dual graph."""
    graph = dual_graph(curve)
    bridges = set()
    for u, v in nx.bridges(nx.Graph(graph)):
        keys = list(graph.get_edge_data(u, v).keys())
        if len(keys) == 1:
            bridges.add(keys[0])
    return bridges


def node_pieces(curve: CurveGraph, removed: set[str]) -> list[set[str]]:
    """Component-id sets of the connected pieces after deleting some node-edges."""
    graph = dual_graph(curve)
    for n in curve.nodes:
        if n.id in removed:
            graph.remove_edge(n.ends[0], n.ends[1], key=n.id)
    return [set(piece) for piece in nx.connected_components(graph)]
