"""Domain models of the degeneration xyzw + t f = 0."""

from app.models.geometry import (
    COORDINATES,
    EDGES,
    Coordinate,
    Edge,
    Hyperplane,
    ProjectivePoint,
    coordinate,
    edge_of_point,
)
from app.models.algebra import (
    QUARTIC_RING,
    ChartDecomposition,
    CoefficientEquation,
    LiftSeries,
    QuarticForm,
    SeriesTerm,
    UnknownSlot,
    monomial_name,
    quartic_monomials,
)
from app.models.fiber import (
    CentralFiber,
    DesignedQuartic,
    EdgeLocus,
    LineInPlane,
    PrescribedPoint,
    SingularLocus,
    plane_coordinates,
)
from app.models.curve import (
    Component,
    CurveGraph,
    NodeEdge,
    SMark,
    ValidityReport,
    Violation,
    ViolationKind,
)
from app.models.obstruction import (
    BranchChart,
    DualObstruction,
    LineContribution,
    LocalModelLift,
    NodeContribution,
    ObstructionReport,
    PlaneResidueFrame,
    ResidueSystem,
)
from app.models.graft import GraftKind, GraftRecipe
from app.models.run import Claim, RunConfig, VerificationReport

__all__ = [
    # Geometry
    "COORDINATES",
    "EDGES",
    "Coordinate",
    "Edge",
    "Hyperplane",
    "ProjectivePoint",
    "coordinate",
    "edge_of_point",
    # Algebra
    "QUARTIC_RING",
    "ChartDecomposition",
    "CoefficientEquation",
    "LiftSeries",
    "QuarticForm",
    "SeriesTerm",
    "UnknownSlot",
    "monomial_name",
    "quartic_monomials",
    # Central fiber
    "CentralFiber",
    "DesignedQuartic",
    "EdgeLocus",
    "LineInPlane",
    "PrescribedPoint",
    "SingularLocus",
    "plane_coordinates",
    # Curves
    "Component",
    "CurveGraph",
    "NodeEdge",
    "SMark",
    "ValidityReport",
    "Violation",
    "ViolationKind",
    # Obstructions
    "BranchChart",
    "DualObstruction",
    "LineContribution",
    "LocalModelLift",
    "NodeContribution",
    "ObstructionReport",
    "PlaneResidueFrame",
    "ResidueSystem",
    # Grafts
    "GraftKind",
    "GraftRecipe",
    # Runs
    "Claim",
    "RunConfig",
    "VerificationReport",
]
