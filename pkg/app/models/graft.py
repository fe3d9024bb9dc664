"""Graft recipes: which auxiliary curve is covered, cut and grafted onto which base."""

import enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.models.algebra import QuarticForm
from app.models.curve import CurveGraph


class GraftKind(str, enum.Enum):
    RATIONAL = "rational"
    GENUS = "genus"


class GraftRecipe(BaseModel):
    """
    A base degree-4 rational curve, an auxiliary curve through one of its
    nodes, and the covering degree.

    For rational grafts the auxiliary curve has genus 1 and the lifts of the
    auxiliary node in sheets ``cut_sheet`` and ``cut_sheet + 1`` are cut. For
    genus grafts the auxiliary curve has genus 2 and ``r`` copies are chained.
    """

    model_config = ConfigDict(frozen=True)

    base: CurveGraph
    auxiliary: CurveGraph
    shared_node: str
    auxiliary_node: str
    r: int
    kind: GraftKind = GraftKind.RATIONAL
    cut_sheet: int = 0
    f: Optional[QuarticForm] = None

    @model_validator(mode="after")
    def _degree(self) -> "GraftRecipe":
        if self.r < 1:
            raise ValueError(f"Covering degree must be at least 1, got {self.r}")
        if not 0 <= self.cut_sheet < self.r:
            raise ValueError(f"Cut sheet {self.cut_sheet} is not a sheet of a degree {self.r} cover")
        return self

    @property
    def cut_nodes(self) -> tuple[str, str]:
        """Ids of the two lifts of the auxiliary node that are cut in the cover."""
        return (
            f"{self.auxiliary_node}.{self.cut_sheet}",
            f"{self.auxiliary_node}.{(self.cut_sheet + 1) % self.r}",
        )
