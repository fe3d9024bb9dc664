"""Wire form of graft recipes."""

from typing import Optional

from pydantic import BaseModel, Field

from app.core.scalars import parse_scalar
from app.models.graft import GraftKind, GraftRecipe
from app.schemas.algebra import QuarticSchema, ScalarText, point_from_text
from app.services.graft.assemble import build_recipe


class RecipeSchema(BaseModel):
    """Singular points and the shared node from which a graft recipe is built."""

    f: QuarticSchema
    base_points: list[list[ScalarText]]
    auxiliary_points: list[list[ScalarText]]
    shared_node: str
    r: int = Field(default=1, ge=1)
    kind: GraftKind = GraftKind.RATIONAL
    cut_sheet: int = 0
    pencil: Optional[ScalarText] = None

    def build(self, r: Optional[int] = None) -> GraftRecipe:
        return build_recipe(
            self.f.to_form(),
            [point_from_text(p) for p in self.base_points],
            [point_from_text(p) for p in self.auxiliary_points],
            self.shared_node,
            r if r is not None else self.r,
            kind=self.kind,
            cut_sheet=self.cut_sheet,
            pencil=parse_scalar(self.pencil) if self.pencil is not None else None,
        )
