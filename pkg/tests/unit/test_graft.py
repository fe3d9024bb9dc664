"""Unit tests for degree-4 building blocks, cyclic covers and grafted curves."""

import pytest

from app.core.errors import DegenerateConfiguration, InputError, RecipeError
from app.models.geometry import ProjectivePoint
from app.models.graft import GraftKind, GraftRecipe
from app.services.curves.graph import genus
from app.services.curves.validity import validate
from app.services.graft.assemble import build_recipe, find_recipe, graft_genus, graft_rational
from app.services.graft.builders import degree4_elliptic, degree4_genus2, degree4_rational
from app.services.graft.cover import cover, cut_edge
from app.services.obstruction.residues import dual_obstruction_dim

SHARED_POINT = ProjectivePoint.of(-2, 0, 8, 0)


class TestBuilders:
    """Test sections through prescribed singular points."""

    def test_rational(self, base_curve):
        """Test the degree-4 rational curve: 3 nodes, 6 marks, genus 0."""
        assert len(base_curve.nodes) == 3
        assert len(base_curve.marks) == 6
        assert genus(base_curve) == 0
        assert base_curve.metadata["construction"] == "degree4_rational"
        assert base_curve.node("l^n").point.same_as(SHARED_POINT)

    def test_rational_point_count(self, f, base_points):
        """Test that exactly three points are required."""
        with pytest.raises(InputError):
            degree4_rational(f, base_points[:2])

    def test_rational_non_singular_point(self, f, base_points):
        """Test that the points must be singular points of the total space."""
        with pytest.raises(DegenerateConfiguration):
            degree4_rational(f, base_points[:2] + [ProjectivePoint.of(0, 0, 1, 5)])

    def test_elliptic(self, f, elliptic_points):
        """Test the genus-1 auxiliary curve through the shared node."""
        curve = degree4_elliptic(f, elliptic_points, SHARED_POINT)
        assert len(curve.nodes) == 4
        assert len(curve.marks) == 4
        assert genus(curve) == 1
        assert [c.id for c in curve.components] == ["l'", "m'", "n'", "k'"]
        assert curve.node("l'^n'").point.same_as(SHARED_POINT)

    def test_genus2(self, f):
        """Test the genus-2 member 12x - 4y + 3z + 12w of the pencil."""
        curve = degree4_genus2(f, ProjectivePoint.of(1, 3, 0, 0), SHARED_POINT, pencil=1)
        assert len(curve.nodes) == 5
        assert len(curve.marks) == 2
        assert genus(curve) == 2


class TestCover:
    """Test cyclic covers of genus-1 curves."""

    @pytest.fixture
    def elliptic(self, f, elliptic_points):
        return degree4_elliptic(f, elliptic_points, SHARED_POINT)

    def test_cut_edge(self, elliptic):
        """Test that every node of the four-cycle lies on the loop."""
        assert cut_edge(elliptic).id == elliptic.nodes[0].id

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_counts(self, elliptic, r):
        """Test that counts multiply by r and the genus stays 1."""
        covered = cover(elliptic, r)
        assert len(covered.components) == 4 * r
        assert len(covered.nodes) == 4 * r
        assert len(covered.marks) == 4 * r
        assert genus(covered) == 1
        loop = cut_edge(elliptic)
        assert covered.node(f"{loop.id}.{r - 1}").ends == (f"{loop.ends[0]}.{r - 1}", f"{loop.ends[1]}.0")

    def test_degree_one(self, elliptic):
        """Test that the 1-fold cover is the curve itself."""
        assert cover(elliptic, 1) == elliptic

    def test_tree_rejected(self, base_curve):
        """Test that only genus-1 curves are covered."""
        with pytest.raises(RecipeError):
            cover(base_curve, 2)


class TestRecipe:
    """Test recipe construction and checks."""

    def test_rational_recipe(self, rational_recipe):
        """Test that the auxiliary node is located over the shared point."""
        assert rational_recipe.auxiliary_node == "l'^n'"
        assert rational_recipe.cut_nodes == ("l'^n'.0", "l'^n'.1")

    def test_unknown_shared_node(self, f, base_points, elliptic_points):
        """Test that the shared node must be a node of the base."""
        with pytest.raises(RecipeError):
            build_recipe(f, base_points, elliptic_points, "l^k", 2)

    def test_cut_sheet_range(self, rational_recipe):
        """Test that the cut sheet must be a sheet of the cover."""
        with pytest.raises(ValueError):
            GraftRecipe(**{**dict(rational_recipe), "cut_sheet": 2})

    @pytest.mark.slow
    def test_find_recipe(self, f, locus):
        """Test the deterministic recipe search over the singular points."""
        recipe = find_recipe(f, locus, 3)
        assert recipe.kind == GraftKind.RATIONAL
        assert genus(recipe.base) == 0
        assert genus(recipe.auxiliary) == 1
        genus_recipe = find_recipe(f, locus, 2, kind=GraftKind.GENUS)
        assert genus(genus_recipe.auxiliary) == 2


class TestGraftRational:
    """Test the degree-4r rational grafts."""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_counts(self, rational_recipe, f, r):
        """Test 4r components, 4r + 2 S-marks, genus 0 and a one-dimensional dual space."""
        curve = graft_rational(rational_recipe.model_copy(update={"r": r}))
        assert len(curve.components) == 4 * r
        assert len(curve.marks) == 4 * r + 2
        assert genus(curve) == 0
        assert validate(curve, f).simply_pre_smoothable
        assert dual_obstruction_dim(curve, f).dimension == 1

    def test_metadata(self, rational_recipe):
        """Test the construction metadata of a degree-8 graft."""
        curve = graft_rational(rational_recipe)
        assert curve.metadata["construction"] == "graft_rational"
        assert curve.metadata["covering_degree"] == 2
        assert curve.metadata["degree"] == 8
        assert curve.metadata["equation"].startswith("(") and ")*(" in curve.metadata["equation"]

    def test_tie_keeps_lower_plane_end(self, rational_recipe):
        """Test that for r = 2 the kept piece holds the first cut's end in {y=0}."""
        curve = graft_rational(rational_recipe)
        ids = {c.id for c in curve.components}
        assert {"n'.0", "k'.0", "m'.0", "l'.1"} <= ids
        assert "l'.0" not in ids
        assert curve.node("n'.0^l").ends == ("n'.0", "l")
        assert curve.node("l'.1^n").ends == ("l'.1", "n")

    def test_wrong_kind(self, genus_recipe):
        """Test that a genus recipe cannot be grafted as rational."""
        with pytest.raises(RecipeError):
            graft_rational(genus_recipe.model_copy(update={"r": 2}))


class TestGraftGenus:
    """Test the genus-r grafts."""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_counts(self, genus_recipe, f, r):
        """Test 4r + 4 components, 2r + 6 S-marks, genus r and a one-dimensional dual space."""
        curve = graft_genus(genus_recipe.model_copy(update={"r": r}))
        assert len(curve.components) == 4 * r + 4
        assert len(curve.marks) == 2 * r + 6
        assert genus(curve) == r
        assert validate(curve, f).pre_smoothable
        assert dual_obstruction_dim(curve, f).dimension == 1

    def test_metadata(self, genus_recipe):
        """Test the defining equation (base)*(auxiliary)^r."""
        curve = graft_genus(genus_recipe.model_copy(update={"r": 2}))
        assert curve.metadata["construction"] == "graft_genus"
        assert curve.metadata["equation"].endswith(")^2")
        assert curve.metadata["degree"] == 12
