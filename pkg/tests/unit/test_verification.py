"""Unit tests for the verification suite."""

import numpy as np
import pytest

from app.core.errors import GenericityError
from app.models.algebra import QuarticForm
from app.services.verification import node_formula_oracles, random_hyperplane, random_quartic, run_suite


class TestRandomInputs:
    """Test seeded random quartics and hyperplanes."""

    def test_seeded(self):
        """Test that equal seeds give equal quartics."""
        first = random_quartic(np.random.default_rng(3))
        second = random_quartic(np.random.default_rng(3))
        assert first.terms() == second.terms()

    def test_hyperplane(self, rng):
        """Test that alpha, beta, gamma are nonzero and w has coefficient 1."""
        hyperplane = random_hyperplane(rng)
        assert hyperplane["w"] == 1
        assert all(hyperplane[c] for c in "xyz")


class TestNodeFormulaOracles:
    """Test the closed-form node contributions."""

    def test_x3w(self, symbolic_h):
        """Test the oracles on x^3 w: only l^k and l^n are nonzero, with opposite signs."""
        oracles = node_formula_oracles(QuarticForm.monomial((3, 0, 0, 1)), symbolic_h)
        assert oracles["l^k"] == -oracles["l^n"]
        assert oracles["l^k"] != 0
        assert oracles["l^m"] == 0


class TestRunSuite:
    """Test the full run."""

    def test_inconsistent_quartic_propagates(self):
        """Test that a quartic vanishing on an edge fails before any claim."""
        with pytest.raises(GenericityError):
            run_suite(QuarticForm.monomial((0, 0, 2, 2)), trials=1)

    @pytest.mark.slow
    def test_designed_quartic_passes(self, f):
        """Test that every claim holds on the designed quartic."""
        report = run_suite(f, seed=7, trials=1)
        assert report.failed() == []
        assert report.passed

    @pytest.mark.slow
    def test_validity_mutations_claimed(self, f):
        """Test that the deleted-node and vertex-on-line mutations are claimed and caught."""
        report = run_suite(f, seed=7, trials=1)
        claims = {c.name: c for c in report.claims}
        for name in ("validity.weight_mismatch", "validity.missing_node", "validity.vertex_on_line"):
            assert claims[name].passed
            assert claims[name].computed is False
