"""Acceptance suite over a designed quartic."""

from app.services.verification.suite import (
    node_formula_oracles,
    random_hyperplane,
    random_quartic,
    run_suite,
)

__all__ = ["node_formula_oracles", "random_hyperplane", "random_quartic", "run_suite"]
