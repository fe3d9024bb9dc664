"""Exact arithmetic: polynomials over Q(params), chart decompositions, lift series."""

from app.services.algebra.charts import chart_decompose, chart_roles, evaluate_part
from app.services.algebra.polynomials import (
    binary_coefficients,
    chart_names,
    chart_ring,
    dehomogenize,
    edge_ring,
    evaluate_form,
    homogenize,
    quartic_from_expression,
    restrict,
)
from app.services.algebra.series import coefficient_of, equation_at, series_collect, series_ring

__all__ = [
    "binary_coefficients",
    "chart_decompose",
    "chart_names",
    "chart_ring",
    "chart_roles",
    "coefficient_of",
    "dehomogenize",
    "edge_ring",
    "equation_at",
    "evaluate_form",
    "evaluate_part",
    "homogenize",
    "quartic_from_expression",
    "restrict",
    "series_collect",
    "series_ring",
]
