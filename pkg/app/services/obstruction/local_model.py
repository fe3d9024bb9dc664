"""Lifts of the two branches of the local model XY + tZ = 0 at a singular point."""

import logging
from typing import Optional, Sequence

from app.core.config import settings
from app.core.errors import InputError, LiftError
from app.core.scalars import FIELD, ScalarLike, polynomial_ring, to_scalar
from app.models.algebra import CoefficientEquation, LiftSeries, SeriesTerm
from app.models.obstruction import LocalModelLift
from app.services.algebra.series import series_collect

logger = logging.getLogger(__name__)

MODEL_RING = polynomial_ring(("X", "Y", "Z", "t"))


def model_equation():
    X, Y, Z, t = MODEL_RING.gens
    return X * Y + t * Z


def _branch(
    parameter: str,
    along: str,
    across: str,
    series: Sequence,
    perturbation: Sequence,
    order: int,
) -> LiftSeries:
    """
    The branch (along, across, Z) = (v, 0, q(v)) lifted with Z + t*P(v), where
    the across coordinate becomes -t q(v)/v - t^2 P(v)/v.
    """
    across_terms = [SeriesTerm(), SeriesTerm(regular=tuple(-c for c in series))]
    z_terms = [SeriesTerm(regular=(FIELD.zero,) + tuple(series)), SeriesTerm(regular=tuple(perturbation))]
    if order >= 2:
        across_terms.append(
            SeriesTerm(pole=-perturbation[0], regular=tuple(-c for c in perturbation[1:]))
        )
    return LiftSeries(
        parameter=parameter,
        order=order,
        coordinates={
            along: (SeriesTerm(regular=(FIELD.zero, FIELD.one)),),
            across: tuple(across_terms),
            "Z": tuple(z_terms),
        },
    )


def local_model_lift(
    p: Sequence[ScalarLike],
    q: Sequence[ScalarLike],
    r0: ScalarLike,
    order: Optional[int] = None,
    r_tail: Sequence[ScalarLike] = (),
    s_tail: Sequence[ScalarLike] = (),
) -> LocalModelLift:
    """
    Lift the branches (u, 0, p(u)) and (0, v, q(v)) of XY + tZ = 0.

    Z is perturbed by t(r0 + r1 u + ...) on the first branch and by
    t(r0 + s1 v + ...) on the second; the other coordinate absorbs the
    perturbation so the model equation holds exactly.

    Args:
        p: p1, p2, ... with p1 nonzero
        q: q1, q2, ... with q1 nonzero
        r0: The shared constant; the node is smoothed exactly when it is nonzero
        order: Truncation in t
        r_tail: r1, r2, ...
        s_tail: s1, s2, ...

    Returns:
        Both lifts and the smoothing predicate
    """
    order = settings.MODEL_ORDER if order is None else order
    if order < 1:
        raise InputError(f"Model order must be at least 1, got {order}")
    p = [to_scalar(v) for v in p]
    q = [to_scalar(v) for v in q]
    if not p or not p[0] or not q or not q[0]:
        raise LiftError("The local model needs p1 q1 != 0")
    r0 = to_scalar(r0)
    first = _branch("u", "X", "Y", p, [r0] + [to_scalar(v) for v in r_tail], order)
    second = _branch("v", "Y", "X", q, [r0] + [to_scalar(v) for v in s_tail], order)
    logger.debug(f"Local model lifts to order {order} with r0 = {r0}")
    return LocalModelLift(first=first, second=second, r0=r0)


def model_residuals(lift: LiftSeries, order: int, max_u: int) -> list[CoefficientEquation]:
    """Coefficients of XY + tZ along a branch lift that fail to vanish."""
    equations = series_collect(model_equation(), lift, order, max_u=max_u)
    return [eq for eq in equations if not eq.vanishes]
