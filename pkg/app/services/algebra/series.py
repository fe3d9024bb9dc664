"""Substitution of truncated lift series into chart equations."""

import logging
from typing import Mapping, Optional, Sequence

from sympy.polys.ring_series import rs_mul, rs_pow, rs_trunc
from sympy.polys.rings import PolyElement, PolyRing

from app.core.errors import ArithmeticFailure
from app.core.scalars import FIELD, Scalar, polynomial_ring
from app.models.algebra import CoefficientEquation, LiftSeries, SeriesTerm, UnknownSlot

logger = logging.getLogger(__name__)


def series_ring(parameter: str, unknowns: Sequence[str] = ()) -> PolyRing:
    """Q(params)[u, t, unknowns...]; the unknowns only ever enter linearly."""
    return polynomial_ring((parameter, "t") + tuple(unknowns))


def _numerator(
    terms: tuple[SeriesTerm, ...], slots: Sequence[tuple[PolyElement, UnknownSlot]], ring: PolyRing
) -> PolyElement:
    """u times the series: pole + regular[0] u + regular[1] u^2 + ... per power of t."""
    u, t = ring.gens[:2]
    padding = (0,) * (ring.ngens - 2)
    data = {}
    for j, term in enumerate(terms):
        if term.pole:
            data[(0, j) + padding] = term.pole
        for m, coeff in enumerate(term.regular):
            if coeff:
                data[(m + 1, j) + padding] = coeff
    numerator = ring.from_dict(data)
    for gen, slot in slots:
        monomial = gen * u ** (slot.u_power + 1) * t**slot.t_power
        numerator = numerator + ring.ground_new(slot.scale) * monomial
    return numerator


def _slots(
    lift: LiftSeries, unknowns: Mapping[str, Sequence[UnknownSlot]], ring: PolyRing
) -> dict[str, list[tuple[PolyElement, UnknownSlot]]]:
    by_coordinate: dict[str, list[tuple[PolyElement, UnknownSlot]]] = {}
    for name, gen in zip(unknowns, ring.gens[2:]):
        if name in lift.coordinates or name in (lift.parameter, "t"):
            raise ArithmeticFailure(f"Unknown {name} clashes with a series variable")
        for slot in unknowns[name]:
            if slot.coordinate not in lift.coordinates:
                raise ArithmeticFailure(
                    f"Unknown {name} placed on {slot.coordinate}, which the lift does not parametrize"
                )
            by_coordinate.setdefault(slot.coordinate, []).append((gen, slot))
    return by_coordinate


def series_collect(
    equation: PolyElement,
    lift: LiftSeries,
    order: int,
    max_u: Optional[int] = None,
    unknowns: Optional[Mapping[str, Sequence[UnknownSlot]]] = None,
) -> list[CoefficientEquation]:
    """
    Substitute a lift into an equation and read off the coefficients of t^a u^b.

    The equation is a polynomial whose generators are chart coordinates named
    as in the lift, plus optionally ``t``. Every coordinate series is written
    as N(u, t)/u, the substitution is carried out exactly in Q(params)[u, t]
    modulo t^(order+1), and the coefficients are shifted back by the pole order.

    Unknowns added through ``unknowns`` sit next to the lift's own terms. Each
    collected coefficient comes back affine in them: a constant ``value`` plus
    a ``linear`` slope per unknown.

    Args:
        equation: Polynomial in chart coordinates (and t)
        lift: Lift of the branch, truncated at least to ``order``
        order: Highest power of t collected
        max_u: Highest power of u collected; defaults to the lift depth
        unknowns: Unknown name to the places where it enters the lift

    Returns:
        One equation per (a, b) with a <= order, ordered by a then b
    """
    if lift.order < order:
        raise ArithmeticFailure(f"Lift truncated at t^{lift.order}, cannot collect t^{order}")
    names = [str(s) for s in equation.ring.symbols]
    t_index = names.index("t") if "t" in names else None
    coord_indices = [i for i, name in enumerate(names) if i != t_index]
    missing = [names[i] for i in coord_indices if names[i] not in lift.coordinates]
    if missing:
        raise ArithmeticFailure(f"Lift does not parametrize {missing}")

    unknowns = unknowns or {}
    ring = series_ring(lift.parameter, tuple(unknowns))
    u, t = ring.gens[:2]
    prec = order + 1
    slots = _slots(lift, unknowns, ring)
    numerators = {
        names[i]: rs_trunc(
            _numerator(lift.coordinates[names[i]], slots.get(names[i], ()), ring), t, prec
        )
        for i in coord_indices
    }
    pole_order = max(
        (sum(monom[i] for i in coord_indices) for monom in equation.keys()), default=0
    )

    powers: dict[tuple[str, int], PolyElement] = {}
    total = ring.zero
    for monom, coeff in equation.items():
        t_exp = monom[t_index] if t_index is not None else 0
        if t_exp > order:
            continue
        term = ring.ground_new(coeff) * t**t_exp
        y_degree = 0
        for i in coord_indices:
            exponent = monom[i]
            if not exponent:
                continue
            key = (names[i], exponent)
            if key not in powers:
                powers[key] = rs_pow(numerators[names[i]], exponent, t, prec)
            term = rs_mul(term, powers[key], t, prec)
            y_degree += exponent
        total = total + term * u ** (pole_order - y_degree)

    top = lift.depth if max_u is None else max_u
    unknown_names = list(unknowns)
    buckets: dict[tuple[int, int], dict[Optional[str], Scalar]] = {}
    for monom, coeff in total.items():
        bucket = buckets.setdefault((monom[1], monom[0] - pole_order), {})
        rest = monom[2:]
        degree = sum(rest)
        if degree == 0:
            bucket[None] = coeff
        elif degree == 1:
            bucket[unknown_names[rest.index(1)]] = coeff
        elif monom[1] <= order and -pole_order <= monom[0] - pole_order <= top:
            raise ArithmeticFailure(
                f"Coefficient of t^{monom[1]} u^{monom[0] - pole_order} is not affine in the unknowns"
            )

    equations = []
    for a in range(order + 1):
        for b in range(-pole_order, top + 1):
            bucket = buckets.get((a, b), {})
            equations.append(
                CoefficientEquation(
                    t_power=a,
                    u_power=b,
                    value=bucket.get(None, FIELD.zero),
                    linear={k: v for k, v in bucket.items() if k is not None},
                )
            )
    logger.debug(
        f"Collected {len(equations)} coefficient equations up to t^{order} u^{top}"
    )
    return equations


def equation_at(
    equations: list[CoefficientEquation], t_power: int, u_power: int
) -> CoefficientEquation:
    for eq in equations:
        if eq.t_power == t_power and eq.u_power == u_power:
            return eq
    return CoefficientEquation(t_power=t_power, u_power=u_power, value=FIELD.zero)


def coefficient_of(equations: list[CoefficientEquation], t_power: int, u_power: int):
    return equation_at(equations, t_power, u_power).value
