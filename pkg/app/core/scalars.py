"""
Exact coefficient field.

Every coefficient in the engine is an element of Q(alpha, beta, gamma, delta, s),
held as a sympy ``FracElement``. sympy keeps these fractions cancelled with a
positive leading denominator coefficient, so two scalars are equal exactly when
their representations are equal.
"""
import logging
from functools import lru_cache
from math import gcd
from typing import Any, Iterable, Sequence, Union

import numpy as np
from sympy import Integer, Rational, Symbol
from sympy.core.numbers import Rational as RationalType
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, PolyRing, ring

from app.core.errors import ArithmeticFailure, InputError

logger = logging.getLogger(__name__)

PARAMETERS = ("alpha", "beta", "gamma", "delta", "s")
GREEK_NAMES = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta"}

FIELD, ALPHA, BETA, GAMMA, DELTA, S = field(",".join(PARAMETERS), QQ)
DOMAIN = FIELD.to_domain()

Scalar = FracElement
ScalarLike = Union[FracElement, int, str, RationalType]

# gamma and beta are sympy function names; the parser must see plain symbols
_SYMBOLS = {name: Symbol(name) for name in PARAMETERS}
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def to_scalar(value: Any) -> Scalar:
    """Coerce ints, sympy rationals, numpy integers and strings into the field."""
    if isinstance(value, FracElement):
        if value.field != FIELD:
            raise ArithmeticFailure(f"Scalar from a foreign field: {value}")
        return value
    if isinstance(value, bool):
        raise InputError(f"Boolean is not a scalar: {value}")
    if isinstance(value, (int, np.integer)):
        return FIELD(int(value))
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, RationalType):
        return FIELD(value)
    if isinstance(value, PolyElement) and value.ring == FIELD.ring:
        return FIELD(value)
    if QQ.of_type(value):
        return FIELD.ground_new(value)
    raise InputError(f"Cannot interpret {value!r} as a scalar")


def parse_expression(text: str, variables: tuple[str, ...] = ()) -> Any:
    """
    Parse text in the documented grammar into a sympy expression.

    Integers, ``p/q``, the names alpha beta gamma delta s (or the Greek letters),
    the given variable names, ``+ - * / ^ **`` and parentheses are accepted.
    """
    source = text.strip()
    if not source:
        raise InputError("Empty expression")
    for letter, name in GREEK_NAMES.items():
        source = source.replace(letter, f" {name} ")
    local = dict(_SYMBOLS)
    local.update({name: Symbol(name) for name in variables})
    try:
        expr = parse_expr(source, local_dict=local, transformations=_TRANSFORMATIONS)
    except Exception as e:  # tokenizer errors surface as their own types
        raise InputError(f"Cannot parse '{text}': {e}")
    unknown = {str(sym) for sym in getattr(expr, "free_symbols", set())} - set(local)
    if unknown:
        raise InputError(f"Unknown names in '{text}': {sorted(unknown)}")
    return expr


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar; see ``parse_expression`` for the grammar."""
    expr = parse_expression(text)
    try:
        return FIELD.from_expr(expr)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Scalar '{text}' is not a rational function: {e}")


def scalar_from_parts(numerator: str, denominator: str = "1") -> Scalar:
    return divide(parse_scalar(numerator), parse_scalar(denominator))


def _format_poly(poly: PolyElement) -> str:
    return str(poly.as_expr()).replace("**", "^")


def format_scalar(value: Scalar) -> str:
    numer = _format_poly(value.numer)
    if value.denom == FIELD.ring.one:
        return numer
    denom = _format_poly(value.denom)
    if len(value.numer) > 1:
        numer = f"({numer})"
    if len(value.denom) > 1 or not value.denom.is_ground:
        denom = f"({denom})"
    return f"{numer}/{denom}"


def scalar_parts(value: Scalar) -> tuple[str, str]:
    """Numerator and denominator strings, the JSON wire form."""
    return _format_poly(value.numer), _format_poly(value.denom)


def divide(numerator: ScalarLike, denominator: ScalarLike) -> Scalar:
    num, den = to_scalar(numerator), to_scalar(denominator)
    if not den:
        raise ArithmeticFailure("Division by the zero polynomial")
    return num / den


def is_rational(value: Scalar) -> bool:
    return value.numer.is_ground and value.denom.is_ground


def as_rational(value: Scalar) -> Rational:
    """Plain rational value of a parameter-free scalar."""
    if not is_rational(value):
        raise ArithmeticFailure(f"Scalar {format_scalar(value)} depends on parameters")
    zero = FIELD.ring.zero_monom
    numer = QQ.to_sympy(value.numer.get(zero, QQ.zero))
    denom = QQ.to_sympy(value.denom.get(zero, QQ.one))
    return Rational(numer, denom)


def integer_pair(first: Scalar, second: Scalar) -> tuple[int, int]:
    """Coprime integer representative of the projective pair [first:second]."""
    a, b = as_rational(first), as_rational(second)
    if a == 0 and b == 0:
        raise ArithmeticFailure("The pair [0:0] is not a projective point")
    scale = Integer(a.q * b.q)
    ia, ib = int(a * scale), int(b * scale)
    common = gcd(ia, ib)
    ia, ib = ia // common, ib // common
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib = -ia, -ib
    return ia, ib


def random_rational(rng: np.random.Generator, bound: int, nonzero: bool = False) -> Scalar:
    while True:
        numer = int(rng.integers(-bound, bound + 1))
        denom = int(rng.integers(1, bound + 1))
        if numer or not nonzero:
            return FIELD(Rational(numer, denom))


@lru_cache(maxsize=None)
def polynomial_ring(names: tuple[str, ...]) -> PolyRing:
    """Sparse polynomial ring over the coefficient field, cached by generator names."""
    return ring([Symbol(name) for name in names], DOMAIN)[0]


def evaluate(poly: PolyElement, values: Sequence[ScalarLike]) -> Scalar:
    """Evaluate a polynomial over the field at a full assignment of its generators."""
    point = [to_scalar(v) for v in values]
    if len(point) != poly.ring.ngens:
        raise ArithmeticFailure(
            f"Expected {poly.ring.ngens} values, got {len(point)}"
        )
    return poly.evaluate(list(zip(poly.ring.gens, point)))


def scalar_sum(values: Iterable[Scalar]) -> Scalar:
    total = FIELD.zero
    for value in values:
        total = total + value
    return total
