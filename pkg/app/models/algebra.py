"""Algebraic value types: quartic forms, chart decompositions and lift series."""

from typing import Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy.polys.rings import PolyElement

from app.core.scalars import FIELD, Scalar, ScalarLike, polynomial_ring, to_scalar
from app.models.geometry import COORDINATES, Coordinate, ProjectivePoint

Exponent = tuple[int, int, int, int]

QUARTIC_RING = polynomial_ring(tuple(c.value for c in COORDINATES))


def quartic_monomials() -> list[Exponent]:
    """The 35 exponent vectors of degree 4, in descending lexicographic order."""
    return [
        (a, b, c, 4 - a - b - c)
        for a in range(4, -1, -1)
        for b in range(4 - a, -1, -1)
        for c in range(4 - a - b, -1, -1)
    ]


def monomial_name(exponent: Exponent) -> str:
    factors = []
    for c, e in zip(COORDINATES, exponent):
        if e == 1:
            factors.append(c.value)
        elif e > 1:
            factors.append(f"{c.value}^{e}")
    return "*".join(factors) or "1"


class QuarticForm(BaseModel):
    """
    Homogeneous quartic in x, y, z, w over the coefficient field.

    Backed by a sparse sympy polynomial, so zero coefficients are never stored.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    poly: PolyElement

    @model_validator(mode="after")
    def _homogeneous_quartic(self) -> "QuarticForm":
        if self.poly.ring != QUARTIC_RING:
            raise ValueError("Quartic must live in the ring Q(params)[x, y, z, w]")
        for monom in self.poly.keys():
            if sum(monom) != 4:
                raise ValueError(f"Monomial {monom} is not of degree 4")
        return self

    @classmethod
    def zero(cls) -> "QuarticForm":
        return cls(poly=QUARTIC_RING.zero)

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, ScalarLike]) -> "QuarticForm":
        data = {}
        for exponent, value in terms.items():
            coeff = to_scalar(value)
            if coeff:
                data[tuple(int(e) for e in exponent)] = coeff
        return cls(poly=QUARTIC_RING.from_dict(data))

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: ScalarLike = 1) -> "QuarticForm":
        return cls.from_terms({exponent: coefficient})

    def coefficient(self, exponent: Exponent) -> Scalar:
        return self.poly.get(tuple(exponent), FIELD.zero)

    def terms(self) -> list[tuple[Exponent, Scalar]]:
        """Nonzero terms in descending lexicographic order."""
        return sorted(self.poly.items(), reverse=True)

    def split(self) -> list["QuarticForm"]:
        """One single-term quartic per monomial of the support."""
        return [QuarticForm.monomial(exp, coeff) for exp, coeff in self.terms()]

    def is_rational(self) -> bool:
        return all(c.numer.is_ground and c.denom.is_ground for c in self.poly.values())

    def __add__(self, other: "QuarticForm") -> "QuarticForm":
        return QuarticForm(poly=self.poly + other.poly)

    def __sub__(self, other: "QuarticForm") -> "QuarticForm":
        return QuarticForm(poly=self.poly - other.poly)

    def scale(self, factor: ScalarLike) -> "QuarticForm":
        return QuarticForm(poly=self.poly * to_scalar(factor))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __str__(self) -> str:
        return str(self.poly.as_expr()).replace("**", "^") if self.poly else "0"


class ChartDecomposition(BaseModel):
    """
    f / P^4 = c0 + (Y_F - A) g1(Y_F) + Y_M g2(Y_F, Y_M) + Y_L g3(Y_F, Y_M, Y_L).

    P is the pivot, F the other coordinate that is nonzero at the base point,
    M and L the two coordinates vanishing there (in coordinate order) and
    A = F/P at the base point. The polynomials live in the affine chart ring
    whose generators are the non-pivot coordinates in coordinate order.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pivot: Coordinate
    first: Coordinate
    middle: Coordinate
    last: Coordinate
    base_point: ProjectivePoint
    anchor: Scalar
    c0: Scalar
    g1: PolyElement
    g2: PolyElement
    g3: PolyElement
    source: PolyElement

    @model_validator(mode="after")
    def _reconstructs(self) -> "ChartDecomposition":
        if self.reassemble() != self.source:
            raise ValueError("Chart decomposition does not reassemble to f / pivot^4")
        return self

    @property
    def ring(self):
        return self.source.ring

    def chart_gen(self, c: Coordinate) -> PolyElement:
        names = [str(s) for s in self.ring.symbols]
        return self.ring.gens[names.index(f"{c.value}_{self.pivot.value}")]

    def reassemble(self) -> PolyElement:
        y_f = self.chart_gen(self.first)
        y_m = self.chart_gen(self.middle)
        y_l = self.chart_gen(self.last)
        return self.c0 + (y_f - self.anchor) * self.g1 + y_m * self.g2 + y_l * self.g3

    def base_values(self) -> list[Scalar]:
        """Chart coordinates of the base point, in chart generator order."""
        return [self.anchor if c == self.first else FIELD.zero for c in self._chart_coords()]

    def _chart_coords(self) -> list[Coordinate]:
        return [c for c in COORDINATES if c != self.pivot]


class SeriesTerm(BaseModel):
    """Coefficient of one power of t: pole/u + regular[0] + regular[1] u + ..."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pole: Scalar = FIELD.zero
    regular: tuple[Scalar, ...] = ()

    @classmethod
    def of(cls, regular: tuple = (), pole: ScalarLike = 0) -> "SeriesTerm":
        return cls(pole=to_scalar(pole), regular=tuple(to_scalar(v) for v in regular))

    def coefficient(self, u_power: int) -> Scalar:
        if u_power == -1:
            return self.pole
        if 0 <= u_power < len(self.regular):
            return self.regular[u_power]
        return FIELD.zero


class LiftSeries(BaseModel):
    """
    Truncated lift of a branch: each chart coordinate as a series in t whose
    coefficients are Laurent polynomials in the branch parameter with at most a
    simple pole.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    parameter: str
    order: int
    coordinates: dict[str, tuple[SeriesTerm, ...]]

    @model_validator(mode="after")
    def _truncated(self) -> "LiftSeries":
        if self.order < 0:
            raise ValueError("Truncation order must be non-negative")
        for name, terms in self.coordinates.items():
            if len(terms) > self.order + 1:
                raise ValueError(f"Coordinate {name} carries terms beyond t^{self.order}")
            if terms and terms[0].pole:
                raise ValueError(f"Unperturbed branch of {name} has a pole")
        return self

    def term(self, name: str, t_power: int) -> SeriesTerm:
        terms = self.coordinates[name]
        return terms[t_power] if t_power < len(terms) else SeriesTerm()

    def pole(self, name: str, t_power: int) -> Scalar:
        return self.term(name, t_power).pole

    def coefficient(self, name: str, t_power: int, u_power: int) -> Scalar:
        return self.term(name, t_power).coefficient(u_power)

    @property
    def depth(self) -> int:
        """Number of regular coefficients carried at positive powers of t."""
        lengths = [len(t.regular) for terms in self.coordinates.values() for t in terms[1:]]
        return min(lengths) if lengths else 0

    def truncate(self, order: int) -> "LiftSeries":
        return LiftSeries(
            parameter=self.parameter,
            order=min(order, self.order),
            coordinates={k: v[: order + 1] for k, v in self.coordinates.items()},
        )


class UnknownSlot(BaseModel):
    """Where an unknown enters a lift: ``scale * unknown * t^t_power * u^u_power`` in one coordinate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coordinate: str
    t_power: int
    u_power: int
    scale: Scalar = FIELD.one

    @model_validator(mode="after")
    def _laurent(self) -> "UnknownSlot":
        if self.t_power < 1 or self.u_power < -1:
            raise ValueError("Unknowns sit at positive powers of t with at most a simple pole in u")
        return self


class CoefficientEquation(BaseModel):
    """
    The coefficient of t^a u^b after substitution: ``value + sum(linear[e] * e)``.

    ``linear`` is empty when the lift carries no unknowns; a solved lift makes
    the coefficient vanish.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t_power: int
    u_power: int
    value: Scalar
    linear: dict[str, Scalar] = Field(default_factory=dict)

    @property
    def vanishes(self) -> bool:
        return not self.value and not any(self.linear.values())

    def slope(self, unknown: str) -> Scalar:
        return self.linear.get(unknown, FIELD.zero)
