"""
Inverse problem for the singular locus: build a quartic from 24 prescribed
singular points, and draw consistent random prescriptions.
"""
import logging
from itertools import permutations
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import Matrix, Rational, zeros

from app.core.config import settings
from app.core.errors import GenericityError
from app.core.scalars import FIELD, as_rational, integer_pair, random_rational, to_scalar
from app.models.algebra import QuarticForm, quartic_monomials
from app.models.fiber import DesignedQuartic, PrescribedPoint
from app.models.geometry import COORDINATES, EDGES, Edge

logger = logging.getLogger(__name__)


def _edge_exponent(edge: Edge, j: int) -> tuple[int, ...]:
    """Exponent of s1^(4-j) s2^j on the edge, embedded in x, y, z, w."""
    exponent = [0, 0, 0, 0]
    s1, s2 = edge.surviving
    exponent[s1.index] = 4 - j
    exponent[s2.index] = j
    return tuple(exponent)


def prescribed_form(roots: Sequence[tuple[int, int]]) -> list[int]:
    """Coefficients of s1^4, ..., s2^4 in the product of (b*s1 - a*s2) over roots [a:b]."""
    coefficients = [1]
    for a, b in roots:
        product = [0] * (len(coefficients) + 1)
        for i, c in enumerate(coefficients):
            product[i] += b * c
            product[i + 1] -= a * c
        coefficients = product
    return coefficients


def group_prescription(points: Iterable[PrescribedPoint]) -> dict[Edge, list[tuple[int, int]]]:
    """Check a prescription and group its roots by edge, in edge order."""
    grouped: dict[Edge, list[tuple[int, int]]] = {edge: [] for edge in EDGES}
    for p in points:
        if p.on_vertex:
            raise GenericityError(
                f"Prescribed root [{p.root[0]}:{p.root[1]}] on {p.edge} is a vertex",
                edge=p.edge.name,
            )
        root = integer_pair(to_scalar(p.root[0]), to_scalar(p.root[1]))
        if root in grouped[p.edge]:
            raise GenericityError(
                f"Root [{root[0]}:{root[1]}] prescribed twice on {p.edge}", edge=p.edge.name
            )
        grouped[p.edge].append(root)
    for edge, roots in grouped.items():
        if len(roots) != 4:
            raise GenericityError(
                f"Edge {edge} needs 4 prescribed points, got {len(roots)}", edge=edge.name
            )
    return grouped


def _symmetry_rows(monomials: list[tuple[int, ...]], width: int) -> list[Matrix]:
    """Rows equating coefficients along coordinate permutations and equating the six scales."""
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    seen = set()
    for perm in permutations(range(4)):
        for m in monomials:
            image = tuple(m[perm[i]] for i in range(4))
            pair = tuple(sorted((index[m], index[image])))
            if pair[0] == pair[1] or pair in seen:
                continue
            seen.add(pair)
            row = zeros(1, width)
            row[pair[0]], row[pair[1]] = 1, -1
            rows.append(row)
    first = len(monomials)
    for k in range(1, len(EDGES)):
        row = zeros(1, width)
        row[first], row[first + k] = 1, -1
        rows.append(row)
    return rows


def design_system(
    grouped: dict[Edge, list[tuple[int, int]]], symmetric: bool = False
) -> Matrix:
    """
    The linear system in the 35 coefficients of f followed by the six edge scales.

    On every edge the five restricted coefficients equal the edge scale times
    the prescribed binary quartic.
    """
    monomials = quartic_monomials()
    index = {m: i for i, m in enumerate(monomials)}
    width = len(monomials) + len(EDGES)
    rows = []
    for k, edge in enumerate(EDGES):
        target = prescribed_form(grouped[edge])
        for j in range(5):
            row = zeros(1, width)
            row[index[_edge_exponent(edge, j)]] = 1
            row[len(monomials) + k] = -target[j]
            rows.append(row)
    if symmetric:
        rows.extend(_symmetry_rows(monomials, width))
    return Matrix.vstack(*rows)


def _combination_weights(size: int, attempt: int) -> list[int]:
    if attempt == 0:
        return [1] * size
    rng = np.random.default_rng(attempt)
    return [int(v) for v in rng.integers(1, 10, size=size)]


def design_f(
    prescribed: Iterable[PrescribedPoint],
    symmetric: bool = False,
    max_attempts: Optional[int] = None,
) -> DesignedQuartic:
    """
    Build a quartic whose restriction to every edge has the prescribed roots.

    Args:
        prescribed: 24 points, four in the interior of each edge
        symmetric: Also require f and the edge scales to be invariant under
            permutations of the coordinates
        max_attempts: Kernel combinations tried before giving up

    Returns:
        The quartic, the dimension of the solution space and the edge scales
    """
    grouped = group_prescription(prescribed)
    system = design_system(grouped, symmetric)
    basis = system.nullspace()
    first_scale = len(quartic_monomials())
    logger.debug(f"Design system {system.shape} has nullity {len(basis)}")

    for k, edge in enumerate(EDGES):
        if all(v[first_scale + k] == 0 for v in basis):
            raise GenericityError(
                f"No quartic has the prescribed roots with a nonzero scale on {edge}",
                edge=edge.name,
            )

    attempts = max_attempts or settings.MAX_DESIGN_ATTEMPTS
    for attempt in range(attempts):
        weights = _combination_weights(len(basis), attempt)
        solution = zeros(system.shape[1], 1)
        for weight, vector in zip(weights, basis):
            solution += weight * vector
        scales = [solution[first_scale + k] for k in range(len(EDGES))]
        if all(scales):
            break
    else:
        raise GenericityError(
            f"No combination of the {len(basis)} kernel vectors has all edge scales nonzero"
        )

    f = QuarticForm.from_terms(
        {m: Rational(solution[i]) for i, m in enumerate(quartic_monomials())}
    )
    logger.info(f"Designed f with {len(f.poly)} terms (solution space dimension {len(basis)})")
    return DesignedQuartic(
        f=f,
        nullity=len(basis),
        scales={edge.name: FIELD(Rational(s)) for edge, s in zip(EDGES, scales)},
        symmetric=symmetric,
    )


def uniform_prescription(roots: Sequence[tuple[int, int]]) -> list[PrescribedPoint]:
    """The same four roots on every edge."""
    return [PrescribedPoint(edge=edge, root=tuple(r)) for edge in EDGES for r in roots]


def random_prescription(
    rng: np.random.Generator, bound: Optional[int] = None
) -> list[PrescribedPoint]:
    """
    A random 24-point prescription that some quartic realizes.

    Nonzero values for the four pure powers are drawn first. On the edge with
    surviving coordinates s1 < s2 the restricted form is a multiple of the
    product of (T_i s1 - s2), whose s1^4/s2^4 ratio is the product of the T_i;
    three affine roots are random and the fourth is forced by that ratio.
    """
    bound = bound or settings.RANDOM_COEFF_BOUND
    powers = {c: random_rational(rng, bound, nonzero=True) for c in COORDINATES}
    points = []
    for edge in EDGES:
        s1, s2 = edge.surviving
        ratio = as_rational(powers[s1] / powers[s2])
        while True:
            affine = [as_rational(random_rational(rng, bound, nonzero=True)) for _ in range(3)]
            fourth = ratio / (affine[0] * affine[1] * affine[2])
            candidates = affine + [fourth]
            if len(set(candidates)) == 4:
                break
        for value in candidates:
            root = integer_pair(to_scalar(1), to_scalar(value))
            points.append(PrescribedPoint(edge=edge, root=root))
    logger.debug(f"Random prescription with pure powers {[str(v) for v in powers.values()]}")
    return points
