"""
Evaluation of elements as logarithmic differential forms.

a_r maps to d(beta_r)/beta_r, where beta_r is the linear form (beta_r, .) of
the invariant inner product; a degree-p word evaluates at a point x on p
tangent vectors to det[(beta_{t_i}, v_j)] / prod_i (beta_{t_i}, x).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from coxeter.roots import RootSystem
from scalars.field import Scalar, is_zero
from scalars.linalg import determinant

from .algebra import SparseElement


@dataclass(frozen=True)
class FormPoint:
    point: Tuple[Fraction, ...]
    directions: Tuple[Tuple[Fraction, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.directions)


def _require_coordinates(rs: RootSystem) -> None:
    if not rs.has_coordinates:
        raise ValueError(f"{rs.ctype}: forms need root coordinates, unavailable for dihedral factors")


def off_arrangement(rs: RootSystem, point: Sequence[Scalar]) -> bool:
    return all(not is_zero(rs.pair(rs.vector(r), point)) for r in rs.positive_reflections())


def form_eval(x: SparseElement, pt: FormPoint) -> Scalar:
    algebra = x.algebra
    rs = algebra.rs
    _require_coordinates(rs)
    if not off_arrangement(rs, pt.point):
        raise ValueError("point lies on a reflecting hyperplane")
    total: Scalar = Fraction(0)
    for word, coeff in x.terms.items():
        if len(word) != pt.degree:
            raise ValueError(f"word of degree {len(word)} evaluated on {pt.degree} directions")
        roots = [rs.vector(algebra.order.reflection(p)) for p in word]
        matrix = [[rs.pair(beta, v) for v in pt.directions] for beta in roots]
        denominator: Scalar = Fraction(1)
        for beta in roots:
            denominator = denominator * rs.pair(beta, pt.point)
        total = total + coeff * determinant(matrix) / denominator
    return total


def random_form_point(rs: RootSystem, degree: int, rng: random.Random, bound: int = 6) -> FormPoint:
    """Small integer point off every hyperplane, with ``degree`` integer directions."""
    _require_coordinates(rs)

    def vector():
        return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(rs.rank))

    point = vector()
    while not off_arrangement(rs, point):
        point = vector()
    return FormPoint(point=point, directions=tuple(vector() for _ in range(degree)))
