"""
Coxeter types, their diagrams in the standard labelling and the invariant
bilinear form on simple roots.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from django.core.exceptions import ValidationError

from config.validators import COXETER_FACTOR_PATTERN, coxeter_type_validator
from scalars.field import PHI, Scalar

from .exceptions import CoxeterTypeError


FACTOR_RE = re.compile(r"([A-HI])(\d+)(?:\((\d+)\))?")

EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 3): 120,
    ("H", 4): 14400,
}


@dataclass(frozen=True)
class Factor:
    series: str
    rank: int
    bond: Optional[int] = None  # m for I2(m)

    @property
    def is_dihedral(self) -> bool:
        return self.series == "I"

    @property
    def label(self) -> str:
        if self.is_dihedral:
            return f"I2({self.bond})"
        return f"{self.series}{self.rank}"

    def edges(self) -> List[Tuple[int, int, int]]:
        """Diagram edges (i, j, m) with local labels starting at 1."""
        n = self.rank
        if self.series == "A":
            return [(i, i + 1, 3) for i in range(1, n)]
        if self.series == "B":
            return [(i, i + 1, 3) for i in range(1, n - 1)] + [(n - 1, n, 4)]
        if self.series == "D":
            return [(i, i + 1, 3) for i in range(1, n - 1)] + [(n - 2, n, 3)]
        if self.series == "E":
            chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
            return [(a, b, 3) for a, b in zip(chain, chain[1:])] + [(2, 4, 3)]
        if self.series == "F":
            return [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
        if self.series == "H":
            return [(1, 2, 5)] + [(i, i + 1, 3) for i in range(2, n)]
        return [(1, 2, self.bond)]

    def order(self) -> int:
        n = self.rank
        if self.series == "A":
            return math.factorial(n + 1)
        if self.series == "B":
            return 2**n * math.factorial(n)
        if self.series == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.series == "I":
            return 2 * self.bond
        return EXCEPTIONAL_ORDERS[(self.series, n)]

    def num_reflections(self) -> int:
        n = self.rank
        if self.series == "A":
            return n * (n + 1) // 2
        if self.series == "B":
            return n * n
        if self.series == "D":
            return n * (n - 1)
        if self.series == "I":
            return self.bond
        return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("H", 3): 15, ("H", 4): 60}[(self.series, n)]

    def gram(self) -> List[List[Scalar]]:
        """
        Invariant form on the simple roots. Long roots have squared length 2;
        the short roots of B and F have squared length 1.
        """
        if self.is_dihedral:
            raise ValueError("the dihedral model carries no coordinates")
        n = self.rank
        lengths = [Fraction(2)] * n
        if self.series == "B":
            lengths[n - 1] = Fraction(1)
        elif self.series == "F":
            lengths[2] = lengths[3] = Fraction(1)
        g: List[List[Scalar]] = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = lengths[i]
        for i, j, m in self.edges():
            if m == 5:
                value = -PHI
            elif m == 4:
                # |a||b|cos(3pi/4) for squared lengths 2 and 1
                value = Fraction(-1)
            elif lengths[i - 1] == 1 and lengths[j - 1] == 1:
                value = Fraction(-1, 2)
            else:
                value = Fraction(-1)
            g[i - 1][j - 1] = g[j - 1][i - 1] = value
        return g


@dataclass(frozen=True)
class CoxeterType:
    factors: Tuple[Factor, ...]

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def has_dihedral(self) -> bool:
        return any(f.is_dihedral for f in self.factors)

    def offsets(self) -> List[int]:
        out, total = [], 0
        for f in self.factors:
            out.append(total)
            total += f.rank
        return out

    def __str__(self):
        return format_type(self)


def _factor_from_match(series, rank, bond) -> Factor:
    rank = int(rank)
    if series == "I":
        if rank != 2 or bond is None:
            raise CoxeterTypeError("dihedral types are written I2(m)")
        return Factor("I", 2, int(bond))
    if bond is not None:
        raise CoxeterTypeError(f"unexpected bond on {series}{rank}")
    return Factor(series, rank)


def parse_type(text: str) -> CoxeterType:
    text = (text or "").strip()
    try:
        coxeter_type_validator(text)
    except ValidationError as exc:
        raise CoxeterTypeError(f"{text!r}: {exc.messages[0]}") from exc
    factors = []
    for chunk in re.findall(COXETER_FACTOR_PATTERN, text):
        match = FACTOR_RE.fullmatch(chunk)
        factors.append(_factor_from_match(*match.groups()))
    return CoxeterType(tuple(factors))


def format_type(ctype: CoxeterType) -> str:
    return "x".join(f.label for f in ctype.factors)


def coxeter_matrix(ctype: CoxeterType) -> List[List[int]]:
    l = ctype.rank
    m = [[1 if i == j else 2 for j in range(l)] for i in range(l)]
    for factor, offset in zip(ctype.factors, ctype.offsets()):
        for i, j, bond in factor.edges():
            m[offset + i - 1][offset + j - 1] = bond
            m[offset + j - 1][offset + i - 1] = bond
    return m


def group_order(ctype: CoxeterType) -> int:
    return math.prod(f.order() for f in ctype.factors)
