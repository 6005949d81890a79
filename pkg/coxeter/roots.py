"""
Root systems in simple-root coordinates.

Root indices run 1..2N: positive roots first (1..N, each also naming its
reflection), then their negatives in the same order, so
index(-beta) = index(beta) + N. Slot 0 of every permutation is unused.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from scalars.field import Scalar, sign

from .types import CoxeterType, Factor, group_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RootSystem:
    ctype: CoxeterType
    rank: int
    num_positive: int
    # roots[i] is a coordinate tuple, or None for roots of a dihedral factor
    roots: Tuple[Optional[Tuple[Scalar, ...]], ...]
    simple_index: Tuple[int, ...]
    simple_perms: Tuple[Tuple[int, ...], ...]
    # factor number of every root index
    component: Tuple[int, ...]
    # rows of the invariant form, None inside dihedral blocks
    gram: Tuple[Tuple[Optional[Scalar], ...], ...]
    cartan: Tuple[Tuple[Optional[Scalar], ...], ...]

    @property
    def size(self) -> int:
        return 2 * self.num_positive

    @cached_property
    def order(self) -> int:
        return group_order(self.ctype)

    @property
    def has_coordinates(self) -> bool:
        return not self.ctype.has_dihedral

    def negate(self, index: int) -> int:
        n = self.num_positive
        return index + n if index <= n else index - n

    def is_positive(self, index: int) -> bool:
        return index <= self.num_positive

    def reflection_of(self, index: int) -> int:
        """Reflection (positive root index) of the root ``index`` or its negative."""
        return index if index <= self.num_positive else index - self.num_positive

    def vector(self, index: int) -> Tuple[Scalar, ...]:
        vec = self.roots[index]
        if vec is None:
            raise ValueError(f"{self.ctype}: root {index} lies in a dihedral factor and has no coordinates")
        return vec

    def generator_factor(self, generator: int) -> int:
        return self.component[self.simple_index[generator - 1]]

    def pair(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        """Invariant form (u, v) for vectors in simple-root coordinates."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj != 0:
                    total = total + ui * row[j] * vj
        return total

    def positive_reflections(self) -> range:
        return range(1, self.num_positive + 1)


def _reflect(cartan_row: Sequence[Scalar], i: int, v: Tuple[Scalar, ...]) -> Tuple[Scalar, ...]:
    coefficient = sum((c * x for c, x in zip(cartan_row, v) if c != 0 and x != 0), Fraction(0))
    out = list(v)
    out[i] = out[i] - coefficient
    return tuple(out)


def _is_positive(v: Iterable[Scalar]) -> bool:
    signs = [sign(x) for x in v]
    return min(signs) >= 0 and max(signs) > 0


def _crystal_factor(factor: Factor):
    """
    Positive roots of one factor by closure from the simple roots, ordered
    breadth first so the simple roots come first.
    """
    n = factor.rank
    gram = factor.gram()
    cartan = [[2 * gram[i][j] / gram[i][i] for j in range(n)] for i in range(n)]
    positives: List[Tuple[Scalar, ...]] = []
    lookup = {}
    for i in range(n):
        unit = tuple(Fraction(1 if k == i else 0) for k in range(n))
        lookup[unit] = len(positives)
        positives.append(unit)
    queue = deque(range(n))
    while queue:
        v = positives[queue.popleft()]
        for i in range(n):
            w = _reflect(cartan[i], i, v)
            if w not in lookup and _is_positive(w):
                lookup[w] = len(positives)
                positives.append(w)
                queue.append(lookup[w])
    count = len(positives)
    everything = positives + [tuple(-x for x in v) for v in positives]
    index_of = {v: k for k, v in enumerate(everything)}
    perms = []
    for i in range(n):
        perms.append([index_of[_reflect(cartan[i], i, v)] for v in everything])
    simple_local = list(range(n))
    return count, everything, simple_local, perms, gram, cartan


def _dihedral_factor(factor: Factor):
    """
    Roots of I2(m) indexed by angle k*pi/m, k = 0..2m-1. Positive roots are
    k < m; the simple roots sit at angles 0 and (m-1)pi/m. Reflection in the
    root at angle j sends angle k to 2j + m - k.
    """
    m = factor.bond
    simple_local = [0, m - 1]
    perms = [[(2 * j + m - k) % (2 * m) for k in range(2 * m)] for j in simple_local]
    return m, [None] * (2 * m), simple_local, perms, None, None


def build_root_system(ctype: CoxeterType) -> RootSystem:
    l = ctype.rank
    built = [(_dihedral_factor(f) if f.is_dihedral else _crystal_factor(f)) for f in ctype.factors]
    total = sum(b[0] for b in built)
    roots: List[Optional[tuple]] = [None] * (2 * total + 1)
    component = [0] * (2 * total + 1)
    simple_index: List[int] = []
    simple_perms: List[Tuple[int, ...]] = []
    gram: List[List[Optional[Scalar]]] = [[Fraction(0)] * l for _ in range(l)]
    cartan: List[List[Optional[Scalar]]] = [[Fraction(0)] * l for _ in range(l)]

    root_offset = 0
    for number, (factor, coord_offset, data) in enumerate(zip(ctype.factors, ctype.offsets(), built)):
        count, local_roots, simple_local, local_perms, local_gram, local_cartan = data

        def to_global(k, count=count, root_offset=root_offset):
            if k < count:
                return root_offset + k + 1
            return root_offset + (k - count) + 1 + total

        for k, vec in enumerate(local_roots):
            g = to_global(k)
            component[g] = number
            if vec is not None:
                padded = [Fraction(0)] * l
                padded[coord_offset:coord_offset + factor.rank] = vec
                roots[g] = tuple(padded)
        for local_simple, local_perm in zip(simple_local, local_perms):
            simple_index.append(to_global(local_simple))
            perm = list(range(2 * total + 1))
            for k, image in enumerate(local_perm):
                perm[to_global(k)] = to_global(image)
            simple_perms.append(tuple(perm))
        for i in range(factor.rank):
            for j in range(factor.rank):
                if local_gram is None:
                    gram[coord_offset + i][coord_offset + j] = None
                    cartan[coord_offset + i][coord_offset + j] = None
                else:
                    gram[coord_offset + i][coord_offset + j] = local_gram[i][j]
                    cartan[coord_offset + i][coord_offset + j] = local_cartan[i][j]
        root_offset += count

    rs = RootSystem(
        ctype=ctype,
        rank=l,
        num_positive=total,
        roots=tuple(roots),
        simple_index=tuple(simple_index),
        simple_perms=tuple(simple_perms),
        component=tuple(component),
        gram=tuple(tuple(row) for row in gram),
        cartan=tuple(tuple(row) for row in cartan),
    )
    logger.debug("[ROOTS] type=%s rank=%s positive=%s", ctype, l, total)
    return rs


def parabolic_roots(rs: RootSystem, subset: Iterable[int]) -> FrozenSet[int]:
    """Root indices of Phi_I: the W_I-orbit of the simple roots of I."""
    subset = list(subset)
    found = {rs.simple_index[i - 1] for i in subset}
    frontier = list(found)
    while frontier:
        root = frontier.pop()
        for i in subset:
            image = rs.simple_perms[i - 1][root]
            if image not in found:
                found.add(image)
                frontier.append(image)
    return frozenset(found)
