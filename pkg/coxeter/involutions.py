"""
Conjugacy machinery: classes, shapes, normalizers, involutions and the
special-involution test.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from scalars.linalg import column_space, direction_key

from .chains import check_group_guard, enumerate_group
from .elements import GroupElement, is_involution, longest_element, minus_one_condition, simple_reflection
from .exceptions import ConsistencyError
from .roots import RootSystem, parabolic_roots

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Shape:
    representative: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.representative)


@dataclass(frozen=True)
class InvolutionClass:
    representative: GroupElement
    subset: Tuple[int, ...]
    size: int
    special: bool


def _require_involution(rs: RootSystem, t: GroupElement) -> None:
    if not is_involution(rs, t):
        raise ValueError("element is not an involution")


def _image(rs: RootSystem, t: GroupElement, index: int) -> tuple:
    return rs.vector(t.perm[index])


def eigenspace_decomposition(rs: RootSystem, t: GroupElement):
    """Bases of V_1 and V_-1, spanned by e + t(e) and e - t(e) over the simple roots."""
    _require_involution(rs, t)
    if not rs.has_coordinates:
        raise ValueError(f"{rs.ctype}: eigenspaces need coordinates, unavailable for dihedral factors")
    plus, minus = [], []
    for j in range(rs.rank):
        e = rs.vector(rs.simple_index[j])
        te = _image(rs, t, rs.simple_index[j])
        plus.append(tuple(a + b for a, b in zip(e, te)))
        minus.append(tuple(a - b for a, b in zip(e, te)))
    return column_space(plus, rs.rank), column_space(minus, rs.rank)


def is_special_involution(rs: RootSystem, t: GroupElement) -> bool:
    _require_involution(rs, t)
    n = rs.num_positive
    fixed_keys = set()
    negated_keys = set()
    for i in range(1, n + 1):
        if rs.roots[i] is None:
            continue
        if t.perm[i] == i:
            fixed_keys.add(direction_key(rs.vector(i)))
        elif t.perm[i] == rs.negate(i):
            negated_keys.add(direction_key(rs.vector(i)))
    for i in range(1, n + 1):
        # roots of a dihedral factor always pass
        if rs.roots[i] is None:
            continue
        alpha = rs.vector(i)
        t_alpha = _image(rs, t, i)
        plus = direction_key([a + b for a, b in zip(alpha, t_alpha)])
        if plus is None or plus in fixed_keys:
            continue
        minus = direction_key([a - b for a, b in zip(alpha, t_alpha)])
        if minus is None or minus in negated_keys:
            continue
        return False
    return True


def conjugacy_classes(rs: RootSystem, allow_large: bool = False) -> List[Tuple[GroupElement, ...]]:
    """Classes in order of first appearance; the identity class comes first."""
    check_group_guard(rs, "conjugacy classes", allow_large)
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = set()
    classes = []
    for w in enumerate_group(rs, allow_large=allow_large):
        if w.perm in seen:
            continue
        seen.add(w.perm)
        orbit = [w]
        k = 0
        while k < len(orbit):
            x = orbit[k]
            k += 1
            for s in gens:
                y = s * x * s
                if y.perm not in seen:
                    seen.add(y.perm)
                    orbit.append(y)
        classes.append(tuple(orbit))
    logger.debug("[CLASSES] type=%s count=%s", rs.ctype, len(classes))
    return classes


def class_index(classes) -> Dict[tuple, int]:
    return {w.perm: k for k, cls in enumerate(classes) for w in cls}


def all_subsets(rs: RootSystem) -> List[Tuple[int, ...]]:
    """Subsets of S in (size, lexicographic) order."""
    out = []
    for k in range(rs.rank + 1):
        out.extend(combinations(range(1, rs.rank + 1), k))
    return out


def _reflection_set(rs: RootSystem, subset) -> FrozenSet[int]:
    return frozenset(rs.simple_index[i - 1] for i in subset)


def shapes(rs: RootSystem, allow_large: bool = False) -> List[Shape]:
    """W-conjugacy classes of subsets of S, compared as sets of reflections."""
    check_group_guard(rs, "shapes", allow_large)
    subsets = all_subsets(rs)
    by_reflections = {_reflection_set(rs, I): I for I in subsets}
    parent = {I: I for I in subsets}

    def find(I):
        while parent[I] != I:
            parent[I] = parent[parent[I]]
            I = parent[I]
        return I

    def union(I, J):
        a, b = find(I), find(J)
        if a == b:
            return
        # the smaller subset in (size, lex) order stays the root
        if (len(b), b) < (len(a), a):
            a, b = b, a
        parent[b] = a

    for w in enumerate_group(rs, allow_large=allow_large):
        for I in subsets:
            image = frozenset(rs.reflection_of(w.perm[rs.simple_index[i - 1]]) for i in I)
            J = by_reflections.get(image)
            if J is not None:
                union(I, J)

    groups: Dict[tuple, List[tuple]] = {}
    for I in subsets:
        groups.setdefault(find(I), []).append(I)
    result = [Shape(rep, tuple(members)) for rep, members in groups.items()]
    result.sort(key=lambda shape: (shape.size, shape.representative))
    logger.debug("[SHAPES] type=%s count=%s", rs.ctype, len(result))
    return result


def normalizer(rs: RootSystem, subset, allow_large: bool = False) -> List[GroupElement]:
    """N_I = {w : w(Phi_I) = Phi_I}, by brute force."""
    check_group_guard(rs, "normalizer", allow_large)
    phi = parabolic_roots(rs, subset)
    return [w for w in enumerate_group(rs, allow_large=allow_large) if all(w.perm[i] in phi for i in phi)]


def involution_classes(rs: RootSystem, classes=None, allow_large: bool = False) -> List[InvolutionClass]:
    """
    Classes of involutions from the longest elements w_I of subsets with the
    (-1)-condition, cross-checked against the involutions found directly.
    """
    check_group_guard(rs, "involution classes", allow_large)
    classes = classes if classes is not None else conjugacy_classes(rs, allow_large)
    lookup = class_index(classes)
    found: Dict[int, InvolutionClass] = {}
    for I in all_subsets(rs):
        if not minus_one_condition(rs, I):
            continue
        w = longest_element(rs, I)
        k = lookup[w.perm]
        if k not in found:
            found[k] = InvolutionClass(
                representative=w,
                subset=I,
                size=len(classes[k]),
                special=is_special_involution(rs, w),
            )
    direct = {k for k, cls in enumerate(classes) if is_involution(rs, cls[0])}
    if direct != set(found):
        raise ConsistencyError(f"{rs.ctype}: {len(direct)} involution classes found directly, {len(found)} from longest elements")
    result = [found[k] for k in sorted(found, key=lambda k: (len(found[k].subset), found[k].subset))]
    logger.info("[INVOLUTIONS] type=%s classes=%s special=%s", rs.ctype, len(result), sum(c.special for c in result))
    return result