"""
Group elements as permutations of the root indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .roots import RootSystem, parabolic_roots


@dataclass(frozen=True)
class GroupElement:
    # perm[i] is the index of w(beta_i); perm[0] == 0
    perm: Tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (u*v)(beta) = u(v(beta))
        p = self.perm
        return GroupElement(tuple(p[i] for i in other.perm))

    def __call__(self, index: int) -> int:
        return self.perm[index]

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for i, image in enumerate(self.perm):
            inv[image] = i
        return GroupElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.perm))


def identity(rs: RootSystem) -> GroupElement:
    return GroupElement(tuple(range(rs.size + 1)))


def simple_reflection(rs: RootSystem, i: int) -> GroupElement:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} outside 1..{rs.rank}")
    return GroupElement(rs.simple_perms[i - 1])


def element_from_word(rs: RootSystem, word: Iterable[int]) -> GroupElement:
    w = identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    return u * v


def inverse(w: GroupElement) -> GroupElement:
    return w.inverse()


def length(rs: RootSystem, w: GroupElement) -> int:
    n = rs.num_positive
    return sum(1 for i in range(1, n + 1) if w.perm[i] > n)


def is_involution(rs: RootSystem, t: GroupElement) -> bool:
    return (t * t).is_identity()


def conjugate_reflection(rs: RootSystem, r: int, w: GroupElement) -> int:
    """Index of the reflection w^-1 r w, i.e. of the root +-w^-1(beta_r)."""
    if not 1 <= r <= rs.num_positive:
        raise IndexError(f"reflection {r} outside 1..{rs.num_positive}")
    return rs.reflection_of(w.inverse().perm[r])


def conjugation_table(rs: RootSystem, w: GroupElement) -> Tuple[int, ...]:
    """conjugate_reflection for every reflection at once; slot 0 unused."""
    inv = w.inverse().perm
    return (0,) + tuple(rs.reflection_of(inv[r]) for r in range(1, rs.num_positive + 1))


def longest_element(rs: RootSystem, subset: Iterable[int]) -> GroupElement:
    """w_I by greedy ascent: keep multiplying by a simple reflection of I that lengthens."""
    subset = sorted(set(subset))
    n = rs.num_positive
    w = identity(rs)
    grew = True
    while grew:
        grew = False
        for i in subset:
            # l(w s_i) > l(w) exactly when w(alpha_i) is positive
            if w.perm[rs.simple_index[i - 1]] <= n:
                w = w * simple_reflection(rs, i)
                grew = True
                break
    return w


def minus_one_condition(rs: RootSystem, subset: Iterable[int]) -> bool:
    subset = list(subset)
    if not subset:
        return True
    w = longest_element(rs, subset)
    return all(w.perm[i] == rs.negate(i) for i in parabolic_roots(rs, subset))


def reduced_word(rs: RootSystem, w: GroupElement) -> Sequence[int]:
    """Some reduced word for w, found by stripping right descents."""
    word = []
    n = rs.num_positive
    current = w
    while not current.is_identity():
        for i in range(1, rs.rank + 1):
            if current.perm[rs.simple_index[i - 1]] > n:
                current = current * simple_reflection(rs, i)
                word.append(i)
                break
    return list(reversed(word))
