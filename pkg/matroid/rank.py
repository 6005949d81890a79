"""
Rank oracle of the reflection arrangement and the circuit searches built on it.

Every function here takes words in order positions. Roots with coordinates
share one echelon basis (factors use disjoint coordinates); a dihedral factor
only records which of its roots were added, since any two of them span it.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from coxeter.roots import RootSystem
from scalars.field import Scalar, is_zero
from scalars.linalg import Echelon, solve_combination

from .orders import ReflectionOrder


class Span:
    def __init__(self, rs: RootSystem, echelon: Optional[Echelon] = None, dihedral: Optional[Dict[int, Tuple[int, ...]]] = None):
        self.rs = rs
        self.echelon = echelon or Echelon(rs.rank)
        # dihedral factor -> the reflections added to it, at most two
        self.dihedral = dict(dihedral or {})

    @property
    def rank(self) -> int:
        return self.echelon.rank + sum(len(held) for held in self.dihedral.values())

    def contains(self, reflection: int) -> bool:
        vec = self.rs.roots[reflection]
        if vec is None:
            held = self.dihedral.get(self.rs.component[reflection], ())
            return len(held) >= 2 or reflection in held
        return self.echelon.contains(vec)

    def extended(self, reflection: int) -> Optional["Span"]:
        """A new span with the root added, or None when it is already inside."""
        vec = self.rs.roots[reflection]
        if vec is None:
            if self.contains(reflection):
                return None
            c = self.rs.component[reflection]
            held = dict(self.dihedral)
            held[c] = held.get(c, ()) + (reflection,)
            return Span(self.rs, self.echelon, held)
        bigger = self.echelon.extended(vec)
        if bigger is None:
            return None
        return Span(self.rs, bigger, self.dihedral)

    def flat(self) -> frozenset:
        """Every reflection whose root lies in the span; it determines the span."""
        return frozenset(r for r in self.rs.positive_reflections() if self.contains(r))


def span_of(rs: RootSystem, order: ReflectionOrder, word: Iterable[int]) -> Optional[Span]:
    """Span of an independent word, or None if the word is dependent."""
    span = Span(rs)
    for p in word:
        span = span.extended(order.reflection(p))
        if span is None:
            return None
    return span


def rank(rs: RootSystem, order: ReflectionOrder, word: Iterable[int]) -> int:
    span = Span(rs)
    for p in word:
        span = span.extended(order.reflection(p)) or span
    return span.rank


def is_independent(rs: RootSystem, order: ReflectionOrder, word: Sequence[int]) -> bool:
    return span_of(rs, order, word) is not None


def dependency(rs: RootSystem, order: ReflectionOrder, word: Sequence[int], u: int) -> Optional[Dict[int, Scalar]]:
    """
    Coefficients expressing the root at position u through the roots of an
    independent word, keyed by the positions with a non-zero coefficient.
    None when u is outside the span.
    """
    r = order.reflection(u)
    vec = rs.roots[r]
    if vec is None:
        c = rs.component[r]
        same = [p for p in word if rs.component[order.reflection(p)] == c]
        if len(same) < 2:
            return None
        # no two roots of a dihedral factor are proportional
        return {p: None for p in same}
    # a root only depends on roots of its own factor
    same = [p for p in word if rs.component[order.reflection(p)] == rs.component[r]]
    coefficients = solve_combination([rs.vector(order.reflection(p)) for p in same], vec)
    if coefficients is None:
        return None
    return {p: c for p, c in zip(same, coefficients) if not is_zero(c)}


def circuit_extension(rs: RootSystem, order: ReflectionOrder, word: Sequence[int]) -> Optional[int]:
    """The largest u > max(word) such that word + (u,) is a circuit."""
    span = span_of(rs, order, word)
    if span is None:
        raise ValueError(f"word {tuple(word)} is dependent")
    last = word[-1] if word else 0
    for u in range(len(order), last, -1):
        if not span.contains(order.reflection(u)):
            continue
        support = dependency(rs, order, word, u)
        if support is not None and len(support) == len(word):
            return u
    return None


def can_extend(rs: RootSystem, order: ReflectionOrder, prefix: Sequence[int], m: int, span: Optional[Span] = None) -> bool:
    """
    Whether prefix + (m,) stays a basis word, for a basis word ``prefix``:
    the word must be independent and no later position may fall into its span.
    """
    span = span if span is not None else span_of(rs, order, prefix)
    if span is None:
        return False
    grown = span.extended(order.reflection(m))
    if grown is None:
        return False
    return not any(grown.contains(order.reflection(u)) for u in range(m + 1, len(order) + 1))


def is_nbc(rs: RootSystem, order: ReflectionOrder, word: Sequence[int]) -> bool:
    """Direct membership test, one prefix at a time."""
    check_increasing(word)
    span = Span(rs)
    for k, m in enumerate(word):
        if not can_extend(rs, order, word[:k], m, span):
            return False
        span = span.extended(order.reflection(m))
    return True


def check_increasing(word: Sequence[int]) -> None:
    if any(a >= b for a, b in zip(word, word[1:])):
        raise ValueError(f"word {tuple(word)} is not strictly increasing")


def circuits(rs: RootSystem, order: ReflectionOrder) -> List[Tuple[int, ...]]:
    """All circuits as increasing position words; sizes never exceed rank + 1."""
    n = len(order)
    found = []
    for size in range(2, rs.rank + 2):
        for c in combinations(range(1, n + 1), size):
            if rank(rs, order, c) != size - 1:
                continue
            if all(is_independent(rs, order, c[:k] + c[k + 1:]) for k in range(size)):
                found.append(c)
    return found


def naive_nbc_basis(rs: RootSystem, order: ReflectionOrder) -> List[Tuple[int, ...]]:
    """Increasing words avoiding every broken circuit, straight from the definition."""
    broken = [frozenset(c[:-1]) for c in circuits(rs, order)]
    n = len(order)
    words = []
    for size in range(rs.rank + 1):
        for w in combinations(range(1, n + 1), size):
            ws = set(w)
            if not any(b <= ws for b in broken):
                words.append(w)
    return sorted(words)
