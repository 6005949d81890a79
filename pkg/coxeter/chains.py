"""
Parabolic chains W_0 < W_1 < ... < W_l = W and their distinguished coset
representatives.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from config.limits import get_group_size_guard

from .elements import GroupElement, identity, length, simple_reflection
from .exceptions import GroupTooLargeError
from .roots import RootSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicChain:
    rs: RootSystem
    # cosets[j - 1] is D_j, identity first
    cosets: Tuple[Tuple[GroupElement, ...], ...]

    @property
    def sizes(self) -> List[int]:
        return [len(d) for d in self.cosets]

    @property
    def total(self) -> int:
        return sum(self.sizes)


def _is_minimal(rs: RootSystem, x: GroupElement, below: int) -> bool:
    # l(x s) > l(x) for every s in I_{j-1}, i.e. x(alpha_s) > 0
    n = rs.num_positive
    return all(x.perm[rs.simple_index[t - 1]] <= n for t in range(1, below + 1))


def coset_representatives(rs: RootSystem, j: int) -> Tuple[GroupElement, ...]:
    """
    D_j by breadth-first search from the identity under left multiplication
    by I_j. Minimal representatives are closed under removing a left
    factor, so every one of them is reached without enumerating W_j.
    """
    start = identity(rs)
    found = {start.perm: start}
    ordered = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            lx = length(rs, x)
            for s in range(1, j + 1):
                y = simple_reflection(rs, s) * x
                if y.perm in found:
                    continue
                if length(rs, y) > lx and _is_minimal(rs, y, j - 1):
                    found[y.perm] = y
                    ordered.append(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(ordered)


@lru_cache(maxsize=32)
def parabolic_chain(rs: RootSystem) -> ParabolicChain:
    cosets = tuple(coset_representatives(rs, j) for j in range(1, rs.rank + 1))
    chain = ParabolicChain(rs=rs, cosets=cosets)
    logger.info("[CHAIN] type=%s sizes=%s total=%s", rs.ctype, chain.sizes, chain.total)
    return chain


def check_group_guard(rs: RootSystem, what: str, allow_large: bool = False, limit: Optional[int] = None) -> None:
    limit = get_group_size_guard() if limit is None else limit
    if not allow_large and rs.order > limit:
        raise GroupTooLargeError(what, rs.order, limit)


def enumerate_group(rs: RootSystem, chain: Optional[ParabolicChain] = None, allow_large: bool = False) -> Iterator[GroupElement]:
    """Every element once, as a product x_l ... x_1 with x_j in D_j."""
    check_group_guard(rs, "group enumeration", allow_large)
    chain = chain or parabolic_chain(rs)
    return _walk(chain, rs.rank, identity(rs))


def _walk(chain: ParabolicChain, j: int, prefix: GroupElement) -> Iterator[GroupElement]:
    if j == 0:
        yield prefix
        return
    for x in chain.cosets[j - 1]:
        yield from _walk(chain, j - 1, prefix * x)


def chain_factors(chain: ParabolicChain, w: GroupElement) -> List[GroupElement]:
    """
    The factors (x_l, ..., x_1) with w = x_l ... x_1. Each x_j is found by
    stripping right descents in I_{j-1} from the running remainder.
    """
    rs = chain.rs
    n = rs.num_positive
    factors = []
    rest = w
    for j in range(rs.rank, 0, -1):
        x = rest
        stripped = True
        while stripped:
            stripped = False
            for t in range(1, j):
                if x.perm[rs.simple_index[t - 1]] > n:
                    x = x * simple_reflection(rs, t)
                    stripped = True
                    break
        if x not in chain.cosets[j - 1]:
            raise ValueError(f"element does not factor through D_{j}")
        factors.append(x)
        rest = x.inverse() * rest
    if not rest.is_identity():
        raise ValueError("element is not in the group generated by the chain")
    return factors
