"""
The averaging map x -> (1/|W|) sum_w x.w, by brute force over W and through a
parabolic chain.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence

from config.limits import get_thread_count
from coxeter.chains import ParabolicChain, check_group_guard, enumerate_group, parabolic_chain
from coxeter.elements import GroupElement

from .algebra import SparseElement, Terms, accumulate, act

logger = logging.getLogger(__name__)


def _chunks(items: Sequence, parts: int) -> List[Sequence]:
    size = -(-len(items) // parts) or 1
    return [items[k:k + size] for k in range(0, len(items), size)]


def _partial(x: SparseElement, elements: Sequence[GroupElement]) -> Terms:
    out: Terms = {}
    for w in elements:
        accumulate(out, act(x, w).terms)
    return out


def sum_of_images(x: SparseElement, elements: Sequence[GroupElement], threads: Optional[int] = None) -> SparseElement:
    """sum_w x.w; partial sums are combined in chunk order."""
    threads = threads or get_thread_count()
    elements = list(elements)
    total: Terms = {}
    if threads <= 1 or len(elements) < 2:
        total = _partial(x, elements)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda chunk: _partial(x, chunk), _chunks(elements, threads)):
                accumulate(total, part)
    return SparseElement(x.algebra, total)


def average_bruteforce(
    x: SparseElement,
    normalized: bool = True,
    threads: Optional[int] = None,
    allow_large: bool = False,
) -> SparseElement:
    rs = x.algebra.rs
    check_group_guard(rs, "brute-force average", allow_large)
    started = time.monotonic()
    total = sum_of_images(x, list(enumerate_group(rs, allow_large=allow_large)), threads)
    logger.info(
        "[AVERAGE] mode=bruteforce type=%s support=%s seconds=%.2f",
        rs.ctype,
        len(total),
        time.monotonic() - started,
    )
    return total.scale(Fraction(1, rs.order)) if normalized else total


def average_chain(
    x: SparseElement,
    chain: Optional[ParabolicChain] = None,
    normalized: bool = True,
    threads: Optional[int] = None,
) -> SparseElement:
    """
    Sum over W as nested sums over D_l, ..., D_1, re-expanding into the
    basis after each stage; one log checkpoint per stage.
    """
    rs = x.algebra.rs
    chain = chain or parabolic_chain(rs)
    started = time.monotonic()
    q = x
    for j in range(rs.rank, 0, -1):
        cosets = chain.cosets[j - 1]
        q = sum_of_images(q, cosets, threads)
        logger.info(
            "[AVERAGE] mode=chain type=%s stage=%s cosets=%s support=%s seconds=%.2f",
            rs.ctype,
            j,
            len(cosets),
            len(q),
            time.monotonic() - started,
        )
    return q.scale(Fraction(1, rs.order)) if normalized else q
