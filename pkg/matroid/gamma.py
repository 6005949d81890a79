"""
The basis graph: a rooted DAG whose rooted paths are exactly the NBC words.

The NBC tree is walked depth first. The subtree below a word depends only on
its last letter and its flat, so subtrees are built once per (letter, flat)
and then hash-consed on (label, children): equal subgraphs are stored once.
"""
from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from coxeter.chains import check_group_guard
from coxeter.roots import RootSystem

from .orders import ReflectionOrder
from .rank import Span, check_increasing

logger = logging.getLogger(__name__)

ROOT_LABEL = 0


@dataclass(frozen=True)
class BasisGraph:
    type_name: str
    order: Tuple[int, ...]
    # node 0 is the root; children are sorted by label
    labels: Tuple[int, ...]
    children: Tuple[Tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(c) for c in self.children)

    def path_count(self) -> int:
        """Number of rooted paths, the empty one included."""
        counts = [0] * self.node_count
        # labels strictly increase along edges, so larger labels finish first
        for node in sorted(range(self.node_count), key=lambda k: -self.labels[k]):
            counts[node] = 1 + sum(counts[c] for c in self.children[node])
        return counts[0]

    def step(self, node: int, label: int) -> Optional[int]:
        for child in self.children[node]:
            if self.labels[child] == label:
                return child
        return None

    def nbc_member(self, word: Sequence[int]) -> bool:
        check_increasing(word)
        node = 0
        for letter in word:
            node = self.step(node, letter)
            if node is None:
                return False
        return True

    def enumerate_basis(self, degree: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        """Basis words in lexicographic order, optionally only those of one length."""
        stack: List[Tuple[int, Tuple[int, ...]]] = [(0, ())]
        while stack:
            node, word = stack.pop()
            if degree is None or len(word) == degree:
                yield word
            if degree is not None and len(word) >= degree:
                continue
            for child in reversed(self.children[node]):
                stack.append((child, word + (self.labels[child],)))


def path_count(graph: BasisGraph) -> int:
    return graph.path_count()


def nbc_member(graph: BasisGraph, word: Sequence[int]) -> bool:
    return graph.nbc_member(word)


def enumerate_basis(graph: BasisGraph, degree: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    return graph.enumerate_basis(degree)


class _Builder:
    def __init__(self, rs: RootSystem, order: ReflectionOrder):
        self.rs = rs
        self.order = order
        self.n = len(order)
        self.reflections = [0] + [order.reflection(p) for p in range(1, self.n + 1)]
        # (label, child ids) -> node id
        self.registry: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        self.labels: List[int] = []
        self.children: List[Tuple[int, ...]] = []
        # (label, flat) -> node id
        self.memo: Dict[Tuple[int, frozenset], int] = {}

    def intern(self, label: int, kids: Tuple[int, ...]) -> int:
        key = (label, kids)
        node = self.registry.get(key)
        if node is None:
            node = len(self.labels)
            self.registry[key] = node
            self.labels.append(label)
            self.children.append(kids)
        return node

    def extensions(self, span: Span, last: int):
        for m in range(last + 1, self.n + 1):
            grown = span.extended(self.reflections[m])
            if grown is None:
                continue
            if any(grown.contains(self.reflections[u]) for u in range(m + 1, self.n + 1)):
                continue
            yield m, grown

    def build(self, label: int, span: Span) -> int:
        flat = span.flat()
        key = (label, flat)
        if key in self.memo:
            return self.memo[key]
        kids = tuple(self.build(m, grown) for m, grown in self.extensions(span, label))
        node = self.intern(label, kids)
        self.memo[key] = node
        return node


def _renumber(labels, children, root) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Breadth-first ids from the root, children sorted by label."""
    new_id = {root: 0}
    queue = deque([root])
    order = [root]
    while queue:
        node = queue.popleft()
        for child in sorted(children[node], key=lambda c: labels[c]):
            if child not in new_id:
                new_id[child] = len(order)
                order.append(child)
                queue.append(child)
    new_labels = tuple(labels[old] for old in order)
    new_children = tuple(
        tuple(new_id[c] for c in sorted(children[old], key=lambda c: labels[c])) for old in order
    )
    return new_labels, new_children


def build_gamma(rs: RootSystem, order: ReflectionOrder, allow_large: bool = False) -> BasisGraph:
    # the walk visits every basis word once and there are |W| of them
    check_group_guard(rs, "basis graph", allow_large)
    started = time.monotonic()
    builder = _Builder(rs, order)
    root = builder.build(ROOT_LABEL, Span(rs))
    labels, children = _renumber(builder.labels, builder.children, root)
    graph = BasisGraph(type_name=str(rs.ctype), order=order.sequence, labels=labels, children=children)
    logger.info(
        "[GAMMA] type=%s order=%s nodes=%s edges=%s seconds=%.2f",
        rs.ctype,
        order.name,
        graph.node_count,
        graph.edge_count,
        time.monotonic() - started,
    )
    return graph


def gamma_to_dot(graph: BasisGraph) -> str:
    lines = [f'digraph Gamma {{', f'  label="{graph.type_name}";']
    for node, label in enumerate(graph.labels):
        lines.append(f'  n{node} [label="{label}"];')
    for node, kids in enumerate(graph.children):
        for child in kids:
            lines.append(f"  n{node} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
