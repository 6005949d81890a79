"""
Linear orders on the reflections. Algebra words are written in order
positions 1..N: position p stands for the p-th reflection of the order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from django.core.exceptions import ValidationError

from config.validators import order_sequence_validator
from coxeter.roots import RootSystem

DEFAULT = "default"
SIMPLES_LAST = "simples-last"
PAPER_A3 = "paper-a3"
NAMED_ORDERS = (DEFAULT, SIMPLES_LAST, PAPER_A3)

# s12 < s23 < s34 < s13 < s24 < s14 in simple-root coordinates
_A3_SEQUENCE = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1))


@dataclass(frozen=True)
class ReflectionOrder:
    name: str
    # sequence[p - 1] is the reflection (positive root index) at position p
    sequence: Tuple[int, ...]
    _positions: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_positions", {r: p for p, r in enumerate(self.sequence, start=1)})

    def __len__(self):
        return len(self.sequence)

    def position(self, reflection: int) -> int:
        return self._positions[reflection]

    def reflection(self, position: int) -> int:
        if not 1 <= position <= len(self.sequence):
            raise IndexError(f"position {position} outside 1..{len(self.sequence)}")
        return self.sequence[position - 1]

    @classmethod
    def default(cls, rs: RootSystem) -> "ReflectionOrder":
        return cls(DEFAULT, tuple(rs.positive_reflections()))

    @classmethod
    def simples_last(cls, rs: RootSystem) -> "ReflectionOrder":
        simples = list(rs.simple_index)
        skip = set(simples)
        rest = [r for r in rs.positive_reflections() if r not in skip]
        return cls(SIMPLES_LAST, tuple(rest + simples))

    @classmethod
    def paper_a3(cls, rs: RootSystem) -> "ReflectionOrder":
        if str(rs.ctype) != "A3":
            raise ValueError(f"the {PAPER_A3} order exists only for A3, not {rs.ctype}")
        by_vector = {tuple(rs.vector(r)): r for r in rs.positive_reflections()}
        return cls(PAPER_A3, tuple(by_vector[tuple(Fraction(x) for x in v)] for v in _A3_SEQUENCE))

    @classmethod
    def from_sequence(cls, rs: RootSystem, sequence: Iterable[int]) -> "ReflectionOrder":
        sequence = tuple(int(r) for r in sequence)
        if sorted(sequence) != list(rs.positive_reflections()):
            raise ValueError(f"order must be a permutation of 1..{rs.num_positive}")
        return cls(",".join(map(str, sequence)), sequence)


def parse_sequence(text: str) -> Sequence[int]:
    text = (text or "").strip()
    try:
        order_sequence_validator(text)
    except ValidationError as exc:
        raise ValueError(exc.messages[0]) from exc
    return [int(x) for x in re.split(r"[ ,]+", text)]


def resolve_order(rs: RootSystem, selector: str = DEFAULT) -> ReflectionOrder:
    selector = (selector or DEFAULT).strip().lower()
    if selector == DEFAULT:
        return ReflectionOrder.default(rs)
    if selector == SIMPLES_LAST:
        return ReflectionOrder.simples_last(rs)
    if selector == PAPER_A3:
        return ReflectionOrder.paper_a3(rs)
    return ReflectionOrder.from_sequence(rs, parse_sequence(selector))
