"""
Elements of the Orlik-Solomon algebra in the broken-circuit basis.

Words are increasing tuples of order positions. Every stored key of a
SparseElement is a basis word and no stored coefficient is zero.
"""
from __future__ import annotations

import json
import logging
import random
import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from coxeter.elements import GroupElement, conjugation_table
from coxeter.roots import RootSystem
from matroid.gamma import BasisGraph
from matroid.orders import ReflectionOrder
from matroid.rank import Span, check_increasing, dependency, is_nbc
from scalars.field import Scalar, format_scalar, is_zero, to_scalar

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Terms = Dict[Word, Scalar]


def normalize_word(seq: Iterable[int]) -> Optional[Tuple[Word, int]]:
    """Sorted word and the sign of the sorting permutation; None on a repeated letter."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return tuple(sorted(seq)), -1 if inversions % 2 else 1


def accumulate(target: Terms, source: Mapping[Word, Scalar], factor: Scalar = 1) -> None:
    for word, coeff in source.items():
        value = target.get(word, 0) + factor * coeff
        if is_zero(value):
            target.pop(word, None)
        else:
            target[word] = value


class OSAlgebra:
    """Ambient of a family of elements: root system, reflection order, membership oracle."""

    def __init__(self, rs: RootSystem, order: ReflectionOrder, gamma: Optional[BasisGraph] = None):
        if len(order) != rs.num_positive:
            raise ValueError(f"order has {len(order)} reflections, {rs.ctype} has {rs.num_positive}")
        if gamma is not None and tuple(gamma.order) != tuple(order.sequence):
            raise ValueError("basis graph was built for another reflection order")
        self.rs = rs
        self.order = order
        self.gamma = gamma
        self.n = len(order)
        self._expansions: Dict[Word, Terms] = {}
        self._tables: Dict[tuple, Tuple[int, ...]] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"OSAlgebra({self.rs.ctype}, order={self.order.name})"

    # membership
    def is_basis(self, word: Sequence[int]) -> bool:
        if self.gamma is not None:
            return self.gamma.nbc_member(word)
        return is_nbc(self.rs, self.order, word)

    # constructors
    def element(self, terms: Mapping[Sequence[int], object]) -> "SparseElement":
        """Element from arbitrary word -> coefficient data, rewritten into the basis."""
        out: Terms = {}
        for seq, coeff in terms.items():
            coeff = to_scalar(coeff)
            normal = normalize_word(seq)
            if normal is None or is_zero(coeff):
                continue
            word, sign = normal
            accumulate(out, self.expand(word), sign * coeff)
        return SparseElement(self, out)

    def zero(self) -> "SparseElement":
        return SparseElement(self, {})

    def unit(self) -> "SparseElement":
        return SparseElement(self, {(): Fraction(1)})

    def generator(self, position: int) -> "SparseElement":
        self.order.reflection(position)
        return SparseElement(self, {(position,): Fraction(1)})

    def monomial(self, seq: Sequence[int]) -> "SparseElement":
        return self.element({tuple(seq): 1})

    def simple_monomial(self, subset: Iterable[int]) -> "SparseElement":
        """a_I for a set of simple generators, letters in increasing position order."""
        positions = sorted(self.order.position(self.rs.simple_index[i - 1]) for i in subset)
        return self.monomial(positions)

    def random_element(self, rng: random.Random, degree: int, terms: int = 3) -> "SparseElement":
        words = self.basis_words(degree)
        out: Terms = {}
        for word in rng.sample(words, min(terms, len(words))):
            out[word] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
        return SparseElement(self, out)

    def basis_words(self, degree: Optional[int] = None) -> List[Word]:
        if self.gamma is not None:
            return list(self.gamma.enumerate_basis(degree))
        words: List[Word] = []

        def walk(word: Word, span: Span):
            if degree is None or len(word) == degree:
                words.append(word)
            if degree is not None and len(word) >= degree:
                return
            last = word[-1] if word else 0
            for m in range(last + 1, self.n + 1):
                grown = span.extended(self.order.reflection(m))
                if grown is None:
                    continue
                if any(grown.contains(self.order.reflection(u)) for u in range(m + 1, self.n + 1)):
                    continue
                walk(word + (m,), grown)

        walk((), Span(self.rs))
        return words

    # rewriting
    def expand(self, word: Word) -> Terms:
        """NBC expansion of a_word for an increasing word (memoized)."""
        cached = self._expansions.get(word)
        if cached is not None:
            return cached
        result = self._expand(word)
        with self._lock:
            self._expansions[word] = result
        return result

    def _expand(self, word: Word) -> Terms:
        check_increasing(word)
        span = Span(self.rs)
        for k, m in enumerate(word):
            grown = span.extended(self.order.reflection(m))
            if grown is None:
                # dependent prefix, so a_word vanishes
                return {}
            later = [u for u in range(self.n, m, -1) if grown.contains(self.order.reflection(u))]
            if later:
                return self._rewrite(word, word[: k + 1], later[0])
            span = grown
        return {word: Fraction(1)}

    def _rewrite(self, word: Word, prefix: Word, u: int) -> Terms:
        support = sorted(dependency(self.rs, self.order, prefix, u))
        rest = [p for p in word if p not in set(support)]
        _, epsilon = normalize_word(support + rest)
        circuit = support + [u]
        q = len(circuit)
        out: Terms = {}
        # a_{C - u} = sum_{i < q} (-1)^(q+i-1) a_{C - c_i}
        for i in range(1, q):
            removed = circuit[: i - 1] + circuit[i:]
            normal = normalize_word(removed + rest)
            if normal is None:
                continue
            new_word, sign = normal
            factor = epsilon * sign * (-1 if (q + i - 1) % 2 else 1)
            accumulate(out, self.expand(new_word), factor)
        logger.debug("[REWRITE] word=%s circuit=%s terms=%s", word, tuple(circuit), len(out))
        return out

    # group action
    def position_table(self, w: GroupElement) -> Tuple[int, ...]:
        """Position of w^-1 r w for the reflection at every position; slot 0 unused."""
        table = self._tables.get(w.perm)
        if table is None:
            by_reflection = conjugation_table(self.rs, w)
            table = (0,) + tuple(
                self.order.position(by_reflection[self.order.reflection(p)]) for p in range(1, self.n + 1)
            )
            with self._lock:
                self._tables[w.perm] = table
        return table


class SparseElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: OSAlgebra, terms: Mapping[Word, Scalar]):
        self.algebra = algebra
        self.terms: Terms = {w: c for w, c in terms.items() if not is_zero(c)}

    def _check(self, other: "SparseElement") -> None:
        if not isinstance(other, SparseElement) or other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        accumulate(out, other.terms)
        return SparseElement(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        accumulate(out, other.terms, -1)
        return SparseElement(self.algebra, out)

    def __neg__(self):
        return SparseElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def scale(self, factor) -> "SparseElement":
        factor = to_scalar(factor)
        return SparseElement(self.algebra, {w: factor * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparseElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SparseElement):
            return NotImplemented
        return other.algebra is self.algebra and other.terms == self.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(word), Fraction(0))

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self.terms})

    def homogeneous_degree(self) -> Optional[int]:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous: degrees {degrees}")
        return degrees[0] if degrees else None

    def items(self) -> List[Tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __str__(self):
        return element_to_text(self)

    def __repr__(self):
        return f"SparseElement({element_to_text(self, ', ')})"


def to_nbc(algebra: OSAlgebra, word: Sequence[int]) -> SparseElement:
    word = tuple(word)
    check_increasing(word)
    return SparseElement(algebra, algebra.expand(word))


def act(x: SparseElement, w: GroupElement) -> SparseElement:
    """The right action a_T.w = a_{T.w}, re-expanded into the basis."""
    algebra = x.algebra
    if len(w.perm) != algebra.rs.size + 1:
        raise ValueError("group element belongs to another root system")
    table = algebra.position_table(w)
    out: Terms = {}
    for word, coeff in x.terms.items():
        image, sign = normalize_word(table[p] for p in word)
        accumulate(out, algebra.expand(image), sign * coeff)
    return SparseElement(algebra, out)


def product(x: SparseElement, y: SparseElement) -> SparseElement:
    x._check(y)
    algebra = x.algebra
    out: Terms = {}
    for wx, cx in x.terms.items():
        for wy, cy in y.terms.items():
            normal = normalize_word(wx + wy)
            if normal is None:
                continue
            word, sign = normal
            accumulate(out, algebra.expand(word), sign * cx * cy)
    return SparseElement(algebra, out)


def format_word(word: Sequence[int], alphabet_size: int) -> str:
    if not word:
        return "1"
    if alphabet_size < 10:
        return "".join(str(p) for p in word)
    return ".".join(str(p) for p in word)


def element_lines(x: SparseElement) -> List[str]:
    return [f"{format_word(w, x.algebra.n)}: {format_scalar(c)}" for w, c in x.items()]


def element_to_text(x: SparseElement, separator: str = "\n") -> str:
    lines = element_lines(x)
    return separator.join(lines) if lines else "0"


def element_to_dict(x: SparseElement) -> List[dict]:
    return [{"word": list(w), "coeff": format_scalar(c)} for w, c in x.items()]


def element_to_json(x: SparseElement) -> str:
    return json.dumps(element_to_dict(x))
