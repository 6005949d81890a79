"""
Theorem-level checks on invariants of the Orlik-Solomon algebra.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from coxeter.chains import ParabolicChain, check_group_guard, parabolic_chain
from coxeter.elements import GroupElement, longest_element, minus_one_condition
from coxeter.involutions import Shape, class_index, conjugacy_classes, is_special_involution, normalizer, shapes
from coxeter.roots import RootSystem, build_root_system, parabolic_roots
from coxeter.types import parse_type
from matroid.orders import SIMPLES_LAST, resolve_order
from osalgebra.algebra import OSAlgebra, SparseElement, act
from osalgebra.averaging import average_bruteforce, average_chain
from scalars.field import Scalar
from scalars.linalg import Echelon

from .exceptions import VerificationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TopDegreeResult:
    type_name: str
    minus_one: bool
    av_aS_nonzero: bool
    support_size: int

    @property
    def consistent(self) -> bool:
        return self.minus_one == self.av_aS_nonzero


@dataclass(frozen=True)
class ShapeRecord:
    representative: Tuple[int, ...]
    members: Tuple[Tuple[int, ...], ...]
    minus_one: bool
    special: bool
    # reflections of the flat X_I, i.e. the positive roots of Phi_I
    flat: FrozenSet[int]
    conjugacy_tag: int

    @property
    def size(self) -> int:
        return len(self.representative)

    @property
    def contributes(self) -> bool:
        return self.minus_one and self.special


@dataclass(frozen=True)
class AuditEntry:
    representative: Tuple[int, ...]
    normalizer_order: int
    subspace_dimension: int
    fixed_dimension: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.fixed_dimension in (0, 1) and self.fixed_dimension == self.expected


class Context:
    """One type and order with the brute-force data the checks share."""

    def __init__(self, rs: RootSystem, order_selector: str = SIMPLES_LAST, threads: Optional[int] = None, allow_large: bool = False):
        self.rs = rs
        self.order = resolve_order(rs, order_selector)
        self.algebra = OSAlgebra(rs, self.order)
        self.threads = threads
        self.allow_large = allow_large

    @classmethod
    def for_type(cls, type_text: str, **kwargs) -> "Context":
        return cls(build_root_system(parse_type(type_text)), **kwargs)

    @property
    def type_name(self) -> str:
        return str(self.rs.ctype)

    @cached_property
    def chain(self) -> ParabolicChain:
        return parabolic_chain(self.rs)

    @cached_property
    def classes(self) -> List[Tuple[GroupElement, ...]]:
        return conjugacy_classes(self.rs, self.allow_large)

    @cached_property
    def class_lookup(self) -> Dict[tuple, int]:
        return class_index(self.classes)

    @cached_property
    def records(self) -> List[ShapeRecord]:
        return shape_records(self)

    def average(self, x: SparseElement) -> SparseElement:
        return average_chain(x, self.chain, threads=self.threads)


def top_degree_check(ctx: Context) -> TopDegreeResult:
    rs = ctx.rs
    everything = range(1, rs.rank + 1)
    minus_one = minus_one_condition(rs, everything)
    av = ctx.average(ctx.algebra.simple_monomial(everything))
    result = TopDegreeResult(ctx.type_name, minus_one, not av.is_zero(), len(av))
    logger.info(
        "[VERIFY] check=top_degree type=%s minus_one=%s av_nonzero=%s",
        ctx.type_name,
        result.minus_one,
        result.av_aS_nonzero,
    )
    return result


def _flags(ctx: Context, subset) -> Tuple[bool, bool]:
    w = longest_element(ctx.rs, subset)
    return minus_one_condition(ctx.rs, subset), is_special_involution(ctx.rs, w)


def shape_records(ctx: Context) -> List[ShapeRecord]:
    rs = ctx.rs
    records = []
    for shape in shapes(rs, ctx.allow_large):
        minus_one, special = _flags(ctx, shape.representative)
        for member in shape.members:
            if _flags(ctx, member) != (minus_one, special):
                raise VerificationError(f"{ctx.type_name}: flags differ inside the shape of {shape.representative}")
        w = longest_element(rs, shape.representative)
        records.append(
            ShapeRecord(
                representative=shape.representative,
                members=shape.members,
                minus_one=minus_one,
                special=special,
                flat=frozenset(r for r in parabolic_roots(rs, shape.representative) if rs.is_positive(r)),
                conjugacy_tag=ctx.class_lookup[w.perm],
            )
        )
    return records


def special_classes(ctx: Context) -> List[ShapeRecord]:
    return [r for r in ctx.records if r.contributes]


def _coefficient_rank(elements: Sequence[SparseElement]) -> int:
    words = sorted({w for x in elements for w in x.terms}, key=lambda w: (len(w), w))
    echelon = Echelon(len(words))
    for x in elements:
        echelon.add([x.coefficient(w) for w in words])
    return echelon.rank


def fv_basis(ctx: Context, records: Optional[Sequence[ShapeRecord]] = None) -> List[Tuple[ShapeRecord, SparseElement]]:
    """Av(a_I) for each special class; every element non-zero and the list independent."""
    records = special_classes(ctx) if records is None else records
    basis = []
    for record in records:
        av = ctx.average(ctx.algebra.simple_monomial(record.representative))
        if av.is_zero():
            raise VerificationError(f"{ctx.type_name}: Av(a_I) vanishes for I={record.representative}")
        basis.append((record, av))
    found = _coefficient_rank([x for _, x in basis])
    if found != len(basis):
        raise VerificationError(f"{ctx.type_name}: basis of {len(basis)} elements has rank {found}")
    return basis


def trace(algebra: OSAlgebra, w: GroupElement, words: Sequence[Tuple[int, ...]]) -> Scalar:
    """Trace of w on the span of ``words``, read off the basis expansion of each image."""
    total: Scalar = Fraction(0)
    for word in words:
        total = total + act(SparseElement(algebra, {word: Fraction(1)}), w).coefficient(word)
    return total


def _as_dimension(value, what: str) -> int:
    if not isinstance(value, Fraction) or value.denominator != 1 or value < 0:
        raise VerificationError(f"{what} averaged to {value}, not a non-negative integer")
    return int(value)


def invariant_dimension(ctx: Context, p: int) -> int:
    rs = ctx.rs
    check_group_guard(rs, "invariant dimension", ctx.allow_large)
    words = ctx.algebra.basis_words(p)
    total: Scalar = Fraction(0)
    for cls in ctx.classes:
        total = total + len(cls) * trace(ctx.algebra, cls[0], words)
    return _as_dimension(total / rs.order, f"{ctx.type_name} degree {p} character")


def shape_subspace(ctx: Context, record: ShapeRecord) -> List[Tuple[int, ...]]:
    """Degree-|I| basis words with every letter a reflection of Phi_I."""
    positions = {ctx.order.position(r) for r in record.flat}
    return [w for w in ctx.algebra.basis_words(record.size) if set(w) <= positions]


def decomposition_audit(ctx: Context, dimensions: Sequence[int]) -> Tuple[List[AuditEntry], bool]:
    """
    Fixed dimension of N_I on A(W)_I for every shape other than that of S,
    plus the top degree, compared against the total invariant dimension.
    """
    rs = ctx.rs
    entries = []
    for record in ctx.records:
        if record.size == rs.rank:
            continue
        group = normalizer(rs, record.representative, ctx.allow_large)
        words = shape_subspace(ctx, record)
        total: Scalar = Fraction(0)
        for n in group:
            total = total + trace(ctx.algebra, n, words)
        fixed = _as_dimension(total / len(group), f"{ctx.type_name} shape {record.representative} fixed space")
        entry = AuditEntry(
            representative=record.representative,
            normalizer_order=len(group),
            subspace_dimension=len(words),
            fixed_dimension=fixed,
            expected=1 if record.contributes else 0,
        )
        logger.info(
            "[AUDIT] type=%s shape=%s normalizer=%s subspace=%s fixed=%s expected=%s",
            ctx.type_name,
            entry.representative,
            entry.normalizer_order,
            entry.subspace_dimension,
            entry.fixed_dimension,
            entry.expected,
        )
        entries.append(entry)
    top = dimensions[rs.rank]
    balanced = sum(e.fixed_dimension for e in entries) + top == sum(dimensions)
    return entries, balanced


def chain_matches_bruteforce(ctx: Context, x: SparseElement) -> bool:
    return ctx.average(x) == average_bruteforce(x, threads=ctx.threads, allow_large=ctx.allow_large)


def conjugate_representative_check(ctx: Context, basis: Sequence[Tuple[ShapeRecord, SparseElement]]) -> Dict[Tuple[int, ...], bool]:
    """Av(a_J) equals +-Av(a_I) for every other member J of each shape."""
    outcome = {}
    for record, av in basis:
        ok = True
        for member in record.members:
            if member == record.representative:
                continue
            other = ctx.average(ctx.algebra.simple_monomial(member))
            if other != av and other != -av:
                ok = False
                break
        outcome[record.representative] = ok
    return outcome
