import json
from unittest.mock import patch

from django.test import SimpleTestCase

from coxeter.elements import element_from_word, identity
from coxeter.exceptions import GroupTooLargeError
from osalgebra.algebra import act

from .checks import (
    Context,
    chain_matches_bruteforce,
    decomposition_audit,
    fv_basis,
    invariant_dimension,
    shape_subspace,
    special_classes,
    top_degree_check,
    trace,
)
from .exceptions import VerificationError
from .reports import SCOPE_TOP, report_to_dict, report_to_json, report_to_text, verify


class TopDegreeTests(SimpleTestCase):
    def test_types_with_minus_one(self):
        for text in ("A1", "B2", "B3", "B4", "D4", "F4", "H3", "I2(4)", "I2(6)"):
            result = top_degree_check(Context.for_type(text))
            self.assertTrue(result.minus_one, text)
            self.assertTrue(result.av_aS_nonzero, text)
            self.assertGreater(result.support_size, 0)

    def test_types_without_minus_one(self):
        for text in ("A2", "A3", "A4", "D5", "I2(3)", "I2(5)", "I2(7)"):
            result = top_degree_check(Context.for_type(text))
            self.assertFalse(result.minus_one, text)
            self.assertFalse(result.av_aS_nonzero, text)
            self.assertTrue(result.consistent)

    def test_reducible_type(self):
        self.assertTrue(top_degree_check(Context.for_type("B2xA1")).av_aS_nonzero)
        self.assertFalse(top_degree_check(Context.for_type("B2xA2")).av_aS_nonzero)


class SpecialClassTests(SimpleTestCase):
    def test_counts(self):
        self.assertEqual(len(special_classes(Context.for_type("A1"))), 2)
        self.assertEqual(len(special_classes(Context.for_type("A2"))), 2)
        self.assertEqual(len(special_classes(Context.for_type("B2"))), 4)

    def test_a3_records(self):
        ctx = Context.for_type("A3")
        by_rep = {r.representative: r for r in ctx.records}
        self.assertEqual(sorted(by_rep), [(), (1,), (1, 2), (1, 3), (1, 2, 3)])
        self.assertTrue(by_rep[(1, 3)].minus_one)
        self.assertFalse(by_rep[(1, 3)].special)
        self.assertFalse(by_rep[(1, 2)].minus_one)
        self.assertEqual(len(by_rep[(1, 3)].flat), 2)

    def test_basis_elements_are_invariant(self):
        ctx = Context.for_type("B2")
        basis = fv_basis(ctx)
        self.assertEqual(len(basis), 4)
        s1, s2 = element_from_word(ctx.rs, [1]), element_from_word(ctx.rs, [2])
        for _, av in basis:
            self.assertEqual(act(av, s1), av)
            self.assertEqual(act(av, s2), av)


class DimensionTests(SimpleTestCase):
    def test_a2(self):
        ctx = Context.for_type("A2")
        self.assertEqual([invariant_dimension(ctx, p) for p in range(3)], [1, 1, 0])

    def test_b2(self):
        ctx = Context.for_type("B2")
        dims = [invariant_dimension(ctx, p) for p in range(3)]
        self.assertEqual(dims[0], 1)
        self.assertEqual(sum(dims), 4)

    def test_trace_of_identity(self):
        ctx = Context.for_type("A3")
        words = ctx.algebra.basis_words(2)
        self.assertEqual(trace(ctx.algebra, identity(ctx.rs), words), len(words))

    def test_audit(self):
        ctx = Context.for_type("A3")
        dims = [invariant_dimension(ctx, p) for p in range(4)]
        entries, balanced = decomposition_audit(ctx, dims)
        by_rep = {e.representative: e for e in entries}
        self.assertNotIn((1, 2, 3), by_rep)
        self.assertEqual(by_rep[(1, 3)].fixed_dimension, 0)
        self.assertEqual(by_rep[(1, 3)].normalizer_order, 8)
        self.assertEqual(by_rep[()].fixed_dimension, 1)
        self.assertTrue(balanced)
        self.assertTrue(all(e.ok for e in entries))

    def test_shape_subspace(self):
        ctx = Context.for_type("A3")
        record = next(r for r in ctx.records if r.representative == (1, 3))
        # a_{s1 s3} only: the two reflections commute
        self.assertEqual(len(shape_subspace(ctx, record)), 1)

    def test_chain_equivalence(self):
        ctx = Context.for_type("H3")
        self.assertTrue(chain_matches_bruteforce(ctx, ctx.algebra.simple_monomial([1, 3])))


class VerifyTests(SimpleTestCase):
    def test_full_passes(self):
        for text in ("A1", "A2", "B2", "A3", "B3", "H3", "I2(5)", "I2(6)"):
            report = verify(text)
            self.assertTrue(report.passed, report_to_text(report))
            self.assertEqual(report.special_count, sum(report.degrees))

    def test_full_passes_on_larger_types(self):
        for text in ("D4", "F4"):
            report = verify(text)
            self.assertTrue(report.passed, report_to_text(report))
            self.assertEqual(report.special_count, sum(report.degrees))

    def test_full_passes_on_dihedral_types(self):
        for m in (3, 4, 7, 8):
            report = verify(f"I2({m})")
            self.assertTrue(report.passed, report_to_text(report))
            self.assertEqual(report.degrees[0], 1)

    def test_full_passes_with_dihedral_factor(self):
        for text in ("I2(5)xA2", "A2xI2(4)", "I2(4)xB2"):
            report = verify(text)
            self.assertTrue(report.passed, report_to_text(report))
            self.assertEqual(report.special_count, sum(report.degrees))
        # dimensions multiply across factors
        self.assertEqual(verify("I2(5)xA2").degrees, [1, 2, 1, 0, 0])

    def test_dimension_failure_is_recorded(self):
        with patch("fvverify.reports.invariant_dimension", side_effect=VerificationError("singular trace")):
            report = verify("B2")
        self.assertFalse(report.passed)
        self.assertFalse(report.checks["dimension_count"])
        self.assertFalse(report.checks["decomposition_audit"])
        self.assertTrue(report.checks["chain_equivalence"])
        self.assertTrue(any("singular trace" in note for note in report.notes))

    def test_shape_failure_is_recorded(self):
        with patch("fvverify.reports.special_classes", side_effect=VerificationError("flags differ")):
            report = verify("A2")
        self.assertFalse(report.passed)
        self.assertFalse(report.checks["shape_flags"])
        self.assertIn("chain_equivalence", report.checks)
        self.assertNotIn("basis_rank", report.checks)
        self.assertTrue(any(note.startswith("shape_flags:") for note in report.notes))

    def test_top_scope(self):
        report = verify("B4", scope=SCOPE_TOP)
        self.assertEqual(list(report.checks), ["top_degree"])
        self.assertTrue(report.passed)
        self.assertEqual(report.degrees, [])

    def test_full_limit(self):
        with self.settings(FULL_VERIFY_LIMIT=10):
            with self.assertRaises(GroupTooLargeError):
                verify("A3")

    def test_unknown_scope(self):
        with self.assertRaises(ValueError):
            verify("A2", scope="partial")

    def test_report_forms(self):
        report = verify("A2")
        data = json.loads(report_to_json(report))
        self.assertEqual(
            set(data),
            {"type", "group_order", "scope", "passed", "degrees", "shapes", "basis", "checks", "notes", "timings"},
        )
        self.assertEqual(data, json.loads(json.dumps(report_to_dict(report))))
        self.assertEqual(data["degrees"], [1, 1, 0])
        text = report_to_text(report)
        self.assertIn("result: PASS", text)
        self.assertIn("m: 2", text)
