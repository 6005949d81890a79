import random
from fractions import Fraction

from django.test import SimpleTestCase

from coxeter.chains import enumerate_group
from coxeter.elements import element_from_word, identity
from coxeter.roots import build_root_system
from coxeter.types import parse_type
from matroid.gamma import build_gamma
from matroid.orders import resolve_order
from matroid.rank import circuits

from .algebra import (
    OSAlgebra,
    SparseElement,
    act,
    element_to_dict,
    element_to_text,
    format_word,
    normalize_word,
    to_nbc,
)
from .averaging import average_bruteforce, average_chain, sum_of_images
from .oracle import FormPoint, form_eval, random_form_point


def algebra_for(text, selector="default", with_gamma=False):
    rs = build_root_system(parse_type(text))
    order = resolve_order(rs, selector)
    return OSAlgebra(rs, order, build_gamma(rs, order) if with_gamma else None)


class WordTests(SimpleTestCase):
    def test_normalize(self):
        self.assertEqual(normalize_word([2, 1]), ((1, 2), -1))
        self.assertEqual(normalize_word([3, 1, 2]), ((1, 2, 3), 1))
        self.assertEqual(normalize_word([]), ((), 1))
        self.assertIsNone(normalize_word([1, 3, 1]))

    def test_format_word(self):
        self.assertEqual(format_word((1, 4, 6), 6), "146")
        self.assertEqual(format_word((1, 14), 15), "1.14")
        self.assertEqual(format_word((), 6), "1")


class RewriteTests(SimpleTestCase):
    def test_a3_examples(self):
        algebra = algebra_for("A3", "paper-a3")
        x = to_nbc(algebra, (1, 2, 6))
        self.assertEqual(x.terms, {(1, 4, 6): 1, (2, 4, 6): -1})
        self.assertEqual(element_to_text(x, ", "), "146: 1, 246: -1")
        self.assertTrue(to_nbc(algebra, (1, 2, 4)).is_zero())
        self.assertEqual(element_to_text(to_nbc(algebra, (1, 2, 4))), "0")

    def test_basis_word_is_fixed(self):
        algebra = algebra_for("A3", "paper-a3")
        self.assertEqual(to_nbc(algebra, (2, 4, 6)).terms, {(2, 4, 6): 1})
        self.assertEqual(to_nbc(algebra, ()).terms, {(): 1})

    def test_dihedral_factor_first(self):
        # positions 1..5 are I2(5), 6..8 are A2
        for with_gamma in (False, True):
            algebra = algebra_for("I2(5)xA2", with_gamma=with_gamma)
            self.assertEqual(to_nbc(algebra, (1, 6, 7)).terms, {(1, 6, 8): 1, (1, 7, 8): -1})
            self.assertEqual(to_nbc(algebra, (1, 6, 8)).terms, {(1, 6, 8): 1})
        algebra = algebra_for("A2xI2(4)", "simples-last", with_gamma=True)
        rng = random.Random(7)
        for _ in range(30):
            word = tuple(sorted(rng.sample(range(1, algebra.n + 1), rng.randint(2, 4))))
            for term in to_nbc(algebra, word).terms:
                self.assertTrue(algebra.is_basis(term), word)

    def test_rejects_non_increasing(self):
        algebra = algebra_for("A3")
        with self.assertRaises(ValueError):
            to_nbc(algebra, (2, 1))

    def test_graph_and_direct_membership_agree(self):
        plain = algebra_for("B3")
        graphed = algebra_for("B3", with_gamma=True)
        rng = random.Random(5)
        for _ in range(30):
            word = tuple(sorted(rng.sample(range(1, 10), 3)))
            self.assertEqual(to_nbc(plain, word).terms, to_nbc(graphed, word).terms)

    def test_results_are_basis_words(self):
        algebra = algebra_for("H3", with_gamma=True)
        rng = random.Random(9)
        for _ in range(30):
            word = tuple(sorted(rng.sample(range(1, 16), 3)))
            for term in to_nbc(algebra, word).terms:
                self.assertTrue(algebra.is_basis(term))

    def test_mismatched_graph(self):
        rs = build_root_system(parse_type("B3"))
        graph = build_gamma(rs, resolve_order(rs, "default"))
        with self.assertRaises(ValueError):
            OSAlgebra(rs, resolve_order(rs, "simples-last"), graph)


class ProductTests(SimpleTestCase):
    def test_a2_product(self):
        algebra = algebra_for("A2")
        x = algebra.generator(1) * algebra.generator(2)
        self.assertEqual(x.terms, {(1, 3): 1, (2, 3): -1})

    def test_anticommuting_generators(self):
        algebra = algebra_for("B2")
        a, b = algebra.generator(1), algebra.generator(3)
        self.assertEqual(a * b, -(b * a))
        self.assertTrue((a * a).is_zero())

    def test_associative(self):
        algebra = algebra_for("B3")
        rng = random.Random(3)
        for _ in range(5):
            x, y, z = (algebra.random_element(rng, 1) for _ in range(3))
            self.assertEqual((x * y) * z, x * (y * z))

    def test_unit_and_scaling(self):
        algebra = algebra_for("A3")
        x = algebra.random_element(random.Random(1), 2)
        self.assertEqual(algebra.unit() * x, x)
        self.assertEqual(x * Fraction(2), x + x)
        self.assertTrue((x - x).is_zero())

    def test_different_algebras_do_not_mix(self):
        x = algebra_for("A2").unit()
        y = algebra_for("A2").unit()
        with self.assertRaises(ValueError):
            x + y

    def test_dict_form(self):
        algebra = algebra_for("A2")
        x = algebra.generator(1) * algebra.generator(2)
        self.assertEqual(element_to_dict(x), [{"word": [1, 3], "coeff": "1"}, {"word": [2, 3], "coeff": "-1"}])


class ActionTests(SimpleTestCase):
    def test_simple_reflection_on_a2(self):
        algebra = algebra_for("A2")
        rs = algebra.rs
        s1 = element_from_word(rs, [1])
        self.assertEqual(act(SparseElement(algebra, {(2, 3): 1}), s1).terms, {(2, 3): -1})

    def test_identity_acts_trivially(self):
        algebra = algebra_for("B3")
        x = algebra.random_element(random.Random(2), 2)
        self.assertEqual(act(x, identity(algebra.rs)), x)

    def test_right_action_composes(self):
        algebra = algebra_for("B3")
        rs = algebra.rs
        rng = random.Random(4)
        for _ in range(5):
            x = algebra.random_element(rng, 2)
            u = element_from_word(rs, [rng.randint(1, 3) for _ in range(4)])
            v = element_from_word(rs, [rng.randint(1, 3) for _ in range(4)])
            self.assertEqual(act(act(x, u), v), act(x, u * v))

    def test_action_is_multiplicative(self):
        algebra = algebra_for("H3")
        rs = algebra.rs
        rng = random.Random(6)
        w = element_from_word(rs, [1, 2, 3, 2])
        x, y = algebra.random_element(rng, 1), algebra.random_element(rng, 1)
        self.assertEqual(act(x * y, w), act(x, w) * act(y, w))


class AveragingTests(SimpleTestCase):
    def test_unit_is_invariant(self):
        algebra = algebra_for("B3")
        self.assertEqual(average_bruteforce(algebra.unit()), algebra.unit())

    def test_a2_top_degree_vanishes(self):
        algebra = algebra_for("A2")
        self.assertTrue(average_bruteforce(algebra.simple_monomial([1, 2])).is_zero())

    def test_b2_top_degree_survives(self):
        algebra = algebra_for("B2")
        self.assertFalse(average_bruteforce(algebra.simple_monomial([1, 2])).is_zero())

    def test_a2_generator_average(self):
        algebra = algebra_for("A2")
        third = Fraction(1, 3)
        self.assertEqual(average_bruteforce(algebra.generator(1)).terms, {(1,): third, (2,): third, (3,): third})

    def test_chain_matches_bruteforce(self):
        types = ["A1", "A2", "A3", "B2", "B3", "D4", "H3", "F4", "A1xA2", "I2(5)xA2"]
        for text in types + [f"I2({m})" for m in range(3, 9)]:
            algebra = algebra_for(text)
            rank = algebra.rs.rank
            top = algebra.simple_monomial(range(1, rank + 1))
            self.assertEqual(average_chain(top), average_bruteforce(top), text)
            rng = random.Random(8)
            for _ in range(20):
                degree = rng.randint(0, rank)
                x = algebra.random_element(rng, degree)
                self.assertEqual(average_chain(x), average_bruteforce(x), (text, degree))

    def test_mixed_dihedral_factor_average(self):
        algebra = algebra_for("A2xI2(4)")
        av = average_chain(algebra.simple_monomial([1, 2, 3, 4]))
        # A2 has no top-degree invariant
        self.assertTrue(av.is_zero())
        b = algebra_for("I2(4)xB2")
        self.assertFalse(average_chain(b.simple_monomial([1, 2, 3, 4])).is_zero())

    def test_average_is_idempotent_and_invariant(self):
        algebra = algebra_for("B3")
        av = average_chain(algebra.random_element(random.Random(12), 2))
        self.assertEqual(average_chain(av), av)
        for i in (1, 2, 3):
            self.assertEqual(act(av, element_from_word(algebra.rs, [i])), av)

    def test_h3_top_degree(self):
        h3 = algebra_for("H3")
        self.assertFalse(average_chain(h3.simple_monomial([1, 2, 3])).is_zero())
        a3 = algebra_for("A3")
        self.assertTrue(average_chain(a3.simple_monomial([1, 2, 3])).is_zero())

    def test_thread_count_does_not_change_result(self):
        algebra = algebra_for("B3")
        x = algebra.random_element(random.Random(13), 2)
        elements = list(enumerate_group(algebra.rs))
        self.assertEqual(sum_of_images(x, elements, threads=1), sum_of_images(x, elements, threads=4))

    def test_unnormalized_sum(self):
        algebra = algebra_for("A2")
        self.assertEqual(average_chain(algebra.unit(), normalized=False).terms, {(): 6})


class FormOracleTests(SimpleTestCase):
    def check_rewrites(self, text, samples, points=3):
        algebra = algebra_for(text)
        rs = algebra.rs
        rng = random.Random(21)
        for _ in range(samples):
            degree = rng.randint(2, rs.rank)
            word = tuple(sorted(rng.sample(range(1, algebra.n + 1), degree)))
            raw = SparseElement(algebra, {word: Fraction(1)})
            expanded = to_nbc(algebra, word)
            for _ in range(points):
                pt = random_form_point(rs, degree, rng)
                self.assertEqual(form_eval(raw, pt), form_eval(expanded, pt), word)

    def check_circuit_relations(self, text, points=3):
        algebra = algebra_for(text)
        rs = algebra.rs
        rng = random.Random(31)
        found = circuits(rs, algebra.order)
        self.assertTrue(found)
        for circuit in found:
            # sum_i (-1)^(i-1) a_{C - c_i}
            x = SparseElement(
                algebra,
                {circuit[:i] + circuit[i + 1:]: Fraction(-1 if i % 2 else 1) for i in range(len(circuit))},
            )
            for _ in range(points):
                self.assertEqual(form_eval(x, random_form_point(rs, len(circuit) - 1, rng)), 0, circuit)

    def test_a3_rewrites(self):
        self.check_rewrites("A3", 100)

    def test_b3_rewrites(self):
        self.check_rewrites("B3", 100)

    def test_h3_rewrites(self):
        self.check_rewrites("H3", 10, points=1)

    def test_a2_circuit_relation(self):
        # a12 - a13 + a23 = 0 in A2
        algebra = algebra_for("A2")
        x = SparseElement(algebra, {(1, 2): 1, (1, 3): -1, (2, 3): 1})
        rng = random.Random(31)
        for _ in range(5):
            self.assertEqual(form_eval(x, random_form_point(algebra.rs, 2, rng)), 0)

    def test_every_circuit_relation(self):
        self.check_circuit_relations("A3")
        self.check_circuit_relations("B3")

    def test_point_on_hyperplane(self):
        algebra = algebra_for("A2")
        pt = FormPoint(point=(Fraction(0), Fraction(0)), directions=((Fraction(1), Fraction(0)),))
        with self.assertRaises(ValueError):
            form_eval(algebra.generator(1), pt)

    def test_dihedral_has_no_forms(self):
        algebra = algebra_for("I2(5)")
        with self.assertRaises(ValueError):
            random_form_point(algebra.rs, 1, random.Random(1))
