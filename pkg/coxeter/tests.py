import random
from fractions import Fraction

from django.test import SimpleTestCase

from scalars.field import QuadExt

from .chains import chain_factors, enumerate_group, parabolic_chain
from .elements import (
    conjugate_reflection,
    element_from_word,
    identity,
    inverse,
    is_involution,
    length,
    longest_element,
    minus_one_condition,
    reduced_word,
    simple_reflection,
)
from .exceptions import CoxeterTypeError, GroupTooLargeError
from .involutions import (
    conjugacy_classes,
    eigenspace_decomposition,
    involution_classes,
    is_special_involution,
    normalizer,
    shapes,
)
from .roots import build_root_system, parabolic_roots
from .types import coxeter_matrix, group_order, parse_type


def roots_of(text):
    return build_root_system(parse_type(text))


class TypeParsingTests(SimpleTestCase):
    def test_round_trip(self):
        for text in ("A3", "B4xA1", "I2(7)", "H3", "E8", "D4xI2(5)xA1"):
            self.assertEqual(str(parse_type(text)), text)

    def test_rank_is_sum_of_factors(self):
        self.assertEqual(parse_type("B4xA1").rank, 5)
        self.assertEqual(parse_type("I2(7)xA2").rank, 4)

    def test_rejects_bad_types(self):
        for text in ("Z9", "A0", "B1", "D3", "E9", "F3", "H5", "I2(2)", "A3x", ""):
            with self.assertRaises(CoxeterTypeError):
                parse_type(text)

    def test_group_orders(self):
        expected = {"A2": 6, "B3": 48, "D4": 192, "F4": 1152, "H3": 120, "I2(5)": 10, "B2xA1": 16, "E8": 696729600}
        for text, order in expected.items():
            self.assertEqual(group_order(parse_type(text)), order)

    def test_coxeter_matrix_labelling(self):
        m = coxeter_matrix(parse_type("F4"))
        self.assertEqual(m[1][2], 4)
        self.assertEqual(m[0][1], 3)
        self.assertEqual(m[0][3], 2)
        e8 = coxeter_matrix(parse_type("E8"))
        self.assertEqual(e8[1][3], 3)
        self.assertEqual(e8[1][2], 2)
        self.assertEqual(coxeter_matrix(parse_type("H3"))[0][1], 5)


class RootSystemTests(SimpleTestCase):
    def test_counts(self):
        expected = {"A1": 1, "A2": 3, "A3": 6, "B3": 9, "D4": 12, "F4": 24, "H3": 15, "H4": 60, "E6": 36, "E8": 120, "I2(7)": 7}
        for text, n in expected.items():
            rs = roots_of(text)
            self.assertEqual(rs.num_positive, n, text)
            self.assertEqual(rs.size, 2 * n)

    def test_h3_coordinates_use_sqrt5(self):
        rs = roots_of("H3")
        self.assertTrue(any(isinstance(x, QuadExt) for r in rs.positive_reflections() for x in rs.vector(r)))

    def test_positive_roots_have_non_negative_coordinates(self):
        for text in ("B3", "F4", "H3", "D4"):
            rs = roots_of(text)
            for r in rs.positive_reflections():
                self.assertTrue(all(x >= 0 for x in rs.vector(r)))

    def test_negation_pairing(self):
        rs = roots_of("B3")
        for r in rs.positive_reflections():
            self.assertEqual(rs.vector(rs.negate(r)), tuple(-x for x in rs.vector(r)))

    def test_a3_construction_order(self):
        rs = roots_of("A3")
        expected = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1)]
        self.assertEqual([tuple(int(x) for x in rs.vector(r)) for r in rs.positive_reflections()], expected)

    def test_dihedral_has_no_coordinates(self):
        rs = roots_of("I2(5)")
        self.assertFalse(rs.has_coordinates)
        with self.assertRaises(ValueError):
            rs.vector(1)

    def test_product_type(self):
        rs = roots_of("B2xA1")
        self.assertEqual(rs.num_positive, 5)
        self.assertEqual(rs.rank, 3)

    def test_parabolic_roots(self):
        rs = roots_of("A3")
        self.assertEqual(len(parabolic_roots(rs, [1, 3])), 4)
        self.assertEqual(len(parabolic_roots(rs, [1, 2])), 6)
        self.assertEqual(len(parabolic_roots(roots_of("I2(6)"), [1])), 2)


class GroupElementTests(SimpleTestCase):
    def test_words(self):
        rs = roots_of("A2")
        self.assertTrue(element_from_word(rs, []).is_identity())
        self.assertTrue(element_from_word(rs, [1, 1]).is_identity())
        self.assertEqual(element_from_word(rs, [1, 2, 1]), element_from_word(rs, [2, 1, 2]))

    def test_index_out_of_range(self):
        with self.assertRaises(IndexError):
            element_from_word(roots_of("A2"), [3])

    def test_permutations_commute_with_negation(self):
        rs = roots_of("H3")
        rng = random.Random(3)
        for _ in range(20):
            w = element_from_word(rs, [rng.randint(1, 3) for _ in range(8)])
            for i in range(1, rs.size + 1):
                self.assertEqual(w(rs.negate(i)), rs.negate(w(i)))

    def test_conjugate_reflection(self):
        rs = roots_of("A2")
        s1 = simple_reflection(rs, 1)
        self.assertEqual(conjugate_reflection(rs, 2, s1), 3)
        self.assertEqual(conjugate_reflection(rs, 2, identity(rs)), 2)
        for r in rs.positive_reflections():
            w = element_from_word(rs, [1, 2, 1]) if r == 3 else simple_reflection(rs, r)
            self.assertEqual(conjugate_reflection(rs, r, w), r)

    def test_length_and_reduced_word(self):
        rs = roots_of("B3")
        rng = random.Random(5)
        for _ in range(20):
            w = element_from_word(rs, [rng.randint(1, 3) for _ in range(10)])
            word = reduced_word(rs, w)
            self.assertEqual(len(word), length(rs, w))
            self.assertEqual(element_from_word(rs, word), w)
            self.assertTrue((w * inverse(w)).is_identity())

    def test_longest_elements(self):
        a1 = roots_of("A1")
        self.assertEqual(longest_element(a1, [1]), simple_reflection(a1, 1))
        a2 = roots_of("A2")
        self.assertEqual(length(a2, longest_element(a2, [1, 2])), 3)
        b2 = roots_of("B2")
        w = longest_element(b2, [1, 2])
        self.assertTrue(all(w(i) == b2.negate(i) for i in range(1, b2.size + 1)))

    def test_longest_element_is_involution_preserving_phi_i(self):
        rs = roots_of("D4")
        for subset in ([1, 2], [1, 3, 4], [2, 3, 4], [1, 2, 3, 4]):
            w = longest_element(rs, subset)
            self.assertTrue(is_involution(rs, w))
            phi = parabolic_roots(rs, subset)
            self.assertTrue(all(w(i) in phi for i in phi))

    def test_minus_one_condition(self):
        self.assertTrue(minus_one_condition(roots_of("A2"), []))
        self.assertFalse(minus_one_condition(roots_of("A2"), [1, 2]))
        self.assertTrue(minus_one_condition(roots_of("B2"), [1, 2]))
        self.assertTrue(minus_one_condition(roots_of("A3"), [1, 3]))
        self.assertTrue(minus_one_condition(roots_of("I2(6)"), [1, 2]))
        self.assertFalse(minus_one_condition(roots_of("I2(5)"), [1, 2]))

    def test_minus_one_condition_factorwise(self):
        rs = roots_of("B2xA2")
        self.assertTrue(minus_one_condition(rs, [1, 2]))
        self.assertFalse(minus_one_condition(rs, [3, 4]))
        self.assertFalse(minus_one_condition(rs, [1, 2, 3, 4]))
        self.assertTrue(minus_one_condition(rs, [1, 2, 3]))


class ParabolicChainTests(SimpleTestCase):
    def test_a3_sizes(self):
        chain = parabolic_chain(roots_of("A3"))
        self.assertEqual(chain.sizes, [2, 3, 4])
        self.assertEqual(chain.total, 9)

    def test_a1(self):
        rs = roots_of("A1")
        chain = parabolic_chain(rs)
        self.assertEqual(set(chain.cosets[0]), {identity(rs), simple_reflection(rs, 1)})

    def test_e8_total(self):
        chain = parabolic_chain(roots_of("E8"))
        self.assertEqual(chain.sizes, [2, 2, 3, 10, 16, 27, 56, 240])
        self.assertEqual(chain.total, 356)

    def test_product_of_sizes_is_group_order(self):
        for text in ("B3", "D4", "H3", "F4", "I2(7)", "B2xA1"):
            rs = roots_of(text)
            product = 1
            for size in parabolic_chain(rs).sizes:
                product *= size
            self.assertEqual(product, rs.order, text)

    def test_representatives_are_minimal(self):
        rs = roots_of("F4")
        chain = parabolic_chain(rs)
        for j, cosets in enumerate(chain.cosets, start=1):
            for x in cosets:
                for s in range(1, j):
                    self.assertGreater(length(rs, x * simple_reflection(rs, s)), length(rs, x))


class EnumerationTests(SimpleTestCase):
    def test_sizes(self):
        for text, order in (("A2", 6), ("B3", 48), ("F4", 1152), ("I2(8)", 16)):
            elements = list(enumerate_group(roots_of(text)))
            self.assertEqual(len(elements), order)
            self.assertEqual(len({w.perm for w in elements}), order)

    def test_unique_factorization(self):
        rs = roots_of("B3")
        chain = parabolic_chain(rs)
        seen = set()
        for w in enumerate_group(rs, chain):
            factors = chain_factors(chain, w)
            product = identity(rs)
            for x in factors:
                product = product * x
            self.assertEqual(product, w)
            seen.add(tuple(x.perm for x in factors))
        self.assertEqual(len(seen), 48)

    def test_guard(self):
        with self.assertRaises(GroupTooLargeError):
            enumerate_group(roots_of("E8"))

    def test_guard_override_setting(self):
        with self.settings(GROUP_SIZE_GUARD=10):
            with self.assertRaises(GroupTooLargeError):
                enumerate_group(roots_of("A3"))
            self.assertEqual(len(list(enumerate_group(roots_of("A3"), allow_large=True))), 24)


class InvolutionTests(SimpleTestCase):
    def test_eigenspaces(self):
        a2 = roots_of("A2")
        plus, minus = eigenspace_decomposition(a2, identity(a2))
        self.assertEqual((len(plus), len(minus)), (2, 0))
        plus, minus = eigenspace_decomposition(a2, simple_reflection(a2, 1))
        self.assertEqual((len(plus), len(minus)), (1, 1))
        b2 = roots_of("B2")
        plus, minus = eigenspace_decomposition(b2, longest_element(b2, [1, 2]))
        self.assertEqual((len(plus), len(minus)), (0, 2))

    def test_eigenspaces_require_involution(self):
        a2 = roots_of("A2")
        with self.assertRaises(ValueError):
            eigenspace_decomposition(a2, element_from_word(a2, [1, 2]))
        with self.assertRaises(ValueError):
            is_special_involution(a2, element_from_word(a2, [1, 2]))

    def test_special_examples(self):
        b2 = roots_of("B2")
        self.assertTrue(is_special_involution(b2, identity(b2)))
        self.assertTrue(is_special_involution(b2, longest_element(b2, [1, 2])))
        a2 = roots_of("A2")
        self.assertTrue(is_special_involution(a2, simple_reflection(a2, 1)))

    def test_product_of_commuting_reflections_in_a3(self):
        rs = roots_of("A3")
        self.assertFalse(is_special_involution(rs, longest_element(rs, [1, 3])))

    def test_special_is_class_function(self):
        rs = roots_of("B3")
        for cls in conjugacy_classes(rs):
            if is_involution(rs, cls[0]):
                flags = {is_special_involution(rs, t) for t in cls}
                self.assertEqual(len(flags), 1)

    def test_conjugacy_class_sizes(self):
        classes = conjugacy_classes(roots_of("A3"))
        self.assertEqual(sorted(len(c) for c in classes), [1, 3, 6, 6, 8])
        self.assertTrue(classes[0][0].is_identity())

    def test_shapes(self):
        self.assertEqual(len(shapes(roots_of("A1"))), 2)
        a2 = shapes(roots_of("A2"))
        self.assertEqual([s.representative for s in a2], [(), (1,), (1, 2)])
        self.assertEqual(a2[1].members, ((1,), (2,)))
        a3 = shapes(roots_of("A3"))
        self.assertEqual([s.representative for s in a3], [(), (1,), (1, 2), (1, 3), (1, 2, 3)])
        self.assertEqual(len(shapes(roots_of("B2"))), 4)

    def test_normalizer(self):
        rs = roots_of("A3")
        self.assertEqual(len(normalizer(rs, [1, 3])), 8)
        self.assertEqual(len(normalizer(rs, [])), 24)

    def test_involution_classes(self):
        a1 = involution_classes(roots_of("A1"))
        self.assertEqual(len(a1), 2)
        self.assertTrue(all(c.special for c in a1))
        a2 = involution_classes(roots_of("A2"))
        self.assertEqual([c.subset for c in a2], [(), (1,)])
        b2 = involution_classes(roots_of("B2"))
        self.assertEqual(len(b2), 4)
        self.assertTrue(b2[-1].special)
        self.assertEqual(b2[-1].subset, (1, 2))

    def test_dihedral_involutions_are_special(self):
        rs = roots_of("I2(6)")
        self.assertTrue(all(c.special for c in involution_classes(rs)))
        self.assertEqual(len(involution_classes(rs)), 4)

    def test_weights_sum_to_order(self):
        rs = roots_of("H3")
        self.assertEqual(sum(len(c) for c in conjugacy_classes(rs)), 120)
        self.assertEqual(Fraction(sum(len(c) for c in conjugacy_classes(rs)), rs.order), 1)
