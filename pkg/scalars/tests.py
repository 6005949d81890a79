import random
from fractions import Fraction

from django.test import SimpleTestCase

from .field import PHI, SQRT5, QuadExt, format_scalar, inv, is_zero, mul, parse_scalar, quad, sign
from .linalg import Echelon, column_space, determinant, direction_key, rank, solve_combination


class FieldArithmeticTests(SimpleTestCase):
    def test_rational_sum(self):
        self.assertEqual(Fraction(1, 2) + Fraction(1, 3), Fraction(5, 6))

    def test_sqrt5_parts_cancel_to_rational(self):
        total = quad(1, 1) + quad(1, -1)
        self.assertEqual(total, 2)
        self.assertIsInstance(total, Fraction)

    def test_golden_ratio_doubles(self):
        self.assertEqual(PHI + PHI, quad(1, 1))

    def test_norm_form_product(self):
        self.assertEqual(mul(quad(1, 1), quad(1, -1)), -4)

    def test_inverse(self):
        self.assertEqual(inv(Fraction(2)), Fraction(1, 2))
        self.assertEqual(inv(quad(1, 1)), quad(Fraction(-1, 4), Fraction(1, 4)))

    def test_inverse_of_zero_raises(self):
        with self.assertRaises(ZeroDivisionError):
            inv(Fraction(0))

    def test_quadext_requires_radical_part(self):
        with self.assertRaises(ValueError):
            QuadExt(1, 0)

    def test_golden_ratio_equation(self):
        # phi^2 = phi + 1
        self.assertEqual(PHI * PHI, PHI + 1)

    def test_random_inverses(self):
        rng = random.Random(7)
        for _ in range(50):
            x = quad(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            if is_zero(x):
                continue
            self.assertEqual(x * inv(x), 1)


class SignTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(sign(quad(1, -1)), -1)
        self.assertEqual(sign(Fraction(0)), 0)
        self.assertEqual(sign(quad(Fraction(9, 4), -1)), 1)
        self.assertEqual(sign(SQRT5 - 2), 1)
        self.assertEqual(sign(SQRT5 - 3), -1)

    def test_sign_is_multiplicative(self):
        rng = random.Random(11)
        for _ in range(100):
            x = quad(rng.randint(-6, 6), rng.randint(-3, 3))
            y = quad(rng.randint(-6, 6), rng.randint(-3, 3))
            self.assertEqual(sign(x * y), sign(x) * sign(y))

    def test_ordering_follows_sign(self):
        self.assertLess(Fraction(2), SQRT5)
        self.assertGreater(PHI, Fraction(8, 5))


class TextFormTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_scalar(Fraction(-3, 4)), "-3/4")
        self.assertEqual(format_scalar(quad(Fraction(1, 2), Fraction(1, 2))), "1/2+1/2*sqrt5")
        self.assertEqual(format_scalar(quad(0, -2)), "0-2*sqrt5")

    def test_round_trip(self):
        for value in (Fraction(0), Fraction(7, 3), quad(-1, Fraction(2, 7)), quad(Fraction(5, 2), -3)):
            self.assertEqual(parse_scalar(format_scalar(value)), value)

    def test_malformed_text(self):
        for text in ("", "1/2+", "sqrt5", "1.5", "2*sqrt5+1"):
            with self.assertRaises(ValueError):
                parse_scalar(text)


class LinearAlgebraTests(SimpleTestCase):
    def test_rank(self):
        rows = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
        self.assertEqual(rank([tuple(Fraction(x) for x in r) for r in rows]), 2)
        self.assertEqual(rank([]), 0)

    def test_echelon_membership(self):
        echelon = Echelon(3)
        self.assertTrue(echelon.add((Fraction(1), Fraction(0), Fraction(0))))
        self.assertTrue(echelon.add((Fraction(1), Fraction(1), Fraction(0))))
        self.assertFalse(echelon.add((Fraction(3), Fraction(-2), Fraction(0))))
        self.assertTrue(echelon.contains((Fraction(0), Fraction(5), Fraction(0))))
        self.assertIsNone(echelon.extended((Fraction(0), Fraction(1), Fraction(0))))
        self.assertEqual(echelon.extended((Fraction(0), Fraction(0), Fraction(1))).rank, 3)
        self.assertEqual(echelon.rank, 2)

    def test_solve_combination(self):
        basis = [(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1))]
        self.assertEqual(solve_combination(basis, (Fraction(3), Fraction(2))), [1, 2])
        self.assertIsNone(solve_combination(basis[:1], (Fraction(0), Fraction(1))))

    def test_solve_over_quadratic_field(self):
        basis = [(Fraction(1), Fraction(0)), (PHI, Fraction(1))]
        coefficients = solve_combination(basis, (PHI + 1, Fraction(1)))
        self.assertEqual(coefficients, [1, 1])

    def test_determinant(self):
        m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
        self.assertEqual(determinant(m), 5)
        self.assertEqual(determinant([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]), -1)
        self.assertEqual(determinant([]), 1)

    def test_direction_key(self):
        self.assertEqual(direction_key((Fraction(0), Fraction(-2), Fraction(4))), (0, 1, -2))
        self.assertIsNone(direction_key((Fraction(0), Fraction(0))))

    def test_column_space(self):
        vectors = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(2)), (Fraction(0), Fraction(1))]
        self.assertEqual(len(column_space(vectors, 2)), 2)
