from django.test import SimpleTestCase

from .chebyshev import chebyshev_j, j_limits_at_two, check_matrix_power_identity
from .exceptions import NonZeroRemainder
from .polynomial import IntPolynomial, ZERO, ONE, X, X_MINUS_2, eval_and_derivative_at


def poly(*coefficients):
    """Build a polynomial from coefficients given highest degree first."""
    return IntPolynomial(tuple(reversed(coefficients)))


class IntPolynomialTestCase(SimpleTestCase):
    def test_normalizes_trailing_zeros(self):
        """Test high-order zero coefficients are stripped"""
        self.assertEqual(IntPolynomial((1, 2, 0, 0)).coefficients, (1, 2))
        self.assertEqual(IntPolynomial((0, 0)), ZERO)
        self.assertEqual(ZERO.degree(), -1)
        self.assertEqual(X.degree(), 1)

    def test_addition(self):
        """Test (x-2) + (x+2) = 2x"""
        self.assertEqual(X_MINUS_2 + (X + 2), 2 * X)

    def test_multiplication(self):
        """Test (x-2)(x+1)^2 expands to the trefoil polynomial"""
        self.assertEqual(X_MINUS_2 * (X + 1) ** 2, poly(1, 0, -3, -2))

    def test_zero_annihilates(self):
        """Test multiplying by zero gives the zero polynomial"""
        self.assertEqual(ZERO * poly(1, 0, -3, 0, 1), ZERO)
        self.assertEqual(0 * X, ZERO)

    def test_subtraction_and_negation(self):
        """Test subtraction with integers on either side"""
        self.assertEqual(1 - X, -(X - 1))
        self.assertEqual(X - X, ZERO)

    def test_div_exact(self):
        """Test exact division by x-2"""
        self.assertEqual(poly(1, 0, -4).div_exact(X_MINUS_2), X + 2)
        self.assertEqual(poly(1, 0, -3, -2).div_exact(X_MINUS_2), poly(1, 2, 1))

    def test_div_exact_remainder(self):
        """Test x^2+1 is rejected with the remainder attached"""
        with self.assertRaises(NonZeroRemainder) as ctx:
            poly(1, 0, 1).div_exact(X_MINUS_2)
        self.assertEqual(ctx.exception.remainder, IntPolynomial.constant(5))

    def test_div_exact_round_trip(self):
        """Test d * (p / d) == p"""
        p = poly(1, -2, -5, 6) * (X + 7)
        d = X - 1
        self.assertEqual(d * p.div_exact(d), p)

    def test_evaluation_and_derivative(self):
        """Test evaluation and derivative of the zero polynomial and J_3"""
        self.assertEqual(eval_and_derivative_at(ZERO, 7), (0, 0))
        self.assertEqual(eval_and_derivative_at(chebyshev_j(3), 2), (4, 10))

    def test_text_form(self):
        """Test the signed monomial text form"""
        self.assertEqual(str(poly(1, 0, -3, -2)), "x^3 - 3*x - 2")
        self.assertEqual(str(poly(-1, 0, 1)), "-x^2 + 1")
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str(X), "x")
        self.assertEqual(str(IntPolynomial.constant(-4)), "-4")

    def test_large_coefficients(self):
        """Test coefficients grow past 64 bits without overflow"""
        big = (X + 3) ** 60
        self.assertEqual(big(0), 3 ** 60)
        self.assertEqual(big.leading_coefficient(), 1)


class ChebyshevTestCase(SimpleTestCase):
    def test_seeds(self):
        """Test J_-1, J_0 and J_1"""
        self.assertEqual(chebyshev_j(-1), ZERO)
        self.assertEqual(chebyshev_j(0), ONE)
        self.assertEqual(chebyshev_j(1), X)

    def test_low_orders(self):
        """Test J_2 and J_4"""
        self.assertEqual(chebyshev_j(2), poly(1, 0, -1))
        self.assertEqual(chebyshev_j(4), poly(1, 0, -3, 0, 1))

    def test_recurrence(self):
        """Test J_{k+1} = x J_k - J_{k-1} up to k = 50"""
        for k in range(51):
            self.assertEqual(chebyshev_j(k + 1), X * chebyshev_j(k) - chebyshev_j(k - 1))

    def test_limits_at_two(self):
        """Test J_k(2) = k+1 and J_k'(2) = k(k+1)(k+2)/6"""
        for k in range(51):
            self.assertEqual(j_limits_at_two(k), (k + 1, k * (k + 1) * (k + 2) // 6))

    def test_matrix_power_identity(self):
        """Test the 2x2 matrix power identity for k up to 20"""
        for k in range(21):
            self.assertTrue(check_matrix_power_identity(k))

    def test_rejects_low_index(self):
        """Test indices below -1 are rejected"""
        with self.assertRaises(ValueError):
            chebyshev_j(-2)
