import logging
from dataclasses import dataclass

from sympy.polys.densearith import (
    dup_add, dup_sub, dup_mul, dup_neg, dup_mul_ground, dup_div,
)
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_eval, dup_diff
from sympy.polys.domains import ZZ

from .exceptions import NonZeroRemainder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Dense univariate polynomial with exact integer coefficients.

    ``coefficients`` is stored lowest degree first; the zero polynomial is the
    empty tuple. Arithmetic is delegated to sympy's dense ``dup_*`` routines
    over ``ZZ``, which work highest degree first.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    # Conversion

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def from_dup(cls, dup):
        return cls(tuple(reversed(dup_strip(list(dup)))))

    def to_dup(self):
        return [ZZ(c) for c in reversed(self.coefficients)]

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return NotImplemented

    # Shape

    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __bool__(self):
        return not self.is_zero()

    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else 0

    # Ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_add(self.to_dup(), other.to_dup(), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_sub(self.to_dup(), other.to_dup(), ZZ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial.from_dup(dup_mul_ground(self.to_dup(), ZZ(other), ZZ))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial.from_dup(dup_mul(self.to_dup(), other.to_dup(), ZZ))

    __rmul__ = __mul__

    def __neg__(self):
        return IntPolynomial.from_dup(dup_neg(self.to_dup(), ZZ))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def div_exact(self, divisor):
        """
        Divide exactly by ``divisor``.

        Args:
            divisor: nonzero IntPolynomial (or int)

        Returns:
            IntPolynomial: q with divisor * q == self

        Raises:
            NonZeroRemainder: if the division leaves a remainder
        """
        divisor = self._coerce(divisor)
        if divisor is NotImplemented or divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient, remainder = dup_div(self.to_dup(), divisor.to_dup(), ZZ)
        remainder = IntPolynomial.from_dup(remainder)
        if remainder:
            raise NonZeroRemainder(self, divisor, remainder)
        return IntPolynomial.from_dup(quotient)

    # Calculus

    def __call__(self, x0):
        if self.is_zero():
            return 0
        return int(dup_eval(self.to_dup(), ZZ(x0), ZZ))

    def derivative(self):
        if self.degree() < 1:
            return ZERO
        return IntPolynomial.from_dup(dup_diff(self.to_dup(), 1, ZZ))

    # Text form

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree(), -1, -1):
            coeff = self.coefficients[power]
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self):
        return {
            'text': str(self),
            'coefficients': list(self.coefficients),
            'degree': self.degree(),
        }


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))
X_MINUS_2 = IntPolynomial((-2, 1))


def eval_and_derivative_at(poly, x0):
    """Return ``(p(x0), p'(x0))`` exactly."""
    return poly(x0), poly.derivative()(x0)
