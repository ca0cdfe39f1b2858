"""Exact Gaussian rational numbers, the coefficient field Q(i).

Every number is a pair of arbitrary-precision rationals (re, im) kept in
lowest terms by fractions.Fraction. There is no floating-point path:
classification verdicts hinge on exact zero tests, so all arithmetic is
field arithmetic in Q(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RationalLike = int | Fraction


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An element re + im*I of Q(i); immutable and hashable."""

    re: Fraction
    im: Fraction

    def __add__(self, other: GaussianRational) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussianRational) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: GaussianRational) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        n2 = other.re * other.re + other.im * other.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n2,
            (self.im * other.re - self.re * other.im) / n2,
        )

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def conj(self) -> GaussianRational:
        """Complex conjugate; an involutive field automorphism."""
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def inverse(self) -> GaussianRational:
        return GR_ONE / self

    def __str__(self) -> str:
        # Renders in the expression grammar: "I" binds like a variable,
        # "*" and "/" are left-associative, so 3/4*I means (3/4)*I.
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "I"
            if self.im == -1:
                return "-I"
            return f"{self.im}*I"
        if self.im > 0:
            imp = "I" if self.im == 1 else f"{self.im}*I"
            return f"{self.re} + {imp}"
        imp = "I" if self.im == -1 else f"{-self.im}*I"
        return f"{self.re} - {imp}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def gr(re: RationalLike, im: RationalLike = 0) -> GaussianRational:
    """Convenience constructor from ints or Fractions."""
    return GaussianRational(Fraction(re), Fraction(im))


GR_ZERO = gr(0)
GR_ONE = gr(1)
GR_I = gr(0, 1)
