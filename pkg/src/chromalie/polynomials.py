"""Exact univariate polynomial arithmetic over rationals.

Dense coefficient representation, constant term first.  No floating point
anywhere; everything is fractions.Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs) -> "QPolynomial":
        return cls(_trim(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls.of([c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def linear_coefficient(self) -> Fraction:
        return self.coefficient(1)

    @property
    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(_trim(
            self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(_trim(out))

    def scale(self, c) -> "QPolynomial":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return QPolynomial(tuple(a * c for a in self.coeffs))

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json_list(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json_list(cls, items: list[str]) -> "QPolynomial":
        return cls.of([Fraction(s) for s in items])


ZERO = QPolynomial(())
ONE = QPolynomial((Fraction(1),))
Q = QPolynomial((Fraction(0), Fraction(1)))  # the variable itself


def falling_binomial(offset: int, k: int) -> QPolynomial:
    """Binomial coefficient C(q + offset, k) as a degree-k polynomial in q."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p = ONE
    for j in range(k):
        p = p * QPolynomial.of([offset - j, 1])
    return p.scale(Fraction(1, factorial(k)))


def scaled_binomial(m: int, k: int) -> QPolynomial:
    """Binomial coefficient C(m*q, k) as a degree-k polynomial in q."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p = ONE
    for j in range(k):
        p = p * QPolynomial.of([-j, m])
    return p.scale(Fraction(1, factorial(k)))


def interpolate(points: list[tuple]) -> QPolynomial:
    """Lagrange interpolation through points with distinct abscissae."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("repeated abscissa")
    total = ZERO
    for i, (xi, yi) in enumerate(points):
        xi, yi = Fraction(xi), Fraction(yi)
        basis = ONE
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * QPolynomial.of([-xj, 1]).scale(Fraction(1, xi - xj))
        total = total + basis.scale(yi)
    return total
