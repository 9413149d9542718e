"""
Laurent polynomials p(z) = sum_j a_j z^{n_j} with complex coefficients and
possibly negative exponents.

The representation follows the {exponent: coefficient} dictionary convention,
frozen into a sorted tuple of terms so that polynomials are hashable and can key
the extremum cache.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Tuple

import numpy as np

from src.exceptions import PolynomialLiteralError

_NUMBER = r"\d+(?:\.\d*)?(?:[eE][+-]?\d+)?"
_COEFFICIENT_REGEXP = re.compile(
    rf"^(?P<re>[+-]?{_NUMBER})?(?:(?P<im>[+-](?:{_NUMBER})?)i)?$"
)


class LaurentPolynomial:
    """Immutable Laurent polynomial; exact zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, complex] | Iterable[Tuple[int, complex]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        combined: dict[int, complex] = {}
        for exponent, coefficient in items:
            key = int(exponent)
            combined[key] = combined.get(key, 0j) + complex(coefficient)
        self._terms: Tuple[Tuple[int, complex], ...] = tuple(
            (n, a) for n, a in sorted(combined.items()) if a != 0
        )

    @classmethod
    def zero(cls) -> LaurentPolynomial:
        return cls()

    @classmethod
    def from_widths(cls, widths: Iterable[int]) -> LaurentPolynomial:
        """sum_j z^{n_j}, the polynomial of a frame set generator."""
        return cls((n, 1) for n in widths)

    @property
    def terms(self) -> Tuple[Tuple[int, complex], ...]:
        return self._terms

    @property
    def exponents(self) -> np.ndarray:
        return np.array([n for n, _ in self._terms], dtype=np.int64)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([a for _, a in self._terms], dtype=np.complex128)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def n_min(self) -> int:
        return self._terms[0][0]

    @property
    def n_max(self) -> int:
        return self._terms[-1][0]

    @property
    def span(self) -> int:
        """n_max - n_min, the degree of the trigonometric polynomial |p(e^{it})|^2."""
        return 0 if self.is_zero else self.n_max - self.n_min

    @property
    def l1_norm(self) -> float:
        """sum_j |a_j|, the natural scale of p on the unit circle."""
        return float(sum(abs(a) for _, a in self._terms))

    @property
    def has_integer_coefficients(self) -> bool:
        return all(
            a.imag == 0 and float(a.real).is_integer() and abs(a.real) < 2**53
            for _, a in self._terms
        )

    def shifted(self, k: int) -> LaurentPolynomial:
        """z^k * p(z)."""
        return LaurentPolynomial((n + k, a) for n, a in self._terms)

    def normalized(self) -> LaurentPolynomial:
        """The ordinary polynomial z^{-n_min} p(z) (lowest exponent zero)."""
        if self.is_zero or self.n_min == 0:
            return self
        return self.shifted(-self.n_min)

    def ordinary_coefficients(self) -> np.ndarray:
        """Ascending dense coefficients of z^{-n_min} p(z)."""
        dense = np.zeros(self.span + 1, dtype=np.complex128)
        for n, a in self._terms:
            dense[n - self.n_min] = a
        return dense

    def exact_value_at(self, z: int) -> int:
        """p(1) or p(-1) in exact integer arithmetic (integer coefficients only)."""
        if z not in (1, -1):
            raise ValueError("exact evaluation is only defined at z = 1 and z = -1")
        # z^{-n} == z^{n} for z = +-1
        return sum(int(a.real) * z ** abs(n) for n, a in self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self._terms)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for n, a in self._terms:
            coefficient = _format_coefficient(a)
            if n == 0:
                parts.append(coefficient)
            elif n == 1:
                parts.append(f"{coefficient}*z")
            else:
                parts.append(f"{coefficient}*z^{n}")
        return " + ".join(parts)


def _format_coefficient(a: complex) -> str:
    if a.imag == 0:
        real = a.real
        return str(int(real)) if real.is_integer() else repr(real)
    return f"({a.real!r}{a.imag:+}i)"


def eval_circle(p: LaurentPolynomial, theta: float) -> complex:
    """sum_j a_j e^{i n_j theta} by direct summation."""
    if p.is_zero:
        return 0j
    return complex(np.sum(p.coefficients * np.exp(1j * p.exponents * theta)))


def eval_circle_many(p: LaurentPolynomial, thetas: np.ndarray) -> np.ndarray:
    """Vectorised eval_circle over an array of angles."""
    thetas = np.asarray(thetas, dtype=np.float64)
    if p.is_zero:
        return np.zeros(thetas.shape, dtype=np.complex128)
    phases = np.exp(1j * np.multiply.outer(thetas, p.exponents))
    return phases @ p.coefficients


def reverse(p: LaurentPolynomial) -> LaurentPolynomial:
    """sum_j conj(a_j) z^{n_max + n_min - n_j}; same modulus as p on the unit circle."""
    if p.is_zero:
        return p
    total = p.n_max + p.n_min
    return LaurentPolynomial((total - n, a.conjugate()) for n, a in p.terms)


def parse_coefficient(text: str) -> complex:
    match = _COEFFICIENT_REGEXP.match(text.strip())
    if not match or not (match.group("re") or match.group("im")):
        raise PolynomialLiteralError(f"malformed coefficient '{text}'", coefficient=text)
    real = float(match.group("re")) if match.group("re") else 0.0
    imag = 0.0
    if match.group("im"):
        sign_and_value = match.group("im")
        imag = float(sign_and_value + "1") if sign_and_value in ("+", "-") else float(sign_and_value)
    return complex(real, imag)


def parse_polynomial(text: str) -> LaurentPolynomial:
    """Parse "coeff:exponent" pairs, e.g. "4:0,3:1,2:3" or "1+2i:-1,3:2"."""
    terms = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        coefficient, separator, exponent = chunk.rpartition(":")
        if not separator:
            raise PolynomialLiteralError(f"missing ':' in term '{chunk}'", term=chunk)
        try:
            n = int(exponent.strip())
        except ValueError:
            raise PolynomialLiteralError(f"exponent must be an integer in term '{chunk}'", term=chunk)
        terms.append((n, parse_coefficient(coefficient)))
    if not terms:
        raise PolynomialLiteralError("empty polynomial literal", literal=text)
    return LaurentPolynomial(terms)


def format_polynomial(p: LaurentPolynomial) -> str:
    """Inverse of parse_polynomial for display and report echo."""
    return ",".join(f"{_literal_coefficient(a)}:{n}" for n, a in p.terms)


def _literal_coefficient(a: complex) -> str:
    real = str(int(a.real)) if float(a.real).is_integer() else repr(a.real)
    if a.imag == 0:
        return real
    imag = repr(abs(a.imag))
    return f"{real}{'-' if a.imag < 0 else '+'}{imag}i"
