"""
Integer Laurent polynomials in one variable t.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Union

Number = Union[int, "LaurentPolynomial"]


class LaurentPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] = None):
        self._terms: Dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], lowest: int = 0) -> "LaurentPolynomial":
        """Coefficients listed lowest degree first, starting at t^lowest."""
        return cls({lowest + i: c for i, c in enumerate(coefficients)})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def coefficients(self) -> List[int]:
        """Dense coefficient list from min_degree to max_degree."""
        if not self._terms:
            return [0]
        return [self._terms.get(e, 0) for e in range(self.min_degree, self.max_degree + 1)]

    def _coerce(self, other: Number) -> "LaurentPolynomial":
        return other if isinstance(other, LaurentPolynomial) else LaurentPolynomial.constant(other)

    def __add__(self, other: Number) -> "LaurentPolynomial":
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Number) -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Number) -> "LaurentPolynomial":
        other = self._coerce(other)
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, value: int):
        """Value at an integer point; negative exponents give a Fraction."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(value) ** e
        return int(total) if total.denominator == 1 else total

    def evaluate_at_minus_one(self) -> int:
        return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())

    def mirror(self) -> "LaurentPolynomial":
        """Substitute t -> 1/t."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def normalize(self) -> "LaurentPolynomial":
        """Scale by +-t^k so the lowest exponent is 0 and the constant term is positive."""
        if not self._terms:
            return self
        shifted = self.shift(-self.min_degree)
        return -shifted if shifted._terms[0] < 0 else shifted

    def is_symmetric(self) -> bool:
        """True when p(t) = +-t^k p(1/t)."""
        coefficients = self.coefficients()
        return coefficients == coefficients[::-1] or coefficients == [-c for c in coefficients[::-1]]

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
