r"""
Integer Laurent polynomials in one variable v.

Graded multiplicities live in Z[v, v^{-1}]: an exponent records the
degree shift of a composition factor.  Kazhdan-Lusztig tables are kept
internally as plain coefficient vectors in the classical variable q;
the translation q = v^{-2} (together with an overall power of v) is
applied only at the multiplicity boundary, and lands here.

The representation is a sorted tuple of (exponent, coefficient) pairs
with no zero coefficients, so equal polynomials are equal tuples and
the type is hashable.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple


class LaurentPolynomial:
    """Immutable integer Laurent polynomial in v.

    >>> p = LaurentPolynomial.monomial(1, -1) + LaurentPolynomial.monomial(1, 1)
    >>> str(p)
    'v^-1 + v'
    >>> str(p * p)
    'v^-2 + 2 + v^2'
    >>> (p * p).at_one()
    4
    """

    __slots__ = ('terms',)

    def __init__(self, terms: Iterable[Tuple[int, int]] = ()):
        acc: Dict[int, int] = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + c
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def _raw(cls, terms: tuple) -> 'LaurentPolynomial':
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> 'LaurentPolynomial':
        return cls._raw(())

    @classmethod
    def one(cls) -> 'LaurentPolynomial':
        return cls._raw(((0, 1),))

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> 'LaurentPolynomial':
        return cls._raw(((exponent, coeff),) if coeff else ())

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[int], vshift: int = 0) -> 'LaurentPolynomial':
        """v^vshift * p(v^-2) for p given by q-coefficients (c_0, c_1, ...).

        >>> str(LaurentPolynomial.from_q_coeffs((1, 1), vshift=4))
        'v^2 + v^4'
        """
        return cls((vshift - 2 * d, c) for d, c in enumerate(coeffs))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def at_one(self) -> int:
        """Total multiplicity: the sum of all coefficients."""
        return sum(c for _, c in self.terms)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self.terms)

    def exponents(self) -> tuple:
        return tuple(e for e, _ in self.terms)

    def shifted(self, k: int) -> 'LaurentPolynomial':
        """Multiplication by v^k."""
        return self._raw(tuple((e + k, c) for e, c in self.terms))

    def __add__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        return LaurentPolynomial(self.terms + other.terms)

    def __sub__(self, other: 'LaurentPolynomial') -> 'LaurentPolynomial':
        return LaurentPolynomial(
            self.terms + tuple((e, -c) for e, c in other.terms)
        )

    def __neg__(self) -> 'LaurentPolynomial':
        return self._raw(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other) -> 'LaurentPolynomial':
        if isinstance(other, int):
            return LaurentPolynomial((e, c * other) for e, c in self.terms)
        return LaurentPolynomial(
            (e1 + e2, c1 * c2)
            for e1, c1 in self.terms
            for e2, c2 in other.terms
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPolynomial) and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                power = 'v' if e == 1 else f'v^{e}'
                body = power if abs(c) == 1 else f'{abs(c)}*{power}'
            sign = '-' if c < 0 else '+'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            out += f' {sign} {body}'
        return out

    def __repr__(self) -> str:
        return f'LaurentPolynomial({self.terms!r})'
