""" Sparse Laurent polynomials in one variable u with integer coefficients. """
import fractions
import typing

import attr

from current_chars.exceptions import ArgumentError


def _clean_terms(terms) -> typing.Tuple[typing.Tuple[int, int], ...]:
    """ Normal form: sorted (exponent, coefficient) pairs, zeros dropped. """
    if isinstance(terms, dict):
        items = terms.items()
    else:
        items = terms

    collected = {}
    for exp, coeff in items:
        if not isinstance(exp, int) or not isinstance(coeff, int):
            raise ArgumentError(
                f'Exponents and coefficients must be integers, got: ({exp!r}, {coeff!r})'
            )
        collected[exp] = collected.get(exp, 0) + coeff

    return tuple(sorted((e, c) for e, c in collected.items() if c != 0))


@attr.s(frozen=True, slots=True, repr=False)
class LaurentPolynomial:
    """
    Element of Z[u, u^-1] stored as a sorted tuple of (exponent, coefficient)
    pairs with no zero coefficient. Python integers give arbitrary precision.
    """
    terms = attr.ib(converter=_clean_terms, factory=tuple)

    @classmethod
    def monomial(cls, exp: int, coeff: int=1):
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int):
        return cls({0: value})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @property
    def coefficients(self) -> typing.Dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> typing.Optional[int]:
        return self.terms[-1][0] if self.terms else None

    @property
    def low_degree(self) -> typing.Optional[int]:
        return self.terms[0][0] if self.terms else None

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, exp: int) -> int:
        return self.coefficients.get(exp, 0)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        product = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ArgumentError(f'Only non-negative integer powers are supported, got: {power!r}')
        result = LaurentPolynomial.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> 'LaurentPolynomial':
        """ Multiply by u^k. """
        return LaurentPolynomial(tuple((e + k, c) for e, c in self.terms))

    def invert(self) -> 'LaurentPolynomial':
        """ Substitute u -> u^-1. """
        return LaurentPolynomial(tuple((-e, c) for e, c in self.terms))

    def truncate(self, max_degree: int) -> 'LaurentPolynomial':
        """ Drop every term of degree above `max_degree`. """
        return LaurentPolynomial(tuple((e, c) for e, c in self.terms if e <= max_degree))

    def evaluate(self, value):
        """ Exact evaluation; negative exponents give a `fractions.Fraction`. """
        total = fractions.Fraction(0)
        for exp, coeff in self.terms:
            total += coeff * fractions.Fraction(value) ** exp
        return int(total) if total.denominator == 1 else total

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e, _ in self.terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def to_json(self) -> typing.Dict[str, int]:
        return {str(e): c for e, c in self.terms}

    @classmethod
    def from_json(cls, document: typing.Dict[str, int]):
        try:
            return cls({int(e): c for e, c in document.items()})
        except (TypeError, ValueError, AttributeError) as error:
            raise ArgumentError(f'Malformed polynomial document: {document!r}. {error}')

    def __str__(self):
        if not self.terms:
            return '0'

        pieces = []
        for exp, coeff in self.terms:
            if exp == 0:
                body = str(abs(coeff))
            else:
                power = 'u' if exp == 1 else f'u^{exp}'
                body = power if abs(coeff) == 1 else f'{abs(coeff)}*{power}'
            sign = '-' if coeff < 0 else '+'
            pieces.append((sign, body))

        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def __repr__(self):
        return f'LaurentPolynomial({str(self)!r})'


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return LaurentPolynomial.constant(value)
    return NotImplemented


def q_integer(i: int) -> LaurentPolynomial:
    """ [i]_u = 1 + u + ... + u^(i-1). """
    return LaurentPolynomial({e: 1 for e in range(i)})


def q_factorial(m: int) -> LaurentPolynomial:
    """ [m]_u! = [1]_u [2]_u ... [m]_u, the Hilbert series of the coinvariant ring. """
    result = LaurentPolynomial.one()
    for i in range(1, m + 1):
        result = result * q_integer(i)
    return result


def invariant_hilbert_series(m: int, max_degree: int) -> LaurentPolynomial:
    """
    Truncation at `max_degree` of prod_{i=1}^m (1 - u^i)^-1, the Hilbert
    series of the ring of symmetric polynomials in m variables. The
    coefficient of u^d counts partitions of d into parts of size at most m.
    """
    if max_degree < 0:
        raise ArgumentError(f'Truncation degree must be non-negative, got: {max_degree}')

    counts = [1] + [0] * max_degree
    for part in range(1, m + 1):
        for d in range(part, max_degree + 1):
            counts[d] += counts[d - part]
    return LaurentPolynomial({d: c for d, c in enumerate(counts)})
