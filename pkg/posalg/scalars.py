# posalg/scalars.py

"""
Exact scalars.

Rationals are ``fractions.Fraction`` values. Elements of the cyclotomic
field ℚ(ζ_m) are stored as coefficient vectors of length φ(m) in the power
basis 1, ζ, ..., ζ^(φ(m)-1), reduced modulo the m-th cyclotomic polynomial,
so equal field elements of the same order have equal representations.
"""

import re
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import Poly, QQ, ZZ, Rational as SympyRational, Symbol, divisors, invert, totient

from .config import get_cyclotomic_max_order
from .exceptions import CyclotomicZeroDivisionError, SizeCapError

logger = logging.getLogger('posalg.scalars')

_x = Symbol('x')
_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text):
    """
    Parse a rational written as "p/q" or "p"

    Args:
        text (str): Rational in base 10

    Returns:
        Fraction: Value in lowest terms

    Raises:
        ValueError: If the text is not a rational or the denominator is zero
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational: {text!r}")
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value):
    """
    Format a rational as "p/q", or "p" when the denominator is 1

    Args:
        value (Fraction or int): Value to format

    Returns:
        str: Canonical text form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value):
    value = Fraction(value)
    return SympyRational(value.numerator, value.denominator)


def from_sympy(value):
    value = SympyRational(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """
    Compute the m-th cyclotomic polynomial

    Divides x^m - 1 exactly by Φ_d for every proper divisor d of m.

    Args:
        m (int): Positive order

    Returns:
        Poly: Φ_m with integer coefficients

    Raises:
        ValueError: If m < 1
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = Poly(_x ** m - 1, _x, domain=ZZ)
    for d in divisors(m)[:-1]:
        poly = poly.exquo(cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def _modulus(m):
    # Φ_m coefficients, lowest degree first
    return tuple(int(c) for c in reversed(cyclotomic_polynomial(m).all_coeffs()))


def _reduce(coeffs, m):
    modulus = _modulus(m)
    degree = len(modulus) - 1
    work = [Fraction(c) for c in coeffs]
    for top in range(len(work) - 1, degree - 1, -1):
        lead = work[top]
        if lead == 0:
            continue
        shift = top - degree
        for i, c in enumerate(modulus):
            if c:
                work[shift + i] -= lead * c
    work = work[:degree] + [Fraction(0)] * max(0, degree - len(work))
    return tuple(work[:degree])


def _check_order(m):
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    cap = get_cyclotomic_max_order()
    if m > cap:
        raise SizeCapError("cyclotomic order", m, cap)


def _lcm(a, b):
    return a * b // gcd(a, b)


class Cyclotomic:
    """An element of ℚ(ζ_m), immutable"""

    __slots__ = ('order', 'coeffs')

    def __init__(self, order, coeffs):
        """
        Initialize from a coefficient vector in powers of ζ_m

        Args:
            order (int): m
            coeffs (iterable): Rational coefficients of 1, ζ, ζ², ...; any length,
                reduced modulo Φ_m on construction
        """
        _check_order(order)
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'coeffs', _reduce(list(coeffs), order))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def from_rational(cls, value, order=1):
        return cls(order, [Fraction(value)])

    @classmethod
    def _coerce_operand(cls, other, order):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.from_rational(other, order)
        return None

    def coerce(self, order):
        """
        Re-express this element in ℚ(ζ_order)

        Args:
            order (int): A multiple of the current order

        Returns:
            Cyclotomic: Equal element of the larger field
        """
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot coerce order {self.order} into order {order}")
        step = order // self.order
        spread = [Fraction(0)] * (step * len(self.coeffs) or 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return Cyclotomic(order, spread)

    def _aligned(self, other):
        common = _lcm(self.order, other.order)
        return self.coerce(common), other.coerce(common), common

    def __add__(self, other):
        other = self._coerce_operand(other, self.order)
        if other is None:
            return NotImplemented
        a, b, m = self._aligned(other)
        return Cyclotomic(m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce_operand(other, self.order)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b, m = self._aligned(other)
        product = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    product[i + j] += x * y
        return Cyclotomic(m, product)

    __rmul__ = __mul__

    def inverse(self):
        """
        Multiplicative inverse

        Raises:
            CyclotomicZeroDivisionError: If this element is zero
        """
        if self.is_zero():
            raise CyclotomicZeroDivisionError()
        rational = self.to_rational()
        if rational is not None:
            return Cyclotomic.from_rational(1 / rational, self.order)
        numerator = Poly(list(reversed([to_sympy(c) for c in self.coeffs])), _x, domain=QQ)
        modulus = cyclotomic_polynomial(self.order).set_domain(QQ)
        inv = invert(numerator, modulus)
        return Cyclotomic(self.order, [from_sympy(c) for c in reversed(inv.all_coeffs())])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CyclotomicZeroDivisionError()
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.from_rational(other, self.order) * self.inverse()

    def conjugate(self):
        """Complex conjugate, ζ ↦ ζ^(-1)"""
        m = self.order
        spread = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            spread[(-k) % m] += c
        return Cyclotomic(m, spread)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def to_rational(self):
        """
        Rational value of this element

        Returns:
            Fraction or None: The value when it lies in ℚ, else None
        """
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        other = self._coerce_operand(other, self.order)
        if other is None:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        value = self.to_rational()
        if value is not None:
            return hash(value)
        # equal elements may live at different orders
        return hash('cyclotomic')

    def to_dict(self):
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{format_rational(c)}*z{self.order}^{k}" if k else format_rational(c))
        return f"Cyclotomic({' + '.join(terms) or '0'})"


def euler_phi(m):
    return int(totient(m))


def root_of_unity(m, k):
    """
    ζ_m^k as a reduced element of order m

    Args:
        m (int): Order of the root
        k (int): Exponent, reduced mod m

    Returns:
        Cyclotomic: ζ_m^(k mod m)
    """
    _check_order(m)
    spread = [Fraction(0)] * m
    spread[k % m] = Fraction(1)
    return Cyclotomic(m, spread)


def cyc_arith(a, b, op):
    """
    Exact arithmetic in ℚ(ζ_lcm)

    Args:
        a (Cyclotomic): Left operand
        b (Cyclotomic or None): Right operand, ignored for 'neg' and 'inv'
        op (str): One of 'add', 'mul', 'neg', 'inv'

    Returns:
        Cyclotomic: Result in the common field
    """
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'neg':
        return -a
    if op == 'inv':
        return a.inverse()
    raise ValueError(f"unknown cyclotomic operation {op!r}")


def cyc_to_rational(a):
    """Rational value of a, or None when a is not rational"""
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    return a.to_rational()


def format_scalar(value):
    """Serialized text of a rational or cyclotomic, used as a total order key"""
    if isinstance(value, Cyclotomic):
        rational = value.to_rational()
        if rational is not None:
            return format_rational(rational)
        return f"cyc({value.order};{','.join(format_rational(c) for c in value.coeffs)})"
    return format_rational(value)
