"""Base fields: the rationals and prime fields of odd characteristic.

Field elements are plain Python values -- ``gmpy2.mpq`` for ``Q`` and
``int`` in ``[0, p)`` for ``F_p`` -- and the field object owns the
arithmetic that is not already correct on those values (reduction,
inversion, square roots, printing).
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpq
from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import BadModulus, DivisionByZero, ParseError

# scalar types accepted wherever a field element is expected
RATIONAL_TYPES = (int, Fraction, type(mpq(0)))


class Field:
    """Common interface; see :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int

    def elem(self, value):
        raise NotImplementedError

    def reduce(self, value):
        """Canonicalize the result of ``+``, ``-`` or ``*`` on elements."""
        return value

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def sqrt(self, value):
        raise NotImplementedError

    def is_negative(self, value) -> bool:
        return False

    def format(self, value) -> str:
        raise NotImplementedError

    @property
    def config(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"Field({self.config!r})"


class Rationals(Field):
    characteristic = 0

    def elem(self, value):
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def inv(self, value):
        if value == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / mpq(value)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0")
        return mpq(a) / b

    def sqrt(self, value):
        value = self.elem(value)
        if value < 0:
            return None
        num, den = value.numerator, value.denominator
        if gmpy2.is_square(num) and gmpy2.is_square(den):
            return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
        return None

    def is_negative(self, value) -> bool:
        return value < 0

    def format(self, value) -> str:
        value = self.elem(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    @property
    def config(self) -> str:
        return "q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")


class PrimeField(Field):
    def __init__(self, p: int):
        if p == 2:
            raise BadModulus("characteristic 2 is not supported")
        if p < 2 or not isprime(p):
            raise BadModulus(f"{p} is not a prime")
        self.p = p
        self.characteristic = p

    def elem(self, value) -> int:
        if not isinstance(value, int):
            if value.denominator % self.p == 0:
                raise BadModulus(f"denominator {value.denominator} vanishes mod {self.p}")
            return int(value.numerator) * pow(int(value.denominator), -1, self.p) % self.p
        return int(value) % self.p

    def reduce(self, value) -> int:
        return value % self.p

    def inv(self, value) -> int:
        if value % self.p == 0:
            raise DivisionByZero("inverse of 0")
        return pow(value, -1, self.p)

    def sqrt(self, value) -> int | None:
        value %= self.p
        if value == 0:
            return 0
        # Euler's criterion
        if pow(value, (self.p - 1) // 2, self.p) != 1:
            return None
        return min(sqrt_mod(value, self.p, all_roots=True))

    def format(self, value) -> str:
        return str(value % self.p)

    @property
    def config(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = Rationals()


def field_from_config(text: str) -> Field:
    """Parse ``"q"`` or ``"fp:<p>"``."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise BadModulus(f"bad modulus in field config {text!r}") from None
        return PrimeField(p)
    raise ParseError(f"unknown field config {text!r}; expected 'q' or 'fp:<p>'")


def square_in_field(field: Field, c):
    """Square root of ``c`` in ``field`` or ``None``.

    Over Q the positive root is returned, over F_p the least residue.
    """
    return field.sqrt(c)
