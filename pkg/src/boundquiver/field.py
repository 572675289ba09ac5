"""Exact scalar fields: the rationals and prime fields.

Scalars are plain Python values: :class:`fractions.Fraction` over the
rationals and ``int`` in ``range(p)`` over ``GF(p)``.  A field object only
supplies the arithmetic, so elements stay cheap to hash and compare.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

Scalar = Union[int, Fraction]


class FieldError(ValueError):
    """Raised for invalid field construction or undefined scalar operations."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface; see :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int = 0

    def zero(self) -> Scalar:
        raise NotImplementedError

    def one(self) -> Scalar:
        raise NotImplementedError

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.add(a, self.neg(b))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def is_finite(self) -> bool:
        return self.characteristic != 0

    def format(self, a: Scalar) -> str:
        return str(a)


class Rationals(Field):
    characteristic = 0

    def __repr__(self) -> str:
        return "Rationals()"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, float):
            raise FieldError("floating point scalars are not accepted")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


class PrimeField(Field):
    """``GF(p)`` with representatives ``0..p-1``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        self.p = p
        self.characteristic = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        if isinstance(value, float):
            raise FieldError("floating point scalars are not accepted")
        q = Fraction(value)
        if q.denominator % self.p == 0:
            raise FieldError(
                f"coefficient {q} is undefined in characteristic {self.p}"
            )
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def format(self, a) -> str:
        return str(a)


def field_from_spec(spec: str) -> Field:
    """Build a field from ``"rational"`` or ``"prime P"``."""
    parts = spec.split()
    if parts == ["rational"]:
        return Rationals()
    if len(parts) == 2 and parts[0] == "prime":
        try:
            p = int(parts[1])
        except ValueError:
            raise FieldError(f"bad prime {parts[1]!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {spec!r}")


def field_spec(field: Field) -> str:
    if isinstance(field, PrimeField):
        return f"prime {field.p}"
    return "rational"
