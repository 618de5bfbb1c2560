"""Exact coefficient arithmetic: prime fields and the rationals.

Field elements are plain Python values: ints in [0, p) for F_p and
fractions.Fraction for the rationals.  A field object supplies the
operations.  Keeping elements unboxed keeps the Groebner inner loops
cheap; canonical form is enforced by the field object, so equality of
elements is plain ``==``.

>>> F = PrimeField(7)
>>> F.add(5, 4)
2
>>> F.inv(3)
5
>>> Q = RationalField()
>>> Q.div(Q.one, Q.normalize(3))
Fraction(1, 3)
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class FieldError(ArithmeticError):
    pass


class PrimeField:
    """F_p with elements stored as ints in [0, p)."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % d == 0 for d in range(2, min(p, 1000))) and p not in (2, 3):
            # cheap trial division screen; full primality for small p
            if any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                raise FieldError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    @property
    def char(self) -> int:
        return self.p

    def normalize(self, a) -> int:
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("division by zero in prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Q with elements stored as fractions.Fraction."""

    __slots__ = ("zero", "one")

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @property
    def char(self) -> int:
        return 0

    def normalize(self, a) -> Fraction:
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise FieldError("division by zero in rational field")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise FieldError("division by zero in rational field")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "RationalField()"


def field_from_spec(kind: str, p: int | None = None):
    """Build a field from a problem-file spec: 'prime' (with p) or 'rational'."""
    if kind == "prime":
        return PrimeField(p if p is not None else DEFAULT_PRIME)
    if kind == "rational":
        return RationalField()
    raise FieldError(f"unknown field kind {kind!r}")
