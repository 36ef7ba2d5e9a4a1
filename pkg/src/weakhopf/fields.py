"""Exact scalars: arbitrary-precision rationals and prime fields.

Every algebra instance fixes one field; all arithmetic in the package is
exact.  Rationals are plain ``fractions.Fraction`` values.  Prime-field
elements are instances of a per-prime class created by :func:`GF`, so that
``GF(5)(2) + GF(5)(4)`` works with the usual operators and reduces mod 5.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .errors import FieldMismatch, ParseError


class PrimeElement:
    """Residue modulo a prime; subclassed per prime by :func:`GF`."""

    __slots__ = ("v",)
    p: int = 0

    def __init__(self, v):
        self.v = int(v) % self.p

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)(other)
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else type(self)(self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else type(self)(self.v - other.v)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else type(self)(other.v - self.v)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else type(self)(self.v * other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return type(self)(self.v * pow(other.v, -1, self.p))

    def __neg__(self):
        return type(self)(-self.v)

    def __pow__(self, n):
        return type(self)(pow(self.v, n, self.p) if n >= 0 else pow(pow(self.v, -1, self.p), -n, self.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == other % self.p
        return type(other) is type(self) and self.v == other.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return str(self.v)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@functools.cache
def GF(p: int):
    """Return the element class for the prime field with p elements."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    cls = type(f"GF({p})", (PrimeElement,), {"__slots__": ()})
    cls.p = p
    return cls


class Field:
    """Field descriptor: the rationals, or a prime field GF(p)."""

    __slots__ = ("kind", "p", "_elem")

    def __init__(self, kind, p=None):
        if kind not in ("rationals", "prime"):
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p
        self._elem = GF(p) if kind == "prime" else None

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def prime(cls, p):
        return cls("prime", p)

    def zero(self):
        return Fraction(0) if self._elem is None else self._elem(0)

    def one(self):
        return Fraction(1) if self._elem is None else self._elem(1)

    def from_int(self, n):
        return Fraction(n) if self._elem is None else self._elem(n)

    def __call__(self, n):
        return self.from_int(n)

    def parse(self, value):
        """Parse a serialized scalar: int, or a string like "3" or "-3/4"."""
        if self._elem is not None:
            if isinstance(value, int) or (isinstance(value, str) and value.lstrip("-").isdigit()):
                return self._elem(int(value))
            raise ParseError(f"bad GF({self.p}) scalar {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational scalar {value!r}") from exc
        raise ParseError(f"bad rational scalar {value!r}")

    def format(self, x):
        """Serialize a scalar (inverse of :meth:`parse`)."""
        return x.v if self._elem is not None else str(x)

    def elements(self):
        """Iterate all field elements (prime fields only)."""
        if self._elem is None:
            raise TypeError("cannot enumerate the elements of an infinite field")
        return (self._elem(v) for v in range(self.p))

    @property
    def order(self):
        return None if self._elem is None else self.p

    def contains(self, x):
        if self._elem is None:
            return isinstance(x, Fraction)
        return type(x) is self._elem

    def check_same(self, other):
        if self != other:
            raise FieldMismatch(f"{self} vs {other}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "rationals" else f"GF({self.p})"

    def to_json(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        return {"kind": "prime", "p": self.p}

    @classmethod
    def from_json(cls, d):
        try:
            kind = d["kind"]
        except (TypeError, KeyError) as exc:
            raise ParseError(f"bad field descriptor {d!r}") from exc
        if kind == "rationals":
            return cls.rationals()
        if kind == "prime":
            if "p" not in d or not _is_prime(d["p"]):
                raise ParseError(f"bad field descriptor {d!r}")
            return cls.prime(d["p"])
        raise ParseError(f"unknown field kind {kind!r}")



QQ = Field.rationals()
