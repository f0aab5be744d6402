"""Exact scalars in cyclotomic fields Q(ζ_n).

A scalar is a polynomial in ζ_n with rational coefficients, reduced modulo
the n-th cyclotomic polynomial; the field arithmetic is sympy's ``ANP``.
Every scalar is stored at its minimal conductor, the smallest n (never
≡ 2 mod 4) whose field holds the value, so equal scalars have identical
``(conductor, coeffs)``. Rational values sit at conductor 1 and never pay
for polynomial arithmetic.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Optional, Sequence, Union

from sympy import QQ, Matrix, Rational, Symbol, cyclotomic_poly, divisors, totient
from sympy.polys.polyclasses import ANP

from hopfgalois.core.exceptions import ScalarParseError

_Z = Symbol("z")

_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?P<mul>\*)?(?P<z>z(?:\^(?P<exp>\d+))?)?$"
)

ScalarLike = Union["Scalar", int, Fraction]
Coeffs = tuple[Fraction, ...]


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = cyclotomic_poly(n, _Z, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _modulus(n: int) -> tuple:
    """Φ_n over QQ, leading coefficient first (the ANP convention)."""
    return tuple(QQ(c) for c in reversed(cyclotomic_coefficients(n)))


def _to_anp(coeffs: Sequence[Fraction], n: int) -> ANP:
    """Element of QQ[z]/Φ_n from a constant-first list of any length."""
    mod = list(_modulus(n))
    element = ANP([QQ(c.numerator, c.denominator) for c in reversed(coeffs)], mod, QQ)
    if len(coeffs) >= len(mod):
        # ANP only reduces inside products
        element = element * ANP.one(mod, QQ)
    return element


def _from_anp(element: ANP) -> Coeffs:
    return tuple(Fraction(int(c.numerator), int(c.denominator)) for c in reversed(element.to_list()))


def _reduce(coeffs: Sequence[Fraction], n: int) -> Coeffs:
    return _from_anp(_to_anp(coeffs, n))


def _padded(coeffs: Coeffs, length: int) -> list[Fraction]:
    return list(coeffs) + [Fraction(0)] * (length - len(coeffs))


@lru_cache(maxsize=None)
def _embedding(m: int, n: int) -> Matrix:
    """Columns ζ_m^k, k < φ(m), written in the power basis of Q(ζ_n)."""
    step, degree = n // m, int(totient(n))
    columns = []
    for k in range(int(totient(m))):
        image = _reduce([Fraction(0)] * (k * step) + [Fraction(1)], n)
        columns.append([Rational(c.numerator, c.denominator) for c in _padded(image, degree)])
    return Matrix(columns).T


def _descend(coeffs: Coeffs, m: int, n: int) -> Optional[Coeffs]:
    """Coordinates over Q(ζ_m) of a value of Q(ζ_n), or None when it is not in the subfield."""
    target = Matrix([Rational(c.numerator, c.denominator) for c in _padded(coeffs, int(totient(n)))])
    try:
        solution, _ = _embedding(m, n).gauss_jordan_solve(target)
    except ValueError:
        return None
    values = [Fraction(int(v.p), int(v.q)) for v in solution]
    while values and not values[-1]:
        values.pop()
    return tuple(values)


@lru_cache(maxsize=65536)
def _canonical(n: int, coeffs: Coeffs) -> tuple[int, Coeffs]:
    """Move a reduced value of Q(ζ_n) to its minimal conductor."""
    if len(coeffs) <= 1:
        return 1, coeffs
    # Q(ζ_2k) = Q(ζ_k) for odd k; those conductors are never canonical
    for m in divisors(n):
        if 1 < m < n and m % 4 != 2:
            found = _descend(coeffs, m, n)
            if found is not None:
                return m, found
    return n, coeffs


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """Exact element of Q(ζ_n).

    Instances are immutable; build them with :meth:`rational`, :meth:`zeta`,
    :meth:`from_coeffs`, :meth:`parse` or :meth:`coerce`.
    """

    __slots__ = ("conductor", "coeffs")

    conductor: int
    coeffs: tuple[Fraction, ...]

    # Construction

    @classmethod
    def _raw(cls, conductor: int, coeffs: Coeffs) -> "Scalar":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def _make(cls, conductor: int, coeffs: Coeffs) -> "Scalar":
        """Wrap coefficients already reduced modulo Φ_conductor."""
        return cls._raw(*_canonical(conductor, coeffs))

    @classmethod
    def rational(cls, value: Union[int, Fraction]) -> "Scalar":
        """Scalar with a rational value."""
        q = Fraction(value)
        return cls._make(1, (q,) if q else ())

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, conductor: int = 1) -> "Scalar":
        """Scalar Σ c_k ζ_n^k, reduced to canonical form."""
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        if conductor == 1:
            return cls.rational(sum((Fraction(c) for c in coeffs), Fraction(0)))
        return cls._make(conductor, _reduce([Fraction(c) for c in coeffs], conductor))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Scalar":
        """The power ζ_n^k of the primitive root exp(2πi/n)."""
        k %= n
        return cls.from_coeffs([0] * k + [1], n)

    @classmethod
    def coerce(cls, value: Union["Scalar", int, Fraction, str]) -> "Scalar":
        """Turn ints, Fractions and scalar strings into a Scalar."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def parse(cls, text: str, conductor: int = 1) -> "Scalar":
        """Parse ``"p/q"`` or ``"p/q*z^k + ..."`` where ``z`` is ζ_conductor.

        Raises:
            ScalarParseError: If the string is not an exact scalar
        """
        s = text.replace(" ", "")
        if not s:
            raise ScalarParseError(f"empty scalar {text!r}")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ScalarParseError(f"malformed scalar {text!r}")

        coeffs = [Fraction(0)] * max(conductor, 1)
        for term in terms:
            sign = -1 if term[0] == "-" else 1
            body = term[1:] if term[0] in "+-" else term
            match = _TERM.match(body)
            if (
                match is None
                or (match["coef"] is None and match["z"] is None)
                or (match["mul"] and not (match["coef"] and match["z"]))
            ):
                raise ScalarParseError(f"malformed term {term!r} in scalar {text!r}")
            try:
                coef = Fraction(match["coef"]) if match["coef"] else Fraction(1)
            except ZeroDivisionError as e:
                raise ScalarParseError(f"zero denominator in scalar {text!r}") from e
            exponent = int(match["exp"] or 1) if match["z"] else 0
            coeffs[exponent % conductor] += sign * coef
        return cls.from_coeffs(coeffs, conductor)

    # Inspection

    def is_rational(self) -> bool:
        """Whether the value lies in Q."""
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        """The rational value.

        Raises:
            ValueError: If the scalar is not rational
        """
        if self.conductor != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def lift(self, conductor: int) -> list[Fraction]:
        """Coefficient list of this value in Q(ζ_conductor), constant term first."""
        if conductor % self.conductor:
            raise ValueError(
                f"Q(ζ_{self.conductor}) is not a subfield of Q(ζ_{conductor})"
            )
        if conductor == self.conductor:
            return list(self.coeffs)
        if self.conductor == 1:
            return list(self.coeffs)
        step = conductor // self.conductor
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return list(_reduce(spread, conductor))

    def to_string(self, conductor: int | None = None) -> str:
        """Render in the file syntax, as a polynomial in ζ_conductor."""
        n = conductor or self.conductor
        coeffs = self.lift(n)
        if len(coeffs) <= 1:
            return _format_rational(coeffs[0] if coeffs else Fraction(0))
        parts: list[str] = []
        for k, c in enumerate(coeffs):
            if not c:
                continue
            magnitude = abs(c)
            power = "z" if k == 1 else f"z^{k}"
            if k == 0:
                text = _format_rational(magnitude)
            elif magnitude == 1:
                text = power
            else:
                text = f"{_format_rational(magnitude)}*{power}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(("+ " if c > 0 else "- ") + text)
        return " ".join(parts)

    # Arithmetic

    def _rational_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return Scalar.rational(self._rational_value() + other._rational_value())
        n = lcm(self.conductor, other.conductor)
        return Scalar._make(n, _from_anp(_to_anp(self.lift(n), n) + _to_anp(other.lift(n), n)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return Scalar.rational(self._rational_value() * other._rational_value())
        if not self.coeffs or not other.coeffs:
            return ZERO
        if other.conductor == 1:
            return Scalar._raw(self.conductor, tuple(c * other._rational_value() for c in self.coeffs))
        if self.conductor == 1:
            return other * self
        n = lcm(self.conductor, other.conductor)
        return Scalar._make(n, _from_anp(_to_anp(self.lift(n), n) * _to_anp(other.lift(n), n)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse.

        Raises:
            ZeroDivisionError: If the scalar is zero
        """
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.conductor == 1:
            return Scalar.rational(1 / self.coeffs[0])
        n = self.conductor
        return Scalar._make(n, _from_anp(_to_anp(self.coeffs, n) ** -1))

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> "Scalar":
        """Complex conjugate (ζ ↦ ζ⁻¹)."""
        if self.conductor == 1:
            return self
        n = self.conductor
        coeffs = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            coeffs[(n - k) % n] += c
        return Scalar._make(n, _reduce(coeffs, n))

    # Comparison

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        other = _as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self.conductor == 1:
            return hash(self._rational_value())
        return hash((self.conductor, self.coeffs))

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        if self.conductor == 1:
            return f"Scalar('{self}')"
        return f"Scalar('{self}', conductor={self.conductor})"


def _as_scalar(value: object):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.rational(value)
    return NotImplemented


ZERO = Scalar.rational(0)
ONE = Scalar.rational(1)
