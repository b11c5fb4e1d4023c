"""Exact arithmetic: canonical rationals and rational-coefficient polynomials.

Rationals are :class:`fractions.Fraction`, which is already eagerly
normalized (lowest terms, positive denominator).  :class:`Polynomial` is a
small dense univariate type.  It also admits finitely many negative powers
of ``x`` because some of the matrix-generated triangles carry ``1/x``
entries; ordinary polynomials are stored densely from ``x^0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Iterable, Sequence

__all__ = [
    "Polynomial",
    "RATIONAL",
    "POLYNOMIAL",
    "Ring",
    "X",
    "format_value",
    "parse_value",
    "poly_eval",
    "rational_make",
]


def rational_make(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def _coerce(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Polynomial:
    """Immutable polynomial in ``x`` with :class:`Fraction` coefficients.

    ``coeffs[i]`` is the coefficient of ``x**(low + i)``.  ``low`` is 0 for
    every ordinary polynomial and negative only when a ``1/x`` term is
    present.
    """

    __slots__ = ("_coeffs", "_low", "_hash")

    def __init__(self, coeffs: Iterable[Any] = (), low: int = 0):
        cs = [_coerce(c) for c in coeffs]
        if low > 0:
            cs = [Fraction(0)] * low + cs
            low = 0
        while cs and cs[-1] == 0:
            cs.pop()
        # strip zero low-order terms only while they sit at negative powers
        while cs and low < 0 and cs[0] == 0:
            cs.pop(0)
            low += 1
        if not cs:
            low = 0
        self._coeffs: tuple[Fraction, ...] = tuple(cs)
        self._low = low
        self._hash = None

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls([1])

    @classmethod
    def monomial(cls, coeff: Any, power: int) -> Polynomial:
        if power >= 0:
            return cls([0] * power + [coeff])
        return cls([coeff], low=power)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def low(self) -> int:
        return self._low

    @property
    def degree(self) -> int | None:
        """Highest power present; ``None`` for the zero polynomial."""
        if not self._coeffs:
            return None
        return self._low + len(self._coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Lowest power with a nonzero coefficient; ``None`` for zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return self._low + i
        return None

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_polynomial(self) -> bool:
        return self._low >= 0

    def coeff(self, power: int) -> Fraction:
        i = power - self._low
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def terms(self) -> dict[int, Fraction]:
        return {self._low + i: c for i, c in enumerate(self._coeffs) if c}

    def __call__(self, x: Any) -> Fraction:
        return poly_eval(self, x)

    # ring operations

    @staticmethod
    def _lift(other: Any) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, _RationalABC)):
            return Polynomial([other])
        return None

    def __add__(self, other: Any) -> Polynomial:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o._coeffs:
            return self
        if not self._coeffs:
            return o
        low = min(self._low, o._low)
        high = max(self.degree, o.degree)
        return Polynomial(
            [self.coeff(p) + o.coeff(p) for p in range(low, high + 1)], low=low
        )

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs], low=self._low)

    def __sub__(self, other: Any) -> Polynomial:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> Polynomial:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> Polynomial:
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                return Polynomial()
            return Polynomial([c * other for c in self._coeffs], low=self._low)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(out, low=self._low + other._low)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Polynomial:
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / _coerce(other))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._low == o._low and self._coeffs == o._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self._low == 0 and len(self._coeffs) <= 1:
                # agree with hash(Fraction) for constants
                self._hash = hash(self._coeffs[0] if self._coeffs else Fraction(0))
            else:
                self._hash = hash((self._low, self._coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]!r}, low={self._low})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for power in sorted(self.terms(), reverse=True):
            c = self.coeff(power)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = Polynomial([0, 1])


def poly_eval(p: Polynomial, x: Any) -> Fraction:
    """Horner evaluation; raises ZeroDivisionError for ``1/x`` terms at 0."""
    x = _coerce(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    if p.low < 0 and p.coeffs:
        acc /= x ** (-p.low)
    return acc


@dataclass(frozen=True)
class Ring:
    """Coefficient domain for triangle generation: its zero, one and name.

    Addition, multiplication and equality are the elements' own operators.
    """

    name: str
    zero: Any
    one: Any

    def sum(self, values: Iterable[Any]) -> Any:
        total = self.zero
        for v in values:
            total = total + v
        return total


RATIONAL = Ring("rational", Fraction(0), Fraction(1))
POLYNOMIAL = Ring("polynomial", Polynomial.zero(), Polynomial.one())


def format_value(value: Any) -> str | list | dict:
    """Canonical text form used by every serializer.

    Rationals become ``"p/q"`` (``"p"`` when integral), polynomials become a
    degree-ascending list of such strings.  A polynomial with ``1/x`` terms
    becomes ``{"low": low, "coeffs": [...]}``.
    """
    if isinstance(value, Polynomial):
        coeffs = [str(c) for c in value.coeffs]
        if value.low < 0:
            return {"low": value.low, "coeffs": coeffs}
        return coeffs
    return str(_coerce(value))


def parse_value(obj: str | Sequence | dict) -> Fraction | Polynomial:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, dict):
        return Polynomial([Fraction(c) for c in obj["coeffs"]], low=int(obj["low"]))
    return Polynomial([Fraction(c) for c in obj])


def display_value(value: Any) -> str:
    """Human-readable single-token form for plain tables."""
    if isinstance(value, Polynomial):
        return str(value).replace(" ", "")
    return str(_coerce(value))
