"""Truncated formal q-series with exact coefficients.

A series is stored as a dense window of coefficients starting at its lowest
exponent, together with a truncation order N meaning the series is known
exactly modulo q^(N+1).  Coefficients live in a pluggable exact ring
(integers, rationals, or nilpotent-augmented rings supplied elsewhere);
no floating point is ever involved.

Laurent behaviour is allowed: ``lowest`` may be negative, and arithmetic
tracks how much of the result is actually determined by the operands'
truncation windows.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any, Iterator, Mapping

Scalar = Any  # a coefficient-ring element: int, Fraction, or a class supplied by the ring


class NotInvertible(ArithmeticError):
    """Raised when a series (or a coefficient) has no multiplicative inverse."""


class CoefficientRing:
    """Minimal interface a coefficient ring must provide to QSeries.

    Elements support ``+``, ``-`` and ``*`` among themselves; the ring
    object supplies constants, coercion of raw input, and unit handling.
    """

    name = "ring"
    zero: Scalar = None
    one: Scalar = None

    def coerce(self, value: Any) -> Scalar:
        raise NotImplementedError

    def is_zero(self, value: Scalar) -> bool:
        return value == self.zero

    def is_unit(self, value: Scalar) -> bool:
        raise NotImplementedError

    def invert_unit(self, value: Scalar) -> Scalar:
        """Inverse of a unit; raises NotInvertible for non-units."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class IntegerRing(CoefficientRing):
    """The ring of integers; units are exactly +1 and -1."""

    name = "ZZ"
    zero = 0
    one = 1

    def coerce(self, value: Any) -> int:
        if isinstance(value, bool):
            raise ValueError("booleans are not integer coefficients")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        if isinstance(value, str):
            return int(value)
        raise ValueError(f"not an exact integer: {value!r}")

    def is_unit(self, value: int) -> bool:
        return value == 1 or value == -1

    def invert_unit(self, value: int) -> int:
        if not self.is_unit(value):
            raise NotInvertible(f"{value} is not a unit integer")
        return value


class RationalRing(CoefficientRing):
    """The field of rationals; every nonzero element is a unit."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, bool):
            raise ValueError("booleans are not rational coefficients")
        if isinstance(value, float):
            raise ValueError("floating point input is inexact; use p/q strings")
        if isinstance(value, (int, Fraction, str)):
            return Fraction(value)
        raise ValueError(f"not an exact rational: {value!r}")

    def is_unit(self, value: Fraction) -> bool:
        return value != 0

    def invert_unit(self, value: Fraction) -> Fraction:
        if value == 0:
            raise NotInvertible("zero is not invertible")
        return 1 / value


ZZ = IntegerRing()
QQ = RationalRing()


@dataclasses.dataclass(init=False, eq=True)
class QSeries:
    """A q-series known exactly modulo q^(order+1).

    The stored window runs from ``lowest`` upward; the leading stored
    coefficient is nonzero, trailing zeros are stripped, and anything
    beyond ``order`` is dropped at construction.  The zero series is
    normalised to an empty window with ``lowest == 0``.

    >>> a = QSeries(ZZ, 0, (1, 2), 5)
    >>> b = QSeries(ZZ, 0, (1,), 3)
    >>> str(a + b)
    '2 + 2q'
    >>> (a + b).order
    3
    >>> str(QSeries(ZZ, 0, (1, -1), 3) * QSeries(ZZ, 0, (1, 1, 1, 1), 3))
    '1'
    """

    ring: CoefficientRing
    lowest: int
    coeffs: tuple
    order: int

    def __init__(self, ring: CoefficientRing, lowest: int, coeffs: Any, order: int):
        window = [ring.coerce(c) for c in coeffs]
        # drop whatever the truncation order does not cover
        if lowest + len(window) - 1 > order:
            window = window[: max(order - lowest + 1, 0)]
        while window and ring.is_zero(window[0]):
            window.pop(0)
            lowest += 1
        while window and ring.is_zero(window[-1]):
            window.pop()
        if not window:
            lowest = 0
        self.ring = ring
        self.lowest = lowest
        self.coeffs = tuple(window)
        self.order = order

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "QSeries":
        return cls(ring, 0, (), order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "QSeries":
        return cls(ring, 0, (ring.one,), order)

    @classmethod
    def from_terms(
        cls, ring: CoefficientRing, terms: Mapping[int, Any], order: int
    ) -> "QSeries":
        """Build a series from an exponent -> coefficient mapping."""
        if not terms:
            return cls.zero(ring, order)
        lowest = min(terms)
        highest = max(terms)
        window = [ring.zero] * (highest - lowest + 1)
        for exponent, value in terms.items():
            window[exponent - lowest] = ring.coerce(value)
        return cls(ring, lowest, window, order)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Scalar:
        """Coefficient of q^exponent; refuses to answer beyond the order."""
        if exponent > self.order:
            raise ValueError(
                f"coefficient of q^{exponent} is unknown beyond order {self.order}"
            )
        if exponent < self.lowest or exponent >= self.lowest + len(self.coeffs):
            return self.ring.zero
        return self.coeffs[exponent - self.lowest]

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        """Yield (exponent, coefficient) for the nonzero stored terms."""
        for offset, value in enumerate(self.coeffs):
            if not self.ring.is_zero(value):
                yield self.lowest + offset, value

    # -- ring operations ----------------------------------------------

    def _check_ring(self, other: "QSeries") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError(
                f"coefficient ring mismatch: {self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_ring(other)
        order = min(self.order, other.order)
        acc: dict[int, Scalar] = dict(self.terms())
        for exponent, value in other.terms():
            if exponent in acc:
                acc[exponent] = acc[exponent] + value
            else:
                acc[exponent] = value
        return QSeries.from_terms(self.ring, acc, order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries(self.ring, self.lowest, [-c for c in self.coeffs], self.order)

    def __mul__(self, other: Any) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        self._check_ring(other)
        # how far the product is determined by the two truncation windows
        order = min(self.order + other.lowest, other.order + self.lowest)
        acc: dict[int, Scalar] = {}
        mine = list(self.terms())
        theirs = list(other.terms())
        for e1, c1 in mine:
            for e2, c2 in theirs:
                exponent = e1 + e2
                if exponent > order:
                    break  # theirs is sorted by exponent
                value = c1 * c2
                if exponent in acc:
                    acc[exponent] = acc[exponent] + value
                else:
                    acc[exponent] = value
        return QSeries.from_terms(self.ring, acc, order)

    def __rmul__(self, other: Any) -> "QSeries":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "QSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = QSeries.one(self.ring, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value: Any) -> "QSeries":
        """Multiply every coefficient by a ring element."""
        value = self.ring.coerce(value)
        return QSeries(
            self.ring, self.lowest, [value * c for c in self.coeffs], self.order
        )

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k: exponents and the order both move by k."""
        return QSeries(self.ring, self.lowest + k, self.coeffs, self.order + k)

    def truncate(self, order: int) -> "QSeries":
        """Forget everything above q^order (never adds knowledge)."""
        if order >= self.order:
            return self
        return QSeries(self.ring, self.lowest, self.coeffs, order)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse via a geometric (Neumann) series.

        Writing the series as c * q^L * (1 + t) with t of positive
        valuation, the inverse is c^(-1) * q^(-L) * sum((-t)^k); the sum
        is finite modulo the truncation order.  Requires the leading
        coefficient to be a unit of the coefficient ring.

        >>> str(QSeries(ZZ, 0, (1, -1), 4).inverse())
        '1 + q + q^2 + q^3 + q^4'
        >>> QSeries(ZZ, -1, (1, 1), 5).inverse().lowest
        1
        """
        if self.is_zero:
            raise NotInvertible("the zero series has no inverse")
        lead = self.coeffs[0]
        if not self.ring.is_unit(lead):
            raise NotInvertible(f"leading coefficient {lead!r} is not a unit")
        lead_inv = self.ring.invert_unit(lead)
        work = self.order - self.lowest
        unit = self.shift(-self.lowest).scale(lead_inv)  # 1 + t, t of valuation >= 1
        tail = unit - QSeries.one(self.ring, work)
        total = QSeries.one(self.ring, work)
        power = QSeries.one(self.ring, work)
        while not power.is_zero:
            power = (power * (-tail)).truncate(work)
            total = total + power
        return total.scale(lead_inv).shift(-self.lowest)

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        return render_series(self)

    def to_json(self) -> dict:
        """JSON-ready payload; coefficients as exact p/q strings."""
        return {
            "lowest": self.lowest,
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, ring: CoefficientRing, payload: Mapping[str, Any]) -> "QSeries":
        return cls(ring, payload["lowest"], payload["coeffs"], payload["order"])


def _power_text(exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return "q"
    return f"q^{exponent}"


def render_series(series: QSeries) -> str:
    """Render with explicit signs, lowest exponent first: ``1 + 2q + 5q^2``."""
    parts: list[str] = []
    for exponent, value in series.terms():
        try:
            negative = value < 0
        except TypeError:
            # coefficient type without an order: borrow the sign of its
            # rendering when it is a single term, else render verbatim
            negative = " " not in str(value) and str(value).startswith("-")
        magnitude = -value if negative else value
        power = _power_text(exponent)
        text = str(magnitude)
        if " " in text:
            text = f"({text})"  # composite coefficient, e.g. a cohomology class
        if power and magnitude == series.ring.one:
            body = power
        elif power:
            body = f"{text}{power}"
        else:
            body = text
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    if not parts:
        return "0"
    return " ".join(parts)
