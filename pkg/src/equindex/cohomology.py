"""Even cohomology of the fixed-point manifold, modelled as Q[x]/(x^(m+1)).

Every supported manifold has monogenic even cohomology, so a class is
just the vector of its coefficients in 1, x, ..., x^m with exact rational
entries.  The model records the top index m, the value of the integral of
x^m over the manifold, and the real dimension (for reporting).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any, Sequence

from .series import CoefficientRing, NotInvertible, QQ


class UnsupportedModel(ValueError):
    """A manifold name outside the supported presets, or the wrong kind for an op."""


class ModelMismatch(ValueError):
    """Two objects built over different manifold models were combined."""


@dataclasses.dataclass(frozen=True)
class ManifoldModel:
    name: str
    top_index: int
    integral_normalization: Fraction
    real_dimension: int

    def __post_init__(self) -> None:
        if self.top_index < 0:
            raise ValueError("top cohomology index must be nonnegative")
        object.__setattr__(
            self, "integral_normalization", Fraction(self.integral_normalization)
        )
        if self.top_index > 0 and self.integral_normalization == 0:
            raise ValueError("a positive-dimensional model needs a nonzero integral")

    def __str__(self) -> str:
        return self.name


def model_from_name(name: str) -> ManifoldModel:
    """Resolve a manifold preset name.

    Supported: ``point``, ``s2``, ``sigma:<g>`` (closed orientable surface
    of genus g), ``cpn:<n>`` (complex projective n-space).
    """
    if name == "point":
        return ManifoldModel("point", 0, Fraction(1), 0)
    if name == "s2":
        return ManifoldModel("s2", 1, Fraction(1), 2)
    if name.startswith("sigma:"):
        _parse_suffix(name, "sigma:", minimum=0)  # validate the genus
        return ManifoldModel(name, 1, Fraction(1), 2)
    if name.startswith("cpn:"):
        n = _parse_suffix(name, "cpn:", minimum=1)
        return ManifoldModel(name, n, Fraction(1), 2 * n)
    raise UnsupportedModel(f"unknown manifold model: {name!r}")


def _parse_suffix(name: str, prefix: str, minimum: int) -> int:
    text = name[len(prefix):]
    try:
        value = int(text)
    except ValueError:
        raise UnsupportedModel(f"manifold parameter must be an integer: {name!r}") from None
    if value < minimum:
        raise UnsupportedModel(f"manifold parameter out of range: {name!r}")
    return value


def as_fraction(value: Any) -> Fraction:
    """Exact rational coercion; floats are refused."""
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise ValueError("booleans are not rational values")
    if isinstance(value, float):
        raise ValueError("floating point input is inexact; use p/q strings")
    return Fraction(value)


@dataclasses.dataclass(init=False, eq=True)
class CohClass:
    """An even cohomology class: coeffs[j] multiplies x^j, truncated past x^m.

    The vector length is fixed by the model (m + 1 entries); operations
    require equal lengths and truncate products back to the same length.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[Any]):
        window = tuple(as_fraction(c) for c in coeffs)
        if not window:
            raise ValueError("a cohomology class needs at least the degree-0 entry")
        self.coeffs = window

    @property
    def scalar_part(self) -> Fraction:
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_length(self, other: "CohClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("cohomology truncation degrees differ")

    def __add__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_length(other)
        return CohClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_length(other)
        return CohClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CohClass":
        return CohClass(tuple(-a for a in self.coeffs))

    def __mul__(self, other: Any) -> "CohClass":
        if isinstance(other, CohClass):
            self._check_length(other)
            size = len(self.coeffs)
            out = [Fraction(0)] * size
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(size - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return CohClass(tuple(out))
        scalar = as_fraction(other)
        return CohClass(tuple(scalar * a for a in self.coeffs))

    def __rmul__(self, other: Any) -> "CohClass":
        return self.__mul__(other)

    def __str__(self) -> str:
        parts: list[str] = []
        for j, value in enumerate(self.coeffs):
            if value == 0:
                continue
            if j == 0:
                body = str(value)
            else:
                power = "x" if j == 1 else f"x^{j}"
                body = power if abs(value) == 1 else f"{abs(value)}{power}"
                if not parts and value < 0:
                    body = f"-{body}"
                    parts.append(body)
                    continue
            if not parts:
                parts.append(body if value > 0 or j == 0 else f"-{body}")
            else:
                parts.append(f"- {body}" if value < 0 else f"+ {body}")
        return " ".join(parts) if parts else "0"


def unit_class(model: ManifoldModel) -> CohClass:
    return scalar_class(model, 1)


def scalar_class(model: ManifoldModel, value: Any) -> CohClass:
    window = [Fraction(0)] * (model.top_index + 1)
    window[0] = as_fraction(value)
    return CohClass(window)


def _check_model(a: CohClass, model: ManifoldModel) -> None:
    if len(a.coeffs) != model.top_index + 1:
        raise ValueError(
            f"class of truncation degree {len(a.coeffs) - 1} does not live on {model}"
        )


def coh_mul(a: CohClass, b: CohClass, model: ManifoldModel) -> CohClass:
    """Cup product in Q[x]/(x^(m+1))."""
    _check_model(a, model)
    _check_model(b, model)
    return a * b


def coh_integrate(a: CohClass, model: ManifoldModel) -> Fraction:
    """Integrate over the manifold: the x^m coefficient times the normalization."""
    _check_model(a, model)
    return a.coeffs[model.top_index] * model.integral_normalization


@dataclasses.dataclass(frozen=True)
class CohRing(CoefficientRing):
    """Cohomology classes of a fixed model as a series coefficient ring.

    Units are the classes with scalar part +-1 (everything above degree
    zero is nilpotent, so a finite geometric sum inverts them exactly).
    """

    model: ManifoldModel

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"H({self.model})"

    @property
    def zero(self) -> CohClass:  # type: ignore[override]
        return CohClass([0] * (self.model.top_index + 1))

    @property
    def one(self) -> CohClass:  # type: ignore[override]
        return unit_class(self.model)

    def coerce(self, value: Any) -> CohClass:
        if isinstance(value, CohClass):
            _check_model(value, self.model)
            return value
        return scalar_class(self.model, QQ.coerce(value))

    def is_zero(self, value: CohClass) -> bool:
        return value.is_zero

    def is_unit(self, value: CohClass) -> bool:
        return value.scalar_part == 1 or value.scalar_part == -1

    def invert_unit(self, value: CohClass) -> CohClass:
        value = self.coerce(value)
        if not self.is_unit(value):
            raise NotInvertible(
                f"class with scalar part {value.scalar_part} is not a unit"
            )
        sign = value.scalar_part
        nil = value - scalar_class(self.model, sign)
        # value = sign * (1 + sign * nil); invert with a finite geometric sum
        total = self.one
        power = self.one
        for _ in range(self.model.top_index):
            power = power * (-sign * nil)
            if power.is_zero:
                break
            total = total + power
        return sign * total
