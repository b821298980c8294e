"""The localized index pipeline.

A problem consists of a fixed-point manifold model, its tangent bundle,
weighted normal data (explicit, or the loop-space family), an equivariant
coefficient bundle F graded by rotation weight, and an optional
difference line contributing a sign and an exponent shift.  The index is
the integral over the fixed manifold of

    td(tangent) * ch(F) * ch(L) * (inverse Euler class of the normal data)

collected as an exact q-series with rational coefficients.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence, Union

from .charclasses import RootBundle, VirtualBundle, chern_character, todd_class
from .cohomology import (
    CohRing,
    ManifoldModel,
    ModelMismatch,
    UnsupportedModel,
    coh_integrate,
    coh_mul,
    model_from_name,
)
from .localization import (
    NormalDecomposition,
    inverse_euler_class,
    loop_normal_decomposition,
)
from .series import QQ, QSeries

LOOP = "loop"  # marker for the loop-space normal family


@dataclasses.dataclass(frozen=True)
class DifferenceLine:
    """A one-dimensional twist: contributes sign * q^weight."""

    sign: int = 1
    weight: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.sign, bool) or self.sign not in (1, -1):
            raise ValueError(f"difference line sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.weight, int) or isinstance(self.weight, bool):
            raise ValueError(f"difference line weight must be an integer, got {self.weight!r}")


@dataclasses.dataclass(init=False, eq=True)
class EquivariantBundle:
    """The coefficient bundle F = sum over weights a of F_a q^a.

    Terms are ((weight, bundle), ...), merged by weight and sorted;
    weights may be any integers and the bundles may be virtual.
    """

    model: ManifoldModel
    terms: tuple[tuple[int, RootBundle], ...]

    def __init__(
        self, model: ManifoldModel, terms: Iterable[tuple[int, RootBundle]] = ()
    ):
        merged: dict[int, RootBundle] = {}
        for weight, bundle in terms:
            if not isinstance(weight, int) or isinstance(weight, bool):
                raise ValueError(f"F-weight must be an integer, got {weight!r}")
            if bundle.model != model:
                raise ModelMismatch(
                    f"coefficient bundle over {bundle.model} does not live on {model}"
                )
            if weight in merged:
                merged[weight] = merged[weight].direct_sum(bundle)
            else:
                merged[weight] = bundle
        self.model = model
        self.terms = tuple((w, merged[w]) for w in sorted(merged))

    @classmethod
    def trivial(cls, model: ManifoldModel) -> "EquivariantBundle":
        """A single trivial line at weight zero."""
        return cls(model, ((0, RootBundle(model, (0,))),))


@dataclasses.dataclass(frozen=True)
class ProblemSpec:
    """Everything the localized index needs, validated for model agreement."""

    model: ManifoldModel
    tangent: RootBundle
    normal: Union[NormalDecomposition, str]
    F: EquivariantBundle
    L: DifferenceLine = DifferenceLine()
    order: int = 10

    def __post_init__(self) -> None:
        if self.tangent.model != self.model:
            raise ModelMismatch("tangent bundle lives on a different model")
        if not self.tangent.is_genuine:
            raise VirtualBundle("the tangent bundle must be genuine (no minus roots)")
        if isinstance(self.normal, str):
            if self.normal != LOOP:
                raise ValueError(f"unknown normal marker {self.normal!r}")
        elif isinstance(self.normal, NormalDecomposition):
            if self.normal.model != self.model:
                raise ModelMismatch("normal data lives on a different model")
        else:
            raise ValueError("normal must be a NormalDecomposition or the loop marker")
        if self.F.model != self.model:
            raise ModelMismatch("coefficient bundle lives on a different model")
        if not isinstance(self.order, int) or isinstance(self.order, bool) or self.order < 0:
            raise ValueError(f"truncation order must be a nonnegative integer, got {self.order!r}")


def localized_index(spec: ProblemSpec) -> QSeries:
    """Evaluate the fixed-point integral as a q-series over the rationals.

    The result is truncated at the requested order; with an exponent
    shift from the difference line or negative F-weights the naturally
    determined window can end lower, and then the smaller order wins.
    """
    order = spec.order
    model = spec.model
    ring = CohRing(model)
    if isinstance(spec.normal, str):
        decomposition = loop_normal_decomposition(spec.tangent, order)
    else:
        decomposition = spec.normal
    inverse_euler = inverse_euler_class(decomposition, order)

    character_terms = {}
    for weight, bundle in spec.F.terms:
        value = chern_character(bundle)
        if not value.is_zero:
            character_terms[weight] = value
    if character_terms:
        # an exact Laurent polynomial: give it just enough window that the
        # product with the inverse Euler class is determined up to the order
        character = QSeries.from_terms(
            ring, character_terms, order + min(character_terms)
        )
    else:
        character = QSeries.zero(ring, order)

    total = character * inverse_euler
    if spec.L.sign < 0:
        total = -total
    total = total.shift(spec.L.weight)

    tangent_todd = todd_class(spec.tangent)
    integrated = {
        exponent: coh_integrate(coh_mul(value, tangent_todd, model), model)
        for exponent, value in total.terms()
    }
    result = QSeries.from_terms(QQ, integrated, total.order)
    return result.truncate(order)


def loop_space_index(surface: ManifoldModel, E: EquivariantBundle, order: int) -> QSeries:
    """Index of the loop space of a closed orientable surface.

    The tangent root is the Euler number: 2 for the sphere, 2 - 2g for
    the genus-g surface; other models are rejected.
    """
    root = _surface_tangent_root(surface)
    tangent = RootBundle(surface, (root,))
    spec = ProblemSpec(
        model=surface, tangent=tangent, normal=LOOP, F=E, L=DifferenceLine(), order=order
    )
    return localized_index(spec)


def _surface_tangent_root(surface: ManifoldModel) -> int:
    if surface.name == "s2":
        return 2
    if surface.name.startswith("sigma:"):
        genus = int(surface.name.split(":", 1)[1])
        return 2 - 2 * genus
    raise UnsupportedModel(
        f"loop-space index needs a surface model (s2 or sigma:<g>), got {surface}"
    )


def compact_trivial_index(
    model: ManifoldModel, tangent: RootBundle, F: EquivariantBundle
) -> QSeries:
    """Index with trivial rotation action: no normal data, no twist.

    Each weight contributes its ordinary index, so the result is the
    exact Laurent polynomial  sum_a (integral of ch(F_a) td(tangent)) q^a.
    """
    if tangent.model != model:
        raise ModelMismatch("tangent bundle lives on a different model")
    if F.model != model:
        raise ModelMismatch("coefficient bundle lives on a different model")
    tangent_todd = todd_class(tangent)
    integrated = {
        weight: coh_integrate(coh_mul(chern_character(bundle), tangent_todd, model), model)
        for weight, bundle in F.terms
    }
    order = max((weight for weight in integrated), default=0)
    return QSeries.from_terms(QQ, integrated, order)


# -- presets ----------------------------------------------------------


def cplane_spec(weight: int, coefficients: Sequence[int], order: int) -> ProblemSpec:
    """The weighted complex plane: a point with one normal direction.

    ``coefficients`` lists the F-multiplicities c_0, c_1, ... at
    rotation weights 0, 1, ...; negative entries mean virtual lines.
    The sign of ``weight`` selects the difference line: trivial for
    weight > 0, and -q^|weight| for weight < 0.
    """
    if weight == 0:
        raise ValueError("the plane rotation weight must be nonzero")
    point = model_from_name("point")
    terms = []
    for n, c_n in enumerate(coefficients):
        if not isinstance(c_n, int) or isinstance(c_n, bool):
            raise ValueError(f"F-multiplicities must be integers, got {c_n!r}")
        if c_n == 0:
            continue
        if c_n > 0:
            terms.append((n, RootBundle(point, (0,) * c_n)))
        else:
            terms.append((n, RootBundle(point, (), (0,) * (-c_n))))
    normal = NormalDecomposition(point, ((abs(weight), RootBundle(point, (0,))),))
    line = DifferenceLine() if weight > 0 else DifferenceLine(-1, abs(weight))
    return ProblemSpec(
        model=point,
        tangent=RootBundle(point),
        normal=normal,
        F=EquivariantBundle(point, terms),
        L=line,
        order=order,
    )


def preset_spec(name: str, order: int) -> ProblemSpec:
    """Resolve a CLI preset name into a full problem.

    ``cplane:<k>``: the complex plane rotated with weight k != 0, trivial F.
    ``ls2``: the loop space of the sphere, trivial F.
    ``lsigma:<g>``: the loop space of the genus-g surface, trivial F.
    """
    if name.startswith("cplane:"):
        return cplane_spec(_parse_int(name, "cplane:"), (1,), order)
    if name == "ls2":
        surface = model_from_name("s2")
        return ProblemSpec(
            model=surface,
            tangent=RootBundle(surface, (2,)),
            normal=LOOP,
            F=EquivariantBundle.trivial(surface),
            order=order,
        )
    if name.startswith("lsigma:"):
        genus = _parse_int(name, "lsigma:")
        if genus < 0:
            raise ValueError(f"genus must be nonnegative: {name!r}")
        surface = model_from_name(f"sigma:{genus}")
        return ProblemSpec(
            model=surface,
            tangent=RootBundle(surface, (2 - 2 * genus,)),
            normal=LOOP,
            F=EquivariantBundle.trivial(surface),
            order=order,
        )
    raise ValueError(f"unknown preset {name!r}")


def _parse_int(name: str, prefix: str) -> int:
    text = name[len(prefix):]
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"preset parameter must be an integer: {name!r}") from None
