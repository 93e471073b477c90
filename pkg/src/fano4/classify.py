"""Qualitative classification of a family: anticanonical base locus,
rationality, toric identifications, and tangent-sheaf cohomology.

The anticanonical system |-K_X| is free for 26 of the 28 families; only the
two families over the weighted sextic (whose |H| has one simple base point)
acquire base points, one or two of them.  Rationality reduces to rationality
of the base 3-fold since X is birational to Z x P^1.  For deformations, the
Euler characteristic chi(T_X) is a closed form in the other invariants, and
h^1(T_X) is bounded by the dimension count

    h^1(T_X) <= h^1(T_Z) + h^0(O_Z(d)) - 1,

with equality when Z has no infinitesimal automorphisms (z_id <= 4) and with
h^1(T_X) = 0 for the rigid families over P^3 with d <= 2 (hyperplanes and
quadrics in P^3 are projectively equivalent).  Where only the bound is known
the record says so explicitly; no exact value is ever invented.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .catalog import FamilyParams, FanoThreefold, validate_params
from .errors import IntegrityError

__all__ = [
    "BaseLocusKind",
    "BaseLocusResult",
    "Rationality",
    "ToricLabel",
    "TangentBounds",
    "base_locus",
    "rationality",
    "toric_label",
    "h0_line_bundle",
    "chi_tangent",
    "tangent_bounds",
]


class BaseLocusKind(Enum):
    EMPTY = "empty"
    ONE_POINT = "one_point"
    TWO_POINTS = "two_points"

    @property
    def point_count(self) -> int:
        return {"empty": 0, "one_point": 1, "two_points": 2}[self.value]


@dataclass(frozen=True)
class BaseLocusResult:
    """Base locus of |-K_X|, as a point count; a general member of |-K_X| is
    smooth in every family."""

    kind: BaseLocusKind
    general_member_smooth: bool

    def display(self) -> str:
        return {
            BaseLocusKind.EMPTY: "empty",
            BaseLocusKind.ONE_POINT: "{Q0}",
            BaseLocusKind.TWO_POINTS: "{Q1, Q2}",
        }[self.kind]


def base_locus(params: FamilyParams) -> BaseLocusResult:
    """Base locus of |-K_X|: empty whenever |H| on Z is free, else one point
    for (z_id, a, d) = (1, 0, 1) and two for (1, 1, 2)."""
    _require_admissible(params)
    kind = BaseLocusKind.EMPTY
    if params.z_id == 1:
        kind = (BaseLocusKind.ONE_POINT if (params.a, params.d) == (0, 1)
                else BaseLocusKind.TWO_POINTS)
    return BaseLocusResult(kind=kind, general_member_smooth=True)


class Rationality(Enum):
    RATIONAL = "rational"
    VERY_GENERAL_NOT_RATIONAL = "very_general_not_rational"
    UNKNOWN = "unknown"
    TORIC = "toric"

    @property
    def is_rational(self) -> bool:
        """Toric varieties are rational; the toric tag refines 'rational'."""
        return self in (Rationality.RATIONAL, Rationality.TORIC)


class ToricLabel(Enum):
    """Names of the three toric families in the standard classification of
    toric Fano 4-folds."""

    E1 = "E1"
    E2 = "E2"
    E3 = "E3"


_TORIC = {(7, 0, 1): ToricLabel.E3, (7, 2, 1): ToricLabel.E2,
          (7, 3, 1): ToricLabel.E1}


def toric_label(params: FamilyParams) -> ToricLabel | None:
    _require_admissible(params)
    return _TORIC.get((params.z_id, params.a, params.d))


def rationality(params: FamilyParams) -> Rationality:
    """Rationality status of the family.

    X is birational to Z x P^1, so the families over rational bases
    (z_id >= 4) are rational -- toric for the three families over P^3 with
    d = 1.  Over z_id 1 and 2 the very general member is not rational (the
    very general base is not stably rational); over the cubic (z_id = 3)
    stable rationality of the base is open and nothing is known.
    """
    _require_admissible(params)
    if (params.z_id, params.a, params.d) in _TORIC:
        return Rationality.TORIC
    if params.z_id >= 4:
        return Rationality.RATIONAL
    if params.z_id == 3:
        return Rationality.UNKNOWN
    return Rationality.VERY_GENERAL_NOT_RATIONAL


def h0_line_bundle(Z: FanoThreefold, d: int) -> int:
    """h^0(O_Z(d)) = 1 + 2d/i + (d*delta/12)(i^2 + 3di + 2d^2), by
    Riemann-Roch plus Kodaira vanishing.  Must come out a positive integer."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    i, delta = Z.index, Z.degree
    value = (1 + Fraction(2 * d, i)
             + Fraction(d * delta, 12) * (i * i + 3 * d * i + 2 * d * d))
    if value.denominator != 1 or value <= 0:
        raise IntegrityError(f"h^0(O_Z(d)) = {value} for Z_{Z.id}, d={d}")
    return value.numerator


def chi_tangent(k4: int, h0_antiK: int, h12: int, h13: int, h22: int,
                b2: int = 3) -> int:
    """chi(T_X) = 27 - 5*h^0(-K) + K^4 + 3*b2 - h^{1,2} - h^{2,2} + 3*h^{1,3}."""
    return 27 - 5 * h0_antiK + k4 + 3 * b2 - h12 - h22 + 3 * h13


@dataclass(frozen=True)
class TangentBounds:
    """chi(T_X) together with the known information on h^0 and h^1.

    ``h1_upper``/``h0_upper`` are the best established upper bounds; the
    ``*_exact`` fields repeat them when the bound is known to be attained
    (and are None otherwise).
    """

    chi: int
    h1_upper: int
    h0_upper: int
    h1_exact: int | None
    h0_exact: int | None

    @property
    def is_exact(self) -> bool:
        return self.h1_exact is not None


def tangent_bounds(params: FamilyParams, chi: int) -> TangentBounds:
    """Bounds (exact values where known) for h^0(T_X) and h^1(T_X).

    The deformation count gives h^1(T_X) <= h^1(T_Z) + h^0(O_Z(d)) - 1.  The
    bound is attained for z_id <= 4; the families over P^3 with d <= 2 are
    rigid, so there the sharper bound h^1 = 0 replaces it.  h^0 follows from
    h^0 - h^1 = chi.
    """
    _require_admissible(params)
    Z = params.threefold
    bound = Z.h1_tangent + h0_line_bundle(Z, params.d) - 1
    if params.z_id <= 4:
        h1_exact: int | None = bound
    elif params.z_id == 7 and params.d <= 2:
        h1_exact = 0
    else:
        h1_exact = None
    h1_upper = bound if h1_exact is None else h1_exact
    h0_exact = None if h1_exact is None else chi + h1_exact
    h0_upper = chi + h1_upper
    for name, value in (("h1_upper", h1_upper), ("h0_upper", h0_upper),
                        ("h1_exact", h1_exact), ("h0_exact", h0_exact)):
        if value is not None and value < 0:
            raise IntegrityError(f"{params.label}: {name} = {value} < 0")
    return TangentBounds(chi=chi, h1_upper=h1_upper, h0_upper=h0_upper,
                         h1_exact=h1_exact, h0_exact=h0_exact)


def _require_admissible(params: FamilyParams) -> None:
    if not validate_params(params.z_id, params.a, params.d):
        raise ValueError(f"{params.label} is not admissible")
