"""Divisor and curve classes, the curve cone, and the nef cone of a family.

N^1(X) has rank 3.  Working basis: (phi*H, Ghat, E), where phi: X -> Z is the
conic bundle, E is the exceptional divisor of the blow-up X -> Y, and G, Ghat
are the disjoint sections (isomorphic to Z).  The remaining named divisors
are determined by

    G    = Ghat + E - a*phi*H,          Ehat = d*phi*H - E,

which encode the relations G + a*phi*H = Ghat + E and d*phi*H = E + Ehat.

The dual space N_1(X) is generated by four curve classes: the blow-up fibres
F in E and Fhat in Ehat, and curves C_G in G, C_Ghat in Ghat mapping to a
curve of minimal H-degree in Z (taken to be 1).  The divisor-curve pairing is
pinned down by E.F = Ehat.Fhat = -1, the disjointness of G, Ghat with each
other and with the opposite exceptional divisor, and the normal bundles
N_G = O_Z(-a), N_Ghat = O_Z(-(d-a)):

                 F    Fhat   C_G    C_Ghat
    phi*H        0     0      1       1
    Ghat         1     0      0      a-d
    E           -1     1      0       d

The effective curve cone NE(X) needs only three of the four generators unless
0 < a < d; the nef cone is its dual, with three or four extremal rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .catalog import FamilyParams, validate_params
from .errors import ConsistencyError, ContextMismatchError

__all__ = [
    "DivisorClass",
    "CurveGen",
    "CurveClass",
    "RayLabel",
    "NefRay",
    "FibreLike",
    "divisor",
    "phi_star_H",
    "G",
    "G_hat",
    "E",
    "E_hat",
    "curve",
    "curve_combo",
    "pairing_matrix",
    "pairing",
    "to_alternate_basis",
    "from_alternate_basis",
    "anticanonical",
    "ne_generators",
    "nef_rays",
    "is_fano",
    "is_fibre_like",
]

Rational = int | Fraction


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class, as exact coordinates over the basis (phi*H, Ghat, E)."""

    coords: tuple[Fraction, Fraction, Fraction]
    context: FamilyParams

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_context(self.context, other.context)
        return DivisorClass(tuple(x + y for x, y in zip(self.coords, other.coords)),
                            self.context)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _same_context(self.context, other.context)
        return DivisorClass(tuple(x - y for x, y in zip(self.coords, other.coords)),
                            self.context)

    def __rmul__(self, scalar: Rational) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(tuple(s * x for x in self.coords), self.context)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)


def _same_context(a: FamilyParams, b: FamilyParams) -> None:
    if a != b:
        raise ContextMismatchError(f"mixed family contexts {a} and {b}")


def divisor(params: FamilyParams, alpha: Rational, beta: Rational,
            gamma: Rational) -> DivisorClass:
    """alpha*phi*H + beta*Ghat + gamma*E."""
    return DivisorClass((Fraction(alpha), Fraction(beta), Fraction(gamma)), params)


def phi_star_H(params: FamilyParams) -> DivisorClass:
    return divisor(params, 1, 0, 0)


def G_hat(params: FamilyParams) -> DivisorClass:
    return divisor(params, 0, 1, 0)


def E(params: FamilyParams) -> DivisorClass:
    return divisor(params, 0, 0, 1)


def G(params: FamilyParams) -> DivisorClass:
    return divisor(params, -params.a, 1, 1)


def E_hat(params: FamilyParams) -> DivisorClass:
    return divisor(params, params.d, 0, -1)


class CurveGen(Enum):
    F = "F"
    F_HAT = "Fhat"
    C_G = "C_G"
    C_G_HAT = "C_Ghat"


@dataclass(frozen=True)
class CurveClass:
    """A formal non-negative rational combination of the four curve generators."""

    combo: tuple[tuple[CurveGen, Fraction], ...]
    context: FamilyParams

    @property
    def kind(self) -> CurveGen | None:
        """The single generator, if this class is one of the four (with
        coefficient 1); None for proper combinations."""
        if len(self.combo) == 1 and self.combo[0][1] == 1:
            return self.combo[0][0]
        return None

    def __add__(self, other: "CurveClass") -> "CurveClass":
        _same_context(self.context, other.context)
        out = dict(self.combo)
        for gen, c in other.combo:
            out[gen] = out.get(gen, Fraction(0)) + c
        return curve_combo(self.context, out)

    def __rmul__(self, scalar: Rational) -> "CurveClass":
        s = Fraction(scalar)
        if s < 0:
            raise ValueError("curve classes carry non-negative coefficients")
        return curve_combo(self.context, {g: s * c for g, c in self.combo})


def curve(params: FamilyParams, gen: CurveGen) -> CurveClass:
    return CurveClass(((gen, Fraction(1)),), params)


def curve_combo(params: FamilyParams,
                combo: Mapping[CurveGen, Rational]) -> CurveClass:
    terms = []
    for gen in CurveGen:
        c = Fraction(combo.get(gen, 0))
        if c < 0:
            raise ValueError(f"negative coefficient {c} for {gen.value}")
        if c != 0:
            terms.append((gen, c))
    return CurveClass(tuple(terms), params)


def pairing_matrix(params: FamilyParams) -> dict[CurveGen, tuple[int, int, int]]:
    """Columns of the divisor-curve pairing over the basis (phi*H, Ghat, E)."""
    a, d = params.a, params.d
    return {
        CurveGen.F: (0, 1, -1),
        CurveGen.F_HAT: (0, 0, 1),
        CurveGen.C_G: (1, 0, 0),
        CurveGen.C_G_HAT: (1, a - d, d),
    }


def pairing(D: DivisorClass, C: CurveClass) -> Fraction:
    """The intersection number D . C, extended bilinearly."""
    _same_context(D.context, C.context)
    matrix = pairing_matrix(D.context)
    total = Fraction(0)
    for gen, c in C.combo:
        col = matrix[gen]
        total += c * sum(x * m for x, m in zip(D.coords, col))
    return total


def to_alternate_basis(D: DivisorClass) -> tuple[Fraction, Fraction, Fraction]:
    """Coordinates of D over the second basis (phi*H, G, Ehat).

    From alpha*phi*H + beta*Ghat + (beta+gamma)*E
       = (alpha + a*beta + d*gamma)*phi*H + beta*G - gamma*Ehat:
    a divisor (x, y, z) over (phi*H, Ghat, E) has gamma = z - y, so it reads
    (x + a*y + d*(z - y), y, y - z) over (phi*H, G, Ehat).
    """
    a, d = D.context.a, D.context.d
    x, y, z = D.coords
    return (x + a * y + d * (z - y), y, y - z)


def from_alternate_basis(params: FamilyParams,
                         coords: tuple[Rational, Rational, Rational]) -> DivisorClass:
    """Inverse of :func:`to_alternate_basis`."""
    a, d = params.a, params.d
    x, y, z = (Fraction(c) for c in coords)
    return divisor(params, x - a * y + d * z, y, y - z)


def anticanonical(params: FamilyParams) -> DivisorClass:
    """-K_X = (i-a)*phi*H + 2*Ghat + E.

    Also expressible as i*phi*H + G + Ghat and, over the second basis, as
    (i+a-d, 2, 1); all three expressions are checked against each other.
    """
    if not validate_params(params.z_id, params.a, params.d):
        raise ValueError(f"{params.label} is not admissible")
    i, a, d = params.threefold.index, params.a, params.d
    antiK = divisor(params, i - a, 2, 1)
    symmetric = i * phi_star_H(params) + G(params) + G_hat(params)
    if antiK != symmetric:
        raise ConsistencyError(
            f"{params.label}: -K expressions disagree: {antiK.coords} vs "
            f"{symmetric.coords}")
    alternate = to_alternate_basis(antiK)
    if alternate != (i + a - d, 2, 1):
        raise ConsistencyError(
            f"{params.label}: -K over (phi*H, G, Ehat) is {alternate}, "
            f"expected {(i + a - d, 2, 1)}")
    return antiK


def _ne_kinds(a: int, d: int) -> tuple[CurveGen, ...]:
    if a == 0:
        return (CurveGen.F, CurveGen.F_HAT, CurveGen.C_G_HAT)
    if a < d:
        return (CurveGen.F, CurveGen.F_HAT, CurveGen.C_G, CurveGen.C_G_HAT)
    return (CurveGen.F, CurveGen.F_HAT, CurveGen.C_G)


def ne_generators(params: FamilyParams) -> list[CurveClass]:
    """Extremal generators of the effective curve cone NE(X).

    C_G drops out when a = 0 (G then moves in a free pencil) and C_Ghat drops
    out when a >= d.
    """
    if not validate_params(params.z_id, params.a, params.d):
        raise ValueError(f"{params.label} is not admissible")
    return [curve(params, g) for g in _ne_kinds(params.a, params.d)]


class RayLabel(Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"


@dataclass(frozen=True)
class NefRay:
    """An extremal ray of the nef cone.

    ``vanishing_face`` lists the NE generators the ray generator annihilates;
    ``contraction`` records the type of the associated elementary contraction
    (fibre type exactly for R1, the conic bundle onto Z; divisorial otherwise).
    """

    label: RayLabel
    name: str
    generator: DivisorClass
    vanishing_face: frozenset[CurveGen]
    contraction: str


def nef_rays(params: FamilyParams) -> list[NefRay]:
    """Extremal rays of the nef cone: three rays, or four when 0 < a < d.

    Generators: R1 = phi*H and R2 = a*phi*H + G always; then R3 = G + Ehat
    (plus R4 = d*G + a*Ehat when 0 < a < d), except that for a >= d the third
    ray is Ghat instead.  Faces are computed from the pairing.
    """
    if not validate_params(params.z_id, params.a, params.d):
        raise ValueError(f"{params.label} is not admissible")
    a, d = params.a, params.d
    rays = [
        (RayLabel.R1, "phi*H", phi_star_H(params)),
        (RayLabel.R2, "G" if a == 0 else f"{a}*phi*H + G",
         a * phi_star_H(params) + G(params)),
    ]
    if a >= d:
        rays.append((RayLabel.R3, "Ghat", G_hat(params)))
    else:
        rays.append((RayLabel.R3, "G + Ehat", G(params) + E_hat(params)))
        if a > 0:
            rays.append((RayLabel.R4, f"{d}*G + {a}*Ehat",
                         d * G(params) + a * E_hat(params)))
    generators = ne_generators(params)
    out = []
    for label, name, gen in rays:
        face = set()
        for C in generators:
            value = pairing(gen, C)
            if value == 0:
                face.add(C.kind)
            elif value < 0:
                raise ConsistencyError(
                    f"{params.label}: ray {name} pairs {value} < 0 with "
                    f"{C.kind.value}")
        contraction = "fibre type" if label is RayLabel.R1 else "divisorial"
        out.append(NefRay(label, name, gen, frozenset(face), contraction))
    return out


def is_fano(params: FamilyParams) -> bool:
    """Whether the 4-fold built from (z_id, a, d) is Fano, i.e. -K positive
    on every generator of NE(X).

    No admissibility is assumed (this predicate is half of admissibility);
    the amplitude test is checked against its arithmetic form
    a <= i - 1 and d - a <= i - 1.
    """
    i, a, d = params.threefold.index, params.a, params.d
    antiK = divisor(params, i - a, 2, 1)
    ample = all(pairing(antiK, curve(params, g)) > 0 for g in _ne_kinds(a, d))
    arithmetic = a <= i - 1 and d - a <= i - 1
    if ample != arithmetic:
        raise ConsistencyError(
            f"{params.label}: amplitude test {ample} but index bounds give "
            f"{arithmetic}")
    return ample


class FibreLike(Enum):
    """Can the 4-fold appear as the fibre of an elementary fibre-type
    contraction of a higher-dimensional variety?  The cone geometry rules it
    out whenever a != d/2; no positive criterion is available."""

    NOT_FIBRE_LIKE = "not_fibre_like"
    UNDETERMINED = "undetermined"


def is_fibre_like(params: FamilyParams) -> FibreLike:
    if not validate_params(params.z_id, params.a, params.d):
        raise ValueError(f"{params.label} is not admissible")
    if 2 * params.a != params.d:
        return FibreLike.NOT_FIBRE_LIKE
    return FibreLike.UNDETERMINED
