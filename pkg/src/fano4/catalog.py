"""The seven Fano 3-folds of Picard number 1 and index >= 2, and the
admissible family parameters built on top of them.

Every family in this package is a 4-fold obtained from a triple ``(Z, a, d)``:
take the P^1-bundle ``Y = P(O_Z + O_Z(a))`` over one of the seven 3-folds
``Z`` below, then blow up the intersection of a section with the preimage of
a smooth surface ``A`` in ``|O_Z(d)|``.  The triple is *admissible* when

    d >= 1,    a > d  or  0 <= a <= d/2,    a <= i_Z - 1,    d - a <= i_Z - 1,

where ``i_Z`` is the Fano index of ``Z``.  The first pair of conditions
normalizes away the isomorphism (a, d) ~ (d - a, d); the last pair is exactly
the condition that the resulting 4-fold is Fano.  These constraints force
``d <= 2*i_Z - 2`` and leave precisely 28 admissible triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import IntegrityError

__all__ = [
    "HBaseLocus",
    "FanoThreefold",
    "FamilyParams",
    "catalog",
    "threefold",
    "validate_params",
    "enumerate_families",
]


class HBaseLocus(Enum):
    """Base locus of |O_Z(1)| on a catalogued 3-fold."""

    EMPTY = "empty"
    ONE_SIMPLE_POINT = "one_simple_point"


@dataclass(frozen=True)
class FanoThreefold:
    """One row of the catalogue of Fano 3-folds with rho = 1 and index >= 2.

    ``degree`` is delta = H^3 for the ample generator H of Pic(Z); ``h12`` is
    the Hodge number h^{1,2}(Z); ``h0_tangent``/``h1_tangent`` are the
    dimensions of H^0 and H^1 of the tangent sheaf.
    """

    id: int
    index: int
    degree: int
    h12: int
    h0_tangent: int
    h1_tangent: int
    base_locus_H: HBaseLocus
    rational: bool
    description: str

    @property
    def minus_K3(self) -> int:
        """The anticanonical degree -K_Z^3 = i_Z^3 * delta."""
        return self.index**3 * self.degree

    @property
    def chi_tangent(self) -> int:
        return self.h0_tangent - self.h1_tangent


_CATALOG: tuple[FanoThreefold, ...] = (
    FanoThreefold(1, 2, 1, 21, 0, 34, HBaseLocus.ONE_SIMPLE_POINT, False,
                  "sextic hypersurface in the weighted projective space P(1,1,1,2,3)"),
    FanoThreefold(2, 2, 2, 10, 0, 19, HBaseLocus.EMPTY, False,
                  "double cover of P^3 branched along a smooth quartic surface"),
    FanoThreefold(3, 2, 3, 5, 0, 10, HBaseLocus.EMPTY, False,
                  "smooth cubic hypersurface in P^4"),
    FanoThreefold(4, 2, 4, 2, 0, 3, HBaseLocus.EMPTY, True,
                  "smooth intersection of two quadrics in P^5"),
    FanoThreefold(5, 2, 5, 0, 3, 0, HBaseLocus.EMPTY, True,
                  "section of Gr(2,5) in P^9 by a linear subspace of codimension 3"),
    FanoThreefold(6, 3, 2, 0, 10, 0, HBaseLocus.EMPTY, True,
                  "smooth quadric hypersurface in P^4"),
    FanoThreefold(7, 4, 1, 0, 15, 0, HBaseLocus.EMPTY, True,
                  "P^3"),
)

# -K_Z^3 column as recorded in the source classification, kept separate so the
# i^3*delta identity below is a genuine cross-check of the embedded data.
_MINUS_K3_COLUMN = {1: 8, 2: 16, 3: 24, 4: 32, 5: 40, 6: 54, 7: 64}


def _validate_catalog() -> None:
    for z in _CATALOG:
        if z.minus_K3 != _MINUS_K3_COLUMN[z.id]:
            raise IntegrityError(
                f"Z_{z.id}: i^3*delta = {z.minus_K3} != recorded -K^3 = "
                f"{_MINUS_K3_COLUMN[z.id]}")
        # chi(T_Z) = -K_Z^3/2 - h^{1,2}(Z) - 17, from Riemann-Roch on T_Z.
        chi = z.minus_K3 // 2 - z.h12 - 17
        if z.minus_K3 % 2 != 0 or z.chi_tangent != chi:
            raise IntegrityError(
                f"Z_{z.id}: h0(T)-h1(T) = {z.chi_tangent} != chi(T) = {chi}")


_validate_catalog()


def catalog() -> list[FanoThreefold]:
    """All seven 3-folds, ordered by id."""
    return list(_CATALOG)


def threefold(z_id: int) -> FanoThreefold:
    """The catalogue row with the given id (1..7)."""
    if not 1 <= z_id <= 7:
        raise ValueError(f"z_id must be in 1..7, got {z_id}")
    return _CATALOG[z_id - 1]


@dataclass(frozen=True, order=True)
class FamilyParams:
    """A triple (z_id, a, d) naming the family X^{z_id}_{a,d}.

    The constructor checks only the basic domain (z_id in 1..7, a >= 0,
    d >= 1); admissibility is the job of :func:`validate_params`, so that
    non-admissible triples can still be talked about (e.g. to show they fail
    the Fano criterion).
    """

    z_id: int
    a: int
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.z_id <= 7:
            raise ValueError(f"z_id must be in 1..7, got {self.z_id}")
        if self.a < 0:
            raise ValueError(f"a must be >= 0, got {self.a}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")

    @property
    def threefold(self) -> FanoThreefold:
        return _CATALOG[self.z_id - 1]

    @property
    def label(self) -> str:
        return f"X^{self.z_id}_{{{self.a},{self.d}}}"


def validate_params(z_id: int, a: int, d: int) -> bool:
    """Whether (z_id, a, d) is an admissible triple.

    Out-of-domain input (z_id outside 1..7, a < 0, d < 1) raises ValueError
    rather than returning False: those triples are malformed, not just
    non-admissible.
    """
    if not 1 <= z_id <= 7:
        raise ValueError(f"z_id must be in 1..7, got {z_id}")
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    i = _CATALOG[z_id - 1].index
    if not (a > d or 2 * a <= d):
        return False
    return a <= i - 1 and d - a <= i - 1


def enumerate_families() -> list[FamilyParams]:
    """All 28 admissible triples, ordered by (z_id, a, d).

    The admissibility constraints bound the search grid outright:
    a <= i_Z - 1 and d <= 2*i_Z - 2.
    """
    families = []
    for z in _CATALOG:
        for a in range(z.index):
            for d in range(1, 2 * z.index - 1):
                if validate_params(z.id, a, d):
                    families.append(FamilyParams(z.id, a, d))
    families.sort()
    return families
