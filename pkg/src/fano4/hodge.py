"""Hodge-number calculus for the bundle/blow-up construction.

The workhorse is the Hodge polynomial e(W)(u, v) = sum_{p,q} h^{p,q}(W) u^p v^q
of a smooth projective variety, together with its two structure formulas:

* projective bundle:  e(P(E)) = e(W) * e(P^n)  for a rank-(n+1) bundle E on W;
* blow-up:            e(W~) = e(W) + e(V) * (e(P^{c-1}) - 1)  for a smooth
  centre V of codimension c.

For a family (Z, a, d) the 4-fold is a blow-up of the P^1-bundle Y over Z
along a surface isomorphic to a smooth member A of |O_Z(d)|, so its three
unknown Hodge numbers have closed forms in terms of h^{1,2}(Z) and the
surface numbers h^{0,2}(A), h^{1,1}(A).  Both routes are computed here and
must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .catalog import FanoThreefold
from .errors import ConsistencyError, IntegrityError

__all__ = [
    "HodgePolynomial",
    "SurfaceHodge",
    "FourfoldHodge",
    "projective_space",
    "bundle_formula",
    "blowup_formula",
    "surface_h02",
    "surface_h11",
    "surface_hodge",
    "hodge_of_threefold",
    "hodge_of_surface",
    "hodge_of_fourfold",
]


class HodgePolynomial:
    """A sparse two-variable polynomial with integer coefficients.

    Coefficients are indexed by (p, q); zero entries are dropped.  Supports
    +, - and * (polynomial product), which is all the structure formulas need.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int]):
        terms = []
        for (p, q), c in coeffs.items():
            if c == 0:
                continue
            if p < 0 or q < 0:
                raise ValueError(f"negative exponent in term ({p},{q})")
            terms.append(((p, q), c))
        terms.sort()
        self._terms = tuple(terms)

    def coeff(self, p: int, q: int) -> int:
        return dict(self._terms).get((p, q), 0)

    def items(self) -> Iterable[tuple[tuple[int, int], int]]:
        return iter(self._terms)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def total(self) -> int:
        """Sum of all coefficients: the total Betti number for a variety."""
        return sum(c for _, c in self._terms)

    def betti(self, k: int) -> int:
        """Sum of coefficients on the antidiagonal p + q = k."""
        return sum(c for (p, q), c in self._terms if p + q == k)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get((q, p), 0) == c for (p, q), c in d.items())

    def max_p(self) -> int:
        return max((p for (p, _), _ in self._terms), default=0)

    def __add__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out = self.as_dict()
        for pq, c in other.items():
            out[pq] = out.get(pq, 0) + c
        return HodgePolynomial(out)

    def __sub__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out = self.as_dict()
        for pq, c in other.items():
            out[pq] = out.get(pq, 0) - c
        return HodgePolynomial(out)

    def __mul__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self.items():
            for (p2, q2), c2 in other.items():
                pq = (p1 + p2, q1 + q2)
                out[pq] = out.get(pq, 0) + c1 * c2
        return HodgePolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p},{q}): {c}" for (p, q), c in self._terms)
        return f"HodgePolynomial({{{inner}}})"


def projective_space(n: int) -> HodgePolynomial:
    """e(P^n): ones on the diagonal up to (n, n)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return HodgePolynomial({(i, i): 1 for i in range(n + 1)})


def bundle_formula(eW: HodgePolynomial, n: int) -> HodgePolynomial:
    """Hodge polynomial of a P^n-bundle over a variety with polynomial eW."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return eW * projective_space(n)


def blowup_formula(eW: HodgePolynomial, eV: HodgePolynomial, c: int) -> HodgePolynomial:
    """Hodge polynomial of the blow-up of W along a codimension-c centre V."""
    if c < 2:
        raise ValueError(f"codimension must be >= 2, got {c}")
    return eW + eV * (projective_space(c - 1) - projective_space(0))


@dataclass(frozen=True)
class SurfaceHodge:
    """Hodge numbers of a smooth surface A in |O_Z(d)|; h^{0,1} = 0 always
    (Lefschetz hyperplane theorem)."""

    h01: int
    h02: int
    h11: int


def surface_h02(Z: FanoThreefold, d: int) -> int:
    """h^{0,2} of a smooth surface A in |O_Z(d)|.

    Equals h^3(O_Z(-d)) by the restriction sequence, which Kodaira vanishing
    pins down for d <= i_Z; the two indices with room above i_Z (the quadric
    and P^3) are handled by their ambient-space cohomology:

    * d <  i_Z: 0
    * d == i_Z: 1
    * i_Z == 3, d == 4: 5
    * i_Z == 4: binom(d-1, 3)
    """
    i = Z.index
    if not 1 <= d <= 2 * i - 2:
        raise ValueError(f"d must be in 1..{2 * i - 2} for index {i}, got {d}")
    if d < i:
        return 0
    if d == i:
        return 1
    if i == 3 and d == 4:
        return 5
    if i == 4:
        return comb(d - 1, 3)
    raise AssertionError("unreachable: d <= 2i-2 leaves no other case")


def surface_h11(Z: FanoThreefold, d: int) -> int:
    """h^{1,1} of a smooth surface A in |O_Z(d)|, via Noether's formula:
    h^{1,1} = 10 + 10*h^{0,2} - d*(d - i_Z)^2*delta."""
    value = 10 + 10 * surface_h02(Z, d) - d * (d - Z.index) ** 2 * Z.degree
    if value <= 0:
        raise IntegrityError(f"h^{{1,1}}(A) = {value} <= 0 for Z_{Z.id}, d={d}")
    return value


def surface_hodge(Z: FanoThreefold, d: int) -> SurfaceHodge:
    return SurfaceHodge(h01=0, h02=surface_h02(Z, d), h11=surface_h11(Z, d))


def hodge_of_threefold(Z: FanoThreefold) -> HodgePolynomial:
    """e(Z) for a catalogued 3-fold: diagonal ones (rho = 1 and Fano
    vanishing force h^{1,1} = 1) plus the off-diagonal h^{1,2} entries."""
    return HodgePolynomial({
        (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1,
        (1, 2): Z.h12, (2, 1): Z.h12,
    })


def hodge_of_surface(Z: FanoThreefold, d: int) -> HodgePolynomial:
    s = surface_hodge(Z, d)
    return HodgePolynomial({
        (0, 0): 1, (2, 2): 1,
        (0, 2): s.h02, (2, 0): s.h02,
        (1, 1): s.h11,
    })


@dataclass(frozen=True)
class FourfoldHodge:
    """The three Hodge numbers of the 4-fold not fixed by Fano vanishing."""

    h12: int
    h13: int
    h22: int


def hodge_of_fourfold(Z: FanoThreefold, a: int, d: int) -> FourfoldHodge:
    """Hodge numbers of the 4-fold built from (Z, a, d).

    The result depends only on Z and d, never on a: the blow-up centre is a
    surface in |O_Z(d)| whichever bundle twist a is used.  ``a`` is accepted
    (and ignored) so call sites can pass full family parameters.

    Computed twice -- closed forms and the polynomial calculus
    e(X) = e(Z)*e(P^1) + e(A)*(e(P^1) - 1) -- and cross-checked.
    """
    closed = FourfoldHodge(
        h12=Z.h12,
        h13=surface_h02(Z, d),
        h22=2 + surface_h11(Z, d),
    )
    eX = blowup_formula(bundle_formula(hodge_of_threefold(Z), 1),
                        hodge_of_surface(Z, d), 2)
    via_poly = FourfoldHodge(
        h12=eX.coeff(1, 2),
        h13=eX.coeff(1, 3),
        h22=eX.coeff(2, 2),
    )
    if closed != via_poly:
        raise ConsistencyError(
            f"Hodge numbers disagree for Z_{Z.id}, d={d}: closed {closed}, "
            f"polynomial {via_poly}")
    return closed
