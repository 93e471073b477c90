from __future__ import annotations

from math import comb

import pytest

from fano4.catalog import FamilyParams, catalog, enumerate_families, threefold
from fano4.classify import (
    BaseLocusKind,
    Rationality,
    ToricLabel,
    base_locus,
    chi_tangent,
    h0_line_bundle,
    rationality,
    tangent_bounds,
    toric_label,
)
from fano4.errors import IntegrityError


def sections_of_p3(d: int) -> int:
    """Oracle: monomial count for O(d) on P^3."""
    return comb(d + 3, 3)


def sections_of_quadric(d: int) -> int:
    """Oracle: degree-d forms on P^4 modulo multiples of the quadric."""
    def forms(k: int) -> int:
        return comb(k + 4, 4) if k >= 0 else 0
    return forms(d) - forms(d - 2)


def test_base_locus_cases():
    assert base_locus(FamilyParams(1, 0, 1)).kind is BaseLocusKind.ONE_POINT
    assert base_locus(FamilyParams(1, 1, 2)).kind is BaseLocusKind.TWO_POINTS
    assert base_locus(FamilyParams(4, 0, 1)).kind is BaseLocusKind.EMPTY


def test_base_locus_general_member_always_smooth():
    for p in enumerate_families():
        assert base_locus(p).general_member_smooth is True


def test_base_locus_nonempty_exactly_over_the_weighted_sextic():
    for p in enumerate_families():
        nonempty = base_locus(p).kind is not BaseLocusKind.EMPTY
        flagged = (p.threefold.base_locus_H.value == "one_simple_point"
                   and (p.a, p.d) in {(0, 1), (1, 2)})
        assert nonempty == flagged == (p.z_id == 1)


def test_base_locus_point_counts():
    counts = {p.label: base_locus(p).kind.point_count
              for p in enumerate_families()}
    assert counts["X^1_{0,1}"] == 1
    assert counts["X^1_{1,2}"] == 2
    assert sum(counts.values()) == 3


def test_rationality_cases():
    assert rationality(FamilyParams(3, 1, 2)) is Rationality.UNKNOWN
    assert rationality(FamilyParams(7, 2, 1)) is Rationality.TORIC
    assert toric_label(FamilyParams(7, 2, 1)) is ToricLabel.E2
    assert rationality(FamilyParams(2, 0, 1)) is Rationality.VERY_GENERAL_NOT_RATIONAL


def test_toric_families_and_labels():
    labels = {p.label: toric_label(p) for p in enumerate_families()
              if toric_label(p) is not None}
    assert labels == {
        "X^7_{0,1}": ToricLabel.E3,
        "X^7_{2,1}": ToricLabel.E2,
        "X^7_{3,1}": ToricLabel.E1,
    }
    for p in enumerate_families():
        assert (toric_label(p) is not None) == \
            (rationality(p) is Rationality.TORIC)


def test_rationality_follows_the_base_threefold():
    for p in enumerate_families():
        status = rationality(p)
        if p.threefold.rational:
            assert status.is_rational
        elif p.z_id == 3:
            assert status is Rationality.UNKNOWN
        else:
            assert status is Rationality.VERY_GENERAL_NOT_RATIONAL


def test_rationality_statuses_count():
    statuses = [rationality(p) for p in enumerate_families()]
    assert statuses.count(Rationality.TORIC) == 3
    assert statuses.count(Rationality.RATIONAL) == 19
    assert statuses.count(Rationality.VERY_GENERAL_NOT_RATIONAL) == 4
    assert statuses.count(Rationality.UNKNOWN) == 2


def test_h0_line_bundle_against_p3_oracle():
    for d in range(1, 7):
        assert h0_line_bundle(threefold(7), d) == sections_of_p3(d)


def test_h0_line_bundle_against_quadric_oracle():
    for d in range(1, 5):
        assert h0_line_bundle(threefold(6), d) == sections_of_quadric(d)


def test_h0_line_bundle_weighted_sextic():
    # 1 + 1 + (1/12)(4 + 6 + 2)
    assert h0_line_bundle(threefold(1), 1) == 3


def test_h0_line_bundle_integral_and_positive_on_wide_grid():
    for z in catalog():
        for d in range(1, 13):
            assert h0_line_bundle(z, d) >= 1


def test_h0_line_bundle_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        h0_line_bundle(threefold(7), 0)


def test_h0_line_bundle_integrality_guard():
    from fano4.catalog import FanoThreefold, HBaseLocus
    fake = FanoThreefold(7, 4, 1, 0, 15, 0, HBaseLocus.EMPTY, True, "fake")
    broken = FanoThreefold(7, 5, 1, 0, 15, 0, HBaseLocus.EMPTY, True, "odd index")
    assert h0_line_bundle(fake, 1) == 4
    with pytest.raises(IntegrityError):
        h0_line_bundle(broken, 1)   # 2d/i = 2/5


@pytest.mark.parametrize("label,expected", [
    ("X^7_{0,1}", 14),
    ("X^1_{1,2}", -39),
    ("X^6_{2,4}", -43),
])
def test_chi_tangent_examples(label, expected):
    from fano4.report import build_record
    by_label = {p.label: p for p in enumerate_families()}
    r = build_record(by_label[label])
    assert chi_tangent(r.K4, r.h0_antiK, r.h12, r.h13, r.h22) == expected


def test_tangent_bounds_weighted_sextic_first_family():
    t = tangent_bounds(FamilyParams(1, 0, 1), chi=-34)
    assert (t.chi, t.h1_exact, t.h0_exact) == (-34, 36, 2)
    assert t.is_exact


def test_tangent_bounds_rigid_family():
    t = tangent_bounds(FamilyParams(7, 3, 2), chi=11)
    assert (t.chi, t.h1_exact, t.h0_exact) == (11, 0, 11)
    assert (t.h1_upper, t.h0_upper) == (0, 11)


def test_tangent_bounds_gives_only_bounds_for_grassmannian_section():
    t = tangent_bounds(FamilyParams(5, 0, 1), chi=-1)
    assert t.chi == -1
    assert (t.h1_upper, t.h0_upper) == (6, 5)
    assert t.h1_exact is None and t.h0_exact is None
    assert not t.is_exact


def test_tangent_bounds_arithmetic_invariants():
    from fano4.report import build_all_records
    for r in build_all_records():
        t = r.tangent
        p = r.params
        if t.h1_exact is not None:
            assert t.h0_exact - t.h1_exact == t.chi
            assert t.h1_exact == t.h1_upper
            assert t.h0_exact == t.h0_upper
        assert t.h0_upper == t.chi + t.h1_upper
        assert t.h0_upper >= 0 and t.h1_upper >= 0
        # the bound never exceeds the raw deformation count
        Z = p.threefold
        assert t.h1_upper <= Z.h1_tangent + h0_line_bundle(Z, p.d) - 1


def test_tangent_exactness_pattern():
    # exact for z_id <= 4 and for the rigid families over P^3 with d <= 2
    for p in enumerate_families():
        t = tangent_bounds(p, chi=chi_for(p))
        expected = p.z_id <= 4 or (p.z_id == 7 and p.d <= 2)
        assert t.is_exact == expected


def chi_for(p: FamilyParams) -> int:
    from fano4.report import build_record
    return build_record(p).tangent.chi


def test_classify_rejects_inadmissible():
    for fn in (base_locus, rationality, toric_label):
        with pytest.raises(ValueError):
            fn(FamilyParams(7, 4, 1))
    with pytest.raises(ValueError):
        tangent_bounds(FamilyParams(7, 4, 1), chi=0)
