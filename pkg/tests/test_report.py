from __future__ import annotations

import csv
import dataclasses
import io
import json

import pytest

from fano4.catalog import FamilyParams, catalog, enumerate_families, threefold
from fano4.classify import BaseLocusKind, Rationality
from fano4.golden import golden_tables
from fano4.intersect import closed_k4, k4_closed_terms
from fano4.report import (
    EXPORT_FIELDS,
    build_all_records,
    build_record,
    export,
    verify_all,
)


@pytest.fixture(scope="module")
def records():
    return build_all_records()


@pytest.fixture(scope="module")
def by_label(records):
    return {r.label: r for r in records}


def test_build_record_p3_extreme_family(by_label):
    r = by_label["X^7_{3,6}"]
    assert (r.K4, r.h13, r.h22) == (170, 10, 88)
    assert r.tangent.chi == -67


def test_build_record_grassmannian_family(by_label):
    r = by_label["X^5_{1,2}"]
    assert r.h0_antiK == 37
    assert r.tangent.h1_upper == 22


def test_build_record_weighted_sextic_family(by_label):
    r = by_label["X^1_{0,1}"]
    assert r.base_locus.kind is BaseLocusKind.ONE_POINT
    assert r.rationality is Rationality.VERY_GENERAL_NOT_RATIONAL


def test_build_record_rejects_inadmissible():
    with pytest.raises(ValueError):
        build_record(FamilyParams(7, 4, 1))


def test_build_record_attaches_the_label_on_internal_errors(monkeypatch):
    import fano4.intersect as intersect
    from fano4.errors import ConsistencyError

    monkeypatch.setattr(intersect, "closed_k4", lambda Z, a, d, drop=None: 0)
    with pytest.raises(ConsistencyError, match=r"X\^6_\{2,4\}"):
        build_record(FamilyParams(6, 2, 4))


def test_record_cone_counts(records):
    for r in records:
        four = 0 < r.params.a < r.params.d
        assert (r.ne_generator_count == 4) == four
        assert (r.nef_ray_count == 4) == four
        assert r.ne_generator_count in (3, 4)


def test_record_labels_join_all_tables(records):
    tables = golden_tables()
    labels2 = [row.label for row in tables.table2]
    labels3 = [row.label for row in tables.table3]
    assert labels2 == labels3
    assert labels2 == [p.label for p in enumerate_families()]
    assert labels2 == [r.label for r in records]


def test_catalog_matches_reference_table1():
    for z, row in zip(catalog(), golden_tables().table1):
        assert (z.id, z.index, z.degree) == (row.id, row.index, row.degree)
        assert z.minus_K3 == row.minus_K3
        assert z.h12 == row.h12
        assert (z.h0_tangent, z.h1_tangent) == (row.h0_tangent, row.h1_tangent)
        assert z.base_locus_H.value == row.base_locus_H
        assert z.rational == row.rational


def test_verify_all_passes(records):
    result = verify_all(records)
    assert result.ok
    assert result.pass_count == 28
    assert result.fail_count == 0
    assert result.mismatches == ()


def test_verify_all_detects_tampered_reference(records):
    tables = golden_tables()
    bad_row = dataclasses.replace(tables.table2[16], K4=430)
    assert tables.table2[16].label == "X^7_{0,1}"
    tampered = dataclasses.replace(
        tables, table2=tables.table2[:16] + (bad_row,) + tables.table2[17:])
    result = verify_all(records, tampered)
    assert result.fail_count == 1
    assert result.pass_count == 27
    assert len(result.mismatches) == 1
    m = result.mismatches[0]
    assert (m.family, m.field, m.expected, m.computed) == \
        ("X^7_{0,1}", "K4", 430, 431)


def test_verify_all_detects_missing_record(records):
    result = verify_all(records[:-1])
    assert result.fail_count == 1
    assert result.mismatches[0].family == "X^7_{3,6}"


def test_verify_all_detects_dropped_k4_terms(records):
    """Dropping any single summand of the K^4 closed form must be caught."""
    term_names = list(k4_closed_terms(threefold(7), 1, 2))
    assert len(term_names) == 5
    for name in term_names:
        mutated = [
            dataclasses.replace(
                r, K4=closed_k4(r.params.threefold, r.params.a, r.params.d,
                                drop=name))
            for r in records
        ]
        result = verify_all(mutated)
        assert result.fail_count >= 1, f"dropping {name} went unnoticed"
        assert all(m.field == "K4" for m in result.mismatches)


def test_dropping_the_a_term_hits_exactly_the_twisted_families(records):
    mutated = [
        dataclasses.replace(
            r, K4=closed_k4(r.params.threefold, r.params.a, r.params.d,
                            drop="a*d^2*delta"))
        for r in records
    ]
    result = verify_all(mutated)
    mismatched = {m.family for m in result.mismatches}
    expected = {r.label for r in records if r.params.a > 0}
    assert mismatched == expected


def test_export_json_round_trip(records):
    payload = export(records, "json")
    rows = json.loads(payload.decode("utf-8"))
    assert len(rows) == 28
    assert list(rows[0]) == list(EXPORT_FIELDS)
    by_label = {row["label"]: row for row in rows}
    r = by_label["X^6_{2,4}"]
    assert (r["z_id"], r["a"], r["d"]) == (6, 2, 4)
    assert (r["K4"], r["K2c2"], r["h0_antiK"]) == (160, 148, 40)
    assert (r["h12"], r["h13"], r["h22"]) == (0, 5, 54)
    assert r["base_locus"] == "empty"
    assert r["rationality"] == "rational"
    assert r["toric_label"] is None
    assert r["fibre_like"] == "undetermined"
    assert (r["chi_T"], r["h0_T"], r["h1_T"]) == (-43, 11, 54)
    assert (r["h0_T_is_exact"], r["h1_T_is_exact"]) == (False, False)
    toric = by_label["X^7_{2,1}"]
    assert toric["toric_label"] == "E2"
    assert toric["rationality"] == "toric"
    exact = by_label["X^1_{0,1}"]
    assert (exact["h0_T"], exact["h1_T"]) == (2, 36)
    assert (exact["h0_T_is_exact"], exact["h1_T_is_exact"]) == (True, True)


def test_export_csv_shape(records):
    payload = export(records, "csv").decode("utf-8")
    assert "\r" not in payload
    lines = payload.splitlines()
    assert len(lines) == 29
    parsed = list(csv.DictReader(io.StringIO(payload)))
    assert len(parsed) == 28
    assert list(parsed[0]) == list(EXPORT_FIELDS)
    assert parsed[0]["label"] == "X^1_{0,1}"
    assert parsed[0]["K4"] == "47"


def test_export_markdown_mirrors_table2(records):
    tables = golden_tables()
    lines = export(records, "markdown").decode("utf-8").splitlines()
    assert len(lines) == 30   # header + rule + 28 rows
    for line, row in zip(lines[2:], tables.table2):
        cells = [c.strip() for c in line.strip("|").split("|")]
        assert cells[0] == row.label
        assert [int(c) for c in cells[1:7]] == \
            [row.K4, row.K2c2, row.h0_antiK, row.h12, row.h13, row.h22]


def test_export_is_deterministic(records):
    for fmt in ("json", "csv", "markdown"):
        assert export(records, fmt) == export(records, fmt)


def test_export_rejects_unknown_format(records):
    with pytest.raises(ValueError):
        export(records, "xml")
    with pytest.raises(ValueError):
        export([], "json")


def test_chi_equals_h0_minus_h1_for_exact_rows(records):
    exact_rows = [r for r in records if r.tangent.is_exact]
    assert len(exact_rows) == 14
    for r in exact_rows:
        assert r.tangent.h0_exact - r.tangent.h1_exact == r.tangent.chi
