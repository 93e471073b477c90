"""Record assembly, verification against the reference tables, and export.

:func:`build_record` runs every module on one family and bundles the results;
all cross-checks of the underlying modules run as a side effect, and any
failure is re-raised with the family label attached.  :func:`verify_all`
diffs the 28 computed records field by field against the embedded reference
tables and reports mismatches as data (never as exceptions), so a red table
is an ordinary result, not a crash.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from math import gcd

from . import classify, cones, golden, intersect
from .catalog import FamilyParams, enumerate_families
from .errors import ConsistencyError, IntegrityError
from .golden import GoldenTables, golden_tables
from .hodge import hodge_of_fourfold

__all__ = [
    "FamilyRecord",
    "Mismatch",
    "VerificationReport",
    "build_record",
    "build_all_records",
    "verify_all",
    "export",
    "EXPORT_FIELDS",
]

#: ranks shared by all 28 families
PICARD_NUMBER = 3
FANO_INDEX = 1


@dataclass(frozen=True)
class FamilyRecord:
    """Everything the tables record about one family."""

    params: FamilyParams
    label: str
    K4: int
    K2c2: int
    h0_antiK: int
    h12: int
    h13: int
    h22: int
    base_locus: classify.BaseLocusResult
    rationality: classify.Rationality
    toric_label: classify.ToricLabel | None
    fibre_like: cones.FibreLike
    tangent: classify.TangentBounds
    ne_generator_count: int
    nef_ray_count: int


def build_record(params: FamilyParams) -> FamilyRecord:
    """Compute the full record for one admissible family."""
    try:
        return _build_record(params)
    except (ConsistencyError, IntegrityError) as exc:
        raise type(exc)(f"{params.label}: {exc}") from exc


def _build_record(params: FamilyParams) -> FamilyRecord:
    Z = params.threefold
    inv = intersect.fano4_invariants(Z, params.a, params.d)
    hdg = hodge_of_fourfold(Z, params.a, params.d)

    antiK = cones.anticanonical(params)
    generators = cones.ne_generators(params)
    rays = cones.nef_rays(params)
    degrees = [cones.pairing(antiK, C) for C in generators]
    if any(v < 1 for v in degrees) or degrees[0] != 1:
        raise ConsistencyError(f"-K degrees on NE generators are {degrees}")
    if gcd(*(int(v) for v in degrees)) != FANO_INDEX:
        raise ConsistencyError(f"-K degrees {degrees} have gcd != {FANO_INDEX}")

    four_gens = 0 < params.a < params.d
    if (len(generators) == 4) != four_gens or (len(rays) == 4) != four_gens:
        raise ConsistencyError(
            f"cone sizes ({len(generators)} NE generators, {len(rays)} nef "
            f"rays) do not match the case 0 < a < d = {four_gens}")

    chi = classify.chi_tangent(inv.K4, inv.h0_antiK, hdg.h12, hdg.h13, hdg.h22)
    return FamilyRecord(
        params=params,
        label=params.label,
        K4=inv.K4,
        K2c2=inv.K2c2,
        h0_antiK=inv.h0_antiK,
        h12=hdg.h12,
        h13=hdg.h13,
        h22=hdg.h22,
        base_locus=classify.base_locus(params),
        rationality=classify.rationality(params),
        toric_label=classify.toric_label(params),
        fibre_like=cones.is_fibre_like(params),
        tangent=classify.tangent_bounds(params, chi),
        ne_generator_count=len(generators),
        nef_ray_count=len(rays),
    )


def build_all_records() -> list[FamilyRecord]:
    return [build_record(p) for p in enumerate_families()]


@dataclass(frozen=True)
class Mismatch:
    family: str
    field: str
    expected: object
    computed: object


@dataclass(frozen=True)
class VerificationReport:
    pass_count: int
    fail_count: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return self.fail_count == 0 and not self.mismatches


def verify_all(records: list[FamilyRecord] | None = None,
               tables: GoldenTables | None = None) -> VerificationReport:
    """Diff the computed records against the reference tables.

    Counts families: a family passes when every field of its table-2 and
    table-3 rows matches.  ``records``/``tables`` can be overridden to probe
    the sensitivity of the comparison (fault injection); by default the 28
    canonical records are built and checked against the embedded tables.
    """
    if records is None:
        records = build_all_records()
    if tables is None:
        tables = golden_tables()
    by_label = {r.label: r for r in records}
    table3 = {row.label: row for row in tables.table3}

    mismatches: list[Mismatch] = []
    passed = failed = 0
    for expected in tables.table2:
        row_mismatches = list(_diff_family(by_label.get(expected.label),
                                           expected,
                                           table3.get(expected.label)))
        if row_mismatches:
            failed += 1
            mismatches.extend(row_mismatches)
        else:
            passed += 1
    for record in records:
        if not any(row.label == record.label for row in tables.table2):
            failed += 1
            mismatches.append(Mismatch(record.label, "label",
                                       expected=None, computed=record.label))
    return VerificationReport(passed, failed, tuple(mismatches))


def _diff_family(record, expected: golden.GoldenFamilyRow,
                 tangent: golden.GoldenTangentRow | None):
    if record is None:
        yield Mismatch(expected.label, "label", expected.label, None)
        return
    for field in ("K4", "K2c2", "h0_antiK", "h12", "h13", "h22"):
        got = getattr(record, field)
        want = getattr(expected, field)
        if got != want:
            yield Mismatch(expected.label, field, want, got)
    if record.base_locus.kind.value != expected.base_locus:
        yield Mismatch(expected.label, "base_locus", expected.base_locus,
                       record.base_locus.kind.value)
    if record.rationality.value != expected.rationality:
        yield Mismatch(expected.label, "rationality", expected.rationality,
                       record.rationality.value)
    if tangent is None:
        yield Mismatch(expected.label, "tangent_row", "present", None)
        return
    t = record.tangent
    for field, want, got in (
        ("chi_T", tangent.chi, t.chi),
        ("h0_T", tangent.h0, t.h0_upper if t.h0_exact is None else t.h0_exact),
        ("h0_T_is_exact", tangent.h0_is_exact, t.h0_exact is not None),
        ("h1_T", tangent.h1, t.h1_upper if t.h1_exact is None else t.h1_exact),
        ("h1_T_is_exact", tangent.h1_is_exact, t.h1_exact is not None),
    ):
        if got != want:
            yield Mismatch(expected.label, field, want, got)


EXPORT_FIELDS = (
    "z_id", "a", "d", "label", "K4", "K2c2", "h0_antiK", "h12", "h13", "h22",
    "base_locus", "rationality", "toric_label", "fibre_like",
    "chi_T", "h0_T", "h1_T", "h0_T_is_exact", "h1_T_is_exact",
)


def _record_row(record: FamilyRecord) -> dict[str, object]:
    t = record.tangent
    return {
        "z_id": record.params.z_id,
        "a": record.params.a,
        "d": record.params.d,
        "label": record.label,
        "K4": record.K4,
        "K2c2": record.K2c2,
        "h0_antiK": record.h0_antiK,
        "h12": record.h12,
        "h13": record.h13,
        "h22": record.h22,
        "base_locus": record.base_locus.kind.value,
        "rationality": record.rationality.value,
        "toric_label": None if record.toric_label is None else record.toric_label.value,
        "fibre_like": record.fibre_like.value,
        "chi_T": t.chi,
        "h0_T": t.h0_upper if t.h0_exact is None else t.h0_exact,
        "h1_T": t.h1_upper if t.h1_exact is None else t.h1_exact,
        "h0_T_is_exact": t.h0_exact is not None,
        "h1_T_is_exact": t.h1_exact is not None,
    }


_RATIONALITY_TEXT = {
    classify.Rationality.RATIONAL: "rational",
    classify.Rationality.VERY_GENERAL_NOT_RATIONAL:
        "the very general is not rational",
    classify.Rationality.UNKNOWN: "?",
    classify.Rationality.TORIC: "toric",
}


def export(records: list[FamilyRecord], format: str) -> bytes:
    """Serialise records as UTF-8 bytes; format is json, csv or markdown.

    The json and csv exports carry the full field set; the markdown export
    mirrors the layout of the main invariant table.  Output is byte-for-byte
    deterministic for a given record list.
    """
    if not records:
        raise ValueError("no records to export")
    if format == "json":
        rows = [_record_row(r) for r in records]
        return (json.dumps(rows, indent=2) + "\n").encode("utf-8")
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=EXPORT_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            row = _record_row(r)
            row["toric_label"] = row["toric_label"] or ""
            writer.writerow(row)
        return buf.getvalue().encode("utf-8")
    if format == "markdown":
        lines = [
            "| family | K^4 | K^2.c2 | h^0(-K) | h^{1,2} | h^{1,3} | h^{2,2} "
            "| Bs(-K) | rationality |",
            "|---|---|---|---|---|---|---|---|---|",
        ]
        for r in records:
            bs = {"empty": "empty", "one_point": "{Q0}",
                  "two_points": "{Q1, Q2}"}[r.base_locus.kind.value]
            lines.append(
                f"| {r.label} | {r.K4} | {r.K2c2} | {r.h0_antiK} | {r.h12} "
                f"| {r.h13} | {r.h22} | {bs} | {_RATIONALITY_TEXT[r.rationality]} |")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unsupported format {format!r}")
