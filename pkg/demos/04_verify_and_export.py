#!/usr/bin/env python3
"""Verify every computed record against the reference tables, then export.

The reference tables are embedded as independent static data; verification
diffs all 28 records field by field and reports mismatches as data.  The
same records can be serialised as json, csv or markdown.
"""

import sys

from fano4 import build_all_records, export, verify_all

records = build_all_records()
result = verify_all(records)
print(f"{result.pass_count}/{result.pass_count + result.fail_count} "
      f"families match the reference tables")
for m in result.mismatches:
    print(f"  MISMATCH {m.family} {m.field}: expected {m.expected}, "
          f"computed {m.computed}")
if not result.ok:
    sys.exit(1)

print()
print(export(records, "markdown").decode("utf-8"))
