#!/usr/bin/env python3
"""Regenerate the golden CLI reports for every curated catalog entry.

Run after intentional report-format changes, then review the diff:

    python3 scripts/regenerate_golden_reports.py
"""

from __future__ import annotations

import sys
from pathlib import Path

from reductive_workbench.catalog import catalog_names, construct
from reductive_workbench.report import run_report


def main() -> int:
    golden_dir = Path(__file__).resolve().parent.parent / "tests" / "golden"
    golden_dir.mkdir(parents=True, exist_ok=True)
    for name in catalog_names():
        report = run_report(construct(name), checks="all", numeric=False)
        json_path = golden_dir / f"{name}.json"
        json_path.write_text(report.to_json(), encoding="utf-8")
        text_path = golden_dir / f"{name}.txt"
        text_path.write_text(report.to_text(), encoding="utf-8")
        print(f"wrote {json_path.name}, {text_path.name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
