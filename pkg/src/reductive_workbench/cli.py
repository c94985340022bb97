"""Command-line front end.

    analyze <file.json> [...]          analyze space-specification files
    analyze --catalog so4_mod_so2      analyze a named catalog entry
    analyze --list-catalog             list curated catalog names

Exit codes: 0 on success, 1 on input errors, 2 when a theorem verdict that
should hold fails (for CI gating). REDUCTIVE_WORKBENCH_THREADS caps the number
of analyses run in parallel; output order always follows input order.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import SpecFileError, WorkbenchError
from .report import PipelineError, run_report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="analyze",
        description="Exact structure analysis of normal homogeneous-space presentations.",
    )
    parser.add_argument("files", nargs="*", help="space specification files (JSON)")
    parser.add_argument(
        "--catalog",
        action="append",
        default=[],
        metavar="NAME",
        help="analyze a named catalog entry (repeatable)",
    )
    parser.add_argument("--json", action="store_true", help="emit the machine-readable report")
    parser.add_argument(
        "--checks",
        choices=["all", "fast"],
        default="all",
        help="fast skips the exhaustive connection-tensor consistency sweep",
    )
    parser.add_argument(
        "--numeric-checks",
        action="store_true",
        help="append floating-point lab residuals (catalog entries only)",
    )
    parser.add_argument("--list-catalog", action="store_true", help="list catalog names and exit")
    return parser


def _load_source(kind: str, value: str):
    if kind == "catalog":
        from .catalog import construct

        return construct(value)
    from .specfile import load_space_spec_file

    return load_space_spec_file(value)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.list_catalog:
        from .catalog import catalog_names

        for name in catalog_names():
            print(name)
        return 0

    inputs = [("file", path) for path in args.files]
    inputs.extend(("catalog", name) for name in args.catalog)
    if not inputs:
        print("nothing to analyze: give files or --catalog NAME", file=sys.stderr)
        return 1

    def analyze(item):
        kind, value = item
        source = _load_source(kind, value)
        report = run_report(source, checks=args.checks, numeric=args.numeric_checks)
        return report

    workers = int(os.environ.get("REDUCTIVE_WORKBENCH_THREADS", "1") or "1")
    try:
        if workers > 1 and len(inputs) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(analyze, inputs))
        else:
            reports = [analyze(item) for item in inputs]
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    exit_code = 0
    for (kind, value), report in zip(inputs, reports):
        if report.body["input"] == "file":
            report.body["input"] = f"file:{os.path.basename(value)}"
        if args.json:
            sys.stdout.write(report.to_json())
        else:
            sys.stdout.write(report.to_text())
        exit_code = max(exit_code, report.exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
