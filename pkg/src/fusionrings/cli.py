"""Command-line driver.

Subcommands: build a family datum to JSON, run verification suites, classify
a fusion ring, search for Lagrangian subgroups, and re-render saved reports.
Inputs to check/classify may be files produced by build or family names from
the grammar (B:r, D:r, TY:A, DTYPLUS:A, SL2:l, SU3, DIH:n, SEMI:k, POINTED:A,
BEVEN:r, DEVEN:r).  Exit codes: 0 all pass, 1 at least one check failed,
2 usage or schema error; undecided outcomes are flagged in the report but do
not affect the exit code.  FUSIONRINGS_PREC sets the default interval
precision in bits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier import classify
from .families import FamilySpecError, parse_family
from .groups import lagrangian_search, parse_form, parse_group
from .serialize import (
    SchemaError,
    classification_to_json,
    dumps_canonical,
    load_any,
    modular_to_json,
    ring_to_json,
)

USAGE_ERROR = 2


def _load_input(token: str):
    """A family name from the grammar, or a path to a JSON file."""
    if os.path.exists(token):
        try:
            with open(token, "r", encoding="utf-8") as fh:
                return load_any(json.load(fh))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    return parse_family(token)


def _cmd_build(args):
    kind, obj = parse_family(args.spec)
    blob = modular_to_json(obj) if kind == "modular" else ring_to_json(obj)
    text = dumps_canonical(blob)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_check(args):
    from .checks import run_suite

    kind, obj = _load_input(args.input)
    report = run_suite(args.input, obj, args.suite)
    if args.json:
        sys.stdout.write(dumps_canonical(report.to_json()))
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code()


def _cmd_classify(args):
    kind, obj = _load_input(args.input)
    if kind != "ring":
        print("classify needs a fusion ring (modular data given)", file=sys.stderr)
        return USAGE_ERROR
    result = classify(obj)
    sys.stdout.write(dumps_canonical(classification_to_json(result)))
    return 0


def _cmd_lagrangian(args):
    group = parse_group(args.group)
    form = parse_form(group, args.form)
    found = lagrangian_search(group, form)
    out = {
        "kind": "lagrangian",
        "group": list(group.orders),
        "found": found is not None,
        "subgroup": sorted(list(x) for x in found) if found is not None else None,
        "dty_group_theoretical": found is not None,
        "note": (
            "a Lagrangian subgroup makes the doubled Tambara-Yamagami category "
            "group-theoretical"
            if found is not None
            else "no subgroup satisfies L = L-perp"
        ),
    }
    sys.stdout.write(dumps_canonical(out))
    return 0


def _cmd_report(args):
    with open(args.input, "r", encoding="utf-8") as fh:
        blob = json.load(fh)
    if blob.get("kind") != "report":
        raise SchemaError("not a report file", "$.kind")
    if args.json:
        sys.stdout.write(dumps_canonical(blob))
        return 0
    lines = [f"subject: {blob['subject']}"]
    for c in blob["checks"]:
        mark = {"pass": "PASS", "fail": "FAIL", "undecided-insufficient-data": "UNDECIDED"}[
            c["status"]
        ]
        suffix = f"  ({c['witness']})" if c.get("witness") else ""
        lines.append(f"  [{mark}] {c['name']}{suffix}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 1 if any(c["status"] == "fail" for c in blob["checks"]) else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fusionrings",
        description="Exact fusion-ring and modular-data calculations and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a family datum and write it as JSON")
    p.add_argument("spec", help="family name, e.g. B:4, D:9, SU3, TY:2,2, DIH:8")
    p.add_argument("-o", "--output", help="output path (stdout when omitted)")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("input", help="JSON file or family name")
    p.add_argument(
        "--suite",
        default="all",
        choices=["axioms", "balancing", "verlinde", "grading", "symmetric", "gt", "all"],
    )
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("classify", help="classify a dimension-{1,2} fusion ring")
    p.add_argument("input", help="fusion-ring JSON file or family name")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("lagrangian", help="search for a Lagrangian subgroup")
    p.add_argument("--group", required=True, help="cyclic orders, e.g. 3,3")
    p.add_argument("--form", required=True, help="Gram matrix spec, e.g. 0,1;1,0@3")
    p.set_defaults(fn=_cmd_lagrangian)

    p = sub.add_parser("report", help="render a saved report")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    group.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SchemaError, FamilySpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
