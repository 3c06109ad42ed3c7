#!/usr/bin/env python3
"""Validate the CLI's --format json output against the published schema.

Usage: validate_json.py <path-to-ncp-binary> <path-to-schema>
"""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    (["enumerate", "--legs", "3"], None),
    (["enumerate", "--legs", "4", "--blocks", "2", "--count"], None),
    (["enumerate", "--legs", "0"], None),
    (["eval", "invariant", "phi", "--partition", "1,3|2|4"], None),
    (["eval", "invariant", "phi", "--partition", "1|2|3", "--basis", "hilbert"], None),
    (["eval", "invariant", "lambda", "--partition", "1,3|2"], None),
    (["eval", "invariant", "lambda-strict", "--partition", "1,4|2|3"], None),
    (["eval", "invariant", "phi0", "--partition", "1|2"], None),
    (["eval", "invariant", "phi", "--partition", ""], None),
    (["eval", "character", "mu-ncp", "--partition", "1|2|3"], None),
    (["eval", "character", "gamma", "--partition", "1,2", "--q", "-3/7"], None),
    (["eval", "coproduct", "separation", "--partition", "1,3|2"], None),
    (["eval", "coproduct", "fusion", "--partition", "1|2|3"], None),
    (["eval", "antipode", "--partition", "1|2|3"], None),
    (["verify", "--suite", "antipode", "--max-legs", "3"], None),
    (["series", "invert", "--coeffs", "1,-1/2", "--order", "6"], None),
    (["series", "invert", "--coeffs", "1", "--order", "5", "--method", "ncp"], None),
    (["table", "a-in", "--max-n", "4"], None),
    (["table", "p-n", "--max-n", "4"], None),
    (["table", "lambda-jn", "--max-n", "5"], None),
    # batch over stdin produces an array envelope
    (["eval", "invariant", "phi", "--partition", "-"], "1|2\n1,3|2\n\n1,2,3\n"),
    (["eval", "character", "lambda0", "--partition", "-"], "1\n1,4|2|3\n"),
]


def main() -> int:
    if len(sys.argv) != 3:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as handle:
        schema = json.load(handle)
    validator = jsonschema.Draft7Validator(schema)

    bad = 0
    for args, stdin_data in COMMANDS:
        cmd = [binary, *args, "--format", "json"]
        proc = subprocess.run(
            cmd, input=stdin_data, capture_output=True, text=True, timeout=120
        )
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            bad += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: invalid JSON: {exc}")
            bad += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            first = errors[0]
            where = "/".join(str(p) for p in first.path) or "<root>"
            print(f"FAIL {label}: {where}: {first.message}")
            bad += 1
        else:
            print(f"ok   {label}")

    if bad:
        print(f"{bad}/{len(COMMANDS)} commands failed schema validation")
        return 1
    print(f"all {len(COMMANDS)} command outputs conform to the schema")
    return 0


if __name__ == "__main__":
    sys.exit(main())
