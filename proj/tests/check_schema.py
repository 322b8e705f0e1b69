"""Runs every qlf subcommand once and validates the JSON report against the schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["invariant", "--m", "3", "--N", "9", "--method", "all"],
    ["--backend", "both", "invariant", "--m", "2", "--N", "5"],
    ["qseries", "verify-identity", "--m", "3", "--a", "1", "--q-order", "30", "--x-order", "10"],
    ["qseries", "verify-recurrences", "--m", "3", "--q-order", "15", "--cap", "5"],
    ["qseries", "coeffs", "--m", "2", "--q-order", "10", "--x-order", "4"],
    ["eichler", "rational", "--m", "4", "--a", "2", "--N", "7"],
    ["euler", "--m", "3", "--a", "1", "--kmax", "5"],
    ["modular", "s-check", "--m", "3"],
    ["modular", "t-check", "--m", "3"],
    ["eta-identity", "--case", "m3", "--q-order", "20"],
    ["character", "--level", "1", "--q-order", "10"],
    ["zagier-check", "--q-order", "20"],
    ["zagier-check", "--q-order", "20", "--sign", "1"],
    ["asymptotic", "--m", "2", "--K", "1", "--N-list", "4,8"],
    ["conjecture2", "--m", "3", "--a", "1", "--N-list", "2,5"],
    ["volume-check", "--m", "2", "--N-list", "10,20"],
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for cmd in COMMANDS:
        proc = subprocess.run([exe, *cmd], capture_output=True, text=True, check=False)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(cmd)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            print(f"FAIL {' '.join(cmd)}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(cmd)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
