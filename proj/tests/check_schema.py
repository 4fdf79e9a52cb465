"""Validates CLI JSON reports against the published schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["check", "catalog:M3-overlap"],
    ["check", "catalog:B8-partial", "--m2-rows", "3"],
    ["check", "catalog:M3-delta"],
    ["embed", "catalog:B2-full", "--mode", "overlap"],
    ["embed", "catalog:B8-partial", "--mode", "smallest", "--bounded"],
    ["enumerate", "--size", "4", "--kind", "semilattices"],
    ["enumerate", "--base", "catalog:B2-overlap", "--kind", "preclosures"],
    ["enumerate", "--size", "2", "--kind", "event-structures"],
    ["catalog"],
    ["catalog", "M4-Ds"],
    ["verify-theorems", "--max", "3"],
    ["convert", "catalog:B2-full", "--to", "event-structure"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        status = "ok" if not errors else "FAIL"
        print(f"{status} {' '.join(args)}")
        for e in errors[:5]:
            print(f"  {list(e.absolute_path)}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
