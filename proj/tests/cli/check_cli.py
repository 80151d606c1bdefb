#!/usr/bin/env python3
"""Black-box checks of the tmahler binary.

  check_cli.py schema      TMAHLER SCHEMA   every JSON document validates, exit codes match
  check_cli.py determinism TMAHLER          repeated runs are byte-identical
"""

import csv
import io
import json
import subprocess
import sys

import jsonschema

# (argv, expected exit status)
CASES = [
    (["mahler", "--poly", "x+y+1", "--radii", "1,1", "--tol", "1e-6"], 0),
    (["mahler", "--poly", "x^3 - 2x", "--radii", "1.5"], 0),
    (["mahler", "--poly", "x+", "--radii", "1,1"], 1),
    (["lfunction", "--curve", "e20", "--what", "all"], 0),
    (["lfunction", "--curve", "e20", "--what", "l2"], 0),
    (["lfunction", "--curve", "custom", "--coeffs", "0,0,1,-1,0", "--conductor", "37",
      "--bad-ap", "37:-1", "--what", "all"], 0),
    (["lfunction", "--curve", "custom", "--coeffs", "2,0,0,-1,0", "--conductor", "10",
      "--bad-ap", "2:0,5:-1", "--what", "all"], 1),
    (["path", "classify", "--family", "S", "--a", "2"], 0),
    (["path", "classify", "--family", "R", "--sweep", "0.5:1.8:0.1"], 0),
    (["path", "winding", "--family", "S", "--a", "1"], 0),
    (["path", "winding", "--family", "R", "--sweep", "0.5:1.8:0.25"], 0),
    (["path", "eta", "--family", "R", "--a", "1", "--tol", "1e-8"], 0),
    (["path", "period", "--family", "S", "--a", "1"], 0),
    (["path", "period", "--family", "S", "--a", "3"], 1),
    (["dilog", "--z", "0.5,0.5"], 0),
    (["elliptic-dilog", "--divisor", "(P) + (2P)"], 0),
    (["elliptic-dilog", "--divisor", "2(-1,2) - (1,0) + (O)"], 0),
    (["verify", "--suite", "smyth"], 0),
    (["verify", "--suite", "prop4"], 0),
    (["verify", "--suite", "theorem1-s", "--timing"], 0),
    (["verify", "--suite", "theorem1"], 1),
    (["verify", "--suite", "maillot", "--seed", "5"], 0),
]

USAGE = [
    [],
    ["mahler", "--nope"],
    ["verify", "--suite", "unknown"],
    ["path", "spin", "--family", "S", "--a", "1"],
    ["dilog", "--z", "a,b"],
]

DETERMINISM = [
    ["verify", "--suite", "all"],
    ["verify", "--suite", "maillot", "--seed", "99", "--format", "csv"],
    ["path", "classify", "--family", "S", "--sweep", "0.2:5:0.1", "--format", "csv"],
    ["mahler", "--poly", "(1+x)(1+y)(x+y) + 2xy", "--radii", "1.21,1.1"],
]


def run(binary, args):
    p = subprocess.run([binary, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def check_schema(binary, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, want in CASES:
        code, out, err = run(binary, args)
        label = " ".join(args)
        if code != want:
            print(f"FAIL exit {code} != {want}: {label}\n{err}")
            failures += 1
            continue
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            print(f"FAIL not JSON ({e}): {label}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            print(f"FAIL schema: {label}\n  {errors[0].message}")
            failures += 1
            continue
        if args[0] == "verify":
            any_failed = any(not c["pass"] for c in doc["cases"])
            if any_failed != (code == 1) or doc["failed"] != sum(not c["pass"] for c in doc["cases"]):
                print(f"FAIL verify status inconsistent: {label}")
                failures += 1
                continue
        print(f"ok   {label}")
    for args in USAGE:
        code, _, _ = run(binary, args)
        if code != 2:
            print(f"FAIL usage exit {code} != 2: {' '.join(args)}")
            failures += 1
        else:
            print(f"ok   usage: {' '.join(args)}")
    code, out, _ = run(binary, ["verify", "--suite", "windings", "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(out)))
    if not rows or "pass" not in rows[0]:
        print("FAIL csv output has no pass column")
        failures += 1
    return failures


def check_determinism(binary):
    failures = 0
    for args in DETERMINISM:
        first = run(binary, args)
        second = run(binary, args)
        label = " ".join(args)
        if first != second:
            print(f"FAIL differs between runs: {label}")
            failures += 1
        else:
            print(f"ok   {label}")
    return failures


def main():
    if len(sys.argv) < 3:
        print(__doc__)
        return 2
    mode, binary = sys.argv[1], sys.argv[2]
    if mode == "schema":
        failures = check_schema(binary, sys.argv[3])
    elif mode == "determinism":
        failures = check_determinism(binary)
    else:
        print(__doc__)
        return 2
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
