"""Runs the CLI over the fixtures and validates every JSON document against
the shipped schema. Usage: validate_reports.py <cli> <schema> <fixtures>."""

import copy
import json
import subprocess
import sys

from jsonschema import Draft202012Validator


def run(cli, args, expect):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != expect:
        raise SystemExit(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout if expect == 0 else proc.stderr)


def main():
    cli, schema_path, fx = sys.argv[1:4]
    with open(schema_path, encoding="utf-8") as f:
        validator = Draft202012Validator(json.load(f))

    subs = ["morse", "period_doubling", "countable_ly", "aba", "baacd", "four_letter",
            "collapsing", "period_two"]
    cases = []
    for name in subs:
        cases.append((["analyze", f"{fx}/{name}.txt", "--json"], 0))
        cases.append((["decide", f"{fx}/{name}.txt", "--json", "--brute-bound", "10000"], 0))
        cases.append((["reduce", f"{fx}/{name}.txt", "--json"], 0))
        cases.append((["language", f"{fx}/{name}.txt", "3", "--json"], 0))
    cases += [
        (["analyze", f"{fx}/countable_ly.json", "--json"], 0),
        (["classify", f"{fx}/countable_ly.txt", "--json", "--x", f"@{fx}/countable_ly_x.json",
          "--y", f"@{fx}/countable_ly_y.json"], 0),
        (["classify", f"{fx}/morse.txt", "--json", "--x", f"@{fx}/morse_00.json",
          "--y", f"@{fx}/morse_10.json"], 0),
        (["simulate", f"{fx}/countable_ly.txt", "--json", "--horizon", "2000",
          "--x", f"@{fx}/countable_ly_x.json", "--y", f"@{fx}/countable_ly_y.json"], 0),
        (["tower", "--depth", "2", "--json"], 0),
        (["analyze", f"{fx}/malformed.txt", "--json"], 1),
        (["analyze", f"{fx}/non_primitive.txt", "--json"], 2),
        (["analyze", f"{fx}/variable_length.txt", "--json"], 2),
        (["analyze", f"{fx}/baacd.txt", "--json", "--max-word", "3"], 3),
        (["classify", f"{fx}/morse.txt", "--x", "{", "--y", "{}"], 1),
        (["analyze"], 1),
    ]

    failures = 0
    docs = {}
    for args, expect in cases:
        doc = run(cli, args, expect)
        docs[tuple(args)] = doc
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")

    # The schema must reject reports whose fields contradict each other.
    aba = docs[("analyze", f"{fx}/aba.txt", "--json")]
    broken = copy.deepcopy(aba)
    del broken["li_yorke_certificate"]
    bad = [broken]
    broken = copy.deepcopy(aba)
    broken["strong_li_yorke"] = True
    bad.append(broken)
    finite = copy.deepcopy(docs[("analyze", f"{fx}/collapsing.txt", "--json")])
    finite["has_li_yorke"] = False
    bad.append(finite)
    for doc in bad:
        if validator.is_valid(doc):
            failures += 1
            print("FAIL schema accepted an inconsistent report")

    print(f"{len(cases)} documents checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
