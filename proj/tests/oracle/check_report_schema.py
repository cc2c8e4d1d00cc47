"""Generates reports with bi_verify and validates them against the JSON schema."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    runs = [
        ["--realization", "b3-scalar", "--suite", "hyperoct-structure", "--suite", "osp-core", "--degree", "2"],
        ["--realization", "b3-clifford", "--suite", "clifford", "--degree", "1", "--timings"],
        ["--realization", "z2-scalar", "--suite", "all", "--degree", "1", "--param", "mu1=1/2", "--jobs", "2"],
    ]
    with tempfile.TemporaryDirectory() as tmp:
        for k, args in enumerate(runs):
            out = os.path.join(tmp, f"report{k}.json")
            proc = subprocess.run([binary, "verify", *args, "--out", out], capture_output=True, text=True, check=False)
            if proc.returncode != 0:
                print(f"bi_verify exited {proc.returncode} for {args}: {proc.stderr}")
                return 1
            with open(out, encoding="utf-8") as f:
                report = json.load(f)
            jsonschema.validate(report, schema)
            n = sum(len(s["identities"]) for s in report["suites"])
            if n != report["summary"]["identities"]:
                print(f"summary count {report['summary']['identities']} does not match {n}")
                return 1
            print(f"valid report: {' '.join(args)} ({n} identities, {len(report['suites'])} suites)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
