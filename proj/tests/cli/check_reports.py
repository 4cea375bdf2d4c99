#!/usr/bin/env python3
"""Run the qdefect binary over the sample data and validate every JSON report."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def invocations(data: Path):
    d = lambda name: str(data / name)  # noqa: E731
    return [
        (["defect-seq", d("subgeometry.sys")], 0),
        (["defect-seq", d("gabidulin_4_2.sys")], 0),
        (["defect-seq", d("scattered_line_expanded.sys")], 0),
        (["dual", d("gabidulin_4_2.sys")], 0),
        (["dual", d("quasi_mrd.sys")], 0),
        (["dual", d("heavy_hyperplane.sys")], 2),
        (["genweights", d("quasi_mrd.code")], 0),
        (["genweights", d("block_11.code"), "--method", "codim"], 0),
        (["wdist", d("gabidulin_4_2.code")], 0),
        (["classify", d("gabidulin_4_2.code")], 0),
        (["classify", d("block_11.code"), "--blocks", "2,2:1,1"], 0),
        (["nkmrd", "3,3", "1,2"], 0),
        (["nkmrd", "4,4", "2,2", "--min-m"], 0),
        (["nkmrd", "3,3", "1,2", "--min-m", "--horizon", "4"], 2),
        (["table1"], 0),
        (["qmatroid", d("sum_12_12.matroid"), "--check-axioms", "--rgf", "--represent", d("block_11.mat")], 0),
        (["qmatroid", d("broken_r2.matroid"), "--check-axioms"], 1),
        (["qmatroid", d("uniform_2_4.matroid"), "--represent", d("block_11.mat")], 1),
        (["--subspace-budget", "5", "defect-seq", d("gabidulin_4_2.sys")], 2),
        (["verify", "--suite", "macwilliams", "--per-shape", "2"], 0),
    ]


def main() -> int:
    binary, schema_path, data = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, want in invocations(data):
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, want {want}\n{proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
