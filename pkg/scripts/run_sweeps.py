#!/usr/bin/env python3
"""Reproduce the q-sweep experiments: norm convergence for the admissible
families and the phase-locked oscillation counterexample.

Writes one CSV per experiment into --outdir and prints a one-line summary
per sweep.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from orlicz.cli import main as cli_main

SWEEPS = [
    # (name, family spec, input payload, extra flags)
    ("power_f31", "power",
     '{"total_mass": "inf", "atoms": [{"value": 3.0, "mass": 1.0}, {"value": 1.0, "mass": 1.0}]}',
     []),
    ("logbump_p2", "logbump:p=2",
     '{"total_mass": "inf", "atoms": [{"value": 2.0, "mass": 1.0}, {"value": 1.0, "mass": 3.0}]}',
     []),
    ("iterlog_n2_p1", "iterlog:N=2,p=1",
     '{"total_mass": "inf", "atoms": [{"value": 2.0, "mass": 1.0}, {"value": 1.0, "mass": 3.0}]}',
     []),
    ("iterlog_n2_p3", "iterlog:N=2,p=3",
     '{"total_mass": "inf", "atoms": [{"value": 2.0, "mass": 1.0}, {"value": 1.0, "mass": 3.0}]}',
     []),
    ("sinpiecewise_locked", "sinpiecewise",
     '{"total_mass": 3.0, "atoms": [{"value": 1.0, "mass": 3.0}]}',
     ["--phase-locked", "--q-min", "33", "--q-max", "64"]),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="sweeps", help="CSV output directory")
    args = parser.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for name, family, payload, extra in SWEEPS:
        input_path = outdir / f"{name}.json"
        input_path.write_text(payload + "\n")
        csv_path = outdir / f"{name}.csv"
        code = cli_main(["sweep", "--family", family, "--input", str(input_path),
                         "--out", str(csv_path), *extra])
        if code != 0:
            print(f"{name}: FAILED (exit {code})")
            return code
        last = csv_path.read_text().strip().splitlines()[-1]
        print(f"{name}: {csv_path} final row {last}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
