# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.

import argparse

from tabulate import tabulate

from eulerlax.suites import ExperimentConfig, run_suite

parser = argparse.ArgumentParser(description="Time the eulerlax verification suites.")
parser.add_argument("--jobs", type=int, default=1, help="Parallel independent cases.")
parser.add_argument("--seeds", type=int, default=4, help="Seeds swept by the randomized suites.")
args = parser.parse_args()

# fmt: off
benchmark_sets = [
    ("jacobi",        dict(n=64,  kmax=4, seeds=args.seeds)),
    ("jacobi",        dict(n=128, kmax=8, seeds=args.seeds)),
    ("bracket-check", dict(n=64,  kmax=4, seeds=args.seeds)),
    ("euler2d-run",   dict(n=64,  tend=1.0)),
    ("lax2d-verify",  dict(n=64,  kmax=4, seeds=args.seeds)),
    ("darboux-run",   dict(n=128, c=0.25)),
    ("darboux-proof", dict(n=128)),
    ("lax3d-verify",  dict(n=32,  kmax=4, seeds=args.seeds)),
    ("lax3d-verify",  dict(n=64,  kmax=8, seeds=1)),
    ("lax3d-limit",   dict(n=32)),
]
# fmt: on

rows = []
for suite, overrides in benchmark_sets:
    report = run_suite(ExperimentConfig(suite=suite, jobs=args.jobs, **overrides))
    print("{} took {:.1f} ms".format(suite, report.runtime_ms))
    worst = max((e.linf for e in report.residuals.values() if e.gated), default=0.0)
    rows.append([
        suite,
        " ".join(f"{k}={v}" for k, v in overrides.items()),
        f"{report.runtime_ms:.1f} ms",
        f"{worst:.2e}",
        "pass" if report.verdict else "FAIL",
    ])

print(tabulate(rows, headers=["Suite", "Arguments", "Runtime", "Worst gated residual", "Verdict"]))
