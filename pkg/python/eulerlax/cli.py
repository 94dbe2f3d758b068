# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""
Command line front end.

    eulerlax <suite> [--n N] [--seed S] [--tol T] [--out PATH] ...

Exit codes: 0 when every gated residual passes, 1 when one fails (the report
is still written), 2 for usage or configuration errors.
"""
import argparse
import logging
import sys
from dataclasses import fields
from typing import Any, Dict, List, Optional

from tabulate import tabulate

import eulerlax
from eulerlax.errors import ConfigError, EulerLaxError
from eulerlax.suites import SUITES, ExperimentConfig, get_suite, run_suite, seed_applies

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# suites whose --eps is the list of alpha-limit epsilons; elsewhere it is eps_rel
_EPS_LIST_SUITES = ("lax3d-limit", )


def _add_suite_arguments(parser: argparse.ArgumentParser) -> None:
    # every value defaults to None so that only explicit flags override a --config file
    parser.add_argument("--n", type=int, default=None, help="Grid points per direction.")
    parser.add_argument("--seed", type=int, default=None,
                        help="Random seed (EULERLAX_SEED overrides it).")
    parser.add_argument("--seeds", type=int, default=None, help="Number of consecutive seeds.")
    parser.add_argument("--tol", type=float, default=None, help="Residual tolerance.")
    parser.add_argument("--out", type=str, default=None,
                        help="Report .json, series .csv or output directory.")
    parser.add_argument("--kmax", type=int, default=None, help="Band limit of random fields.")
    parser.add_argument("--eps-rel", dest="eps_rel", type=float, default=None,
                        help="Relative mask threshold.")
    parser.add_argument("--eps", type=str, default=None,
                        help="Mask threshold, or comma-separated epsilons for lax3d-limit.")
    parser.add_argument("--dt", type=float, default=None, help="Time step (CFL when omitted).")
    parser.add_argument("--tend", type=float, default=None, help="Final time.")
    parser.add_argument("--init", "--state", dest="init", type=str, default=None,
                        help="Initial state, e.g. eigenstate:k=1,l=1,A=1.")
    parser.add_argument("--phi0", type=str, default=None,
                        help="Initial eigenfunction candidate of L.")
    parser.add_argument("--f", type=str, default=None, help="Kernel function of the gauge.")
    parser.add_argument("--p", type=str, default=None, help="Kernel function to transform.")
    parser.add_argument("--c", type=float, default=None, help="Shift of the potential F.")
    parser.add_argument("--a1", type=str, default=None, help="Shift vector of L, e.g. 1,2,3.")
    parser.add_argument("--a2", type=str, default=None, help="Shift vector of A, e.g. -1,0,2.")
    parser.add_argument("--snap-every", dest="snap_every", type=int, default=None,
                        help="Write a snapshot every N steps (0 disables).")
    parser.add_argument("--sizes", type=str, default=None,
                        help="Comma-separated resolutions of a convergence study.")
    parser.add_argument("--study", type=str, default=None,
                        help="Suite followed by a convergence study.")


_NEGATIVE_VALUE_FLAGS = ("--a1", "--a2", "--c", "--eps")


def join_negative_values(argv: List[str]) -> List[str]:
    """Rewrite `--a2 -1,0,2` as `--a2=-1,0,2`, which argparse would read as a flag."""
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        following = argv[index + 1] if index + 1 < len(argv) else ""
        if (token in _NEGATIVE_VALUE_FLAGS and following.startswith("-") and
                following[1:2].isdigit()):
            joined.append(f"{token}={following}")
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerlax",
        description="Residual verification of the Euler Lax pairs and the Darboux transformation.")
    parser.add_argument("--version", action="version", version=eulerlax.__version__)
    parser.add_argument("--jobs", type=int, default=None, help="Parallel independent cases.")
    parser.add_argument("--progress", action="store_true", help="Show progress bars.")
    parser.add_argument("--log-level", dest="log_level", type=str, default=None,
                        help="Logging level, e.g. INFO.")
    parser.add_argument("--config", type=str, default=None,
                        help="YAML or JSON experiment configuration; explicit flags win.")
    parser.add_argument("--database", type=str, default=None,
                        help="Directory of stored reports reused by identical runs.")
    subparsers = parser.add_subparsers(dest="suite", metavar="SUITE")
    subparsers.required = True
    for name, suite in SUITES.items():
        doc = (suite.__doc__ or "").strip().splitlines()
        sub = subparsers.add_parser(name, help=doc[0] if doc else name)
        _add_suite_arguments(sub)
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """The explicit flags of a parsed command line as ExperimentConfig fields."""
    values = {k: v for k, v in vars(args).items() if v is not None}
    overrides: Dict[str, Any] = {"suite": args.suite}
    for key in ExperimentConfig.field_names():
        if key in values and key not in ("suite", "eps"):
            overrides[key] = values[key]
    if "eps" in values:
        if args.suite in _EPS_LIST_SUITES:
            overrides["eps"] = values["eps"]
        else:
            overrides.setdefault("eps_rel", values["eps"])
    return overrides


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    base = ExperimentConfig.load(args.config) if args.config else ExperimentConfig(suite=args.suite)
    config = base.with_overrides(**overrides_from_args(args))
    check_flags_apply(args, config)
    return config


def check_flags_apply(args: argparse.Namespace, config: ExperimentConfig) -> None:
    """Reject an explicit --seed or --tol that the selected suite would ignore."""
    if args.seed is not None and not seed_applies(config):
        raise ConfigError(f"--seed has no effect on {config.suite}; "
                          "pass a random: state without seed= or drop the flag")
    names = {f.name for f in fields(get_suite(config.suite).config_type)}
    if args.tol is not None and "tol" not in names:
        raise ConfigError(f"--tol has no effect on {config.suite}")


def summary_table(report) -> str:
    headers = ["residual", "linf", "l2", "mask", "tol", "status"]
    return tabulate(report.summary_rows(), headers=headers)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_negative_values(sys.argv[1:] if argv is None else list(argv)))
    if args.log_level:
        eulerlax.set_log_level(args.log_level)
    try:
        config = config_from_args(args)
        report = run_suite(config, progress=args.progress)
    except (EulerLaxError, ValueError, OSError) as e:
        logger.debug(f"{args.suite} stopped before producing a report", exc_info=True)
        print(f"eulerlax {args.suite}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(summary_table(report))
    for message in report.warnings:
        print(f"warning: {message}")
    print(f"verdict: {'pass' if report.verdict else 'FAIL'}")
    return EXIT_PASS if report.verdict else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
