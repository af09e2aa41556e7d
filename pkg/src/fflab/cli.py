"""Command line entry point.

    fflab <task> --config <file> [--workers N] [--out DIR] [--format csv|jsonl]

One invocation runs one task from a config file and writes one report file
(<out>/<task>.<format>).  Exit codes:

    0  every asserted invariant held
    1  some asserted invariant failed (the report says which rows)
    2  invalid configuration, arguments, or form file
    3  a predicted enumeration cost exceeded the configured budget

FFLAB_WORKERS and FFLAB_OUT override the config file when the matching flag
is absent; no other environment variable is consulted.
"""

import argparse
import os
import sys

from .errors import BudgetExceededError, ConfigError
from .harness import TASKS, load_config, run_task
from .reporting import write_report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fflab",
        description="Exact verification tasks for circle-method counting "
                    "over F_q((1/t)).")
    parser.add_argument("task", choices=TASKS, metavar="task",
                        help="one of: " + ", ".join(TASKS))
    parser.add_argument("--config", required=True, metavar="FILE",
                        help="run config (key=value sections)")
    parser.add_argument("--workers", type=int, default=None, metavar="N",
                        help="parallel workers (never changes results)")
    parser.add_argument("--out", default=None, metavar="DIR",
                        help="report output directory")
    parser.add_argument("--format", dest="fmt", choices=("csv", "jsonl"),
                        default=None, help="report file format")
    args = parser.parse_args(argv)

    workers = args.workers
    env_workers = os.environ.get("FFLAB_WORKERS")
    if workers is None and env_workers:
        try:
            workers = int(env_workers)
        except ValueError:
            print(f"fflab: config error: FFLAB_WORKERS={env_workers!r} "
                  f"is not an integer", file=sys.stderr)
            return 2
    out_dir = args.out or os.environ.get("FFLAB_OUT") or None

    try:
        config = load_config(args.config, task=args.task, workers=workers,
                             out_dir=out_dir, fmt=args.fmt)
        result = run_task(config)
        dest = os.path.join(config.out_dir, f"{config.task}.{config.fmt}")
        path = write_report(result.records, dest, config.fmt)
    except ConfigError as exc:
        print(f"fflab: config error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"fflab: budget exhausted: {exc}", file=sys.stderr)
        return 3
    print(f"{config.task}: {result.status} | {len(result.records)} records "
          f"in {result.seconds:.2f}s -> {path}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
