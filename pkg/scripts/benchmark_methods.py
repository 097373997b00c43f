#!/usr/bin/env python3
"""Benchmark the four ternary counting methods across a degree range.

Thin wrapper over `forminv bench`; prints CSV (method,n,millis) with NA
where a method's work limit is exceeded."""

import argparse
import sys

from forminv.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=4)
    parser.add_argument("--max", type=int, default=15)
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args()
    return cli_main(
        [
            "bench",
            "--d", str(args.d),
            "--max", str(args.max),
            "--repeat", str(args.repeat),
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
