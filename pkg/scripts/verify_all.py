#!/usr/bin/env python3
"""Run every randomized verification suite with one seed and report."""

import argparse
import sys

from octf4.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-n", type=int, default=200)
    args = ap.parse_args()

    worst = 0
    for suite in ("identities", "automorphism", "orbit"):
        code = cli_main(["--seed", str(args.seed), "verify",
                         "--suite", suite, "-n", str(args.n)])
        worst = max(worst, code)
    code = cli_main(["dims"])
    worst = max(worst, code)
    sys.exit(worst)


if __name__ == "__main__":
    main()
