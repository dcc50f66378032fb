#!/usr/bin/env python3
"""End-to-end demo: sample cone points, reduce each one, show the traces."""

import argparse
import json

from octf4.normalize import (branch_samples, reduce_to_canonical, sample_orbit,
                             verify_trace)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-n", type=int, default=5)
    ap.add_argument("--dump", help="write the first trace as JSON to this file")
    args = ap.parse_args()

    points = list(sample_orbit(args.seed, args.n))
    points += list(branch_samples().values())
    for i, a in enumerate(points):
        tr = reduce_to_canonical(a)
        kinds = ",".join(g.kind for g in tr.word.letters)
        print(f"point {i:2d}: {len(tr.word.letters):2d} letters [{kinds}] "
              f"residual {tr.residual:.2e} verify {verify_trace(tr):.2e} "
              f"scale {tr.scale:.3g}")
        if i == 0 and args.dump:
            from octf4.cli import _trace_to_json
            with open(args.dump, "w") as fh:
                json.dump(_trace_to_json(tr), fh, indent=2)
            print(f"  trace written to {args.dump}")


if __name__ == "__main__":
    main()
