#!/usr/bin/env python3
"""Generate a synthetic stereo pair with a uniform known shift.

Writes left.pgm, right.pgm and gt.pgm (identity-encoded disparity) into the
output directory, ready for the CLI:

    python scripts/make_shift_pair.py --out /tmp/pair --width 320 --height 240 --shift 10
    sgmstereo --left /tmp/pair/left.pgm --right /tmp/pair/right.pgm \
        --output /tmp/pair/disp.pgm --disparities 64 --gt /tmp/pair/gt.pgm
"""

import argparse
from pathlib import Path

import numpy as np

from sgmstereo import shifted_pair, write_disparity, write_pgm


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--width", type=int, default=320)
    parser.add_argument("--height", type=int, default=240)
    parser.add_argument("--shift", type=int, default=10)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    left, right = shifted_pair(args.width, args.height, args.shift, seed=args.seed)
    write_pgm(out / "left.pgm", left)
    write_pgm(out / "right.pgm", right)
    write_disparity(out / "gt.pgm", np.full(left.shape, args.shift, np.int32))
    print(f"wrote {out}/left.pgm {out}/right.pgm {out}/gt.pgm "
          f"({args.width}x{args.height}, shift {args.shift})")


if __name__ == "__main__":
    main()
