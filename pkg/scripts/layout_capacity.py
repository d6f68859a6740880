#!/usr/bin/env python3
"""Probe how many entities the organic layout can place before the dart
thrower gives up, as a function of minimum separation.

Usage: layout_capacity.py [width] [depth]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from datagarden.layout import Bounds, CapacityError, organic_layout  # noqa: E402


def capacity(bounds: Bounds, min_sep: float, seed: int = 42) -> int:
    ids = [f"r{i}" for i in range(100_000)]
    try:
        organic_layout(ids, bounds, min_sep, seed)
    except CapacityError as exc:
        return exc.achieved
    return len(ids)


def run():
    width = float(sys.argv[1]) if len(sys.argv) > 1 else 40.0
    depth = float(sys.argv[2]) if len(sys.argv) > 2 else 40.0
    bounds = Bounds(width, depth)
    print(f"bounds {width} x {depth}")
    print(f"{'min_sep':>8} {'placed':>8} {'per unit^2':>10}")
    for min_sep in (0.5, 1.0, 1.5, 2.0, 3.0, 5.0):
        n = capacity(bounds, min_sep)
        print(f"{min_sep:>8.1f} {n:>8} {n / (width * depth):>10.3f}")


if __name__ == "__main__":
    run()
