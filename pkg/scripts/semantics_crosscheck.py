#!/usr/bin/env python3
"""Randomized solver-vs-oracle audit with timing, beyond the suite's defaults.

Usage: python scripts/semantics_crosscheck.py [trials] [max_args] [seed]
"""

from __future__ import annotations

import random
import sys
import time

from mmarg import SemanticsKind, oracle_semantics, random_frame, semantics


def main(argv: list[str]) -> int:
    trials = int(argv[0]) if len(argv) > 0 else 500
    max_args = int(argv[1]) if len(argv) > 1 else 10
    seed = int(argv[2]) if len(argv) > 2 else 0
    rng = random.Random(seed)
    densities = [0.1, 0.2, 0.3, 0.4, 0.5]
    solver_time = oracle_time = 0.0
    mismatches = 0
    for trial in range(1, trials + 1):
        frame = random_frame(rng, rng.randint(1, max_args), rng.choice(densities))
        for kind in SemanticsKind:
            t0 = time.perf_counter()
            got = semantics(kind, frame)
            t1 = time.perf_counter()
            want = oracle_semantics(kind, frame)
            t2 = time.perf_counter()
            solver_time += t1 - t0
            oracle_time += t2 - t1
            if got != want:
                mismatches += 1
                print(f"MISMATCH trial {trial} {kind.value}: {sorted(frame.args)} {sorted(frame.attacks)}")
    print(f"{trials} frames x 3 kinds, max {max_args} args, seed {seed}")
    print(f"solver {solver_time:.2f}s, oracle {oracle_time:.2f}s, mismatches {mismatches}")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
