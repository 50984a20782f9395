"""Run every exhaustive verifier over a range of inputs and print a table.

    python3 scripts/verify_theorems.py --max-set-size 6
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from crtkit.equiv import verify_theorem5
from crtkit.residue_rings import verify_ring_iso, verify_unit_group_iso


@dataclass
class VerifyConfig:
    ring_moduli: list[tuple[int, ...]] = field(
        default_factory=lambda: [(3, 5), (3, 5, 7), (4, 9, 25), (2, 3, 5, 7, 11), (7, 11, 13), (999, 1000)]
    )
    unit_pairs: list[tuple[int, int]] = field(
        default_factory=lambda: [(2, 3), (3, 5), (5, 7), (8, 9), (16, 81), (101, 103)]
    )
    max_set_size: int = 5
    seed: int = 0


def parse_args(argv=None) -> VerifyConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-set-size", type=int, default=VerifyConfig.max_set_size)
    ap.add_argument("--seed", type=int, default=VerifyConfig.seed)
    return VerifyConfig(**vars(ap.parse_args(argv)))


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def main(argv=None) -> int:
    cfg = parse_args(argv)
    failures = 0
    for moduli in cfg.ring_moduli:
        rep, dt = timed(verify_ring_iso, moduli, seed=cfg.seed)
        failures += not rep.ok
        print(f"ring-iso  {str(moduli):<22} checked={rep.checked:<7} ok={rep.ok}  {dt:.3f}s")
    for p, q in cfg.unit_pairs:
        rep, dt = timed(verify_unit_group_iso, p, q, seed=cfg.seed)
        failures += not rep.ok
        print(f"unit-iso  {str((p, q)):<22} units={rep.unit_counts}  ok={rep.ok}  {dt:.3f}s")
    for n in range(cfg.max_set_size + 1):
        rep, dt = timed(verify_theorem5, n)
        failures += not rep.ok
        print(f"theorem5  n={n:<20} pairs={rep.pairs_checked:<7} ok={rep.ok}  {dt:.3f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
