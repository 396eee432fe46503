"""Compare polytope-based h^0(O(m)) with the monomial-counting oracle.

    python scripts/oracle_sweep.py --samples 200 --max-entry 9 --max-len 4
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass, fields
from functools import reduce
from math import gcd

from wpskit.cohomology import Value, h_line_bundle, weighted_monomial_count
from wpskit.lattice import count_lattice_points
from wpskit.polytope import polytope_from_weights
from wpskit.weights import q_delta, reduced_weights


@dataclass
class SweepConfig:
    samples: int = 50
    max_len: int = 4
    max_entry: int = 9
    levels: tuple[int, ...] = (1, 2, 3)
    seed: int = 0


def sample_weights(cfg: SweepConfig, rng: random.Random) -> list[int]:
    while True:
        Q = [rng.randint(1, cfg.max_entry) for _ in range(rng.randint(2, cfg.max_len))]
        if reduce(gcd, Q) == 1 and list(reduced_weights(Q)) == Q:
            return Q


def run(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    mismatches = 0
    start = time.perf_counter()
    for _ in range(cfg.samples):
        Q = sample_weights(cfg, rng)
        for m in cfg.levels:
            d = m * q_delta(Q)
            h0 = h_line_bundle(0, m, Q)
            inner = count_lattice_points(polytope_from_weights(Q, m), interior=True)
            want, want_inner = weighted_monomial_count(Q, d), weighted_monomial_count(Q, d, strict=True)
            if h0 != Value(want) or inner != want_inner:
                mismatches += 1
                print(f"MISMATCH Q={Q} m={m}: {h0} vs {want}, interior {inner} vs {want_inner}")
    elapsed = time.perf_counter() - start
    print(f"{cfg.samples * len(cfg.levels)} cases, {mismatches} mismatches, {elapsed:.2f} s")
    return mismatches


def parse_args() -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        if f.name == "levels":
            parser.add_argument("--levels", type=int, nargs="+", default=list(f.default))
        else:
            parser.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    args = parser.parse_args()
    args.levels = tuple(args.levels)
    return SweepConfig(**vars(args))


if __name__ == "__main__":
    raise SystemExit(1 if run(parse_args()) else 0)
