"""Time canonicalization of random encoders and fit a power law."""

import argparse
import math
import random
import time
from dataclasses import dataclass

import numpy as np

from zxcf.canonical import canonicalize
from zxcf.sampling import random_encoder


@dataclass
class ScalingConfig:
    sizes: tuple = (16, 32, 64, 128, 256)
    reps: int = 3
    rate: float = 0.5  # k / n
    seed: int = 0


def measure(cfg: ScalingConfig) -> list[tuple[int, float]]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        runs = []
        for _ in range(cfg.reps):
            e = random_encoder(n, int(cfg.rate * n), rng)
            t0 = time.perf_counter()
            canonicalize(e)
            runs.append(time.perf_counter() - t0)
        rows.append((n, float(np.median(runs))))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=list(ScalingConfig.sizes))
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--rate", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    cfg = ScalingConfig(tuple(args.sizes), args.reps, args.rate, args.seed)
    rows = measure(cfg)
    print(f"{'n':>6} {'seconds':>10}")
    for n, t in rows:
        print(f"{n:>6} {t:>10.4f}")
    if len(rows) > 1:
        slope = np.polyfit([math.log(n) for n, _ in rows], [math.log(t) for _, t in rows], 1)[0]
        print(f"fitted exponent: {slope:.2f}")


if __name__ == "__main__":
    main()
