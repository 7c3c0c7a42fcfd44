"""Compare the two discriminant descriptions against the numeric search.

For each parameter pair, print the sign-(+,+) quartic, the resultant
factors and the number of singular points found.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from symsextic import smoothcheck as sc


@dataclass
class ScanConfig:
    points: list[tuple[Fraction, Fraction]] = field(default_factory=lambda: [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1)),
        (Fraction(0), Fraction(-5, 4)),
        (Fraction(-5, 12), Fraction(7)),
        (Fraction(1, 2), Fraction(0)),
        (Fraction(0), Fraction(3, 2)),
        (Fraction(3, 2), Fraction(1, 2)),
    ])
    attempts: int = 1000
    tol: float = 1e-9
    seed: int = 0


def scan(cfg: ScanConfig):
    for a, b in cfg.points:
        p = sc.SurfaceParams(a, b)
        quartic = sc.discriminant_eval(p, (1, 1))
        zero_factors = [k for k, v in sc.resultant_components(p).items() if v == 0]
        hits = sc.singular_points_search(p, attempts=cfg.attempts, tol=cfg.tol, seed=cfg.seed)
        yield a, b, quartic, zero_factors, hits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--attempts", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = ScanConfig(attempts=args.attempts, seed=args.seed)
    print(f"{'A':>6} {'B':>6} {'quartic(+,+)':>14}  {'resultant factors':<24} hits")
    for a, b, quartic, zeros, hits in scan(cfg):
        print(f"{str(a):>6} {str(b):>6} {str(quartic):>14}  {', '.join(zeros) or '-':<24} {len(hits)}")
        if hits:
            best = min(hits, key=lambda h: h.residual)
            print(f"{'':>30}e.g. {tuple(complex(round(z.real, 4), round(z.imag, 4)) for z in best.point)}")


if __name__ == "__main__":
    main()
