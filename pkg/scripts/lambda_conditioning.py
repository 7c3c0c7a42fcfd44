"""How the float residual |f_AB(lambda_+-)| depends on A + B.

The roots multiply to 1, so when A + B -> 0 one of them blows up and the
absolute residual grows roughly like |lambda|^2 * eps.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from symsextic import smoothcheck as sc


@dataclass
class Config:
    samples: int = 100
    seeds: int = 10


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seeds", type=int, default=10)
    cfg = Config(**vars(ap.parse_args()))
    print("seed  max residual   worst |A+B|   worst |lambda|")
    for seed in range(cfg.seeds):
        params = sc.random_parameters(cfg.samples, seed)
        worst = max(params, key=sc.lambda_root_residual)
        big = max(abs(r) for r in sc.lambda_roots(worst))
        print(f"{seed:>4}  {sc.lambda_root_residual(worst):.3e}    {float(abs(worst.A + worst.B)):.3e}     {big:.1f}")


if __name__ == "__main__":
    main()
