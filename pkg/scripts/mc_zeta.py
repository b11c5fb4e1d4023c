"""Monte Carlo table: estimate the cyclic-min cube integral for several n and
seeds, and compare with the exact path-sum value and the zeta(2n) it implies."""

from __future__ import annotations

import argparse
import math
import time

from triangle_forge.constructions import zeta_even_coefficient
from triangle_forge.verification import MC_SEEDS, exact_xi_integral, mc_xi_integral


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    ap.add_argument("--samples", type=int, default=10**6)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    print(f"{'n':>2} {'seed':>20} {'estimate':>12} {'exact':>12} {'z':>6}  zeta(2n) est / true")
    for n in args.n:
        exact = exact_xi_integral(n)
        true_zeta = float(zeta_even_coefficient(n)) * math.pi ** (2 * n)
        for seed in MC_SEEDS:
            t0 = time.perf_counter()
            est = mc_xi_integral(n, args.samples, seed, workers=args.workers)
            z = (est.estimate - float(exact)) / est.standard_error
            zeta_est = est.estimate * math.pi ** (2 * n) / (4**n - 1)
            print(
                f"{n:>2} {seed:>20} {est.estimate:12.8f} {float(exact):12.8f} {z:+6.2f}  "
                f"{zeta_est:.6f} / {true_zeta:.6f}  ({time.perf_counter() - t0:.2f}s)"
            )


if __name__ == "__main__":
    main()
