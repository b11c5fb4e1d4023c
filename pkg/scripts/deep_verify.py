"""Run the verification suite at the deepest setting (paths up to 10 steps,
brute force over S_11) and report time and peak memory."""

from __future__ import annotations

import argparse
import resource
import time

from triangle_forge.verification import verify_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, choices=(1, 2, 3), default=3)
    args = ap.parse_args()
    t0 = time.perf_counter()
    report = verify_suite(args.depth)
    print(report.to_table())
    peak_mb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024
    print(f"depth {args.depth}: {time.perf_counter() - t0:.1f}s, peak RSS {peak_mb:.0f} MB")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
