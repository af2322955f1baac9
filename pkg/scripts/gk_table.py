"""Emit a plot-ready Gauss-Kuzmin table for one triple: quadrature p(k),
the closed form when one exists, and optionally seeded Monte Carlo
frequencies with binomial standard errors.

    python scripts/gk_table.py --triple e,23,e --kmax 20 --simulate
"""

import argparse
import math
import sys

from tripmaps.domain import parse_triple
from tripmaps import gausskuzmin


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--triple", default="e,23,e")
    ap.add_argument("--kmax", type=int, default=20)
    ap.add_argument("--simulate", action="store_true")
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=12345)
    args = ap.parse_args()

    t = parse_triple(args.triple)
    closed = {("e", "e", "e"): gausskuzmin.p_closed_eee,
              ("e", "23", "e"): gausskuzmin.p_integral_e23e}.get(t.key)
    stats = (gausskuzmin.empirical_digits(t, None, args.n, args.seed)
             if args.simulate else None)

    header = ["k", "p_quadrature", "p_closed", "p_empirical", "stderr"]
    print(",".join(header))
    total = 0.0
    for k in range(args.kmax + 1):
        p = gausskuzmin.cylinder_measure(t, k, 1e-9)
        total += p
        row = [str(k), f"{p:.17g}"]
        row.append(f"{closed(k):.17g}" if closed else "")
        if stats:
            f = stats.frequency(k)
            row.append(f"{f:.17g}")
            row.append(f"{math.sqrt(p * (1 - p) / stats.n_steps):.17g}")
        else:
            row.extend(["", ""])
        print(",".join(row))
    print(f"# tail mass beyond k={args.kmax}: {1.0 - total:.6f}", file=sys.stderr)
    if stats:
        print(f"# restarts: {stats.restarts}", file=sys.stderr)


if __name__ == "__main__":
    main()
