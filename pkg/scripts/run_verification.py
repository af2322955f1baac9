"""Run every verification suite end to end and print a one-line verdict
per claim.  This is the long-form counterpart of the CLI verbs, intended
for a full reproduction run:

    python scripts/run_verification.py [--fast]
"""

import argparse
import math
import sys
import time

from tripmaps.domain import PermutationTriple, supported_triples
from tripmaps import gausskuzmin, hilbert, maps, spectral, transfer
from tripmaps.specfun import dilog, integrate_triangle
from tripmaps.tables.banach import BANACH
from tripmaps.tables.eigen import DENSITIES, EIGENFUNCTIONS
from tripmaps.tables.hilbert_rows import ARG_SLOT

SIGMA_REPS = [("e", "23", "e"), ("12", "13", "12"), ("13", "13", "13"),
              ("23", "23", "23"), ("123", "12", "132"), ("132", "123", "123")]


def _points(seed, count):
    import numpy as np
    from tripmaps.domain import TrianglePoint
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < count:
        u1, u2 = rng.random(2)
        x, y = max(u1, u2), min(u1, u2)
        if 0.02 < y < x - 0.02 and x < 0.98:
            pts.append(TrianglePoint(x, y))
    return pts


def check(label, fn):
    t0 = time.time()
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, f"exception: {exc}"
    print(f"[{'ok' if ok else 'FAIL'}] {label}: {detail} ({time.time() - t0:.1f}s)")
    return ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--fast", action="store_true",
                    help="smaller samples; a smoke run, not the full gate")
    args = ap.parse_args()
    n_pts = 20 if args.fast else 100
    n_mc = 100_000 if args.fast else 1_000_000
    results = []

    def roundtrip():
        pts = _points(101, n_pts)
        worst = 0.0
        for key in supported_triples():
            t = PermutationTriple(*key)
            for k in range(21):
                for p in pts:
                    q = transfer.branch_point(t, k, p)
                    xb, yb = maps.apply_branch_formula(t, k, q)
                    worst = max(worst, abs(xb - p.x), abs(yb - p.y))
                    assert maps.extract_digit(t, q) == k
        return worst < 1e-10, f"max roundtrip err {worst:.2e}"
    results.append(check("branch roundtrip (108 triples)", roundtrip))

    def eigen():
        worst = 0.0
        for key in EIGENFUNCTIONS:
            rep = spectral.eigen_residual(PermutationTriple(*key))
            worst = max(worst, rep.max_rel_residual)
        return worst < 1e-8, f"max |Lh-h|/|h| {worst:.2e}"
    results.append(check("eigenvalue one (18 eigenfunctions)", eigen))

    def summands():
        worst = 0.0
        grid = spectral.GridSpec(density=5)
        for key in BANACH:
            rep = spectral.summand_bound(PermutationTriple(*key), grid)
            assert all(rep.converged)
            worst = max(worst, rep.max_sum)
        return True, f"all 47 converge, max sum {worst:.2f}"
    results.append(check("weighted-norm summands (47 rows)", summands))

    def densities():
        worst = 0.0
        for key, r in DENSITIES.items():
            v = integrate_triangle(lambda x, y: r(x, y), 1e-9)
            worst = max(worst, abs(v - 1.0))
        return worst < 1e-8, f"max |int r - 1| {worst:.2e}"
    results.append(check("density normalization (18 rows)", densities))

    def closed_forms():
        eee = PermutationTriple("e", "e", "e")
        e23 = PermutationTriple("e", "23", "e")
        worst = abs(gausskuzmin.cylinder_measure(e23, 0) - 0.5)
        for k in range(1, 6):
            worst = max(worst, abs(gausskuzmin.cylinder_measure(eee, k)
                                   - gausskuzmin.p_closed_eee(k)))
            worst = max(worst, abs(gausskuzmin.cylinder_measure(e23, k)
                                   - gausskuzmin.p_integral_e23e(k)))
        return worst < 1e-6, f"max closed-form gap {worst:.2e}"
    results.append(check("Gauss-Kuzmin closed forms", closed_forms))

    def monte_carlo():
        worst_z = 0.0
        for key, theory in ((("e", "e", "e"), gausskuzmin.p_closed_eee),
                            (("e", "23", "e"), gausskuzmin.p_integral_e23e)):
            t = PermutationTriple(*key)
            st = gausskuzmin.empirical_digits(t, None, n_mc, seed=12345)
            for k in range(3):
                p = theory(k) if (k > 0 or key[1] == "e") else 0.5
                z = abs(st.frequency(k) - p) / math.sqrt(p * (1 - p) / n_mc)
                worst_z = max(worst_z, z)
        return worst_z < 3.0, f"max |z| {worst_z:.2f} over k<3, both triples"
    results.append(check(f"Monte Carlo digits (n={n_mc})", monte_carlo))

    def theorem31():
        worst = 0.0
        p = _points(909, 1)[0]
        for key in SIGMA_REPS:
            t = PermutationTriple(*key)
            phi = hilbert.eta_profile(0, var_slot=1 - ARG_SLOT[key[0]])
            lhs, rhs = hilbert.theorem31_check(t, phi, p)
            worst = max(worst, abs(lhs - rhs) / abs(lhs))
        return worst < 1e-4, f"max relative gap {worst:.2e}"
    results.append(check("kernel identity (6 sigma classes)", theorem31))

    print(f"\n{sum(results)}/{len(results)} suites passed")
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
