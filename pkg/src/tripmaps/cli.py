"""Experiment runner: every verification suite behind one executable.

Verbs: verify-branches, eigen, gk, hilbert, sum-bounds, orbit,
list-triples.  Configuration precedence is flags > --config JSON file >
built-in defaults.  Output is CSV (fixed header, 17 significant digits)
or JSON, written to --out or stdout; row order follows the embedded
table order so files diff cleanly across runs.  Exit status is 0 iff
every tolerance asserted by the verb is met.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import gausskuzmin, hilbert, maps, spectral, transfer
from .domain import (
    ERGODIC_TRIPLES,
    PermutationTriple,
    TrianglePoint,
    parse_triple,
    supported_triples,
)
from .errors import TripMapError
from .tables.banach import BANACH
from .tables.eigen import DENSITIES, EIGENFUNCTIONS
from .tables.hilbert_rows import ARG_SLOT, HILBERT

DEFAULTS = {
    "triple": "all",
    "kmax": 10,
    "n": 100,
    "seed": 0,
    "margin": 0.05,
    "tol": None,          # per-verb default filled in below
    "format": "csv",
    "out": None,
    "simulate": False,
    "phi": "eta0",
    "start": None,
}

TOL_DEFAULTS = {
    "verify-branches": 1e-10,
    "eigen": 1e-8,
    "gk": 1e-6,
    "hilbert": 1e-4,
    "sum-bounds": 1e-9,
    "orbit": 1e-10,
    "list-triples": 1e-10,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    triple: str
    tolerances: dict = field(default_factory=dict)
    seed: int = 0
    n_steps: int = 100
    kmax: int = 10
    margin: float = 0.05
    output_path: str | None = None
    format: str = "csv"
    simulate: bool = False
    phi: str = "eta0"
    start: str | None = None

    def __post_init__(self) -> None:
        if any(v <= 0 for v in self.tolerances.values()):
            raise ValueError("tolerances must be positive")
        if self.n_steps < 1:
            raise ValueError("n must be at least 1")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _json_default(v):
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    return _fmt(v)


def _emit(cfg: RunConfig, header: list[str], rows: list[dict]) -> None:
    if cfg.format == "json":
        text = json.dumps(rows, indent=2, default=_json_default) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(row.get(h, "")) for h in header])
        text = buf.getvalue()
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _triples_arg(cfg: RunConfig, table=None) -> list[PermutationTriple]:
    if cfg.triple in ("all", "all-tabulated"):
        keys = supported_triples() if table is None else [
            k for k in supported_triples() if k in table]
        return [PermutationTriple(*k) for k in keys]
    return [parse_triple(cfg.triple)]


def _random_points(seed: int, count: int) -> list[TrianglePoint]:
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < count:
        u1, u2 = rng.random(2)
        x, y = max(u1, u2), min(u1, u2)
        if 1e-3 < y < x - 1e-3 and x < 1 - 1e-3:
            pts.append(TrianglePoint(x, y))
    return pts


def cmd_verify_branches(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    tol = cfg.tolerances["tol"]
    pts = _random_points(cfg.seed, cfg.n_steps)
    rows, status = [], 0
    for t in _triples_arg(cfg):
        worst, digits_ok = 0.0, True
        for k in range(cfg.kmax + 1):
            for p in pts:
                q = transfer.branch_point(t, k, p)
                xb, yb = maps.apply_branch_formula(t, k, q)
                worst = max(worst, abs(xb - p.x), abs(yb - p.y))
                if maps.extract_digit(t, q) != k:
                    digits_ok = False
        ok = worst < tol and digits_ok
        status |= 0 if ok else 1
        rows.append({"triple": str(t), "max_roundtrip_err": worst,
                     "digits_exact": digits_ok, "pass": ok})
    return status, rows, ["triple", "max_roundtrip_err", "digits_exact", "pass"]


def cmd_eigen(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    tol = cfg.tolerances["tol"]
    grid = spectral.GridSpec(margin=cfg.margin, density=10)
    rows, status = [], 0
    for t in _triples_arg(cfg, EIGENFUNCTIONS):
        rep = spectral.eigen_residual(t, grid, eps=tol / 10.0)
        ok = rep.max_rel_residual < tol
        status |= 0 if ok else 1
        rows.append({"triple": str(t), "max_rel_residual": rep.max_rel_residual,
                     "truncation_k": rep.truncation_k, "pass": ok})
    return status, rows, ["triple", "max_rel_residual", "truncation_k", "pass"]


def cmd_gk(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    tol = cfg.tolerances["tol"]
    rows, status = [], 0
    for t in _triples_arg(cfg, DENSITIES):
        closed = {("e", "e", "e"): gausskuzmin.p_closed_eee,
                  ("e", "23", "e"): gausskuzmin.p_integral_e23e}.get(t.key)
        stats = None
        if cfg.simulate:
            stats = gausskuzmin.empirical_digits(t, None, cfg.n_steps, cfg.seed)
        for k in range(cfg.kmax + 1):
            p = gausskuzmin.cylinder_measure(t, k, 1e-9)
            ok = 0.0 <= p <= 1.0
            row = {"triple": str(t), "k": k, "p_theoretical": p}
            if closed is not None:
                pc = closed(k)
                row["p_closed"] = pc
                ok = ok and abs(p - pc) < tol
            else:
                row["p_closed"] = ""
            if stats is not None:
                f = stats.frequency(k)
                se = math.sqrt(max(p * (1 - p), 1e-300) / stats.n_steps)
                row["p_empirical"] = f
                row["stderr"] = se
                if t.key in ERGODIC_TRIPLES:
                    ok = ok and abs(f - p) < 5 * se + 1e-3
            status |= 0 if ok else 1
            row["pass"] = ok
            rows.append(row)
    return status, rows, ["triple", "k", "p_theoretical", "p_closed",
                          "p_empirical", "stderr", "pass"]


def cmd_hilbert(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    tol = cfg.tolerances["tol"]
    k_eta = {"eta0": 0, "eta1": 1}.get(cfg.phi)
    if k_eta is None:
        raise ValueError(f"unknown profile {cfg.phi!r}; use eta0 or eta1")
    p = TrianglePoint(0.6, 0.3)
    rows, status = [], 0
    for t in _triples_arg(cfg, HILBERT):
        phi = hilbert.eta_profile(k_eta, var_slot=1 - ARG_SLOT[t.sigma])
        lhs, rhs = hilbert.theorem31_check(t, phi, p)
        lag = hilbert.laguerre_expansion_partial(t, phi, p, 50)
        rel = abs(lhs - rhs) / abs(lhs)
        lag_rel = abs(lag - lhs) / abs(lhs)
        ok = rel < tol and lag_rel < 1e-3
        status |= 0 if ok else 1
        rows.append({"triple": str(t), "phi": cfg.phi, "x": p.x, "y": p.y,
                     "lhs": lhs, "rhs": rhs, "rel_gap": rel,
                     "laguerre_K50": lag, "pass": ok})
    return status, rows, ["triple", "phi", "x", "y", "lhs", "rhs",
                          "rel_gap", "laguerre_K50", "pass"]


def cmd_sumbounds(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    grid = spectral.GridSpec(margin=cfg.margin, density=5)
    rows, status = [], 0
    for t in _triples_arg(cfg, BANACH):
        rep = spectral.summand_bound(t, grid, eps=cfg.tolerances["tol"])
        ok = all(rep.converged)
        status |= 0 if ok else 1
        rows.append({"triple": str(t), "max_sum": rep.max_sum,
                     "all_converged": ok, "pass": ok})
    return status, rows, ["triple", "max_sum", "all_converged", "pass"]


def cmd_orbit(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    t = parse_triple(cfg.triple) if cfg.triple not in ("all", "all-tabulated") \
        else PermutationTriple("e", "e", "e")
    if cfg.start:
        x, y = (float(v) for v in cfg.start.split(","))
        p = TrianglePoint(x, y)
    else:
        p = _random_points(cfg.seed, 1)[0]
    rows = [{"step": 0, "digit": "", "x": p.x, "y": p.y}]
    for i in range(cfg.n_steps):
        try:
            st = maps.step(t, p)
        except TripMapError:
            break
        p = st.image
        rows.append({"step": i + 1, "digit": st.digit, "x": p.x, "y": p.y})
    return 0, rows, ["step", "digit", "x", "y"]


def cmd_list_triples(cfg: RunConfig) -> tuple[int, list[dict], list[str]]:
    rows = []
    for key in supported_triples():
        rows.append({
            "triple": ",".join(key),
            "banach": key in BANACH,
            "eigenfunction": key in EIGENFUNCTIONS,
            "hilbert": key in HILBERT,
            "density": key in DENSITIES,
            "ergodic": key in ERGODIC_TRIPLES,
        })
    return 0, rows, ["triple", "banach", "eigenfunction", "hilbert",
                     "density", "ergodic"]


COMMANDS = {
    "verify-branches": cmd_verify_branches,
    "eigen": cmd_eigen,
    "gk": cmd_gk,
    "hilbert": cmd_hilbert,
    "sum-bounds": cmd_sumbounds,
    "orbit": cmd_orbit,
    "list-triples": cmd_list_triples,
}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tripmaps",
        description="verification suites for triangle partition maps")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--triple", default=None)
    ap.add_argument("--kmax", type=int, default=None)
    ap.add_argument("--n", type=int, default=None)
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--margin", type=float, default=None)
    ap.add_argument("--tol", type=float, default=None)
    ap.add_argument("--config", default=None)
    ap.add_argument("--out", default=None)
    ap.add_argument("--format", choices=("csv", "json"), default=None)
    ap.add_argument("--simulate", action="store_true", default=None)
    ap.add_argument("--phi", default=None)
    ap.add_argument("--start", default=None)
    return ap


def _resolve(args: argparse.Namespace) -> RunConfig:
    file_cfg = {}
    if args.config:
        with open(args.config) as fh:
            file_cfg = json.load(fh)

    def pick(name):
        flag = getattr(args, name)
        if flag is not None:
            return flag
        if name in file_cfg:
            return file_cfg[name]
        return DEFAULTS[name]

    tol = pick("tol")
    if tol is None:
        tol = TOL_DEFAULTS[args.command]
    return RunConfig(
        command=args.command,
        triple=str(pick("triple")),
        tolerances={"tol": float(tol)},
        seed=int(pick("seed")),
        n_steps=int(pick("n")),
        kmax=int(pick("kmax")),
        margin=float(pick("margin")),
        output_path=pick("out"),
        format=str(pick("format")),
        simulate=bool(pick("simulate")),
        phi=str(pick("phi")),
        start=pick("start"),
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _resolve(args)
        status, rows, header = COMMANDS[cfg.command](cfg)
    except (TripMapError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(cfg, header, rows)
    return status


if __name__ == "__main__":
    sys.exit(main())
