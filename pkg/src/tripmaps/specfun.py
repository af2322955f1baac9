"""Special functions and quadrature shared by the analysis modules.

Half-line integrals against dm(t) = t dt / (e^t - 1) use the substitution
t = -ln u, with panels graded dyadically toward u = 0 so the logarithmic
endpoint behavior converges geometrically.  Integrands passed to the
half-line routines are evaluated on numpy arrays (a scalar fallback kicks
in automatically for non-vectorizable callables).

The triangle integrator is an adaptive subdivision scheme built on a
degree-5 seven-point rule whose nodes are strictly interior, so integrable
boundary singularities (1/x, 1/(1-y), log types) never get sampled on the
singular set itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonConvergent

PI2_6 = math.pi ** 2 / 6


@dataclass(frozen=True)
class QuadratureRule:
    kind: str = "exp-substituted-halfline"
    panels: int = 48
    order: int = 12
    abs_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.panels < 1 or self.order < 2 or self.abs_tol <= 0:
            raise ValueError("invalid quadrature rule")
        if self.kind not in ("gauss-legendre-composite", "exp-substituted-halfline"):
            raise ValueError(f"unknown rule kind {self.kind!r}")


def dilog(z: float) -> float:
    """Li2 on [0, 1]; series below 1/2, reflection above."""
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"dilog argument {z} outside [0, 1]")
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return PI2_6
    if z > 0.5:
        return PI2_6 - math.log(z) * math.log1p(-z) - dilog(1.0 - z)
    total, power, n = 0.0, z, 1
    while True:
        term = power / (n * n)
        total += term
        if term < 1e-17 * max(total, 1e-300):
            return total
        power *= z
        n += 1


def bessel_j1(x):
    """J1 for x >= 0; ascending series to 16, Hankel asymptotics beyond.
    Accepts scalars or numpy arrays."""
    scalar = np.isscalar(x)
    arr = np.atleast_1d(np.asarray(x, dtype=np.longdouble))
    if np.any(arr < 0):
        raise DomainError("bessel_j1 requires x >= 0")
    out = np.zeros_like(arr)

    small = arr <= 16.0
    xs = arr[small]
    if xs.size:
        half = xs / 2.0
        q = half * half
        term = half.copy()
        total = term.copy()
        for m in range(1, 42):
            term = -term * q / (m * (m + 1))
            total += term
        out[small] = total

    xl = arr[~small]
    if xl.size:
        inv = 1.0 / xl
        p_sum = np.zeros_like(xl)
        q_sum = np.zeros_like(xl)
        a = np.longdouble(1.0)
        powx = np.ones_like(xl)
        for j in range(30):
            # Hankel coefficients a_j for nu = 1 (mu = 4)
            if j % 2 == 0:
                p_sum += ((-1) ** (j // 2)) * a * powx
            else:
                q_sum += ((-1) ** ((j - 1) // 2)) * a * powx
            a = a * (4.0 - (2 * j + 1) ** 2) / (8.0 * (j + 1))
            powx = powx * inv
        omega = xl - 3.0 * np.pi / 4.0
        out[~small] = np.sqrt(2.0 / (np.pi * xl)) * (
            p_sum * np.cos(omega) - q_sum * np.sin(omega))

    result = np.asarray(out, dtype=float)
    return float(result[0]) if scalar else result.reshape(np.shape(x))


def laguerre1(k: int, t):
    """Associated Laguerre polynomial L_k^(1)(t) by the three-term recurrence."""
    if k < 0:
        raise ValueError("k must be non-negative")
    t = np.asarray(t, dtype=float) if not np.isscalar(t) else t
    prev = 1.0 + 0.0 * t
    if k == 0:
        return prev
    cur = 2.0 - t
    for n in range(1, k):
        prev, cur = cur, ((2 * n + 2 - t) * cur - (n + 1) * prev) / (n + 1)
    return cur


_B_TERMS = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730)


def trigamma(a: float) -> float:
    """psi'(a) = sum 1/(a+n)^2 for a > 0."""
    if a <= 0:
        raise DomainError("trigamma requires a > 0")
    acc = 0.0
    while a < 10.0:
        acc += 1.0 / (a * a)
        a += 1.0
    inv2 = 1.0 / (a * a)
    total = 1.0 / a + 0.5 * inv2
    power = inv2 / a
    for b in _B_TERMS:
        total += b * power
        power *= inv2
    return acc + total


_GAUSS_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss01(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GAUSS_CACHE:
        nodes, weights = np.polynomial.legendre.leggauss(order)
        _GAUSS_CACHE[order] = (0.5 * (nodes + 1.0), 0.5 * weights)
    return _GAUSS_CACHE[order]


def _eval_vec(fun: Callable, arr: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(fun(arr), dtype=float)
        if vals.shape == arr.shape:
            return vals
    except Exception:
        pass
    return np.array([fun(v) for v in arr], dtype=float)


def _dyadic_nodes(panels: int, order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = _gauss01(order)
    us, ws = [], []
    hi = 1.0
    for _ in range(panels):
        lo = hi / 2.0
        us.append(lo + (hi - lo) * nodes)
        ws.append((hi - lo) * weights)
        hi = lo
    return np.concatenate(us), np.concatenate(ws)


def _halfline_weighted(fun: Callable, rate: float, rule: QuadratureRule,
                       dm_weight: bool) -> float:
    """int_0^inf fun(t) * [t/(e^t - 1) if dm_weight] dt, fun decaying at
    least like e^(-rate t) up to polynomial factors."""

    def attempt(order: int) -> float:
        u, w = _dyadic_nodes(rule.panels, order)
        t = -np.log(u) / rate
        vals = _eval_vec(fun, t)
        if dm_weight:
            # t/(e^t-1) du-form: t * u_r/(1-u_r) with u_r = e^{-t}
            ur = np.exp(-t)
            jac = t * ur / (1.0 - ur) / (rate * u)
        else:
            jac = 1.0 / (rate * u)
        return float(np.sum(w * vals * jac))

    coarse = attempt(rule.order)
    fine = attempt(2 * rule.order)
    if abs(fine - coarse) > rule.abs_tol:
        raise NonConvergent(
            f"half-line quadrature stalled: |{fine} - {coarse}| > {rule.abs_tol}")
    return fine


def integrate_dm(fun: Callable, rule: QuadratureRule = QuadratureRule()) -> float:
    """int_0^inf fun(t) dm(t) with dm(t) = t dt/(e^t - 1)."""
    return _halfline_weighted(fun, 1.0, rule, dm_weight=True)


def integrate_halfline(fun: Callable, rate: float,
                       rule: QuadratureRule = QuadratureRule()) -> float:
    """Plain int_0^inf fun(t) dt for integrands decaying like e^(-rate t)."""
    return _halfline_weighted(fun, rate, rule, dm_weight=False)


_SQRT15 = math.sqrt(15.0)
_TRI_WEIGHTS = (9 / 40,
                (155 - _SQRT15) / 1200, (155 - _SQRT15) / 1200, (155 - _SQRT15) / 1200,
                (155 + _SQRT15) / 1200, (155 + _SQRT15) / 1200, (155 + _SQRT15) / 1200)
_A1 = (6 - _SQRT15) / 21
_A2 = (6 + _SQRT15) / 21
_TRI_BARY = ((1 / 3, 1 / 3, 1 / 3),
             (_A1, _A1, 1 - 2 * _A1), (_A1, 1 - 2 * _A1, _A1), (1 - 2 * _A1, _A1, _A1),
             (_A2, _A2, 1 - 2 * _A2), (_A2, 1 - 2 * _A2, _A2), (1 - 2 * _A2, _A2, _A2))

TRIANGLE_VERTICES = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0))


_TRI_BARY_ARR = np.array(_TRI_BARY)          # (7, 3)
_TRI_W_ARR = np.array(_TRI_WEIGHTS)          # (7,)


def _quad_many(fun2, tris: np.ndarray) -> np.ndarray:
    """Degree-5 rule on a batch of triangles; tris has shape (n, 3, 2)."""
    xs = tris[:, :, 0] @ _TRI_BARY_ARR.T     # (n, 7)
    ys = tris[:, :, 1] @ _TRI_BARY_ARR.T
    areas = 0.5 * np.abs(
        (tris[:, 1, 0] - tris[:, 0, 0]) * (tris[:, 2, 1] - tris[:, 0, 1])
        - (tris[:, 2, 0] - tris[:, 0, 0]) * (tris[:, 1, 1] - tris[:, 0, 1]))
    return (fun2(xs, ys) @ _TRI_W_ARR) * areas


def _subdivide(tris: np.ndarray) -> np.ndarray:
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    m_ab, m_bc, m_ca = (a + b) / 2, (b + c) / 2, (c + a) / 2
    kids = np.empty((tris.shape[0], 4, 3, 2))
    kids[:, 0] = np.stack([a, m_ab, m_ca], axis=1)
    kids[:, 1] = np.stack([m_ab, b, m_bc], axis=1)
    kids[:, 2] = np.stack([m_ca, m_bc, c], axis=1)
    kids[:, 3] = np.stack([m_ab, m_bc, m_ca], axis=1)
    return kids


def integrate_triangle(fun: Callable[[float, float], float], abs_tol: float,
                       vertices=TRIANGLE_VERTICES, max_depth: int = 40,
                       max_leaves: int = 400_000) -> float:
    """Adaptive integral of fun over a triangle (default: 0 < y < x < 1).

    Leaves carry the one-level difference |fine - coarse| as error
    estimate (conservative: near singularities the rule drops to first
    order, so no Richardson discount is applied); only the leaves
    dominating the summed estimate get refined, so meshes grade
    geometrically into corner or edge singularities without flooding the
    smooth interior.  fun is evaluated on numpy arrays when possible,
    scalars otherwise.
    """
    try:
        probe = np.asarray(fun(np.array([0.51, 0.52]), np.array([0.23, 0.24])))
        assert probe.shape == (2,)
        fun2 = fun
    except Exception:
        fun2 = np.vectorize(fun, otypes=[float])

    def expand(tris, coarse):
        # leaf payload: children quads give the refined value and the gap
        kids = _subdivide(tris)
        kq = _quad_many(fun2, kids.reshape(-1, 3, 2)).reshape(-1, 4)
        fine = kq.sum(axis=1)
        gap = np.abs(fine - coarse)
        return kids, kq, fine, gap

    tris = np.array([vertices], dtype=float)
    kids, kidq, fine, gap = expand(tris, _quad_many(fun2, tris))
    depth = np.zeros(1, dtype=int)

    while True:
        est = gap
        total_err = float(est.sum())
        if total_err <= 0.9 * abs_tol:
            break
        refinable = depth < max_depth
        if not refinable.any() or fine.size > max_leaves:
            raise NonConvergent(
                f"triangle quadrature stuck at error {total_err:.3e} "
                f"with {fine.size} leaves")
        thr = max(total_err / (2.0 * fine.size),
                  float(est[refinable].max()) / 64.0)
        sel = refinable & (est >= thr)
        if not sel.any():
            sel = refinable & (est == est[refinable].max())
        nk, nkq, nfine, ngap = expand(kids[sel].reshape(-1, 3, 2),
                                      kidq[sel].reshape(-1))
        keep = ~sel
        kids = np.concatenate([kids[keep], nk])
        kidq = np.concatenate([kidq[keep], nkq])
        fine = np.concatenate([fine[keep], nfine])
        gap = np.concatenate([gap[keep], ngap])
        depth = np.concatenate([depth[keep], np.repeat(depth[sel] + 1, 4)])

    return float(fine.sum())
