"""Geometry of bodies in R^4 used by the checks: vertex sets, widths, balls, volume."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog, minimize
from scipy.spatial import ConvexHull, QhullError

from ..complexspace import (
    BallCm,
    PolytopeCm,
    SupportOracleCm,
    affine_hull,
    direction_net,
    support_cm,
    to_complex,
    to_real,
)
from ..errors import InvalidInputError

KAPPA4 = math.pi**2 / 2  # volume of the unit ball in R^4


def _rotated_vertices(base: PolytopeCm, theta: float) -> np.ndarray:
    return to_real(np.exp(1j * theta) * to_complex(base.vertices))


def _set_key(V: np.ndarray) -> bytes:
    R = np.round(V, 9) + 0.0
    return R[np.lexsort(R.T[::-1])].tobytes()


def summands(B) -> list[tuple[float, np.ndarray]]:
    """``[(weight, vertex array)]`` whose Minkowski sum is ``B``.

    Terms whose rotated vertex sets coincide are merged, so a base that is
    invariant under a rotation collapses to a single scaled copy.
    """
    if isinstance(B, PolytopeCm):
        return [(1.0, B.vertices)]
    if not isinstance(B, SupportOracleCm):
        raise InvalidInputError(f"no vertex representation for {type(B).__name__}")
    groups: dict[bytes, list] = {}
    for s, th, base in B.terms:
        V = _rotated_vertices(base, th)
        key = _set_key(V)
        if key in groups:
            groups[key][0] += s
        else:
            groups[key] = [s, V]
    return [(float(s), V) for s, V in groups.values()]


def compressed(B):
    """The same body with rotation-equivalent polytope terms merged.

    Ball terms are kept as they are.  Evaluating the support function of the
    result costs one pass per distinct rotated vertex set.
    """
    if not isinstance(B, SupportOracleCm):
        return B
    polys = SupportOracleCm(B.m, tuple(t for t in B.terms if isinstance(t[2], PolytopeCm)))
    balls = tuple(t for t in B.terms if not isinstance(t[2], PolytopeCm))
    merged = tuple((s, 0.0, PolytopeCm(B.m, V, reduce=False)) for s, V in summands(polys))
    return SupportOracleCm(B.m, merged + balls)


def extreme_subset(P: np.ndarray) -> np.ndarray:
    """Extreme points of a finite set of any affine dimension."""
    P = np.unique(np.round(P, 12), axis=0)
    if len(P) <= 2:
        return P
    origin, basis = affine_hull(PolytopeCm(P.shape[1] // 2, P, reduce=False))
    k = basis.shape[0]
    if k == 0:
        return P[:1]
    Y = (P - origin) @ basis.T
    if k == 1:
        return P[[np.argmin(Y[:, 0]), np.argmax(Y[:, 0])]]
    try:
        return P[ConvexHull(Y).vertices]
    except QhullError:
        return P[ConvexHull(Y, qhull_options="QJ").vertices]


def materialize(B) -> np.ndarray:
    """Vertex set of an oracle body, by pruning partial Minkowski sums."""
    S = np.zeros((1, 2 * B.m))
    for s, V in summands(B):
        S = extreme_subset((S[:, None, :] + s * V[None, :, :]).reshape(-1, S.shape[1]))
    return S


def width_cm(B, u) -> np.ndarray:
    u = np.atleast_2d(u)
    return support_cm(B, u) + support_cm(B, -u)


def min_width_cm(K, seed: int = 0) -> float:
    """Minimal width: best of a direction net, then local refinement on the sphere."""
    net = direction_net(K.m, 400, seed)
    w = width_cm(K, net)

    def f(x):
        n = np.linalg.norm(x)
        return float(width_cm(K, x / n)[0])

    best = float(w.min())
    for i in np.argsort(w)[:8]:
        res = minimize(f, net[i], method="Nelder-Mead", options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000})
        best = min(best, float(res.fun))
    return best


def diameter_points(V: np.ndarray) -> float:
    d = V[:, None, :] - V[None, :, :]
    return float(np.sqrt(np.max(np.sum(d * d, axis=-1))))


def enclosing_ball(V: np.ndarray) -> tuple[np.ndarray, float]:
    """Smallest enclosing ball of a point set (convex program, SLSQP).

    The returned radius is recomputed from the returned centre, so it is
    always a valid enclosing radius.
    """
    V = np.asarray(V, dtype=float)
    if V.shape[1] == 2:
        from ..planar import min_enclosing_circle

        return min_enclosing_circle(V)
    c0 = V.mean(axis=0)
    t0 = float(np.max(np.sum((V - c0) ** 2, axis=1)))
    d = V.shape[1]
    cons = {
        "type": "ineq",
        "fun": lambda x: x[d] - np.sum((V - x[:d]) ** 2, axis=1),
        "jac": lambda x: np.hstack([2 * (V - x[:d]), np.ones((len(V), 1))]),
    }
    res = minimize(
        lambda x: x[d],
        np.append(c0, t0),
        jac=lambda x: np.append(np.zeros(d), 1.0),
        constraints=[cons],
        method="SLSQP",
        options={"ftol": 1e-15, "maxiter": 500},
    )
    c = res.x[:d] if res.success else c0
    return c, float(np.sqrt(np.max(np.sum((V - c) ** 2, axis=1))))


def circumradius_cm(B) -> float:
    if isinstance(B, BallCm):
        return B.radius
    return enclosing_ball(materialize(B))[1]


def steiner_point_cm(B, quad=None) -> np.ndarray:
    """``(1 / kappa_4) int h(u) u dsigma(u)`` by the product rule on S^3."""
    from ..harmonic import s3_quadrature

    quad = s3_quadrature(24, 32, 32) if quad is None else quad
    v = quad.points(np.array([1.0, 0.0, 0.0, 0.0]))
    return (quad.weights * support_cm(B, v)) @ v / KAPPA4


# ------------------------------------------------------------ Monte-Carlo


@dataclass(frozen=True)
class VolumeEstimate:
    estimate: float
    sigma: float
    samples: int
    box_volume: float
    exact: float | None
    lp_mismatches: int
    lp_checked: int

    def interval(self, k: float = 3.0) -> tuple[float, float]:
        return self.estimate - k * self.sigma, self.estimate + k * self.sigma


def _oracle_membership_lp(x: np.ndarray, parts: list[np.ndarray]) -> bool:
    """``x = sum_i y_i`` with ``y_i`` a convex combination of the rows of ``parts[i]``."""
    sizes = [len(P) for P in parts]
    n = sum(sizes)
    d = x.size
    A_eq = np.zeros((d + len(parts), n))
    b_eq = np.zeros(d + len(parts))
    A_eq[:d] = np.hstack([P.T for P in parts])
    b_eq[:d] = x
    col = 0
    for i, s in enumerate(sizes):
        A_eq[d + i, col : col + s] = 1.0
        b_eq[d + i] = 1.0
        col += s
    res = linprog(np.zeros(n), A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    return res.status == 0


def mc_volume(B, samples: int = 200_000, rng: np.random.Generator | None = None, lp_checks: int = 50) -> VolumeEstimate:
    """Monte-Carlo volume of a body in R^4 given as polytope or oracle.

    Membership uses the facets of the materialized vertex set; a subsample is
    re-tested with the feasibility program over the summands, and any
    disagreement is counted in ``lp_mismatches``.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    d = 2 * B.m
    E = np.eye(d)
    hi = support_cm(B, E)
    lo = -support_cm(B, -E)
    span = hi - lo
    if not np.all(np.isfinite(span)) or span.max() <= 0:
        raise InvalidInputError("degenerate sampling box")
    pad = np.where(span <= 1e-12 * span.max(), 1e-3 * span.max(), 0.0)
    lo, hi = lo - pad / 2, hi + pad / 2
    box = float(np.prod(hi - lo))
    V = materialize(B)
    X = lo + (hi - lo) * rng.random((samples, d))
    origin, basis = affine_hull(PolytopeCm(B.m, V, reduce=False))
    full = basis.shape[0] == d
    if full:
        hull = ConvexHull(V)
        exact = float(hull.volume)
        A, b = hull.equations[:, :-1], hull.equations[:, -1]
        scale = max(1.0, float(np.abs(V).max()))
        inside = np.ones(samples, dtype=bool)
        chunk = max(256, int(2e7 // len(b)))
        for start in range(0, samples, chunk):
            blk = X[start : start + chunk]
            inside[start : start + chunk] = np.all(blk @ A.T + b <= 1e-12 * scale, axis=1)
    else:
        exact = 0.0
        resid = (X - origin) - ((X - origin) @ basis.T) @ basis
        inside = np.linalg.norm(resid, axis=1) <= 1e-12
    p = float(inside.mean())
    est = box * p
    sigma = box * math.sqrt(max(p * (1 - p), 0.0) / samples)
    parts = [s * P for s, P in summands(B)] if not isinstance(B, PolytopeCm) else [B.vertices]
    idx = rng.choice(samples, size=min(lp_checks, samples), replace=False)
    mism = sum(int(_oracle_membership_lp(X[i], parts) != bool(inside[i])) for i in idx)
    return VolumeEstimate(est, sigma, samples, box, exact, mism, len(idx))
