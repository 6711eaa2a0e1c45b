"""Fixed points and iterates of ``D_C``, plus the scripted non-surjectivity example."""
from __future__ import annotations

import math
from itertools import product

import numpy as np
from scipy.optimize import minimize_scalar

from ..complexspace import BallCm, direction_net, support_cm
from ..diffbody import dc_auto, dc_planar, dc_polytope, generating_measure, steiner_centered
from ..planar import (
    Polygon2,
    SampledSupport2,
    diameter,
    interval,
    perimeter,
    reflect,
    regular_polygon,
    rotate_scale,
    support,
)
from .report import Report
from .solid import steiner_point_cm


def _angles(*bodies, n: int = 4096) -> np.ndarray:
    th = [np.linspace(0, 2 * math.pi, n, endpoint=False)]
    for B in bodies:
        if isinstance(B, Polygon2) and len(B) > 2:
            th.append(B.normal_angles())
    return np.concatenate(th)


def support_distance(A, B, n: int = 4096) -> float:
    """``sup |h_A - h_B|`` over a fine angle grid plus the facet normals."""
    th = _angles(A, B, n=n)
    return float(np.max(np.abs(support(A, th) - support(B, th))))


def fixed_point_check(C, K, net: np.ndarray | None = None) -> float:
    """``sup_u |h(D_C K, u) - l(C) h(K - s(K), u)|``; ``D_C K`` is already Steiner-centred."""
    L = perimeter(C)
    if isinstance(K, (Polygon2, SampledSupport2)):
        D = dc_auto(C, K)
        Kc = steiner_centered(K)
        th = _angles(D, Kc)
        return float(np.max(np.abs(support(D, th) - L * support(Kc, th))))
    D = dc_polytope(C, K)
    net = direction_net(K.m, 200) if net is None else net
    s = K.center_array() if isinstance(K, BallCm) else steiner_point_cm(K)
    return float(np.max(np.abs(support_cm(D, net) - L * (support_cm(K, net) - net @ s))))


def iteration_condition(C, J: int = 64, tol: float = 1e-9) -> bool:
    """Every multiplier ``lambda_j`` (``|j| <= J``) is ``0`` or ``l(C)``."""
    mu = generating_measure(C)
    j = np.arange(-J, J + 1)
    lam = np.exp(1j * np.multiply.outer(j, mu.angles)) @ mu.weights
    L = mu.mass()
    return bool(np.all((np.abs(lam) <= tol * L) | (np.abs(lam - L) <= tol * L)))


def iterate_planar_check(C, K: Polygon2, N: int) -> float:
    """Distance between ``D_C^N K`` and ``l(C)^{N-1} D_C K`` (both Steiner-centred)."""
    if not 1 <= N <= 5:
        raise ValueError("N must be in 1..5")
    L = perimeter(C)
    D1 = dc_planar(C, K)
    DN = D1
    for _ in range(N - 1):
        DN = dc_planar(C, DN)
    return support_distance(steiner_centered(DN), steiner_centered(D1).scale(L ** (N - 1)))


iterate_check = iterate_planar_check


def _best_scaled_distance(D: Polygon2, T: Polygon2, th: np.ndarray) -> float:
    hD = support(steiner_centered(D), th)
    hT = support(steiner_centered(T), th)

    def f(lam):
        return float(np.max(np.abs(lam * hD - hT)))

    top = 4 * float(np.max(np.abs(hT))) / max(float(np.max(np.abs(hD))), 1e-300)
    return float(minimize_scalar(f, bounds=(0.0, top), method="bounded", options={"xatol": 1e-12}).fun)


def scalene_triangle() -> Polygon2:
    return Polygon2([[0.0, 0.0], [3.0, 0.0], [0.7, 1.6]])


def nonsurjectivity_demo() -> Report:
    """Scripted evidence that a scalene triangle is not of the form ``D_C K``.

    Not a proof: a small catalogue of polygon pairs is searched and the best
    Hausdorff distance to the triangle (after centring and optimal scaling) is
    reported relative to its diameter.  Two non-injectivity witnesses are
    recorded as well.
    """
    T = scalene_triangle()
    cat = [
        interval(),
        regular_polygon(3),
        regular_polygon(4),
        T,
        reflect(T),
        rotate_scale(T, complex(math.cos(1.0), math.sin(1.0))),
        Polygon2([[0.0, 0.0], [1.0, 0.0]]),
        Polygon2([[0.0, 0.0], [2.0, 0.0], [0.5, 0.4]]),
        Polygon2([[0.0, 0.0], [1.0, 0.2], [0.1, 1.3]]),
    ]
    th = _angles(T, n=2048)
    best = math.inf
    for C, K in product(cat, cat):
        d = _best_scaled_distance(dc_planar(C, K), T, th)
        best = min(best, d)
    r = Report("nonsurjectivity")
    rel = best / diameter(T)
    r.add("best catalogue distance / diam(T) > 0.05", rel, 0.05, ">=", 0.0)
    rng = np.random.default_rng(11)
    K = Polygon2(rng.normal(size=(7, 2)))
    I = interval()
    r.add("D K = D(-K) for the interval", support_distance(dc_planar(I, K), dc_planar(I, reflect(K))), 0.0, "==", 1e-9)
    rho = complex(0.6, -1.1)
    a = steiner_centered(dc_planar(rotate_scale(regular_polygon(3), rho), K))
    b = steiner_centered(dc_planar(regular_polygon(3), rotate_scale(K, rho)))
    r.add("D_{rho C} K = D_C(rho K)", support_distance(a, b), 0.0, "==", 1e-9)
    r.info.update(best_distance=best, relative=rel, catalogue_size=len(cat) ** 2)
    return r
