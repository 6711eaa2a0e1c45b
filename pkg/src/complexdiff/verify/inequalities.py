"""Geometric inequalities for ``D_C K`` (planar exact, C^2 through the oracle)."""
from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from ..complexspace import BallCm, PolytopeCm, affine_dim, direction_net
from ..diffbody import dc_auto, dc_polytope
from ..errors import InvalidInputError
from ..planar import (
    Polygon2,
    SampledSupport2,
    area,
    circumradius,
    diameter,
    inradius,
    min_width,
    mixed_area_integral,
    perimeter,
    support,
    width,
)
from .report import Report
from .solid import (
    KAPPA4,
    circumradius_cm,
    diameter_points,
    materialize,
    mc_volume,
    min_width_cm,
    width_cm,
)


def length(C) -> float:
    """``l(C)``: total mass of the area measure."""
    return perimeter(C)


def _rel(x: float, tol: float) -> float:
    return tol * max(1.0, abs(x))


def quermass_check_m1(C, K, D=None) -> Report:
    """``W_0(D) >= l^2 W_0(K)`` and ``W_1(D) = l W_1(K)`` with ``W_1 = perimeter / 2``."""
    D = dc_auto(C, K) if D is None else D
    L = length(C)
    r = Report("quermass_m1")
    lhs0, rhs0 = area(D), L**2 * area(K)
    r.add("W0: area(D) >= l^2 area(K)", lhs0, rhs0, ">=", _rel(rhs0, 1e-9))
    lhs1, rhs1 = perimeter(D) / 2, L * perimeter(K) / 2
    r.add("W1: perimeter equality", lhs1, rhs1, "==", _rel(rhs1, 1e-9))
    return r


def volume_check_m2(C: Polygon2, K, samples: int = 200_000, rng: np.random.Generator | None = None) -> Report:
    """Monte-Carlo ``vol_4(D_C K)`` against ``l^4 vol(K)`` and ``kappa_4 R(K)^4 l^4``."""
    D = dc_polytope(C, K)
    L = length(C)
    est = mc_volume(D, samples, rng)
    if not isinstance(K, PolytopeCm):
        raise InvalidInputError("volume check needs a polytope K")
    volK = float(ConvexHull(K.vertices).volume) if affine_dim(K) == 4 else 0.0
    lo3, hi3 = est.interval(3.0)
    lower = L**4 * volK
    upper = KAPPA4 * circumradius_cm(K) ** 4 * L**4
    r = Report("volume_m2")
    r.add("l^4 vol(K) <= vol(D) (+3 sigma)", hi3, lower, ">=", _rel(lower, 1e-9))
    r.add("vol(D) (-3 sigma) <= kappa_4 R(K)^4 l^4", lo3, upper, "<=", _rel(upper, 1e-9))
    r.add("membership programs agree with facets", est.lp_mismatches, 0, "==", 0.0)
    r.info.update(
        estimate=est.estimate,
        sigma=est.sigma,
        exact_hull_volume=est.exact,
        lower=lower,
        upper=upper,
        samples=samples,
    )
    return r


def _chain_constant(C) -> float:
    """``s = sum_{i=1}^N 2^{i/2}`` for an ``N``-edge polygon."""
    from ..diffbody import generating_measure

    N = len(generating_measure(C))
    return float(sum(2 ** (i / 2) for i in range(1, N + 1)))


def width_diameter_check(C: Polygon2, K, D=None, n_dirs: int = 720) -> Report:
    """Width, diameter and circumradius bounds for ``D_C K``.

    Hard checks: ``w(K) l <= w(D,u) <= diam(K) l`` on a direction net,
    ``diam(K) l / s <= diam(D) <= diam(K) l``, ``R(D) <= R(K) l`` and the
    lower circumradius bound obtained from ``R(D) >= diam(D) / 2`` together
    with Jung's inequality.  The stronger displayed lower bound without the
    factor ``1/2`` is reported as a soft (flag-only) check.
    """
    L = length(C)
    s = _chain_constant(C)
    r = Report("width_diameter")
    if isinstance(K, (Polygon2, SampledSupport2)):
        m = 1
        D = dc_auto(C, K) if D is None else D
        theta = np.linspace(0, 2 * math.pi, n_dirs, endpoint=False)
        if isinstance(D, Polygon2) and len(D) > 2:
            theta = np.concatenate([theta, D.normal_angles()])
        wD = width(D, theta)
        wK, dK, dD = min_width(K), diameter(K), diameter(D)
        RK, RD = circumradius(K), circumradius(D)
        tol = 1e-9 if isinstance(K, Polygon2) else 1e-6
    else:
        m = K.m
        D = dc_polytope(C, K) if D is None else D
        net = direction_net(m, 200)
        wD = width_cm(D, net)
        if isinstance(K, BallCm):
            wK = dK = 2 * K.radius
            dD = dK * L
            RK, RD = K.radius, K.radius * L
        else:
            VK = K.vertices if isinstance(K, PolytopeCm) else materialize(K)
            wK = min_width_cm(K)
            dK, dD = diameter_points(VK), diameter_points(materialize(D))
            RK, RD = circumradius_cm(K), circumradius_cm(D)
        tol = 1e-7
    r.add("w(K) l <= min_u w(D,u)", float(wD.min()), wK * L, ">=", _rel(wK * L, tol))
    r.add("max_u w(D,u) <= diam(K) l", float(wD.max()), dK * L, "<=", _rel(dK * L, tol))
    r.add("diam(D) <= diam(K) l", dD, dK * L, "<=", _rel(dK * L, tol))
    r.add("diam(D) >= diam(K) l / s", dD, dK * L / s, ">=", _rel(dK * L, tol))
    r.add("R(D) <= R(K) l", RD, RK * L, "<=", _rel(RK * L, tol))
    jung = math.sqrt((2 * m + 1) / m)
    r.add("R(D) >= (l / 2s) sqrt((2m+1)/m) R(K)", RD, L / (2 * s) * jung * RK, ">=", _rel(RK * L, tol))
    r.add("R(D) >= (l / s) sqrt((2m+1)/m) R(K) [displayed form]", RD, L / s * jung * RK, ">=", _rel(RK * L, tol), hard=False)
    r.info.update(s=s, l=L, min_width_K=wK, diam_K=dK, diam_D=dD, R_K=RK, R_D=RD)
    return r


def mixed_volume_check_m1(C, K, D=None) -> Report:
    """``V(K, D_C K) >= l(C) area(K)`` with ``V(K, L) = (area(K+L) - area(K) - area(L)) / 2``."""
    D = dc_auto(C, K) if D is None else D
    L = length(C)
    # the integral form is symmetric; put the polygon (if any) in the measure slot
    v = (mixed_area_integral(D, K) if isinstance(K, Polygon2) else mixed_area_integral(K, D)) / 2
    rhs = L * area(K)
    r = Report("mixed_volume_m1")
    tol = 1e-9 if isinstance(K, Polygon2) else 1e-6
    r.add("V(K, D) >= l area(K)", v, rhs, ">=", _rel(rhs, tol))
    r.info.update(mixed=v, bound=rhs)
    return r


def brunn_minkowski_check(C, K, L, tol: float = 1e-9) -> Report:
    """``area(D(K+L))^{1/2} >= area(DK)^{1/2} + area(DL)^{1/2}``."""
    from ..planar import minkowski_sum

    a = math.sqrt(max(area(dc_auto(C, minkowski_sum(K, L))), 0.0))
    b = math.sqrt(max(area(dc_auto(C, K)), 0.0)) + math.sqrt(max(area(dc_auto(C, L)), 0.0))
    r = Report("brunn_minkowski")
    r.add("sqrt area D(K+L) >= sqrt area DK + sqrt area DL", a, b, ">=", tol)
    return r


def _constraint_normals(D: Polygon2) -> np.ndarray:
    if len(D) >= 3:
        return D.normal_angles()
    if len(D) == 2:
        e = D.vertices[1] - D.vertices[0]
        a = math.atan2(e[1], e[0])
        return np.array([a, a + math.pi / 2, a + math.pi, a - math.pi / 2])
    return np.arange(4) * math.pi / 2


def containment_after_translation(lam: float, K: Polygon2, D: Polygon2):
    """A translation ``t`` with ``lam K + t`` inside ``D``, or ``None``.

    For a polygon ``D`` this is the exact criterion
    ``lam h_K(u_f) + <t, u_f> <= h_D(u_f)`` over its facet normals.
    """
    ang = _constraint_normals(D)
    U = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    rhs = support(D, ang) - lam * support(K, ang)
    res = linprog(np.zeros(2), A_ub=U, b_ub=rhs + 1e-12 * max(1.0, float(np.abs(rhs).max())), bounds=[(None, None)] * 2, method="highs")
    if res.status != 0:
        return None
    return res.x


def containment_lambda(C, K: Polygon2) -> float:
    """``l(C) r(K) / R(K)``: the inradius ratio ``r(B; K)`` equals ``1 / R(K)``."""
    return length(C) * inradius(K) / circumradius(K)


def containment_check(C, K: Polygon2, D=None) -> Report:
    D = dc_auto(C, K) if D is None else D
    lam = containment_lambda(C, K)
    t = containment_after_translation(lam, K, D)
    r = Report("containment")
    r.add("lambda K + t inside D_C K is feasible", float(t is not None), 1.0, "==", 0.0)
    r.info.update(lam=lam, translation=t)
    return r
