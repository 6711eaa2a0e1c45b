"""Construction of the complex difference body ``D_C K``.

For a polygon ``C`` with outer edge normals ``exp(i theta_j)`` and edge lengths
``s_j`` the body is the weighted sum of rotated copies ``sum_j s_j
exp(i theta_j) K``; its support function is ``sum_j s_j h(K, exp(-i theta_j)
u)``.  In C^2 the result stays in that term form (:class:`SupportOracleCm`).
"""
from __future__ import annotations

import math

import numpy as np

from .complexspace import BallCm, PolytopeCm, SupportOracleCm, apply_J, to_complex, to_real
from .errors import InvalidInputError, NotAMeasureError, ResolutionError
from .planar import (
    TWO_PI,
    AtomicMeasure1,
    Polygon2,
    SampledSupport2,
    area_measure,
    discrete_area_measure,
    minkowski_combination,
    steiner_point,
)


def generating_measure(C) -> AtomicMeasure1:
    """Area measure of ``C`` (polygon, sampled body, or a measure itself)."""
    if isinstance(C, AtomicMeasure1):
        return C
    if isinstance(C, Polygon2):
        return area_measure(C)
    if isinstance(C, SampledSupport2):
        return discrete_area_measure(C)
    raise InvalidInputError(f"cannot take the area measure of {type(C).__name__}")


def dc_polytope(C, K) -> SupportOracleCm:
    """``D_C K`` for a polygon ``C`` and a body ``K`` in ``C^m``, as terms.

    ``K`` may be a polytope, a ball or itself an oracle (its terms are
    expanded).  A point ``C`` gives the zero body (no terms).
    """
    mu = generating_measure(C)
    if isinstance(K, SupportOracleCm):
        terms = tuple(
            (s * t, th + ph, base) for th, s in zip(mu.angles, mu.weights) for t, ph, base in K.terms
        )
    elif isinstance(K, (PolytopeCm, BallCm)):
        terms = tuple((float(s), float(th), K) for th, s in zip(mu.angles, mu.weights))
    else:
        raise InvalidInputError(f"unsupported body {type(K).__name__}")
    return SupportOracleCm(K.m, terms)


def dc_planar(C, K: Polygon2) -> Polygon2:
    """Exact ``D_C K`` for planar polygons (iterated Minkowski sums)."""
    mu = generating_measure(C)
    return minkowski_combination(
        (w * complex(math.cos(a), math.sin(a)), K) for a, w in zip(mu.angles, mu.weights)
    )


def dc_planar_sampled(C, K: SampledSupport2) -> SampledSupport2:
    """Grid values of ``h(D_C K)`` for a sampled ``K``.

    Atoms of ``C`` on the grid act by index shifts (exact).  Other atoms are
    applied in Fourier space, which evaluates ``sum_j s_j h_K(t - theta_j)``
    by trigonometric interpolation; if that breaks discrete convexity (``h_K``
    far from band-limited) the atoms are rounded to the grid instead.  A
    sampled ``C`` must share ``K``'s grid.
    """
    if isinstance(C, SampledSupport2):
        if C.n != K.n:
            raise ResolutionError(f"grid mismatch: {C.n} != {K.n}")
        return _shift_sum(discrete_area_measure(C), K)
    mu = generating_measure(C)
    n = K.n
    if np.allclose(np.exp(1j * n * mu.angles), 1.0, atol=1e-12):
        return _shift_sum(mu, K)
    H = K.coefficients()
    freq = np.fft.fftfreq(n, d=1.0 / n)
    mult = np.exp(-1j * np.multiply.outer(freq, mu.angles)) @ mu.weights
    mult[n // 2] = np.cos(n / 2 * mu.angles) @ mu.weights
    h = np.real(np.fft.ifft(H * mult)) * n
    # interpolating a support function that is not band-limited can leave a
    # convexity defect; then the atoms are snapped to the grid instead
    tol = 1e-5 * max(1.0, float(np.max(np.abs(h))))
    try:
        return SampledSupport2(h, tol=tol)
    except InvalidInputError:
        return _shift_sum(mu, K)


def _shift_sum(mu: AtomicMeasure1, K: SampledSupport2) -> SampledSupport2:
    """``sum_i s_i h_K(t - theta_i)`` with each ``theta_i`` rounded to the grid."""
    shifts = np.rint(mu.angles * K.n / TWO_PI).astype(int)
    h = np.zeros(K.n)
    for k, w in zip(shifts, mu.weights):
        h += w * np.roll(K.h, k)
    return SampledSupport2(h, tol=1e-9 * max(1.0, float(np.max(np.abs(h)))))


def dc_auto(C, K):
    """Dispatch on the representation of ``K``."""
    if isinstance(K, Polygon2):
        return dc_planar(C, K)
    if isinstance(K, SampledSupport2):
        return dc_planar_sampled(C, K)
    return dc_polytope(C, K)


def convolve_measures(SC: AtomicMeasure1, SK: AtomicMeasure1) -> AtomicMeasure1:
    """Convolution on the circle: atoms at ``a_i + b_j`` with weight ``s_i r_j``."""
    a = np.add.outer(SC.angles, SK.angles).ravel()
    w = np.multiply.outer(SC.weights, SK.weights).ravel()
    return AtomicMeasure1(a, w)


def body_from_measure(mu: AtomicMeasure1, tol: float = 1e-9) -> Polygon2:
    """Polygon with area measure ``mu``, translated to Steiner point 0.

    Raises :class:`NotAMeasureError` if the atoms do not close up.
    """
    if len(mu) == 0:
        return Polygon2([[0.0, 0.0]])
    if mu.closure_defect() > tol * max(1.0, mu.mass()):
        raise NotAMeasureError(f"atoms do not close up (defect {mu.closure_defect():.3e})")
    # edge with outer normal angle a runs in direction a + pi/2 (CCW traversal)
    edges = mu.weights[:, None] * np.stack([-np.sin(mu.angles), np.cos(mu.angles)], axis=1)
    P = Polygon2(np.vstack([np.zeros((1, 2)), np.cumsum(edges, axis=0)]))
    return P.translate(-steiner_point(P))


def steiner_centered(P):
    """Translate a planar body so that its Steiner point is the origin."""
    s = steiner_point(P)
    if isinstance(P, Polygon2):
        return P.translate(-s)
    th = P.angles
    return SampledSupport2(P.h - s[0] * np.cos(th) - s[1] * np.sin(th))


def segment_body(a: float, b: float, u) -> PolytopeCm:
    u = np.asarray(u, dtype=float)
    return PolytopeCm(u.size // 2, np.stack([a * u, b * u]), reduce=False)


def dc_segment(C: Polygon2, a: float, b: float, u) -> SupportOracleCm:
    """``D_C [a u, b u]`` for a unit vector ``u``."""
    if not a < b:
        raise InvalidInputError("need a < b")
    return dc_polytope(C, segment_body(a, b, u))


def segment_closed_form(C: Polygon2, a: float, b: float, u) -> SupportOracleCm:
    """``(b - a) D(i C . u)`` with ``D X = X + (-X)`` and ``C . u = {c u}``."""
    u = np.asarray(u, dtype=float)
    zu = to_complex(u)
    pts = to_real(np.multiply.outer(1j * C.as_complex(), zu))
    body = PolytopeCm(u.size // 2, pts, reduce=False)
    return SupportOracleCm(body.m, ((b - a, 0.0, body), (b - a, math.pi, body)))


def segment_height(C: Polygon2, a: float, b: float, u) -> float:
    """``h(D_C [a u, b u], J u)``: ``(b - a)`` times the width of ``C`` along the real axis."""
    from .complexspace import support_cm

    return float(support_cm(dc_segment(C, a, b, u), apply_J(np.asarray(u, dtype=float))))


def commute_m1(C: Polygon2, K: Polygon2) -> tuple[Polygon2, Polygon2]:
    """``(D_C K, D_K C)``; equal up to translation."""
    return dc_planar(C, K), dc_planar(K, C)


def iterate_planar(C, K: Polygon2, N: int) -> Polygon2:
    """``D_C`` applied ``N`` times."""
    out = K
    for _ in range(N):
        out = dc_planar(C, out)
    return out
