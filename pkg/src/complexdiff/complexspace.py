"""Convex bodies in C^m = R^{2m} for m in {1, 2}.

Coordinates follow ``(w_1, ..., w_m) -> (Re w_1, Im w_1, ..., Re w_m, Im w_m)``.
The real inner product is ``<x, y> = Re sum_j x_j conj(y_j)`` and the complex
structure ``J`` is multiplication by ``i``.  For a unimodular ``alpha``,
``h(alpha K, u) = h(K, conj(alpha) u)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from .errors import InvalidInputError
from .planar import Polygon2, regular_polygon

RANK_TOL = 1e-8


def to_complex(x: np.ndarray) -> np.ndarray:
    """``(..., 2m)`` real array -> ``(..., m)`` complex array."""
    x = np.asarray(x, dtype=float)
    return x[..., 0::2] + 1j * x[..., 1::2]


def to_real(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape[:-1] + (2 * z.shape[-1],))
    out[..., 0::2] = z.real
    out[..., 1::2] = z.imag
    return out


def apply_J(x: np.ndarray) -> np.ndarray:
    return to_real(1j * to_complex(x))


def hermitian(x, y) -> complex:
    """``(x, y) = sum_j x_j conj(y_j)``, linear in ``x``."""
    return np.sum(to_complex(x) * np.conj(to_complex(y)), axis=-1)


def _rank(points: np.ndarray, tol: float = RANK_TOL) -> int:
    if points.shape[0] == 0:
        return 0
    s = np.linalg.svd(points, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def _in_hull_lp(p: np.ndarray, pts: np.ndarray) -> bool:
    k = pts.shape[0]
    A_eq = np.vstack([pts.T, np.ones((1, k))])
    b_eq = np.concatenate([p, [1.0]])
    res = linprog(np.zeros(k), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * k, method="highs")
    return res.status == 0


def extreme_points(points: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Drop points that are convex combinations of the others."""
    pts = np.unique(np.round(np.asarray(points, dtype=float), 12), axis=0)
    if pts.shape[0] <= 1:
        return pts
    d = pts.shape[1]
    centered = pts - pts.mean(axis=0)
    if pts.shape[0] > d + 1 and _rank(centered) == d:
        try:
            return pts[np.sort(ConvexHull(pts).vertices)]
        except QhullError:
            pass
    keep = list(range(pts.shape[0]))
    for i in range(pts.shape[0]):
        others = [j for j in keep if j != i]
        if others and _in_hull_lp(pts[i], pts[others]):
            keep.remove(i)
    return pts[keep]


class PolytopeCm:
    """Vertex-represented polytope in ``C^m`` (``m`` = 1 or 2).

    With ``reduce=True`` the input points are pruned to extreme points (qhull
    for full-dimensional sets, one feasibility program per point otherwise).
    """

    __slots__ = ("m", "_v")

    def __init__(self, m: int, points, reduce: bool = True):
        if m not in (1, 2):
            raise InvalidInputError(f"complex dimension must be 1 or 2, got {m}")
        pts = np.asarray(points, dtype=float).reshape(-1, 2 * m)
        if pts.shape[0] == 0:
            raise InvalidInputError("a polytope needs at least one vertex")
        if not np.all(np.isfinite(pts)):
            raise InvalidInputError("vertex coordinates must be finite")
        if reduce:
            pts = extreme_points(pts)
        pts.setflags(write=False)
        self.m = m
        self._v = pts

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    @property
    def dim(self) -> int:
        return 2 * self.m

    def __repr__(self):
        return f"PolytopeCm(m={self.m}, n_vertices={len(self._v)})"

    def vertices_are_extreme(self) -> bool:
        return all(
            not _in_hull_lp(self._v[i], np.delete(self._v, i, axis=0)) for i in range(len(self._v))
        ) if len(self._v) > 1 else True

    def translate(self, t) -> "PolytopeCm":
        return PolytopeCm(self.m, self._v + np.asarray(t, dtype=float), reduce=False)

    def linear_image(self, T: np.ndarray) -> "PolytopeCm":
        """Image under a complex ``m x m`` matrix acting on ``C^m``."""
        z = to_complex(self._v) @ np.asarray(T, dtype=complex).T
        return PolytopeCm(self.m, to_real(z), reduce=False)

    @classmethod
    def from_polygon(cls, P: Polygon2) -> "PolytopeCm":
        return cls(1, P.vertices, reduce=False)

    def to_polygon(self) -> Polygon2:
        if self.m != 1:
            raise InvalidInputError("only m = 1 polytopes are planar")
        return Polygon2(self._v)


@dataclass(frozen=True)
class BallCm:
    """Euclidean ball ``center + radius B_{2m}`` (exact support function)."""

    m: int
    radius: float = 1.0
    center: tuple = None

    def center_array(self) -> np.ndarray:
        if self.center is None:
            return np.zeros(2 * self.m)
        return np.asarray(self.center, dtype=float)


@dataclass(frozen=True)
class SupportOracleCm:
    """The body ``sum_i s_i exp(i theta_i) base_i`` given by its terms.

    ``terms`` is a tuple of ``(s, theta, base)`` with ``s > 0`` and ``base`` a
    :class:`PolytopeCm` or :class:`BallCm`.
    """

    m: int
    terms: tuple

    def __post_init__(self):
        for s, _, base in self.terms:
            if s <= 0:
                raise InvalidInputError("term weights must be positive")
            if base.m != self.m:
                raise InvalidInputError("term dimension mismatch")

    def total_weight(self) -> float:
        return float(sum(s for s, _, _ in self.terms))

    def simplified(self, tol: float = 1e-12) -> "SupportOracleCm":
        """Merge terms sharing a base and a rotation angle."""
        merged: list[list] = []
        for s, th, base in self.terms:
            th = math.fmod(th, 2 * math.pi) % (2 * math.pi)
            for item in merged:
                d = abs(item[1] - th)
                if item[2] is base and min(d, 2 * math.pi - d) <= tol:
                    item[0] += s
                    break
            else:
                merged.append([s, th, base])
        return SupportOracleCm(self.m, tuple(tuple(t) for t in merged))

    def sublinearity_defect(self, rng: np.random.Generator, trials: int = 100) -> float:
        u1 = rng.normal(size=(trials, 2 * self.m))
        u2 = rng.normal(size=(trials, 2 * self.m))
        lhs = support_cm(self, u1 + u2)
        rhs = support_cm(self, u1) + support_cm(self, u2)
        return float(max(0.0, np.max(lhs - rhs)))


def rotate_directions(u: np.ndarray, alpha: complex) -> np.ndarray:
    """Multiply each complex coordinate of the directions ``u`` by ``alpha``."""
    return to_real(complex(alpha) * to_complex(u))


def complex_scale(K: PolytopeCm, alpha: complex) -> PolytopeCm:
    """Apply the diagonal matrix ``alpha I_m``."""
    return PolytopeCm(K.m, rotate_directions(K.vertices, alpha), reduce=False)


def support_cm(B, u) -> np.ndarray:
    """Support function of a polytope, ball or oracle at direction(s) ``u``.

    Not normalised: ``u`` of any length gives the 1-homogeneous extension.
    """
    u = np.asarray(u, dtype=float)
    if isinstance(B, PolytopeCm):
        return np.max(u @ B.vertices.T, axis=-1)
    if isinstance(B, BallCm):
        return B.radius * np.linalg.norm(u, axis=-1) + u @ B.center_array()
    if isinstance(B, SupportOracleCm):
        total = np.zeros(u.shape[:-1])
        for s, th, base in B.terms:
            total = total + s * support_cm(base, rotate_directions(u, complex(math.cos(th), -math.sin(th))))
        return total
    raise InvalidInputError(f"no support function for {type(B).__name__}")


def project_to_complex_line(K: PolytopeCm, xi) -> Polygon2:
    """Orthogonal projection onto ``span{xi, J xi}`` in the basis ``(xi, J xi)``.

    The planar coordinate of a vertex ``v`` is ``<xi, v> + i <J xi, v>``,
    i.e. ``sum_j conj(xi_j) v_j``; the map is complex linear in ``v``.
    """
    xi = np.asarray(xi, dtype=float)
    a = K.vertices @ xi
    b = K.vertices @ apply_J(xi)
    return Polygon2(np.stack([a, b], axis=1))


def _centered_generators(B) -> np.ndarray:
    if isinstance(B, PolytopeCm):
        v = B.vertices
        return v - v.mean(axis=0)
    if isinstance(B, BallCm):
        return np.eye(2 * B.m) if B.radius > 0 else np.zeros((1, 2 * B.m))
    if isinstance(B, SupportOracleCm):
        blocks = []
        for s, th, base in B.terms:
            g = _centered_generators(base)
            blocks.append(s * rotate_directions(g, complex(math.cos(th), math.sin(th))))
        return np.vstack(blocks) if blocks else np.zeros((1, 2 * B.m))
    raise InvalidInputError(f"unsupported body {type(B).__name__}")


def affine_dim(B, tol: float = RANK_TOL) -> int:
    """Dimension of the affine hull.

    The affine hull of a Minkowski sum is the sum of the affine hulls, so the
    rank of the stacked, per-term centred vertex sets is the answer.
    """
    return _rank(_centered_generators(B), tol)


def affine_hull(B, tol: float = RANK_TOL):
    """``(point, orthonormal basis rows)`` of the affine hull of ``B``."""
    g = _centered_generators(B)
    if g.size == 0:
        basis = np.zeros((0, 2 * B.m))
    else:
        _, s, vt = np.linalg.svd(g, full_matrices=False)
        r = int(np.sum(s > tol * s[0])) if s.size and s[0] > 0 else 0
        basis = vt[:r]
    return reference_point(B), basis


def reference_point(B) -> np.ndarray:
    """A point that lies in the affine hull (sum of term vertex means)."""
    if isinstance(B, PolytopeCm):
        return B.vertices.mean(axis=0)
    if isinstance(B, BallCm):
        return B.center_array()
    total = np.zeros(2 * B.m)
    for s, th, base in B.terms:
        total += s * rotate_directions(reference_point(base)[None, :], complex(math.cos(th), math.sin(th)))[0]
    return total


def direction_net(m: int, n: int = 100, seed: int = 0) -> np.ndarray:
    """Coordinate axes (both signs) plus seeded random unit vectors."""
    d = 2 * m
    axes = np.vstack([np.eye(d), -np.eye(d)])
    extra = max(0, n - axes.shape[0])
    g = np.random.default_rng(seed).normal(size=(extra, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return np.vstack([axes, g])


def s1_invariance_defect(B, n_angles: int = 16, net: np.ndarray | None = None) -> float:
    """``max |h(alpha B, u) - h(B, u)|`` over ``n_angles`` angles and a net."""
    m = B.m
    if net is None:
        net = direction_net(m, 100)
    base = support_cm(B, net)
    worst = 0.0
    for k in range(1, n_angles):
        t = 2 * math.pi * k / n_angles
        rot = support_cm(B, rotate_directions(net, complex(math.cos(t), -math.sin(t))))
        worst = max(worst, float(np.max(np.abs(rot - base))))
    return worst


# ---------------------------------------------------------------------------
# test bodies


def embed_polygon(P: Polygon2, m: int = 2, coordinate: int = 0) -> PolytopeCm:
    """Put a planar polygon into the complex line ``C e_coordinate``."""
    v = np.zeros((len(P), 2 * m))
    v[:, 2 * coordinate : 2 * coordinate + 2] = P.vertices
    return PolytopeCm(m, v, reduce=False)


def disc_cm(m: int = 2, coordinate: int = 0, radius: float = 1.0, N: int = 256) -> PolytopeCm:
    """Regular ``N``-gon approximating a disc in a coordinate complex line."""
    side = 2 * radius * math.sin(math.pi / N)
    return embed_polygon(regular_polygon(N, side), m, coordinate)


def disc_product(N: int = 256, radius: float = 1.0) -> SupportOracleCm:
    """``P_N x P_N`` in ``C^2`` written as the sum ``P_N e_1 + P_N e_2``."""
    return SupportOracleCm(
        2, ((1.0, 0.0, disc_cm(2, 0, radius, N)), (1.0, 0.0, disc_cm(2, 1, radius, N)))
    )


def cube(m: int = 2, lo: float = 0.0, hi: float = 1.0) -> PolytopeCm:
    d = 2 * m
    grid = np.array(np.meshgrid(*[[lo, hi]] * d, indexing="ij")).reshape(d, -1).T
    return PolytopeCm(m, grid, reduce=False)


def cross_polytope(m: int = 2) -> PolytopeCm:
    d = 2 * m
    return PolytopeCm(m, np.vstack([np.eye(d), -np.eye(d)]), reduce=False)


def hopf_ball(N: int = 16, levels: int = 6) -> PolytopeCm:
    """Polytope inscribed in ``B_4`` from points ``(cos a e^{ip}, sin a e^{iq})``.

    The vertex set is invariant under multiplication by ``exp(2 pi i / N)``.
    """
    pts = []
    phases = 2 * math.pi * np.arange(N) / N
    for a in np.linspace(0.0, math.pi / 2, levels):
        ca, sa = math.cos(a), math.sin(a)
        for p in phases:
            for q in phases:
                pts.append([ca * math.cos(p), ca * math.sin(p), sa * math.cos(q), sa * math.sin(q)])
    return PolytopeCm(2, np.unique(np.round(pts, 14), axis=0), reduce=False)


def random_polytope(rng: np.random.Generator, m: int = 2, n_points: int = 8) -> PolytopeCm:
    while True:
        K = PolytopeCm(m, rng.normal(size=(n_points, 2 * m)))
        if affine_dim(K) == 2 * m:
            return K
