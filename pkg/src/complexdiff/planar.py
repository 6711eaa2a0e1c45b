"""Planar convex bodies: exact polygons, sampled support functions, area measures.

The plane is identified with the complex line, so a point ``(x, y)`` is the
complex number ``x + iy`` and a unit direction at angle ``theta`` is
``exp(i theta)``.

Two Fourier normalisations are used and every :class:`Spectrum` carries a tag:

``"multiplier"``
    ``c_j(f) = int_0^{2pi} exp(i j a) f(a) da`` and, for a measure,
    ``c_j(mu) = int exp(i j a) dmu(a)``.  In this normalisation the
    planar difference-body operator acts by plain multiplication.
``"raw"``
    the classical coefficients: the multiplier value divided by ``2 pi`` for
    ``j = 0`` and by ``pi`` otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .errors import EmptyResultError, InvalidInputError, NotAMeasureError, ResolutionError

TWO_PI = 2.0 * math.pi
#: collinearity / duplicate tolerance used when canonicalising vertex lists
VERTEX_TOL = 1e-9
#: angular tolerance used when merging atoms
ANGLE_TOL = 1e-9


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points: np.ndarray, tol: float) -> np.ndarray:
    """Monotone-chain hull; CCW, starting at the lexicographic minimum."""
    # columns whose x agree within tol are merged (single linkage) so that a
    # vertical edge with rounding noise is still swept bottom to top
    pts = np.asarray(points, dtype=float)
    ox = np.argsort(pts[:, 0], kind="stable")
    col = np.empty(len(pts), dtype=int)
    col[ox] = np.concatenate([[0], np.cumsum(np.diff(pts[ox, 0]) > tol)])
    order = np.lexsort((pts[:, 1], col))
    pts = [tuple(pts[i]) for i in order]
    cols = [col[i] for i in order]
    # points within tol of each other always share a column
    uniq, ucol = [pts[0]], [cols[0]]
    for p, c in zip(pts[1:], cols[1:]):
        k, dup = len(uniq) - 1, False
        while k >= 0 and ucol[k] == c and not dup:
            dup = abs(p[0] - uniq[k][0]) <= tol and abs(p[1] - uniq[k][1]) <= tol
            k -= 1
        if not dup:
            uniq.append(p)
            ucol.append(c)
    if len(uniq) == 1:
        return np.array(uniq, dtype=float)

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= tol * max(
                1.0, math.dist(out[-2], p)
            ):
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    # a segment comes back as [a, b]; drop vertices that coincide within tol
    cleaned = [hull[0]]
    for p in hull[1:]:
        if math.dist(p, cleaned[-1]) > tol and math.dist(p, cleaned[0]) > tol:
            cleaned.append(p)
    return np.array(cleaned, dtype=float)


class Polygon2:
    """Convex polygon in the plane, stored as a canonical CCW vertex array.

    Points (one vertex) and segments (two vertices) are admitted.  The vertex
    list always starts at the lexicographically smallest vertex, which makes
    equality of polygons decidable with :meth:`allclose`.
    """

    __slots__ = ("_v",)

    def __init__(self, points, tol: float = VERTEX_TOL):
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if pts.shape[0] == 0:
            raise InvalidInputError("a polygon needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise InvalidInputError("polygon coordinates must be finite")
        scale = max(1.0, float(np.max(np.abs(pts))))
        v = _hull(pts, tol * scale)
        v.setflags(write=False)
        self._v = v

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    def __len__(self):
        return self._v.shape[0]

    def __repr__(self):
        return f"Polygon2({self._v.tolist()!r})"

    def edges(self) -> np.ndarray:
        """Edge vectors ``v[k+1] - v[k]`` (cyclic); empty for a point."""
        if len(self) == 1:
            return np.zeros((0, 2))
        return np.roll(self._v, -1, axis=0) - self._v

    def normal_angles(self) -> np.ndarray:
        """Outer normal angle of every edge, in ``[0, 2pi)``."""
        e = self.edges()
        return np.mod(np.arctan2(-e[:, 0], e[:, 1]), TWO_PI)

    def translate(self, t) -> "Polygon2":
        return Polygon2(self._v + np.asarray(t, dtype=float))

    def scale(self, s: float) -> "Polygon2":
        return Polygon2(self._v * float(s))

    def allclose(self, other: "Polygon2", tol: float = 1e-9) -> bool:
        return len(self) == len(other) and bool(np.allclose(self._v, other._v, rtol=0, atol=tol))

    def as_complex(self) -> np.ndarray:
        return self._v[:, 0] + 1j * self._v[:, 1]


def polygon_from_points(points) -> Polygon2:
    """Convex hull of a finite point set in canonical form."""
    return Polygon2(points)


class SampledSupport2:
    """Support function sampled at the angles ``2 pi k / n``.

    Off-grid values are obtained by trigonometric interpolation, which is exact
    for band-limited support functions.  ``n`` must be a power of two >= 64.
    """

    __slots__ = ("_h",)

    def __init__(self, h, tol: float | None = None):
        h = np.array(h, dtype=float).ravel()
        n = h.size
        if n < 64 or n & (n - 1):
            raise ResolutionError(f"grid size must be a power of two >= 64, got {n}")
        if not np.all(np.isfinite(h)):
            raise InvalidInputError("support values must be finite")
        h.setflags(write=False)
        self._h = h
        if tol is None:
            tol = 1e-9 * max(1.0, float(np.max(np.abs(h))))
        defect = self.convexity_defect()
        if defect > tol:
            raise InvalidInputError(f"samples violate discrete convexity by {defect:.3e}")

    @property
    def h(self) -> np.ndarray:
        return self._h

    @property
    def n(self) -> int:
        return self._h.size

    @property
    def angles(self) -> np.ndarray:
        return TWO_PI * np.arange(self.n) / self.n

    def __repr__(self):
        return f"SampledSupport2(n={self.n})"

    def second_difference(self) -> np.ndarray:
        """``h[k-1] + h[k+1] - 2 cos(2pi/n) h[k]``, the discrete ``h + h''``."""
        h = self._h
        return np.roll(h, 1) + np.roll(h, -1) - 2.0 * math.cos(TWO_PI / self.n) * h

    def convexity_defect(self) -> float:
        return float(max(0.0, -np.min(self.second_difference())))

    def coefficients(self) -> np.ndarray:
        """numpy FFT coefficients ``H_m = (1/n) sum_k h_k exp(-2 pi i m k / n)``."""
        return np.fft.fft(self._h) / self.n

    def evaluate(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        H = self.coefficients()
        half = self.n // 2
        m = np.arange(1, half)
        phase = np.exp(1j * np.multiply.outer(theta, m))
        val = H[0].real + 2.0 * np.real(phase @ H[1:half])
        return val + H[half].real * np.cos(half * theta)

    def derivative(self) -> np.ndarray:
        """Spectral derivative ``h'`` on the grid (Nyquist mode dropped)."""
        H = self.coefficients()
        m = np.fft.fftfreq(self.n, d=1.0 / self.n)
        m[self.n // 2] = 0.0
        return np.real(np.fft.ifft(1j * m * H) * self.n)

    @classmethod
    def from_function(cls, func, n: int) -> "SampledSupport2":
        return cls(func(TWO_PI * np.arange(n) / n))

    @classmethod
    def from_polygon(cls, P: Polygon2, n: int) -> "SampledSupport2":
        return cls(support(P, TWO_PI * np.arange(n) / n))

    @classmethod
    def disc(cls, radius: float, n: int, center=(0.0, 0.0)) -> "SampledSupport2":
        th = TWO_PI * np.arange(n) / n
        return cls(radius + center[0] * np.cos(th) + center[1] * np.sin(th))


class AtomicMeasure1:
    """Finite nonnegative measure on the unit circle.

    Atoms are ``(angle, weight)`` with angles reduced to ``[0, 2pi)``, sorted,
    and merged when closer than ``merge_tol`` (wrap-around included).
    """

    __slots__ = ("_a", "_w")

    def __init__(self, angles=(), weights=(), merge_tol: float = ANGLE_TOL):
        a = np.mod(np.asarray(angles, dtype=float).ravel(), TWO_PI)
        w = np.asarray(weights, dtype=float).ravel()
        if a.shape != w.shape:
            raise InvalidInputError("angles and weights differ in length")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(w))):
            raise InvalidInputError("atoms must be finite")
        if np.any(w < 0):
            raise InvalidInputError("atom weights must be nonnegative")
        keep = w > 0
        a, w = a[keep], w[keep]
        order = np.argsort(a, kind="stable")
        a, w = a[order], w[order]
        merged_a, merged_w = [], []
        for ang, wt in zip(a, w):
            if merged_a and ang - merged_a[-1] <= merge_tol:
                tot = merged_w[-1] + wt
                merged_a[-1] = (merged_a[-1] * merged_w[-1] + ang * wt) / tot
                merged_w[-1] = tot
            else:
                merged_a.append(ang)
                merged_w.append(wt)
        if len(merged_a) > 1 and merged_a[0] + TWO_PI - merged_a[-1] <= merge_tol:
            wt = merged_w.pop()
            ang = merged_a.pop() - TWO_PI
            tot = merged_w[0] + wt
            merged_a[0] = np.mod((merged_a[0] * merged_w[0] + ang * wt) / tot, TWO_PI)
            merged_w[0] = tot
        self._a = np.array(merged_a, dtype=float)
        self._w = np.array(merged_w, dtype=float)
        self._a.setflags(write=False)
        self._w.setflags(write=False)

    @property
    def angles(self) -> np.ndarray:
        return self._a

    @property
    def weights(self) -> np.ndarray:
        return self._w

    @property
    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self._a.tolist(), self._w.tolist()))

    def __len__(self):
        return self._a.size

    def __repr__(self):
        return f"AtomicMeasure1({self.atoms!r})"

    def mass(self) -> float:
        return float(np.sum(self._w))

    def resultant(self) -> np.ndarray:
        """``sum w_i (cos a_i, sin a_i)``; zero for a surface area measure."""
        return np.array([np.dot(self._w, np.cos(self._a)), np.dot(self._w, np.sin(self._a))])

    def closure_defect(self) -> float:
        return float(np.hypot(*self.resultant()))

    def rotated(self, theta: float) -> "AtomicMeasure1":
        return AtomicMeasure1(self._a + theta, self._w)

    def reflected(self) -> "AtomicMeasure1":
        """Image under ``a -> -a`` (area measure of the complex conjugate body)."""
        return AtomicMeasure1(-self._a, self._w)

    def allclose(self, other: "AtomicMeasure1", angle_tol=1e-9, weight_tol=1e-9) -> bool:
        if len(self) != len(other):
            return False
        da = np.abs(self._a - other._a)
        da = np.minimum(da, TWO_PI - da)
        return bool(np.all(da <= angle_tol) and np.all(np.abs(self._w - other._w) <= weight_tol))


@dataclass(frozen=True)
class Spectrum:
    """Fourier coefficients ``c_j`` for ``j = -J..J``.

    ``values[j + J]`` holds ``c_j``; ``convention`` is ``"raw"`` or
    ``"multiplier"`` (see module docstring).
    """

    values: np.ndarray
    convention: str = "multiplier"

    def __post_init__(self):
        if self.convention not in ("raw", "multiplier"):
            raise InvalidInputError(f"unknown convention {self.convention!r}")
        if self.values.ndim != 1 or self.values.size % 2 == 0:
            raise InvalidInputError("spectrum needs an odd number of entries")

    @property
    def J(self) -> int:
        return self.values.size // 2

    def __getitem__(self, j: int) -> complex:
        if abs(j) > self.J:
            raise IndexError(j)
        return complex(self.values[j + self.J])

    def indices(self) -> np.ndarray:
        return np.arange(-self.J, self.J + 1)

    def to(self, convention: str) -> "Spectrum":
        if convention == self.convention:
            return self
        scale = np.full(self.values.size, math.pi)
        scale[self.J] = TWO_PI
        if convention == "raw":
            return Spectrum(self.values / scale, "raw")
        if convention == "multiplier":
            return Spectrum(self.values * scale, "multiplier")
        raise InvalidInputError(f"unknown convention {convention!r}")

    def as_dict(self) -> dict[int, complex]:
        return {int(j): complex(c) for j, c in zip(self.indices(), self.values)}


# ---------------------------------------------------------------------------
# support functions


def support(body, theta):
    """Support function ``h(body, (cos theta, sin theta))``.

    Polygons are evaluated exactly as a maximum over vertices, sampled bodies
    by trigonometric interpolation.  ``theta`` may be an array.
    """
    if isinstance(body, Polygon2):
        theta = np.asarray(theta, dtype=float)
        u = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return np.max(u @ body.vertices.T, axis=-1)
    if isinstance(body, SampledSupport2):
        return body.evaluate(theta)
    raise InvalidInputError(f"no support function for {type(body).__name__}")


def width(body, theta):
    return support(body, theta) + support(body, np.asarray(theta) + math.pi)


def grid_support(body, n: int) -> np.ndarray:
    """Support values on the ``n``-point angular grid."""
    if isinstance(body, SampledSupport2):
        if body.n != n:
            raise ResolutionError(f"grid size {body.n} != {n}")
        return np.array(body.h)
    return support(body, TWO_PI * np.arange(n) / n)


# ---------------------------------------------------------------------------
# area measures and Minkowski arithmetic


def area_measure(P: Polygon2) -> AtomicMeasure1:
    """Surface area measure: one atom per edge at its outer normal.

    A segment of length ``L`` gets two atoms of weight ``L``; a point has the
    empty measure.
    """
    e = P.edges()
    if e.shape[0] == 0:
        return AtomicMeasure1()
    return AtomicMeasure1(P.normal_angles(), np.hypot(e[:, 0], e[:, 1]))


def discrete_area_measure(body: SampledSupport2, tol: float | None = None) -> AtomicMeasure1:
    """Area measure of a sampled body as atoms on its grid.

    The weight at grid angle ``k`` is the discrete ``h + h''`` divided by
    ``sin(2pi/n)``; this is exact for polygons whose normals lie on the grid.
    """
    d = body.second_difference()
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.max(np.abs(body.h))))
    if np.min(d) < -tol:
        raise NotAMeasureError("negative discrete curvature")
    w = np.clip(d, 0.0, None) / math.sin(TWO_PI / body.n)
    return AtomicMeasure1(body.angles, w)


def _edge_cycle(P: Polygon2) -> tuple[np.ndarray, np.ndarray]:
    v = P.vertices
    e = np.roll(v, -1, axis=0) - v if len(v) > 1 else np.zeros((0, 2))
    return v, e


def minkowski_sum(P: Polygon2, Q: Polygon2) -> Polygon2:
    """Exact Minkowski sum by merging the two edge sequences by direction.

    Edge directions are measured from the middle of their largest circular
    gap, so the start vertices of both polygons are support points for one
    common, well separated direction (robust against near-ties).
    """
    vp, ep = _edge_cycle(P)
    vq, eq = _edge_cycle(Q)
    edges = np.vstack([ep, eq])
    if len(edges) == 0:
        return Polygon2(vp[:1] + vq[:1])
    ang = np.mod(np.arctan2(edges[:, 1], edges[:, 0]), TWO_PI)
    srt = np.sort(ang)
    gaps = np.diff(np.append(srt, srt[0] + TWO_PI))
    i = int(np.argmax(gaps))
    psi = srt[i] + gaps[i] / 2
    key = np.mod(ang - psi, TWO_PI)
    kp, kq = key[: len(ep)], key[len(ep) :]
    start = (vp[int(np.argmin(kp))] if len(ep) else vp[0]) + (vq[int(np.argmin(kq))] if len(eq) else vq[0])
    order = np.argsort(key, kind="stable")
    # the walk closes on its start point; the last partial sum is redundant
    pts = start + np.vstack([np.zeros((1, 2)), np.cumsum(edges[order][:-1], axis=0)])
    return Polygon2(pts)


def minkowski_combination(terms) -> Polygon2:
    """``sum_i rho_i P_i`` for ``(rho_i, P_i)`` pairs, ``rho_i`` complex."""
    total = None
    for rho, P in terms:
        piece = rotate_scale(P, rho)
        total = piece if total is None else minkowski_sum(total, piece)
    if total is None:
        return Polygon2([[0.0, 0.0]])
    return total


def rotate_scale(P: Polygon2, rho: complex) -> Polygon2:
    """Multiply every vertex by the complex number ``rho``."""
    z = P.as_complex() * complex(rho)
    return Polygon2(np.stack([z.real, z.imag], axis=1))


def reflect(P: Polygon2) -> Polygon2:
    return Polygon2(-P.vertices)


def conjugate(P: Polygon2) -> Polygon2:
    """Complex conjugate body ``{ z-bar : z in P }``."""
    return Polygon2(P.vertices * np.array([1.0, -1.0]))


def _clip(poly: np.ndarray, a, b, tol) -> np.ndarray:
    """Keep the part of ``poly`` left of the directed line ``a -> b``."""
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = _cross(a, b, p), _cross(a, b, q)
        if sp >= -tol:
            out.append(p)
        if (sp > tol and sq < -tol) or (sp < -tol and sq > tol):
            t = sp / (sp - sq)
            out.append(p + t * (q - p))
    return np.array(out).reshape(-1, 2)


def _segment_overlap(P: Polygon2, Q: Polygon2, tol):
    """Intersection when neither body is two-dimensional."""
    if len(P) == 1 or len(Q) == 1:
        pt, other = (P, Q) if len(P) == 1 else (Q, P)
        x = pt.vertices[0]
        if len(other) == 1:
            return pt if np.linalg.norm(x - other.vertices[0]) <= tol else None
        a, b = other.vertices
        d = b - a
        t = np.dot(x - a, d) / np.dot(d, d)
        if -tol <= t <= 1 + tol and np.linalg.norm(a + np.clip(t, 0, 1) * d - x) <= tol:
            return pt
        return None
    a, b = P.vertices
    c, e = Q.vertices
    d1, d2 = b - a, e - c
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(denom) > tol * np.linalg.norm(d1) * np.linalg.norm(d2):
        s = ((c[0] - a[0]) * d2[1] - (c[1] - a[1]) * d2[0]) / denom
        t = ((c[0] - a[0]) * d1[1] - (c[1] - a[1]) * d1[0]) / denom
        if -tol <= s <= 1 + tol and -tol <= t <= 1 + tol:
            return Polygon2([a + np.clip(s, 0, 1) * d1])
        return None
    if abs(_cross(a, b, c)) > tol * np.linalg.norm(d1):
        return None
    L2 = np.dot(d1, d1)
    ts = sorted([0.0, 1.0])
    tc = sorted([np.dot(c - a, d1) / L2, np.dot(e - a, d1) / L2])
    lo, hi = max(ts[0], tc[0]), min(ts[1], tc[1])
    if lo > hi + tol:
        return None
    return Polygon2([a + lo * d1, a + hi * d1])


def polygon_intersect(P: Polygon2, Q: Polygon2, tol: float = 1e-12) -> Polygon2:
    """Intersection of two convex polygons by half-plane clipping.

    Raises :class:`EmptyResultError` when the polygons are disjoint.
    """
    if len(Q) < 3 and len(P) >= 3:
        P, Q = Q, P
    if len(Q) < 3:
        res = _segment_overlap(P, Q, max(tol, 1e-12))
        if res is None:
            raise EmptyResultError("polygons are disjoint")
        return res
    poly = np.array(P.vertices)
    if len(poly) == 2:
        poly = np.vstack([poly, poly[::-1]])
    qv = Q.vertices
    for i in range(len(qv)):
        poly = _clip(poly, qv[i], qv[(i + 1) % len(qv)], tol)
        if len(poly) == 0:
            raise EmptyResultError("polygons are disjoint")
    return Polygon2(poly)


# ---------------------------------------------------------------------------
# Fourier analysis


def _arc_integral(n: np.ndarray, a: float, b: float) -> np.ndarray:
    """``int_a^b exp(i n t) dt`` for an integer array ``n``."""
    out = np.empty(n.shape, dtype=complex)
    zero = n == 0
    nz = n[~zero]
    out[zero] = b - a
    out[~zero] = (np.exp(1j * nz * b) - np.exp(1j * nz * a)) / (1j * nz)
    return out


def polygon_normal_arcs(P: Polygon2):
    """For each vertex, the arc ``[a, b]`` of directions in which it is extreme."""
    v = P.vertices
    if len(v) == 1:
        return v, np.array([0.0]), np.array([TWO_PI])
    nrm = P.normal_angles()  # normal of edge k = (v[k], v[k+1])
    a = np.roll(nrm, 1)  # incoming edge of vertex k
    b = nrm.copy()
    b = a + np.mod(b - a, TWO_PI)
    b[b <= a] += TWO_PI
    return v, a, b


def _polygon_multiplier_coefficients(P: Polygon2, J: int) -> np.ndarray:
    j = np.arange(-J, J + 1)
    v, a, b = polygon_normal_arcs(P)
    total = np.zeros(j.shape, dtype=complex)
    for (x, y), lo, hi in zip(v, a, b):
        # h = (x - iy)/2 e^{it} + (x + iy)/2 e^{-it} on this arc
        total += 0.5 * (x - 1j * y) * _arc_integral(j + 1, lo, hi)
        total += 0.5 * (x + 1j * y) * _arc_integral(j - 1, lo, hi)
    return total


def fourier_support(body, J: int, convention: str = "multiplier") -> Spectrum:
    """Fourier coefficients of the support function for ``|j| <= J``.

    Exact (closed-form arc integrals) for polygons.  For sampled bodies the
    coefficients come from the DFT; the aliasing error of ``c_j`` is bounded by
    ``sum_{|m| > n - J} |c_m|``, which is why ``n >= 4J`` is required.
    """
    if J < 0:
        raise InvalidInputError("cutoff must be nonnegative")
    if isinstance(body, Polygon2):
        vals = _polygon_multiplier_coefficients(body, J)
    elif isinstance(body, SampledSupport2):
        if body.n < 4 * J:
            raise ResolutionError(f"n={body.n} < 4J={4 * J}")
        H = body.coefficients()
        idx = np.mod(-np.arange(-J, J + 1), body.n)
        vals = TWO_PI * H[idx]
    else:
        raise InvalidInputError(f"no spectrum for {type(body).__name__}")
    return Spectrum(np.asarray(vals, dtype=complex), "multiplier").to(convention)


def fourier_measure(mu: AtomicMeasure1, J: int, convention: str = "multiplier") -> Spectrum:
    """Fourier coefficients of an atomic measure (an exact finite sum)."""
    if J < 0:
        raise InvalidInputError("cutoff must be nonnegative")
    j = np.arange(-J, J + 1)
    vals = np.exp(1j * np.multiply.outer(j, mu.angles)) @ mu.weights
    return Spectrum(np.asarray(vals, dtype=complex), "multiplier").to(convention)


def reconstruct_support(spectrum: Spectrum, theta) -> np.ndarray:
    """Evaluate the truncated Fourier series ``sum_j c_j e^{-ij t} / norm``."""
    s = spectrum.to("raw")
    theta = np.asarray(theta, dtype=float)
    j = s.indices()
    # raw c_j uses 1/pi, so f = c_0 + (1/2) sum_{j != 0} c_j e^{-ijt}
    w = np.where(j == 0, 1.0, 0.5)
    return np.real(np.exp(-1j * np.multiply.outer(theta, j)) @ (w * s.values))


# ---------------------------------------------------------------------------
# mixed area


def mixed_area_integral(K, C) -> float:
    """``int h_K dS(C, .)``; equals ``area(K+C) - area(K) - area(C)``.

    This is twice the symmetric mixed area ``V(K, C)``.  A sampled ``C`` is
    handled in Fourier space (``S = h + h''``), which is exact for
    band-limited support functions.
    """
    if isinstance(C, Polygon2):
        mu = area_measure(C)
        if len(mu) == 0:
            return 0.0
        return float(np.dot(mu.weights, support(K, mu.angles)))
    if isinstance(C, SampledSupport2):
        hk = grid_support(K, C.n)
        Hk = np.fft.fft(hk) / C.n
        Hc = C.coefficients()
        m = np.fft.fftfreq(C.n, d=1.0 / C.n)
        return float(TWO_PI * np.real(np.sum(Hk * np.conj(Hc) * (1.0 - m**2))))
    raise InvalidInputError(f"unsupported body {type(C).__name__}")


# ---------------------------------------------------------------------------
# scalar functionals


def area(body) -> float:
    if isinstance(body, Polygon2):
        v = body.vertices
        if len(v) < 3:
            return 0.0
        x, y = v[:, 0], v[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))
    H = body.coefficients()
    m = np.fft.fftfreq(body.n, d=1.0 / body.n)
    return float(math.pi * np.sum(np.abs(H) ** 2 * (1.0 - m**2)))


def perimeter(body) -> float:
    """Total mass of the area measure (twice the length for a segment)."""
    if isinstance(body, Polygon2):
        e = body.edges()
        return float(np.sum(np.hypot(e[:, 0], e[:, 1])))
    return float(TWO_PI * body.coefficients()[0].real)


def diameter(body) -> float:
    if isinstance(body, Polygon2):
        v = body.vertices
        d = v[:, None, :] - v[None, :, :]
        return float(np.sqrt(np.max(np.sum(d * d, axis=-1))))
    return float(np.max(width(body, body.angles)))


def min_width(body) -> float:
    if isinstance(body, Polygon2):
        if len(body) < 3:
            return 0.0
        return float(np.min(width(body, body.normal_angles())))
    return float(np.min(width(body, body.angles)))


def boundary_points(body: SampledSupport2) -> np.ndarray:
    """Intersections of consecutive support lines on the grid.

    These are the vertices of the circumscribed polygon with the grid normals;
    exact when the body is such a polygon, within ``O((2pi/n)^2)`` otherwise.
    """
    th = body.angles
    h, h1 = body.h, np.roll(body.h, -1)
    t1 = np.roll(th, -1)
    s = math.sin(TWO_PI / body.n)
    x = (h * np.sin(t1) - h1 * np.sin(th)) / s
    y = (h1 * np.cos(th) - h * np.cos(t1)) / s
    return np.stack([x, y], axis=1)


def _circle_two(a, b):
    c = (a + b) / 2.0
    return c, float(np.linalg.norm(a - c))


def _circle_three(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-300:
        return None
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    ctr = np.array([ux, uy])
    return ctr, float(np.linalg.norm(a - ctr))


def min_enclosing_circle(points, seed: int = 0) -> tuple[np.ndarray, float]:
    """Smallest enclosing circle (Welzl's incremental algorithm)."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    pts = pts[np.random.default_rng(seed).permutation(len(pts))]
    eps = 1e-12

    def inside(c, r, p):
        return np.linalg.norm(p - c) <= r * (1 + eps) + eps

    c, r = pts[0].copy(), 0.0
    for i in range(1, len(pts)):
        if inside(c, r, pts[i]):
            continue
        c, r = pts[i].copy(), 0.0
        for j in range(i):
            if inside(c, r, pts[j]):
                continue
            c, r = _circle_two(pts[i], pts[j])
            for k in range(j):
                if inside(c, r, pts[k]):
                    continue
                res = _circle_three(pts[i], pts[j], pts[k])
                if res is not None:
                    c, r = res
    return c, r


def circumradius(body) -> float:
    pts = body.vertices if isinstance(body, Polygon2) else boundary_points(body)
    return min_enclosing_circle(pts)[1]


def _largest_inscribed(angles: np.ndarray, h: np.ndarray):
    u = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    A = np.hstack([u, np.ones((len(h), 1))])
    res = linprog(c=[0, 0, -1], A_ub=A, b_ub=h, bounds=[(None, None)] * 2 + [(0, None)], method="highs")
    if res.status != 0:
        raise RuntimeError(f"inradius program failed: {res.message}")
    return res.x[:2], float(res.x[2])


def inradius(body) -> float:
    """Largest ``r`` with ``<x, u> + r <= h(u)`` over all facet normals."""
    if isinstance(body, Polygon2):
        if len(body) < 3:
            return 0.0
        ang = body.normal_angles()
        return _largest_inscribed(ang, support(body, ang))[1]
    return _largest_inscribed(body.angles, body.h)[1]


def steiner_point(body) -> np.ndarray:
    """``(1/pi) int h(u) u`` read off the first Fourier coefficient."""
    c1 = fourier_support(body, 1)[1]
    return np.array([c1.real, c1.imag]) / math.pi


def centroid(body) -> np.ndarray:
    if isinstance(body, Polygon2):
        v = body.vertices
        if len(v) < 3:
            return v.mean(axis=0)
        x, y = v[:, 0], v[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        cr = x * yn - xn * y
        A = 0.5 * cr.sum()
        return np.array([np.sum((x + xn) * cr), np.sum((y + yn) * cr)]) / (6.0 * A)
    return centroid(Polygon2(boundary_points(body)))


@dataclass(frozen=True)
class Scalars:
    area: float
    perimeter: float
    min_width: float
    diameter: float
    inradius: float
    circumradius: float
    steiner_point: np.ndarray = field(repr=False)
    centroid: np.ndarray = field(repr=False)
    body: object = field(repr=False, default=None)

    def width(self, theta):
        return width(self.body, theta)


def scalars(body) -> Scalars:
    return Scalars(
        area=area(body),
        perimeter=perimeter(body),
        min_width=min_width(body),
        diameter=diameter(body),
        inradius=inradius(body),
        circumradius=circumradius(body),
        steiner_point=steiner_point(body),
        centroid=centroid(body),
        body=body,
    )


# ---------------------------------------------------------------------------
# generators


def reuleaux_triangle(n: int = 1024, width: float = 1.0) -> SampledSupport2:
    """Reuleaux triangle of the given width, centred at its Steiner point.

    In the six sectors of opening ``pi/3`` the support function is either
    ``<p, u>`` (a corner ``p`` is extreme) or ``<p, u> + width`` (the arc
    centred at the opposite corner ``p`` is extreme).
    """
    if n < 64:
        raise ResolutionError("n must be >= 64")
    th = TWO_PI * np.arange(n) / n
    R = width / math.sqrt(3.0)
    corners = [R * np.array([math.cos(math.pi / 2 + TWO_PI * i / 3), math.sin(math.pi / 2 + TWO_PI * i / 3)]) for i in range(3)]
    sector = np.mod(np.rint((th - math.pi / 2) / (math.pi / 3)).astype(int), 6)
    h = np.empty(n)
    for k in range(n):
        s = sector[k]
        u = np.array([math.cos(th[k]), math.sin(th[k])])
        if s % 2 == 0:
            h[k] = corners[s // 2] @ u
        else:
            h[k] = corners[((s + 3) // 2) % 3] @ u + width
    return SampledSupport2(h)


def regular_polygon(N: int, side: float = 1.0, rotation: float = 0.0) -> Polygon2:
    """Regular ``N``-gon centred at 0 with one outer normal at ``rotation``."""
    R = side / (2.0 * math.sin(math.pi / N))
    ang = rotation + math.pi / N + TWO_PI * np.arange(N) / N
    return Polygon2(R * np.stack([np.cos(ang), np.sin(ang)], axis=1))


def disc_polygon(radius: float = 1.0, N: int = 256, center=(0.0, 0.0)) -> Polygon2:
    """Inscribed regular ``N``-gon; Hausdorff error ``(1 - cos(pi/N)) radius``."""
    ang = TWO_PI * np.arange(N) / N
    return Polygon2(np.asarray(center) + radius * np.stack([np.cos(ang), np.sin(ang)], axis=1))


def interval(length: float = 1.0) -> Polygon2:
    """The vertical segment ``[-i L/2, i L/2]``."""
    return Polygon2([[0.0, -length / 2.0], [0.0, length / 2.0]])


def random_polygon(rng: np.random.Generator, n_points: int = 8, scale: float = 1.0) -> Polygon2:
    """Hull of Gaussian points; retried until two-dimensional."""
    while True:
        P = Polygon2(scale * rng.normal(size=(n_points, 2)))
        if len(P) >= 3:
            return P
