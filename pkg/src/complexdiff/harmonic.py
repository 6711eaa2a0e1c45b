"""Multiplier layer: planar Fourier multipliers and bi-degree harmonics on S^3.

Orientation convention.  With ``(x, y) = sum_j x_j conj(y_j)`` the zonal
function of bi-degree ``(k, l)`` with pole ``e`` is ``Y(v) = P_{k,l}((v, e))``.
It satisfies ``Y(alpha v) = alpha^(k-l) Y(v)`` for unimodular ``alpha``, so
``A_C Y(u) = sum_i s_i Y(exp(-i theta_i) u) = lambda_{k,l} Y(u)`` with
``lambda_{k,l} = sum_i s_i exp(-i (k-l) theta_i)``.  The kernel projection is
``G_{k,l}[f](u) = int P_{k,l}((u, v)) f(v) dsigma(v)``; it intertwines ``A_C``
with multiplication by the same ``lambda_{k,l}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .complexspace import to_complex, to_real
from .diffbody import dc_planar, dc_planar_sampled, generating_measure
from .errors import InvalidInputError, UnsupportedError
from .planar import Polygon2, fourier_measure, fourier_support

MAX_DEGREE = 8


# ----------------------------------------------------------------- planar


def planar_multiplier_check(C, K, J: int = 32) -> float:
    """``max_{|j|<=J} |c_j(h_{D_C K}) - lambda_j c_j(h_K)|`` (multiplier normalization)."""
    D = dc_planar(C, K) if isinstance(K, Polygon2) else dc_planar_sampled(C, K)
    lam = fourier_measure(generating_measure(C), J).values
    cK = fourier_support(K, J).values
    cD = fourier_support(D, J).values
    return float(np.max(np.abs(cD - lam * cK)))


# ------------------------------------------------------- Jacobi-type layer


def _moment(p: int, b: int) -> Fraction:
    # int_0^1 t^p (1-t)^b dt = p! b! / (p+b+1)!
    return Fraction(math.factorial(p) * math.factorial(b), math.factorial(p + b + 1))


@lru_cache(maxsize=None)
def _exact_family(a: int, b: int, degree: int) -> tuple[tuple[Fraction, ...], ...]:
    """Gram-Schmidt on ``1, t, t^2, ...`` in exact rationals, scaled to ``Q(1) = 1``."""

    def inner(p, q):
        return sum(
            (pi * qj * _moment(i + j + a, b) for i, pi in enumerate(p) for j, qj in enumerate(q)),
            Fraction(0),
        )

    family: list[list[Fraction]] = []
    for d in range(degree + 1):
        v = [Fraction(0)] * d + [Fraction(1)]
        for q in family:
            c = inner(v, q) / inner(q, q)
            v = [vi - c * (q[i] if i < len(q) else 0) for i, vi in enumerate(v)]
        family.append(v)
    return tuple(tuple(c / sum(q) for c in q) for q in family)


@dataclass(frozen=True)
class OrthoPolyQ:
    """``Q_l(a, b, t)``: degree ``l`` orthogonal polynomial for ``t^a (1-t)^b`` on [0, 1]."""

    a: int
    b: int
    degree: int
    exact: tuple[Fraction, ...] = field(repr=False)

    @cached_property
    def coefficients(self) -> np.ndarray:
        """Monomial coefficients, lowest degree first."""
        return np.array([float(c) for c in self.exact])

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coefficients)


@lru_cache(maxsize=None)
def build_ortho_q(a: int, b: int, degree: int) -> OrthoPolyQ:
    if a < 0 or b < 0 or degree < 0:
        raise InvalidInputError("a, b and degree must be nonnegative")
    if degree > MAX_DEGREE:
        raise UnsupportedError(f"degree {degree} exceeds {MAX_DEGREE}")
    return OrthoPolyQ(a, b, degree, _exact_family(a, b, degree)[degree])


def ortho_residual(p: OrthoPolyQ, q: OrthoPolyQ, nodes: int = 32) -> float:
    """``|int_0^1 p q t^a (1-t)^b dt|`` by Gauss-Jacobi quadrature (independent of the moments)."""
    from scipy.special import roots_jacobi

    if (p.a, p.b) != (q.a, q.b):
        raise InvalidInputError("weights differ")
    x, w = roots_jacobi(nodes, p.b, p.a)  # (1-x)^b (1+x)^a on [-1, 1]
    t = (x + 1) / 2
    scale = 0.5 ** (p.a + p.b + 1)
    return float(abs(scale * np.sum(w * p(t) * q(t))))


def disk_poly_eval(k: int, l: int, z, m: int = 2):
    """``P_{k,l}(z) = r^{|k-l|} e^{i theta (k-l)} Q_{min(k,l)}(|k-l|, m-2, r^2)``."""
    z = np.asarray(z, dtype=complex)
    Q = build_ortho_q(abs(k - l), m - 2, min(k, l))
    radial = Q(np.abs(z) ** 2)
    phase = z ** (k - l) if k >= l else np.conj(z) ** (l - k)
    return phase * radial


@dataclass(frozen=True)
class DiskPolynomial:
    k: int
    l: int
    m: int = 2

    @property
    def q(self) -> OrthoPolyQ:
        return build_ortho_q(abs(self.k - self.l), self.m - 2, min(self.k, self.l))

    def __call__(self, z):
        return disk_poly_eval(self.k, self.l, z, self.m)


# ------------------------------------------------------------- multipliers


@dataclass(frozen=True)
class MultiplierTable:
    """``lambda_{k,l}`` for ``0 <= k, l <= kmax``."""

    kmax: int
    values: dict[tuple[int, int], complex]

    def __getitem__(self, kl: tuple[int, int]) -> complex:
        return self.values[kl]

    def rows(self) -> list[dict[str, float]]:
        return [
            {"k": k, "l": l, "re": float(v.real), "im": float(v.imag)}
            for (k, l), v in sorted(self.values.items())
        ]


def multiplier(C, d: int) -> complex:
    """``sum_i s_i exp(-i d theta_i)`` over the atoms of ``S(C, .)``."""
    mu = generating_measure(C)
    return complex(np.sum(mu.weights * np.exp(-1j * d * mu.angles)))


def multiplier_table(C, kmax: int) -> MultiplierTable:
    mu = generating_measure(C)
    d = np.arange(-kmax, kmax + 1)
    lam = np.exp(-1j * np.multiply.outer(d, mu.angles)) @ mu.weights
    return MultiplierTable(
        kmax, {(k, l): complex(lam[k - l + kmax]) for k in range(kmax + 1) for l in range(kmax + 1)}
    )


def pole() -> np.ndarray:
    return np.array([1.0, 0.0, 0.0, 0.0])


def random_sphere(rng: np.random.Generator, n: int, dim: int = 4) -> np.ndarray:
    x = rng.standard_normal((n, dim))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def zonal(k: int, l: int, v: np.ndarray, e: np.ndarray | None = None) -> np.ndarray:
    """``Y(v) = P_{k,l}((v, e))`` for rows ``v`` of real coordinates in R^4."""
    e = pole() if e is None else e
    z = to_complex(np.atleast_2d(v)) @ np.conj(to_complex(e))
    return disk_poly_eval(k, l, z)


def eigenfunction_check(C, k: int, l: int, trials: int = 50, rng: np.random.Generator | None = None) -> float:
    """``max_u |sum_i s_i Y(exp(-i theta_i) u) - lambda_{k,l} Y(u)|`` over random ``u``."""
    rng = np.random.default_rng(0) if rng is None else rng
    mu = generating_measure(C)
    u = to_complex(random_sphere(rng, trials))
    lhs = np.zeros(trials, dtype=complex)
    for th, s in zip(mu.angles, mu.weights):
        lhs += s * zonal(k, l, to_real(np.exp(-1j * th) * u))
    rhs = multiplier(C, k - l) * zonal(k, l, to_real(u))
    return float(np.max(np.abs(lhs - rhs)))


def harmonicity_check(
    k: int, l: int, step: float = 1e-4, points: int = 20, rng: np.random.Generator | None = None
) -> float:
    """Largest relative finite-difference Laplacian of ``|x|^{k+l} P_{k,l}((x/|x|, e))``.

    The residual at ``x`` is ``|Delta_h p(x)|`` divided by the sum of the
    absolute axis second differences plus ``|p(x)| / |x|^2``, so a linear
    form (all second differences zero) reports 0.
    """
    rng = np.random.default_rng(0) if rng is None else rng

    def p(x):
        r = np.linalg.norm(x, axis=-1)
        return r ** (k + l) * zonal(k, l, x / r[..., None])

    x = random_sphere(rng, points) * rng.uniform(0.5, 1.5, size=(points, 1))
    p0 = p(x)
    second = np.zeros((4, points), dtype=complex)
    for d in range(4):
        hvec = np.zeros(4)
        hvec[d] = step
        second[d] = (p(x + hvec) - 2 * p0 + p(x - hvec)) / step**2
    lap = np.abs(second.sum(axis=0))
    scale = np.abs(second).sum(axis=0) + np.abs(p0) / np.sum(x**2, axis=1)
    return float(np.max(lap / np.maximum(scale, 1e-300)))


# ------------------------------------------------------------- quadrature


@dataclass(frozen=True)
class S3Quadrature:
    """Product rule on S^3 through ``v = z u + sqrt(1-|z|^2) e^{i psi} u_perp``.

    ``dsigma = dz dpsi`` (area element of the unit disc times arc length);
    ``z = r e^{i theta}`` with Gauss-Legendre nodes in ``t = r^2`` so that
    ``dz = dt dtheta / 2``.  Rotating ``z`` and ``psi`` by a multiple of
    ``2 pi / n_theta`` (resp. ``2 pi / n_xi``) permutes the nodes.
    """

    z: np.ndarray
    psi: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.weights.size

    @cached_property
    def n_psi(self) -> int:
        return int(np.unique(self.psi).size)

    @property
    def total_mass(self) -> float:
        return float(self.weights.sum())

    def points(self, u) -> np.ndarray:
        """Nodes in R^4 for the frame with first axis ``u``."""
        uc = to_complex(np.asarray(u, dtype=float))
        uperp = np.array([-np.conj(uc[1]), np.conj(uc[0])])
        s = np.sqrt(np.clip(1 - np.abs(self.z) ** 2, 0, None)) * np.exp(1j * self.psi)
        return to_real(np.multiply.outer(self.z, uc) + np.multiply.outer(s, uperp))


@lru_cache(maxsize=8)
def s3_quadrature(n_r: int = 48, n_theta: int = 64, n_xi: int = 64) -> S3Quadrature:
    if min(n_r, n_theta, n_xi) < 8:
        raise InvalidInputError("quadrature sizes must be >= 8")
    x, w = np.polynomial.legendre.leggauss(n_r)
    t, wt = (x + 1) / 2, w / 2
    th = 2 * np.pi * np.arange(n_theta) / n_theta
    ps = 2 * np.pi * np.arange(n_xi) / n_xi
    T, TH, PS = np.meshgrid(t, th, ps, indexing="ij")
    W = np.broadcast_to((0.5 * wt)[:, None, None], T.shape) * (2 * np.pi / n_theta) * (2 * np.pi / n_xi)
    z = np.sqrt(T) * np.exp(1j * TH)
    return S3Quadrature(z.ravel(), PS.ravel(), np.ascontiguousarray(W).ravel())


def kernel_components(values: np.ndarray, pairs, quad: S3Quadrature) -> np.ndarray:
    """``G_{k,l}`` for each pair (rows) from node values of one or more functions (columns).

    ``values`` has shape ``(F, quad.size)``.  The kernel does not depend on
    ``psi`` (the fastest node axis), so that axis is summed out first.
    """
    values = np.atleast_2d(values)
    nx = quad.n_psi
    z, w = quad.z[::nx], quad.weights[::nx]
    reduced = values.reshape(values.shape[0], -1, nx).sum(axis=-1)
    out = np.empty((len(pairs), values.shape[0]), dtype=complex)
    for i, (k, l) in enumerate(pairs):
        out[i] = reduced @ (w * np.conj(disk_poly_eval(k, l, z)))
    return out


def kernel_component(f, k: int, l: int, u, quad: S3Quadrature | None = None) -> complex:
    """``G_{k,l}[f](u) = int P_{k,l}((u, v)) f(v) dsigma(v)`` by quadrature.

    ``f`` maps an (N, 4) array of unit vectors to N real values.  At a node
    ``(u, v) = conj(z)``.
    """
    quad = s3_quadrature() if quad is None else quad
    return complex(kernel_components(f(quad.points(u))[None, :], [(k, l)], quad)[0, 0])
