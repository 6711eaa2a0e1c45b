"""Coefficient criteria for the shape of ``D_C K``, predicted versus observed.

Predicted flags come from the spectra of ``C`` and ``K`` alone: a component of
``h(D_C K)`` vanishes when the multiplier of ``C`` or the matching component of
``h_K`` vanishes.  Observed flags are read off the constructed body: its
planar spectrum (m = 1) or its kernel components on S^3 (m = 2).  Zero tests
are relative: ``|x| <= eps * max |x|`` over the tested family.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..complexspace import support_cm
from ..diffbody import dc_auto, dc_polytope, generating_measure
from ..errors import InvalidInputError
from ..harmonic import MAX_DEGREE, kernel_components, multiplier, random_sphere, s3_quadrature
from ..planar import Polygon2, SampledSupport2, fourier_measure, fourier_support
from .solid import compressed

FLAGS = ("ball", "constant_width", "symmetric", "s1_invariant")


@dataclass
class Classification:
    predicted: dict[str, bool]
    observed: dict[str, bool]
    details: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.predicted == self.observed

    def as_dict(self) -> dict:
        return {"predicted": self.predicted, "observed": self.observed, "agree": self.agree}


def _zero(x: np.ndarray, eps: float) -> np.ndarray:
    a = np.abs(x)
    top = float(a.max()) if a.size else 0.0
    return a <= eps * top


def _flags(zero: np.ndarray, ball, cw, sym, s1) -> dict[str, bool]:
    return {
        "ball": bool(np.all(zero[ball])),
        "constant_width": bool(np.all(zero[cw])),
        "symmetric": bool(np.all(zero[sym])),
        "s1_invariant": bool(np.all(zero[s1])),
    }


def grid_triangle(steps=(0, 22, 45), n: int = 64) -> Polygon2:
    """Scalene triangle whose outer normals are the angles ``2 pi k / n``."""
    from ..diffbody import body_from_measure
    from ..planar import AtomicMeasure1

    a = 2 * np.pi * np.asarray(steps, dtype=float) / n
    U = np.stack([np.cos(a), np.sin(a)])
    w = np.abs(np.linalg.svd(U)[2][-1])
    return body_from_measure(AtomicMeasure1(a, 3 * w / w.sum()))


def classify_m1(C, K, J: int = 16, eps: float = 1e-6) -> Classification:
    if J > 32:
        raise InvalidInputError("J must be <= 32")
    j = np.arange(-J, J + 1)
    lam = fourier_measure(generating_measure(C), J).values
    cK = fourier_support(K, J).values
    cD = fourier_support(dc_auto(C, K), J).values
    pred_zero = _zero(lam, eps) | _zero(cK, eps)
    obs_zero = _zero(cD, eps)
    nz = j != 0
    masks = (nz, nz & (j % 2 == 0), j % 2 == 1, nz)
    predicted = _flags(pred_zero, *masks)
    observed = _flags(obs_zero, *masks)

    # universality of K: every |j| != 1 component is nonzero.  Observed route:
    # a generic probe C is recovered from D_probe K by spectral division.
    gen = np.abs(j) != 1
    predicted["universal"] = bool(not np.any(_zero(cK, eps)[gen]))
    probe = grid_triangle()
    lp = fourier_measure(generating_measure(probe), J).values
    cP = fourier_support(dc_auto(probe, K), J).values
    ok = ~_zero(cK, eps) & gen
    recovered = np.all(np.abs(cP[ok] / cK[ok] - lp[ok]) <= 1e-6 * float(np.abs(lp).max()))
    observed["universal"] = bool(np.all(ok[gen]) and recovered)
    return Classification(predicted, observed, {"lambda": lam, "c_K": cK, "c_D": cD})


def bidegrees(J: int) -> list[tuple[int, int]]:
    return [(k, l) for k in range(J + 1) for l in range(J + 1 - k) if min(k, l) <= MAX_DEGREE]


def classify_m2(C, K, J: int = 16, eps: float = 1e-6, n_frames: int = 3, quad=None, seed: int = 5) -> Classification:
    """Kernel-ratio route on S^3.

    Exact ratio identities need the normals of ``C`` on the quadrature's
    angular grid (multiples of ``2 pi / 64`` by default).
    """
    if J > 2 * MAX_DEGREE:
        raise InvalidInputError(f"J must be <= {2 * MAX_DEGREE} for m = 2")
    quad = s3_quadrature(32, 64, 64) if quad is None else quad
    D = compressed(dc_polytope(C, K))
    U = random_sphere(np.random.default_rng(seed), n_frames)
    fK = np.stack([support_cm(K, quad.points(u)) for u in U])
    fD = np.stack([support_cm(D, quad.points(u)) for u in U])
    pairs = bidegrees(J)
    GK = kernel_components(fK, pairs, quad)
    GD = kernel_components(fD, pairs, quad)
    lam = np.array([multiplier(C, k - l) for k, l in pairs])
    L = float(generating_measure(C).mass())
    zero_lam = np.abs(lam) <= eps * L
    zK = _zero(GK, eps).all(axis=1)
    zD = _zero(GD, eps).all(axis=1)
    k = np.array([p[0] for p in pairs])
    l = np.array([p[1] for p in pairs])
    nz = (k + l) > 0
    masks = (nz, nz & ((k + l) % 2 == 0), (k + l) % 2 == 1, k != l)
    predicted = _flags(zero_lam | zK, *masks)
    observed = _flags(zD, *masks)
    ratio = np.max(np.abs(GD - lam[:, None] * GK))
    return Classification(predicted, observed, {"pairs": pairs, "ratio_residual": float(ratio)})


def classify(C, K, J: int = 16, eps: float = 1e-6) -> Classification:
    if isinstance(K, (Polygon2, SampledSupport2)):
        return classify_m1(C, K, J, eps)
    return classify_m2(C, K, J, eps)
