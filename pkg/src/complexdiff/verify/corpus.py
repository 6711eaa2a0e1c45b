"""Seeded test corpora for the verification suites.

Every generator takes a seed and returns the same bodies on every call.  The
C^2 corpora keep the normals of ``C`` on the ``2 pi / 64`` grid wherever a
quadrature identity or a vertex-set merge depends on it.
"""
from __future__ import annotations

import math

import numpy as np

from ..complexspace import BallCm, cross_polytope, cube, disc_product, hopf_ball, random_polytope
from ..planar import Polygon2, SampledSupport2, interval, random_polygon, regular_polygon, reuleaux_triangle
from .classify import grid_triangle


def planar_pairs(seed: int = 7, n: int = 100) -> list[tuple[Polygon2, Polygon2]]:
    """``n`` random polygon pairs with 3 to 8 hull points each; every tenth ``C`` is a segment."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        if i % 10 == 9:
            a = rng.uniform(0, 2 * math.pi)
            L = rng.uniform(0.5, 2.0)
            C = Polygon2([[0.0, 0.0], [L * math.cos(a), L * math.sin(a)]])
        else:
            C = random_polygon(rng, int(rng.integers(3, 9)))
        K = random_polygon(rng, int(rng.integers(3, 9)))
        out.append((C, K))
    return out


def complex_pairs(seed: int = 7, n: int = 20) -> list[tuple[Polygon2, object]]:
    """``n`` pairs ``(C, K)`` with ``K`` a full-dimensional polytope in C^2.

    Most ``K`` are random; the cube, the cross-polytope and a ball
    approximant are included.  The ball approximant is paired only with
    ``C`` whose normals are multiples of ``pi / 4``, where its rotated copies
    coincide and the materialized sum stays small.
    """
    rng = np.random.default_rng(seed)
    Cs = [interval(), grid_triangle(), regular_polygon(4)]
    special = [cube(2, -0.5, 0.5), cross_polytope(2), hopf_ball(8, 4)]
    out = []
    for i in range(n):
        if i < len(special):
            C = Cs[2] if i == 2 else Cs[i % len(Cs)]
            out.append((C, special[i]))
        else:
            out.append((Cs[i % len(Cs)], random_polytope(rng, 2, int(rng.integers(6, 11)))))
    return out


def classification_m1() -> list[tuple[object, object]]:
    C = [interval(), regular_polygon(4), regular_polygon(6), regular_polygon(64, 0.05), grid_triangle()]
    K = [
        reuleaux_triangle(1024),
        SampledSupport2.disc(1.0, 1024),
        regular_polygon(4),
        Polygon2([[0.0, 0.0], [1.0, 0.0], [0.2, 0.7]]),
        regular_polygon(5),
    ]
    return [(c, k) for c in C for k in K]


def classification_m2(seed: int = 0) -> list[tuple[object, object]]:
    rng = np.random.default_rng(seed)
    C = [interval(), regular_polygon(4), regular_polygon(8, 0.5), regular_polygon(64, 0.05), grid_triangle()]
    K = [random_polytope(rng, 2), cube(2, -0.5, 0.5), cross_polytope(2), BallCm(2, 1.0), disc_product(32), hopf_ball(8, 4)]
    return [(c, k) for c in C for k in K]
