"""Named verification suites over the seeded corpora.

A suite returns a list of :class:`Report`; it passes when every hard check
in every report passes.  Output depends only on ``seed`` and ``samples``.
"""
from __future__ import annotations

import math

import numpy as np

from ..complexspace import (
    BallCm,
    PolytopeCm,
    affine_dim,
    cube,
    direction_net,
    disc_cm,
    disc_product,
    embed_polygon,
    random_polytope,
    support_cm,
)
from ..diffbody import (
    body_from_measure,
    commute_m1,
    convolve_measures,
    dc_planar,
    dc_planar_sampled,
    dc_polytope,
    dc_segment,
    segment_closed_form,
)
from ..harmonic import (
    build_ortho_q,
    eigenfunction_check,
    harmonicity_check,
    kernel_components,
    multiplier,
    ortho_residual,
    planar_multiplier_check,
    random_sphere,
    s3_quadrature,
)
from ..planar import (
    Polygon2,
    SampledSupport2,
    area_measure,
    interval,
    min_width,
    diameter,
    random_polygon,
    regular_polygon,
    reuleaux_triangle,
)
from . import corpus
from .classify import classify
from .fixedpoint import fixed_point_check, iterate_check, nonsurjectivity_demo, scalene_triangle, support_distance
from .inequalities import (
    brunn_minkowski_check,
    containment_check,
    mixed_volume_check_m1,
    quermass_check_m1,
    volume_check_m2,
    width_diameter_check,
)
from .report import Report

SUITES = ("planar", "complex2", "harmonic", "all")


def _centered_distance(A: Polygon2, B: Polygon2) -> float:
    from ..diffbody import steiner_centered

    return support_distance(steiner_centered(A), steiner_centered(B))


def planar_inequalities(seed: int = 7) -> list[Report]:
    pairs = corpus.planar_pairs(seed)
    out = []
    for i, (C, K) in enumerate(pairs):
        D = dc_planar(C, K)
        L = pairs[(i + 1) % len(pairs)][1]
        for r in (
            quermass_check_m1(C, K, D),
            width_diameter_check(C, K, D),
            mixed_volume_check_m1(C, K, D),
            brunn_minkowski_check(C, K, L),
            containment_check(C, K, D),
        ):
            r.info["pair"] = i
            out.append(r)
    return out


def planar_identities(seed: int = 7) -> list[Report]:
    pairs = corpus.planar_pairs(seed)[:50]
    r = Report("planar_identities")
    comm = conv = mult = 0.0
    for C, K in pairs:
        A, B = commute_m1(C, K)
        comm = max(comm, _centered_distance(A, B))
        via = body_from_measure(convolve_measures(area_measure(C), area_measure(K)))
        conv = max(conv, _centered_distance(via, A))
        mult = max(mult, planar_multiplier_check(C, K, 32))
    r.add("D_C K = D_K C up to translation", comm, 0.0, "==", 1e-8)
    r.add("measure convolution reconstructs D_C K", conv, 0.0, "==", 1e-8)
    r.add("planar multiplier residual (J = 32)", mult, 0.0, "==", 1e-8)
    return [r]


def constant_width_report() -> Report:
    R = reuleaux_triangle(1024)
    r = Report("constant_width")
    r.add("Reuleaux min width", min_width(R), 1.0, "==", 1e-6)
    r.add("Reuleaux diameter", diameter(R), 1.0, "==", 1e-6)
    for name, C in (("square, l = 4", regular_polygon(4)), ("C4 with l = 1", regular_polygon(4, 0.25))):
        D = dc_planar_sampled(C, R)
        L = 4.0 if name.startswith("square") else 1.0
        r.add(f"D_C R is a ball of radius {L / 2:g} ({name})", float(np.max(np.abs(D.h - L / 2))), 0.0, "==", 1e-4)
    return r


def fixed_point_reports(seed: int = 7) -> list[Report]:
    rng = np.random.default_rng(seed)
    C4 = regular_polygon(4, 0.25)
    r = Report("fixed_points")
    disc = SampledSupport2.disc(1.0, 1024)
    worst = max(fixed_point_check(random_polygon(rng, 6), disc) for _ in range(5))
    r.add("sampled disc: D_C K = l(C) K", worst, 0.0, "==", 1e-9)
    worst = max(fixed_point_check(random_polygon(rng, 6), BallCm(2, 1.0)) for _ in range(5))
    r.add("B_4: D_C K = l(C) K", worst, 0.0, "==", 1e-9)
    worst = max(fixed_point_check(random_polygon(rng, 6), disc_product(64)) for _ in range(3))
    r.add("disc product with grid-aligned C", worst, 0.0, "<=", 2e-2, hard=False)
    r.add("aligned square is fixed by C4", fixed_point_check(C4, regular_polygon(4)), 0.0, "==", 1e-9)
    r.add("scalene triangle is not fixed by C4", fixed_point_check(C4, scalene_triangle()), 0.01, ">=", 0.0)

    it = Report("iteration")
    K = random_polygon(rng, 7)
    it.add("segment: D^3 = 4 D", iterate_check(interval(), K, 3), 0.0, "==", 1e-8)
    it.add("C4: D^2 = l D", iterate_check(C4, K, 2), 0.0, "==", 1e-8)
    it.add("scalene C: positive defect", iterate_check(scalene_triangle(), K, 2), 1e-6, ">=", 0.0)
    return [r, it]


def classification_reports(m: int, J: int = 16, eps: float = 1e-6) -> list[Report]:
    bodies = corpus.classification_m1() if m == 1 else corpus.classification_m2()
    r = Report(f"classification_m{m}")
    bad = []
    for i, (C, K) in enumerate(bodies):
        c = classify(C, K, J, eps)
        if not c.agree:
            bad.append(i)
    r.add("predicted flags equal observed flags", len(bad), 0, "==", 0.0)
    r.info.update(pairs=len(bodies), disagreements=bad)
    return [r]


def complex_inequalities(seed: int = 7, samples: int = 200_000) -> list[Report]:
    rng = np.random.default_rng(seed)
    out = []
    for i, (C, K) in enumerate(corpus.complex_pairs(seed)):
        for r in (volume_check_m2(C, K, samples, rng), width_diameter_check(C, K)):
            r.info["pair"] = i
            out.append(r)
    return out


def dimension_table() -> list[tuple[str, object, int]]:
    """Test bodies ``K`` in C^2 for every realizable ``(l, a)`` with the expected dimension.

    ``l`` is the real dimension of the linear span of ``K - K`` and ``a`` the
    complex dimension of the largest complex subspace in it.
    """
    e1 = np.array([1.0, 0, 0, 0])
    e2 = np.array([0, 0, 1.0, 0])
    sq = regular_polygon(4, 1.0).translate(np.array([0.5, 0.5]))
    disc_plus_segment = PolytopeCm(2, np.vstack([disc_cm(2, 0, 1.0, 64).vertices, e2[None, :]]))
    return [
        ("(0,0) point", PolytopeCm(2, np.zeros((1, 4))), 0),
        ("(1,0) segment", PolytopeCm(2, np.stack([0 * e1, e1])), 2),
        ("(2,0) real square", PolytopeCm(2, np.stack([0 * e1, e1, e2, e1 + e2])), 4),
        ("(2,1) disc in a complex line", disc_cm(2, 0, 1.0, 256), 2),
        ("(3,1) disc and a transversal segment", disc_plus_segment, 4),
        ("(4,2) cube", cube(2), 4),
        ("(2,1) square in a complex line", embed_polygon(sq, 2, 0), 2),
    ]


def dimension_report(C: Polygon2 | None = None) -> Report:
    C = regular_polygon(4) if C is None else C
    r = Report("dimension")
    for name, K, expected in dimension_table():
        r.add(f"dim D_C K for {name}", affine_dim(dc_polytope(C, K)), expected, "==", 0.0)
    return r


def complex_identities(seed: int = 7) -> list[Report]:
    rng = np.random.default_rng(seed)
    net = direction_net(2, 100, seed)
    r = Report("complex_identities")
    C = random_polygon(rng, 5)
    u = random_sphere(rng, 1)[0]
    a, b = -0.3, 1.1
    d = float(np.max(np.abs(support_cm(dc_segment(C, a, b, u), net) - support_cm(segment_closed_form(C, a, b, u), net))))
    r.add("segment body matches closed form", d, 0.0, "==", 1e-9)
    L = float(area_measure(C).mass())
    d = float(np.max(np.abs(support_cm(dc_polytope(C, BallCm(2, 1.0)), net) - L)))
    r.add("D_C B_4 = l(C) B_4", d, 0.0, "==", 1e-9)
    seg = PolytopeCm(2, np.array([[0.0, 0, 0, 0], [1.0, 0, 0, 0]]))
    est = volume_check_m2(regular_polygon(4), random_polytope(rng, 2), 20_000, rng)
    r.add("volume checks run on a random polytope", float(est.passed), 1.0, "==", 0.0)
    from .solid import mc_volume

    v = mc_volume(dc_polytope(regular_polygon(4), seg), 20_000, rng)
    r.add("segment K: vol_4(D_C K) = 0", v.estimate, 0.0, "==", 0.0)
    return [r, dimension_report()]


def harmonic_reports(seed: int = 7) -> list[Report]:
    rng = np.random.default_rng(seed)
    r = Report("harmonic")
    worst = 0.0
    for _ in range(20):
        C = random_polygon(rng, int(rng.integers(3, 9)))
        for k in range(7):
            for l in range(7):
                worst = max(worst, eigenfunction_check(C, k, l, 50, rng))
    r.add("eigenfunction residual, k, l <= 6", worst, 0.0, "==", 1e-10)
    orth = 0.0
    for a in range(5):
        for b in range(5):
            qs = [build_ortho_q(a, b, d) for d in range(7)]
            orth = max(orth, max(ortho_residual(p, q) for i, p in enumerate(qs) for q in qs[:i]))
    r.add("Q orthogonality up to degree 6", orth, 0.0, "==", 1e-10)
    harm = max(harmonicity_check(k, l, 1e-4) for k in range(5) for l in range(5))
    r.add("harmonicity (relative FD residual)", harm, 0.0, "==", 1e-3)
    quad = s3_quadrature()
    r.add("S^3 quadrature mass", quad.total_mass, 2 * math.pi**2, "==", 1e-10)
    C = regular_polygon(4)
    K = random_polytope(rng, 2)
    D = dc_polytope(C, K)
    pairs = [(k, l) for k in range(5) for l in range(5 - k)]
    lam = np.array([multiplier(C, k - l) for k, l in pairs])[:, None]
    U = random_sphere(rng, 10)
    fK = np.stack([support_cm(K, quad.points(u)) for u in U])
    fD = np.stack([support_cm(D, quad.points(u)) for u in U])
    res = float(np.max(np.abs(kernel_components(fD, pairs, quad) - lam * kernel_components(fK, pairs, quad))))
    r.add("kernel ratio residual, k + l <= 4", res, 0.0, "==", 1e-6)
    return [r]


def run_suite(name: str = "all", seed: int = 7, samples: int = 200_000) -> list[Report]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out: list[Report] = []
    if name in ("planar", "all"):
        out += planar_inequalities(seed)
        out += planar_identities(seed)
        out.append(constant_width_report())
        out += fixed_point_reports(seed)
        out += classification_reports(1)
        out.append(nonsurjectivity_demo())
    if name in ("complex2", "all"):
        out += complex_inequalities(seed, samples)
        out += complex_identities(seed)
        out += classification_reports(2)
    if name in ("harmonic", "all"):
        out += harmonic_reports(seed)
    return out


def suite_passed(reports: list[Report]) -> bool:
    return all(r.passed for r in reports)
