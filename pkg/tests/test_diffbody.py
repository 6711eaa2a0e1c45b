import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from complexdiff.complexspace import (
    BallCm,
    PolytopeCm,
    apply_J,
    complex_scale,
    direction_net,
    random_polytope,
    rotate_directions,
    support_cm,
    to_complex,
    to_real,
)
from complexdiff.diffbody import (
    body_from_measure,
    commute_m1,
    convolve_measures,
    dc_planar,
    dc_planar_sampled,
    dc_polytope,
    dc_segment,
    generating_measure,
    segment_closed_form,
    segment_height,
    steiner_centered,
)
from complexdiff.errors import InvalidInputError, NotAMeasureError, ResolutionError
from complexdiff.planar import (
    AtomicMeasure1,
    Polygon2,
    SampledSupport2,
    area,
    area_measure,
    interval,
    minkowski_sum,
    perimeter,
    polygon_intersect,
    random_polygon,
    reflect,
    regular_polygon,
    reuleaux_triangle,
    rotate_scale,
    support,
)

from conftest import seeded_polygons

SQ = regular_polygon(4)
TRI = Polygon2([[0, 0], [1, 0], [0, 1]])
GRID = 2 * math.pi * np.arange(720) / 720


def sdist(A, B, th=GRID) -> float:
    return float(np.max(np.abs(support(A, th) - support(B, th))))


def centered_dist(A, B) -> float:
    return sdist(steiner_centered(A), steiner_centered(B))


# ---------------------------------------------------------------- dc_polytope


def test_interval_terms(rng):
    K = random_polytope(rng)
    D = dc_polytope(interval(), K)
    assert [(s, th) for s, th, _ in D.terms] == [(1.0, 0.0), (1.0, math.pi)]
    u = direction_net(2, 60)
    assert np.allclose(support_cm(D, u), support_cm(K, u) + support_cm(K, -u), atol=1e-12)


def test_square_on_square_m1():
    K = PolytopeCm.from_polygon(SQ)
    D = dc_polytope(SQ, K)
    th = GRID
    u = np.stack([np.cos(th), np.sin(th)], axis=1)
    assert np.allclose(support_cm(D, u), 4 * support(SQ, th), atol=1e-12)
    assert area(dc_planar(SQ, SQ)) == pytest.approx(16 * area(SQ))


@given(seeded_polygons())
def test_ball_maps_to_scaled_ball(C):
    D = dc_polytope(C, BallCm(2, 1.0))
    L = perimeter(C)
    assert np.max(np.abs(support_cm(D, direction_net(2, 100)) - L)) <= 1e-9
    assert D.total_weight() == pytest.approx(L)


def test_point_C_gives_zero_body(rng):
    D = dc_polytope(Polygon2([[1.0, 1.0]]), random_polytope(rng))
    assert D.terms == () and np.allclose(support_cm(D, direction_net(2, 10)), 0)


def test_oracle_K_is_expanded(rng):
    K = random_polytope(rng)
    D1 = dc_polytope(SQ, dc_polytope(interval(), K))
    assert len(D1.terms) == 8
    u = direction_net(2, 40)
    direct = sum(support_cm(dc_polytope(SQ, K), s) for s in (u, -u))
    assert np.allclose(support_cm(D1, u), direct, atol=1e-12)


# ---------------------------------------------------------------- dc_planar


def test_interval_triangle_hexagon():
    D = dc_planar(interval(), TRI)
    assert len(D) == 6 and area(D) == pytest.approx(3.0, abs=1e-12)
    assert D.allclose(minkowski_sum(TRI, reflect(TRI)), 1e-12)


@given(seeded_polygons())
def test_planar_matches_support_sum(C):
    K = random_polygon(np.random.default_rng(len(C)), 6)
    mu = area_measure(C)
    expect = sum(w * support(K, GRID - a) for a, w in zip(mu.angles, mu.weights))
    assert np.max(np.abs(support(dc_planar(C, K), GRID) - expect)) <= 1e-10


def test_sampled_disc(rng):
    C = random_polygon(rng, 5)
    D = dc_planar_sampled(C, SampledSupport2.disc(0.7, 512))
    assert np.max(np.abs(D.h - 0.7 * perimeter(C))) <= 1e-12


def test_square_reuleaux_ball():
    D = dc_planar_sampled(SQ, reuleaux_triangle(1024))
    assert np.max(np.abs(D.h - 2.0)) <= 1e-4


def test_sampled_C_on_same_grid(rng):
    K = SampledSupport2.from_polygon(random_polygon(rng, 6), 256)
    C = SampledSupport2.from_polygon(SQ, 256)
    D1 = dc_planar_sampled(C, K)
    D2 = dc_planar_sampled(SQ, K)
    assert np.max(np.abs(D1.h - D2.h)) <= 1e-9


def test_grid_mismatch():
    with pytest.raises(ResolutionError):
        dc_planar_sampled(SampledSupport2.disc(1.0, 128), SampledSupport2.disc(1.0, 256))


def test_sampled_polygon_route_agrees(rng):
    C, K = random_polygon(rng, 5), random_polygon(rng, 6)
    exact = dc_planar(C, K)
    S = dc_planar_sampled(C, SampledSupport2.from_polygon(K, 2048))
    # off-grid atoms are rounded to the grid: error <= l(C) max|h_K'| pi / n
    bound = perimeter(C) * float(np.max(np.linalg.norm(K.vertices, axis=1))) * math.pi / 2048
    assert np.max(np.abs(S.h - support(exact, S.angles))) <= bound


# ---------------------------------------------------------------- measures


def test_interval_convolution_is_classical(rng):
    K = random_polygon(rng, 6)
    SK = area_measure(K)
    got = convolve_measures(area_measure(interval()), SK)
    expect = AtomicMeasure1(np.concatenate([SK.angles, SK.angles + math.pi]), np.concatenate([SK.weights, SK.weights]))
    assert got.allclose(expect)
    assert got.allclose(area_measure(minkowski_sum(K, reflect(K))))


def test_square_convolution():
    mu = convolve_measures(area_measure(SQ), area_measure(SQ))
    assert np.allclose(mu.angles, np.arange(4) * math.pi / 2) and np.allclose(mu.weights, 4)


@given(seeded_polygons(), seeded_polygons(5))
def test_convolution_mass(C, K):
    mu = convolve_measures(area_measure(C), area_measure(K))
    assert mu.mass() == pytest.approx(perimeter(C) * perimeter(K), rel=1e-9)


def test_body_from_square_measure():
    mu = AtomicMeasure1(np.arange(4) * math.pi / 2, np.ones(4))
    assert body_from_measure(mu).allclose(SQ, 1e-12)


@given(st.integers(0, 2**31))
def test_body_measure_round_trip(seed):
    rng = np.random.default_rng(seed)
    # random closed atom set: the edge vectors of a random polygon
    P = random_polygon(rng, int(rng.integers(3, 12)))
    mu = area_measure(P)
    Q = body_from_measure(mu)
    assert area_measure(Q).allclose(mu)
    assert np.allclose(support(Q, GRID), support(steiner_centered(P), GRID), atol=1e-12)


def test_not_a_measure():
    with pytest.raises(NotAMeasureError):
        body_from_measure(AtomicMeasure1([0.0, 1.0], [1.0, 1.0]))


@given(seeded_polygons(), seeded_polygons(5))
def test_two_construction_routes(C, K):
    via = body_from_measure(convolve_measures(area_measure(C), area_measure(K)))
    D = steiner_centered(dc_planar(C, K))
    assert len(via) == len(D)
    assert np.max(np.abs(via.vertices - D.vertices)) <= 1e-8


# ---------------------------------------------------------------- segments


def test_square_unit_segment():
    D = dc_segment(SQ, 0.0, 1.0, np.array([1.0, 0.0]))
    th = GRID
    u = np.stack([np.cos(th), np.sin(th)], axis=1)
    box = Polygon2([[-1, -1], [1, -1], [1, 1], [-1, 1]])
    assert np.allclose(support_cm(D, u), support(box, th), atol=1e-12)


def test_interval_segment(rng):
    u = rng.normal(size=4)
    u /= np.linalg.norm(u)
    D = dc_segment(interval(), 0.0, 1.0, u)
    net = direction_net(2, 80)
    assert np.allclose(support_cm(D, net), np.abs(net @ u), atol=1e-12)


@given(st.integers(0, 2**31), st.floats(-2, 0), st.floats(0.1, 2))
def test_segment_closed_form_and_height(seed, a, b):
    rng = np.random.default_rng(seed)
    C = random_polygon(rng, 6)
    u = rng.normal(size=4)
    u /= np.linalg.norm(u)
    net = direction_net(2, 80, seed % 1000)
    D, F = dc_segment(C, a, b, u), segment_closed_form(C, a, b, u)
    assert np.max(np.abs(support_cm(D, net) - support_cm(F, net))) <= 1e-9
    # h at J u: sum_i s_i max(a sin t_i, b sin t_i) by hand
    mu = area_measure(C)
    brute = float(np.sum(mu.weights * np.maximum(a * np.sin(mu.angles), b * np.sin(mu.angles))))
    assert segment_height(C, a, b, u) == pytest.approx(brute, abs=1e-12)
    wreal = support(C, 0.0) + support(C, math.pi)
    assert segment_height(C, a, b, u) == pytest.approx((b - a) * wreal, abs=1e-9)
    assert support_cm(D, -apply_J(u)) == pytest.approx((b - a) * wreal, abs=1e-9)


def test_segment_needs_order():
    with pytest.raises(InvalidInputError):
        dc_segment(SQ, 1.0, 0.0, np.array([1.0, 0, 0, 0]))


# ---------------------------------------------------------------- commutativity


def test_commute_same_body(rng):
    K = random_polygon(rng, 6)
    A, B = commute_m1(K, K)
    assert A.allclose(B)


@given(seeded_polygons(), seeded_polygons(5))
def test_commute_random(C, K):
    A, B = commute_m1(C, K)
    assert centered_dist(A, B) <= 1e-8


def test_commute_segment_triangle():
    _, B = commute_m1(interval(), TRI)
    H = minkowski_sum(TRI, reflect(TRI))
    assert len(B) == 6 and area(B) == pytest.approx(3.0)
    assert centered_dist(B, H) <= 1e-12


# ---------------------------------------------------------------- scaling and symmetry laws


@given(seeded_polygons(), st.complex_numbers(min_magnitude=0.2, max_magnitude=3))
def test_scaling_law_planar(C, rho):
    K = random_polygon(np.random.default_rng(3), 6)
    a = steiner_centered(dc_planar(rotate_scale(C, rho), K))
    b = steiner_centered(dc_planar(C, rotate_scale(K, rho)))
    c = steiner_centered(rotate_scale(dc_planar(C, K), rho))
    th = 2 * math.pi * np.arange(64) / 64
    scale = max(1.0, float(np.max(np.abs(support(c, th)))))
    assert sdist(a, b, th) <= 1e-10 * scale and sdist(b, c, th) <= 1e-10 * scale


@given(st.integers(0, 2**31), st.complex_numbers(min_magnitude=0.2, max_magnitude=3))
def test_scaling_law_c2(seed, rho):
    rng = np.random.default_rng(seed)
    C, K = random_polygon(rng, 5), random_polytope(rng)
    net = direction_net(2, 64, seed % 100)
    a = support_cm(dc_polytope(rotate_scale(C, rho), K), net)
    b = support_cm(dc_polytope(C, complex_scale(K, rho)), net)
    # h(rho D, u) = |rho| h(D, conj(rho)/|rho| u)
    c = abs(rho) * support_cm(dc_polytope(C, K), rotate_directions(net, rho.conjugate() / abs(rho)))
    assert np.max(np.abs(a - b)) <= 1e-10 * max(1, np.abs(a).max())
    assert np.max(np.abs(b - c)) <= 1e-10 * max(1, np.abs(a).max())


@pytest.mark.parametrize("N", [3, 4, 5, 7])
def test_regular_polygon_rotation_symmetry(N, rng):
    C, K = regular_polygon(N, 0.7), random_polytope(rng)
    D = dc_polytope(C, K)
    t = 2 * math.pi / N
    net = direction_net(2, 64)
    lhs = support_cm(D, rotate_directions(net, complex(math.cos(t), -math.sin(t))))
    assert np.max(np.abs(lhs - support_cm(D, net))) <= 1e-10


@given(st.integers(0, 2**31))
def test_complex_linear_equivariance(seed):
    rng = np.random.default_rng(seed)
    C, K = random_polygon(rng, 5), random_polytope(rng)
    T = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    # real 4x4 matrix of T acting on C^2
    R = np.stack([to_real(T @ to_complex(e)) for e in np.eye(4)], axis=1)
    net = direction_net(2, 64, seed % 100)
    lhs = support_cm(dc_polytope(C, K.linear_image(T)), net)
    rhs = support_cm(dc_polytope(C, K), net @ R)
    assert np.max(np.abs(lhs - rhs)) <= 1e-10 * max(1, np.abs(lhs).max())


def test_valuation_property(rng):
    P = random_polygon(rng, 9)
    big = 100.0
    left = Polygon2([[-big, -big], [0.2, -big], [0.2, big], [-big, big]])
    right = Polygon2([[-0.2, -big], [big, -big], [big, big], [-0.2, big]])
    K, L = polygon_intersect(P, left), polygon_intersect(P, right)
    KuL, KnL = P, polygon_intersect(K, L)
    for C in (SQ, random_polygon(rng, 5), interval()):
        lhs = support(dc_planar(C, KuL), GRID) + support(dc_planar(C, KnL), GRID)
        rhs = support(dc_planar(C, K), GRID) + support(dc_planar(C, L), GRID)
        assert np.max(np.abs(lhs - rhs)) <= 1e-9


@given(seeded_polygons(), seeded_polygons(5), seeded_polygons(4))
def test_minkowski_additivity(C, K, L):
    lhs = support(dc_planar(C, minkowski_sum(K, L)), GRID)
    rhs = support(dc_planar(C, K), GRID) + support(dc_planar(C, L), GRID)
    assert np.max(np.abs(lhs - rhs)) <= 1e-9 * max(1, np.abs(lhs).max())


@given(seeded_polygons(), seeded_polygons(5))
def test_monotone(C, K):
    rng = np.random.default_rng(0)
    bigger = Polygon2(np.vstack([K.vertices, rng.normal(size=(3, 2))]))
    assert np.all(support(dc_planar(C, K), GRID) <= support(dc_planar(C, bigger), GRID) + 1e-12)
    Cb = Polygon2(np.vstack([C.vertices, rng.normal(size=(3, 2))]))
    # monotone in C once both results are Steiner-centred: h_{D_C K} <= h_{D_C' K}
    net = direction_net(2, 40)
    K4 = random_polytope(rng)
    assert np.all(support_cm(dc_polytope(C, K4), net) <= support_cm(dc_polytope(Cb, K4), net) + 1e-12)


@given(seeded_polygons(), seeded_polygons(5))
def test_edge_count_bound(C, K):
    assert len(dc_planar(C, K)) <= len(C) * len(K)


def test_generating_measure_rejects_unknown():
    with pytest.raises(InvalidInputError):
        generating_measure("square")
