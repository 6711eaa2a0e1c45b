# %% [markdown]
# # Bodies in C^2
# Support oracles of D_C K, the dimension formula and the kernel-ratio
# identity on S^3.  Run with `python notebooks/complex_tour.py`.

# %%
from pathlib import Path

import numpy as np

from complexdiff.cli import svg_polygon
from complexdiff.complexspace import (
    BallCm,
    PolytopeCm,
    affine_dim,
    cube,
    direction_net,
    project_to_complex_line,
    random_polytope,
    support_cm,
)
from complexdiff.diffbody import dc_polytope
from complexdiff.harmonic import kernel_components, multiplier, random_sphere, s3_quadrature
from complexdiff.planar import interval, regular_polygon
from complexdiff.verify import volume_check_m2
from complexdiff.verify.solid import materialize
from complexdiff.verify.suites import dimension_table

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)
rng = np.random.default_rng(0)

# %% [markdown]
# The unit ball is a fixed point up to the factor l(C).

# %%
C = regular_polygon(5)
net = direction_net(2, 200)
D = dc_polytope(C, BallCm(2, 1.0))
print(f"l(C) = 5; support of D_C B_4 ranges over [{support_cm(D, net).min():.12f}, {support_cm(D, net).max():.12f}]")

# %% [markdown]
# Dimension of D_C K depends on how K - K meets complex lines.

# %%
for name, K, expected in dimension_table():
    print(f"{name:40s} dim D_C K = {affine_dim(dc_polytope(regular_polygon(4), K))} (expected {expected})")

# %% [markdown]
# Monte-Carlo volume of D_C K for a random polytope and a square C.

# %%
r = volume_check_m2(regular_polygon(4), random_polytope(rng, 2, 8), 100_000, rng)
print(f"vol estimate {r.info['estimate']:.2f} +- {r.info['sigma']:.2f}; exact hull {r.info['exact_hull_volume']:.2f}")
print(f"bounds: {r.info['lower']:.1f} <= vol <= {r.info['upper']:.1f}; passed={r.passed}")

# %% [markdown]
# Kernel components: each (k, l) component of h(D_C K) is lambda_{k-l} times
# that of h(K).  The identity is exact on the quadrature when the normals of C
# lie on its angular grid, as they do for the square.

# %%
q = s3_quadrature()
C = regular_polygon(4)
K = random_polytope(rng, 2, 8)
D = dc_polytope(C, K)
pairs = [(4, 0), (1, 1), (5, 1), (2, 1)]
U = random_sphere(rng, 2)
GK = kernel_components(np.stack([support_cm(K, q.points(u)) for u in U]), pairs, q)
GD = kernel_components(np.stack([support_cm(D, q.points(u)) for u in U]), pairs, q)
for (k, l), gk, gd in zip(pairs, GK, GD):
    lam = multiplier(C, k - l)
    print(f"(k, l) = ({k}, {l}): lambda = {lam.real:+.3f}, residual {np.max(np.abs(gd - lam * gk)):.1e}")

# %% [markdown]
# Projection of D_I K onto the first complex line.

# %%
V = materialize(dc_polytope(interval(), cube(2)))
P = project_to_complex_line(PolytopeCm(2, V, reduce=False), np.array([1.0, 0, 0, 0]))
(OUT / "cube_projection.svg").write_text(svg_polygon(P.vertices))
print(f"{len(V)} vertices in R^4; the projected outline has {len(P)}")
