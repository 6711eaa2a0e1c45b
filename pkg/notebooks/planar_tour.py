# %% [markdown]
# # Planar tour
# Complex difference bodies of polygons, their Fourier multipliers and the
# constant-width pipeline.  Run with `python notebooks/planar_tour.py`; SVG
# figures land in `notebooks/out/`.

# %%
from pathlib import Path

import numpy as np

from complexdiff.cli import svg_polygon
from complexdiff.diffbody import dc_planar, dc_planar_sampled
from complexdiff.harmonic import multiplier, planar_multiplier_check
from complexdiff.planar import (
    Polygon2,
    area,
    boundary_points,
    interval,
    perimeter,
    regular_polygon,
    reuleaux_triangle,
)
from complexdiff.verify import classify

OUT = Path(__file__).with_name("out")
OUT.mkdir(exist_ok=True)

# %% [markdown]
# The vertical segment recovers the classical difference body.

# %%
T = Polygon2([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
D = dc_planar(interval(), T)
print(f"area(T) = {area(T):.3f}, area(D T) = {area(D):.3f}, vertices: {len(D)}")
(OUT / "difference_triangle.svg").write_text(svg_polygon(D.vertices))

# %% [markdown]
# A scalene C rotates the copies of K; the multipliers lambda_j carry the phases.

# %%
C = Polygon2([[0.0, 0.0], [2.0, 0.0], [0.5, 0.8]])
D = dc_planar(C, T)
print(f"l(C) = {perimeter(C):.4f}; D_C T has {len(D)} vertices")
for j in range(5):
    lam = multiplier(C, j)
    print(f"  lambda_{j} = {lam.real:+.4f} {lam.imag:+.4f}i")
print(f"multiplier identity residual, J = 32: {planar_multiplier_check(C, T, 32):.1e}")
(OUT / "scalene_C.svg").write_text(svg_polygon(D.vertices))

# %% [markdown]
# Constant width: a Reuleaux triangle under any centrally symmetric C with
# l(C) = 1 becomes a disc of radius 1/2.

# %%
R = reuleaux_triangle(1024)
for C in (regular_polygon(4, 0.25), regular_polygon(6, 1 / 6)):
    h = dc_planar_sampled(C, R).h
    print(f"N = {len(C)}: h ranges over [{h.min():.6f}, {h.max():.6f}]")
(OUT / "reuleaux_ball.svg").write_text(svg_polygon(boundary_points(dc_planar_sampled(regular_polygon(4, 0.25), R))))

# %% [markdown]
# Shape flags predicted from the spectra against those read off D_C K.

# %%
for name, C, K in (
    ("square on Reuleaux", regular_polygon(4), R),
    ("64-gon on triangle", regular_polygon(64, 0.05), T),
    ("scalene on triangle", Polygon2([[0.0, 0.0], [2.0, 0.0], [0.5, 0.8]]), T),
):
    c = classify(C, K)
    flags = ", ".join(k for k, v in c.observed.items() if v) or "none"
    print(f"{name:22s} agree={c.agree}  observed: {flags}")

print("figures:", sorted(p.name for p in OUT.glob("*.svg")))
_ = np  # keeps the namespace handy in an interactive session
