"""Command-line front end.

Exit codes: 0 success, 1 a verification contract failed, 2 usage or schema
error (a JSON object ``{"error": ..., "type": ...}`` is written to stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .complexspace import BallCm, PolytopeCm, SupportOracleCm, project_to_complex_line
from .diffbody import dc_auto
from .errors import SchemaError
from .harmonic import multiplier_table
from .planar import AtomicMeasure1, Polygon2, SampledSupport2, boundary_points, fourier_measure, fourier_support


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=1)
    if out:
        Path(out).write_text(text)
    else:
        print(text)


def _planar_C(path: str):
    C = io.load(path)
    if not isinstance(C, (Polygon2, SampledSupport2, AtomicMeasure1)):
        raise SchemaError("C must be a planar body (polygon2, sampled2) or a measure1")
    return C


def _cmd_compute(a) -> int:
    C, K = _planar_C(a.C), io.load(a.K)
    if isinstance(K, AtomicMeasure1):
        raise SchemaError("K must be a body, not a measure")
    _emit(io.to_json(dc_auto(C, K)), a.out)
    return 0


def _cmd_fourier(a) -> int:
    B = io.load(a.body)
    spectrum = fourier_measure(B, a.J) if isinstance(B, AtomicMeasure1) else fourier_support(B, a.J)
    spectrum = spectrum.to(a.convention)
    rows = [{"j": int(j), "re": float(c.real), "im": float(c.imag)} for j, c in zip(spectrum.indices(), spectrum.values)]
    _emit({"convention": spectrum.convention, "coeffs": rows}, a.out)
    return 0


def _cmd_multipliers(a) -> int:
    _emit(multiplier_table(_planar_C(a.C), a.kmax).rows(), a.out)
    return 0


def _cmd_classify(a) -> int:
    from .verify.classify import classify

    c = classify(_planar_C(a.C), io.load(a.K), a.J, a.eps)
    _emit(c.as_dict(), a.out)
    return 0


def _cmd_verify(a) -> int:
    from .verify.suites import run_suite, suite_passed

    reports = run_suite(a.suite, a.seed, a.samples)
    ok = suite_passed(reports)
    for r in reports:
        if not r.passed:
            for c in r.failures:
                print(f"FAIL {r.name}: {c.name} (value {c.value:.6g}, bound {c.bound:.6g})", file=sys.stderr)
    print(json.dumps({"suite": a.suite, "seed": a.seed, "reports": len(reports), "passed": ok}))
    if a.json_out:
        doc = {"suite": a.suite, "seed": a.seed, "samples": a.samples, "passed": ok, "reports": [r.as_dict() for r in reports]}
        Path(a.json_out).write_text(json.dumps(doc, indent=1))
    return 0 if ok else 1


def _outline(B, xi) -> np.ndarray:
    if isinstance(B, Polygon2):
        return B.vertices
    if isinstance(B, SampledSupport2):
        return boundary_points(B)
    if isinstance(B, (PolytopeCm, SupportOracleCm)):
        if B.m == 1 and xi is None:
            xi = np.array([1.0, 0.0])
        if xi is None:
            raise SchemaError("bodies in C^2 need --project xi")
        if isinstance(B, SupportOracleCm):
            from .verify.solid import materialize

            B = PolytopeCm(B.m, materialize(B), reduce=False)
        xi = np.asarray(xi, dtype=float)
        if xi.size != 2 * B.m:
            raise SchemaError(f"--project needs {2 * B.m} coordinates")
        return project_to_complex_line(B, xi / np.linalg.norm(xi)).vertices
    if isinstance(B, BallCm):
        t = np.linspace(0, 2 * np.pi, 256, endpoint=False)
        return B.radius * np.stack([np.cos(t), np.sin(t)], axis=1)
    raise SchemaError(f"cannot render {type(B).__name__}")


def svg_polygon(points: np.ndarray, size: int = 400) -> str:
    """A single closed outline scaled into a square canvas (y axis up)."""
    P = np.atleast_2d(points)
    lo, hi = P.min(axis=0), P.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = 0.05 * span
    scale = size / (span + 2 * pad)
    X = (P[:, 0] - lo[0] + pad) * scale
    Y = size - (P[:, 1] - lo[1] + pad) * scale
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in zip(X, Y))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
        f'<polygon points="{coords}" fill="#cde" stroke="#124" stroke-width="1.5"/>\n</svg>\n'
    )


def _cmd_render(a) -> int:
    xi = [float(v) for v in a.project.split(",")] if a.project else None
    Path(a.svg).write_text(svg_polygon(_outline(io.load(a.body), xi)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="complexdiff", description="Complex difference bodies and their checks.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="build D_C K")
    c.add_argument("--C", required=True)
    c.add_argument("--K", required=True)
    c.add_argument("--out")
    c.set_defaults(func=_cmd_compute)

    f = sub.add_parser("fourier", help="Fourier coefficients of a planar body or measure")
    f.add_argument("--body", required=True)
    f.add_argument("--J", type=int, default=32)
    f.add_argument("--convention", choices=("raw", "multiplier"), default="multiplier")
    f.add_argument("--out")
    f.set_defaults(func=_cmd_fourier)

    m = sub.add_parser("multipliers", help="multiplier table lambda_{k,l}")
    m.add_argument("--C", required=True)
    m.add_argument("--kmax", type=int, default=6)
    m.add_argument("--out")
    m.set_defaults(func=_cmd_multipliers)

    k = sub.add_parser("classify", help="predicted and observed shape flags of D_C K")
    k.add_argument("--C", required=True)
    k.add_argument("--K", required=True)
    k.add_argument("--J", type=int, default=16)
    k.add_argument("--eps", type=float, default=1e-6)
    k.add_argument("--out")
    k.set_defaults(func=_cmd_classify)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=("planar", "complex2", "harmonic", "all"), default="all")
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--samples", type=int, default=200_000)
    v.add_argument("--json-out")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("render", help="SVG outline of a planar body or a complex-line projection")
    r.add_argument("--body", required=True)
    r.add_argument("--svg", required=True)
    r.add_argument("--project", help="comma-separated direction xi in R^{2m}")
    r.set_defaults(func=_cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args))
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc), "type": type(exc).__name__}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
