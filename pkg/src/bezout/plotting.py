"""Affine slice plots of curve pairs with labeled intersection markers.

The visible locus of each curve is traced by marching squares on a sample
grid of the dehomogenized polynomial; segments are rendered through
matplotlib straight to SVG.  Output is kept reproducible: fixed hash salt,
no timestamp metadata, text emitted as real <text> elements.
"""

from __future__ import annotations

import warnings

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.collections import LineCollection

from .mpoly import HPoly, MPoly, X, Y, Z
from .unpack import ApproxPoint

# (fixed variable, horizontal variable, vertical variable)
SLICES = {
    "z=1": (Z, X, Y),
    "y=1": (Y, X, Z),
    "x=1": (X, Y, Z),
}

_AXIS_NAMES = {X: "x", Y: "y", Z: "z"}

matplotlib.rcParams["svg.fonttype"] = "none"
matplotlib.rcParams["svg.hashsalt"] = "bezout-slice-plot"


def slice_samples(
    curve: HPoly, fixed: int, hvar: int, vvar: int, hs: np.ndarray, vs: np.ndarray
) -> np.ndarray:
    """Evaluate the affine slice on a grid; rows follow vs, columns hs."""
    hh, vv = np.meshgrid(hs, vs)
    acc = np.zeros_like(hh)
    for e, c in curve.poly.terms.items():
        term = float(c) * np.ones_like(hh)
        if e[hvar]:
            term = term * hh ** e[hvar]
        if e[vvar]:
            term = term * vv ** e[vvar]
        # the fixed variable is 1, so its exponent contributes nothing
        acc = acc + term
    return acc


# segment table indexed by the 4-bit sign pattern of cell corners
# corners: 0=(0,0) 1=(1,0) 2=(1,1) 3=(0,1) in (h, v) cell coordinates
_EDGES = {
    0: (0, 1),  # bottom
    1: (1, 2),  # right
    2: (3, 2),  # top
    3: (0, 3),  # left
}
_CASES = {
    1: [(3, 0)],
    2: [(0, 1)],
    3: [(3, 1)],
    4: [(1, 2)],
    6: [(0, 2)],
    7: [(3, 2)],
    8: [(2, 3)],
    9: [(0, 2)],
    11: [(1, 2)],
    12: [(3, 1)],
    13: [(0, 1)],
    14: [(3, 0)],
}


def marching_squares(samples: np.ndarray, hs: np.ndarray, vs: np.ndarray) -> list:
    """Zero-contour segments [(h0, v0, h1, v1), ...] of the sampled field."""
    segments = []
    pos = samples > 0
    index_grid = (
        pos[:-1, :-1].astype(np.int8)
        + (pos[:-1, 1:].astype(np.int8) << 1)
        + (pos[1:, 1:].astype(np.int8) << 2)
        + (pos[1:, :-1].astype(np.int8) << 3)
    )
    active = np.argwhere((index_grid != 0) & (index_grid != 15))
    for r, c in active:
        corner_vals = [
            samples[r, c],
            samples[r, c + 1],
            samples[r + 1, c + 1],
            samples[r + 1, c],
        ]
        corner_pts = [
            (hs[c], vs[r]),
            (hs[c + 1], vs[r]),
            (hs[c + 1], vs[r + 1]),
            (hs[c], vs[r + 1]),
        ]
        index = int(index_grid[r, c])
        if index in (5, 10):
            # saddle: resolve with the cell-center sign
            center = sum(corner_vals) / 4.0
            if index == 5:
                pairs = [(3, 2), (0, 1)] if center > 0 else [(3, 0), (1, 2)]
            else:
                pairs = [(3, 0), (1, 2)] if center > 0 else [(3, 2), (0, 1)]
        else:
            pairs = _CASES[index]
        for e0, e1 in pairs:
            p0 = _edge_cross(e0, corner_pts, corner_vals)
            p1 = _edge_cross(e1, corner_pts, corner_vals)
            if p0 is not None and p1 is not None:
                segments.append((p0[0], p0[1], p1[0], p1[1]))
    return segments


def _edge_cross(edge: int, pts, vals):
    i, j = _EDGES[edge]
    v0, v1 = vals[i], vals[j]
    if v0 == v1:
        return None
    t = v0 / (v0 - v1)
    t = min(max(t, 0.0), 1.0)
    return (
        pts[i][0] + t * (pts[j][0] - pts[i][0]),
        pts[i][1] + t * (pts[j][1] - pts[i][1]),
    )


def _project_marker(p: ApproxPoint, fixed: int, hvar: int, vvar: int, tol: float = 1e-9):
    """Map an unpacked point into slice coordinates, or None if not visible."""
    coords = {X: p.x, Y: p.y, Z: p.z}
    w = coords[fixed]
    if abs(w) < tol:
        return None
    h = coords[hvar] / w
    v = coords[vvar] / w
    if abs(complex(h).imag) > tol or abs(complex(v).imag) > tol:
        return None
    return float(complex(h).real), float(complex(v).real)


def render_slice_plot(
    a: HPoly,
    b: HPoly,
    points: list[ApproxPoint],
    slice_name: str,
    window: tuple[float, float, float, float],
    grid: int,
    out_path: str,
) -> dict:
    """Draw both curve slices plus multiplicity-labeled markers; write SVG."""
    if slice_name not in SLICES:
        raise ValueError(f"unknown slice {slice_name!r} (use z=1, y=1 or x=1)")
    fixed, hvar, vvar = SLICES[slice_name]
    hmin, hmax, vmin, vmax = window
    hs = np.linspace(hmin, hmax, grid)
    vs = np.linspace(vmin, vmax, grid)

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    styles = [
        {"colors": "#1f3d7a", "linestyles": "solid", "linewidths": 1.4},
        {"colors": "#b33939", "linestyles": (0, (2, 2)), "linewidths": 1.4},
    ]
    drew_anything = False
    for curve, style in zip((a, b), styles):
        samples = slice_samples(curve, fixed, hvar, vvar, hs, vs)
        segments = marching_squares(samples, hs, vs)
        if segments:
            drew_anything = True
            lc = LineCollection(
                [((s[0], s[1]), (s[2], s[3])) for s in segments], **style
            )
            ax.add_collection(lc)
    if not drew_anything:
        warnings.warn("no visible curve locus in the plot window")

    markers = []
    for p in points:
        pos = _project_marker(p, fixed, hvar, vvar)
        if pos is None:
            continue
        if not (hmin <= pos[0] <= hmax and vmin <= pos[1] <= vmax):
            continue
        markers.append((pos, p.mult))
    for (mh, mv), mult in markers:
        ax.plot([mh], [mv], marker="o", color="black", markersize=5)
        ax.annotate(
            str(mult),
            (mh, mv),
            textcoords="offset points",
            xytext=(6, 6),
            fontsize=11,
            color="black",
        )

    ax.set_xlim(hmin, hmax)
    ax.set_ylim(vmin, vmax)
    ax.set_xlabel(_AXIS_NAMES[hvar])
    ax.set_ylabel(_AXIS_NAMES[vvar])
    ax.set_title(f"slice {slice_name}")
    ax.axhline(0, color="#999999", linewidth=0.5)
    ax.axvline(0, color="#999999", linewidth=0.5)
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return {"markers": len(markers), "segments_drawn": drew_anything}
