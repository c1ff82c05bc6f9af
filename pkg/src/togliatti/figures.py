"""Plane figures for n = 2 ideals: the dilated simplex with the inverse
system marked and the removed points crossed, plus the hull of A_I.

Rendered with matplotlib to SVG or PNG.  SVG output strips the creation
date so repeated runs are byte-identical.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "togliatti"  # deterministic SVG ids

import matplotlib.pyplot as plt

from .monomials import MonomialIdeal, inverse_system
from .polytopes import polytope_of


def _xy(m) -> tuple[int, int]:
    # project the degree-d exponent vector (a0, a1, a2) to (a1, a2)
    return m[1], m[2]


def render_polygon(ideal: MonomialIdeal, path: str) -> None:
    """Write the lattice picture of a 3-variable ideal to ``path``."""
    if ideal.n != 2:
        raise ValueError("polygon figures are only available for n = 2")
    d = ideal.d
    points = inverse_system(ideal)
    removed = set(ideal.generators)

    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    tri_x = [0, d, 0, 0]
    tri_y = [0, 0, d, 0]
    ax.plot(tri_x, tri_y, color="0.8", lw=1.0, zorder=1)

    if len(points) >= 1:
        poly = polytope_of(ideal)
        if poly.dim == 2:
            verts = [_xy(v) for v in poly.vertices]
            # order hull vertices by angle around the centroid for drawing
            cx = sum(x for x, _ in verts) / len(verts)
            cy = sum(y for _, y in verts) / len(verts)
            import math

            verts.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
            verts.append(verts[0])
            ax.plot(
                [x for x, _ in verts], [y for _, y in verts],
                color="tab:blue", lw=1.4, zorder=2,
            )

    ax.scatter(
        [_xy(p)[0] for p in points],
        [_xy(p)[1] for p in points],
        s=28, color="tab:blue", zorder=3, label="inverse system",
    )
    ax.scatter(
        [_xy(p)[0] for p in removed],
        [_xy(p)[1] for p in removed],
        s=55, color="tab:red", marker="x", zorder=4, label="generators",
    )
    ax.set_xlim(-0.7, d + 0.7)
    ax.set_ylim(-0.7, d + 0.7)
    ax.set_aspect("equal")
    ax.set_xticks(range(d + 1))
    ax.set_yticks(range(d + 1))
    ax.set_xlabel("exponent of x1")
    ax.set_ylabel("exponent of x2")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(str(ideal), fontsize=8)
    fig.tight_layout()
    if path.endswith(".svg"):
        fig.savefig(path, metadata={"Date": None})
    else:
        fig.savefig(path, dpi=160)
    plt.close(fig)
