#!/usr/bin/env python3
"""Generate random-point tetrahedral mesh fixtures.

Points are drawn uniformly in the unit cube with a fixed seed and
tetrahedralized with scipy's Delaunay (Qhull). Output is a .node/.ele
pair per size, 0-based. Each mesh is validated here before writing:
every point must be used, all tets non-degenerate, and the face/edge
counts derived by brute force must satisfy V - E + F - T = 1.
"""

import itertools
import sys

import numpy as np
from scipy.spatial import Delaunay

SIZES = [100, 1000, 5000]
SEED = 42


def validate(points, tets):
    n = len(points)
    used = np.zeros(n, dtype=bool)
    used[tets.ravel()] = True
    assert used.all(), "unused vertices would break the Euler count"

    a = points[tets[:, 0]]
    vols = np.abs(np.linalg.det(points[tets[:, 1:]] - a[:, None, :])) / 6.0
    diag = np.linalg.norm(points.max(0) - points.min(0))
    assert vols.min() > 1e-12 * diag**3, f"sliver tet: {vols.min():e}"

    faces = set()
    edges = set()
    for quad in tets:
        for tri in itertools.combinations(quad, 3):
            faces.add(tuple(sorted(tri)))
        for pair in itertools.combinations(quad, 2):
            edges.add(tuple(sorted(pair)))
    euler = n - len(edges) + len(faces) - len(tets)
    assert euler == 1, f"euler = {euler}"
    return len(edges), len(faces)


def main():
    rng = np.random.default_rng(SEED)
    for size in SIZES:
        points = rng.random((size, 3))
        tets = Delaunay(points).simplices
        ne, nf = validate(points, tets)
        print(f"{size} points: T={len(tets)} F={nf} E={ne}")

        with open(f"random_{size}.node", "w") as f:
            f.write(f"{size} 3 0 0\n")
            for i, p in enumerate(points):
                f.write(f"{i} {p[0]:.17g} {p[1]:.17g} {p[2]:.17g}\n")
        with open(f"random_{size}.ele", "w") as f:
            f.write(f"{len(tets)} 4 0\n")
            for i, t in enumerate(tets):
                f.write(f"{i} {t[0]} {t[1]} {t[2]} {t[3]}\n")


if __name__ == "__main__":
    sys.exit(main())
