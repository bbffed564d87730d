"""Discrete vertex maps and their piecewise-linear extensions.

From a labeled grid, build the discrete map sending a 0-labeled vertex one
step right and a 1-labeled vertex one step left. The boundary condition
keeps every image on the grid, so no sentinel vertices are needed. The map
extends to the whole interval by linear interpolation along each edge, and
its fixed points can be computed exactly edge by edge: a hetero-labeled edge
contains exactly one, strictly interior, while a monochromatic edge pushes
every point the same way and contains none. `theorem_roundtrip` checks that
correspondence as an executable invariant.

The per-edge linear solve here is deliberately independent of the solver
module, so the two can be cross-checked against each other.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .sperner import Grid, Labeling


@dataclass(frozen=True)
class DiscreteMap:
    """A map vertex -> vertex given by per-vertex target indices.

    Every target is one step left or right of its vertex and stays on the
    grid (closure).
    """

    grid: Grid
    target_index: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "target_index", tuple(self.target_index))
        n = len(self.grid.vertices)
        if len(self.target_index) != n:
            raise ValueError("one target per grid vertex required")
        for j, t in enumerate(self.target_index):
            if t not in (j - 1, j + 1):
                raise ValueError(f"target of vertex {j} must be {j - 1} or {j + 1}")
            if not 0 <= t < n:
                raise ValueError(f"target of vertex {j} leaves the grid")


@dataclass(frozen=True)
class PLMap:
    """Piecewise-linear interpolant of per-vertex grid values."""

    grid: Grid
    value_at_vertex: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "value_at_vertex", tuple(self.value_at_vertex))
        if len(self.value_at_vertex) != len(self.grid.vertices):
            raise ValueError("one value per grid vertex required")
        vertex_set = set(self.grid.vertices)
        if any(v not in vertex_set for v in self.value_at_vertex):
            raise ValueError("vertex values must themselves be grid vertices")


def discrete_from_labeling(grid: Grid, labeling: Labeling) -> DiscreteMap:
    """Label 0 sends a vertex right, label 1 sends it left."""
    if len(labeling.labels) != len(grid.vertices):
        raise ValueError("labeling and grid sizes differ")
    targets = tuple(
        j + 1 if lab == 0 else j - 1 for j, lab in enumerate(labeling.labels)
    )
    return DiscreteMap(grid, targets)


def pl_from_discrete(dmap: DiscreteMap) -> PLMap:
    vertices = dmap.grid.vertices
    return PLMap(dmap.grid, tuple(vertices[t] for t in dmap.target_index))


def pl_from_labeling(grid: Grid, labeling: Labeling) -> PLMap:
    return pl_from_discrete(discrete_from_labeling(grid, labeling))


def _edge_index(grid: Grid, x: Fraction) -> int:
    """Smallest edge index k with vertices[k-1] <= x <= vertices[k]."""
    vertices = grid.vertices
    if not vertices[0] <= x <= vertices[-1]:
        raise ValueError(f"{x} outside the domain [{vertices[0]}, {vertices[-1]}]")
    k = bisect_left(vertices, x)
    return 1 if k == 0 else k


def pl_evaluate(plmap: PLMap, x: Fraction) -> Fraction:
    """Evaluate the interpolant at x, exactly.

    x is written as the convex combination lam * v[k-1] + (1 - lam) * v[k]
    of the endpoints of its edge and the same combination of the endpoint
    values is returned. Vertex hits use the smallest containing edge; both
    candidate edges agree there.
    """
    k = _edge_index(plmap.grid, x)
    v_left, v_right = plmap.grid.vertices[k - 1], plmap.grid.vertices[k]
    lam = (v_right - x) / (v_right - v_left)
    return lam * plmap.value_at_vertex[k - 1] + (1 - lam) * plmap.value_at_vertex[k]


def pl_fixed_points(plmap: PLMap) -> list[Fraction]:
    """All solutions of plmap(x) = x, by exact per-edge linear solve.

    The per-edge residual is linear with nonzero values at both endpoints
    (vertex images never coincide with their vertex), so each edge holds at
    most one fixed point, always strictly interior.
    """
    vertices = plmap.grid.vertices
    values = plmap.value_at_vertex
    points: list[Fraction] = []
    for k in range(1, len(vertices)):
        r_left = values[k - 1] - vertices[k - 1]
        r_right = values[k] - vertices[k]
        assert r_left != 0 and r_right != 0, "vertex image equals its vertex"
        if (r_left > 0) != (r_right > 0):
            points.append(
                vertices[k - 1] + r_left * (vertices[k] - vertices[k - 1]) / (r_left - r_right)
            )
    return points


@dataclass(frozen=True)
class FixedPointWitness:
    """A fixed point of the extension, its edge, and that edge's labels."""

    fixed_point: Fraction
    edge: int
    edge_labels: tuple[int, int]


def theorem_roundtrip(grid: Grid, labeling: Labeling) -> list[FixedPointWitness]:
    """Build the extension, find its fixed points, and check where they land.

    Every fixed point must lie strictly inside an edge whose endpoint labels
    differ, and every such edge must contain exactly one. An AssertionError
    here would falsify the implementation, not the underlying mathematics.
    """
    plmap = pl_from_labeling(grid, labeling)
    points = pl_fixed_points(plmap)
    assert points, "boundary condition guarantees at least one fixed point"
    labels = labeling.labels
    hetero_edges = {
        k for k in range(1, len(labels)) if labels[k - 1] != labels[k]
    }
    witnesses = []
    seen = []
    for x in points:
        k = _edge_index(grid, x)
        pair = (labels[k - 1], labels[k])
        assert grid.vertices[k - 1] < x < grid.vertices[k], "fixed point not interior"
        assert pair[0] != pair[1], "fixed point on a monochromatic edge"
        witnesses.append(FixedPointWitness(x, k, pair))
        seen.append(k)
    assert sorted(seen) == sorted(hetero_edges), (
        "hetero-labeled edges and fixed points do not correspond one-to-one"
    )
    return witnesses


def pl_trace(plmap: PLMap, samples_per_edge: int = 8) -> list[tuple[Fraction, Fraction]]:
    """Exact (x, value) samples along each edge, for external plotting.

    Emits samples_per_edge points per edge plus the final vertex; every
    vertex is included, so the breakpoints are preserved.
    """
    if samples_per_edge < 1:
        raise ValueError("samples_per_edge must be at least 1")
    vertices = plmap.grid.vertices
    rows = []
    for k in range(1, len(vertices)):
        span = vertices[k] - vertices[k - 1]
        for t in range(samples_per_edge):
            x = vertices[k - 1] + span * Fraction(t, samples_per_edge)
            rows.append((x, pl_evaluate(plmap, x)))
    rows.append((vertices[-1], plmap.value_at_vertex[-1]))
    return rows
