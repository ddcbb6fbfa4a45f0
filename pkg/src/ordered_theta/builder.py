"""Incremental construction of ordered theta graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import DegenerateInput, DuplicatePoint
from .geometry import DEFAULT_TOL, Point, PointLike, angle_from_east, bisector


class Vertex(NamedTuple):
    id: int
    x: float
    y: float

    @property
    def point(self) -> Point:
        return Point(self.x, self.y)


class Neighbour(NamedTuple):
    id: int
    x: float
    y: float
    angle: float

    @property
    def point(self) -> Point:
        return Point(self.x, self.y)


class Violation(NamedTuple):
    kind: str  # "duplicate" | "boundary" | "tie" | "angle"
    vertex: int
    other: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at v{self.vertex} (with v{self.other}): {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def vertex_ids(self) -> list[int]:
        return sorted({v.vertex for v in self.violations})


@dataclass(frozen=True, eq=False)
class OrderedThetaGraph:
    """Immutable ordered theta graph.

    Vertex ids are 1-based and equal to the insertion order.  ``adjacency[i]``
    lists the neighbours of vertex ``i + 1`` sorted by counter-clockwise angle
    from east.
    """

    k: int
    points: tuple[Point, ...]
    adjacency: tuple[tuple[Neighbour, ...], ...] = field(repr=False)

    @classmethod
    def from_edges(
        cls, k: int, points: Sequence[PointLike], edges: Iterable[tuple[int, int]]
    ) -> "OrderedThetaGraph":
        pts = tuple(Point(float(p[0]), float(p[1])) for p in points)
        n = len(pts)
        adj: list[list[Neighbour]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise ValueError(f"invalid edge ({a}, {b}) for {n} vertices")
            key = (min(a, b), max(a, b))
            if key in seen:
                continue
            seen.add(key)
            pa, pb = pts[a - 1], pts[b - 1]
            adj[a - 1].append(Neighbour(b, pb.x, pb.y, angle_from_east(pa, pb)))
            adj[b - 1].append(Neighbour(a, pa.x, pa.y, angle_from_east(pb, pa)))
        return cls(
            k=int(k),
            points=pts,
            adjacency=tuple(tuple(sorted(row, key=lambda nb: (nb.angle, nb.id))) for row in adj),
        )

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def vertex(self, vid: int) -> Vertex:
        p = self.points[vid - 1]
        return Vertex(vid, p.x, p.y)

    def point(self, vid: int) -> Point:
        return self.points[vid - 1]

    def neighbours(self, vid: int) -> tuple[Neighbour, ...]:
        return self.adjacency[vid - 1]

    def neighbour_ids(self, vid: int) -> list[int]:
        return [nb.id for nb in self.adjacency[vid - 1]]

    def degree(self, vid: int) -> int:
        return len(self.adjacency[vid - 1])

    def edges(self) -> list[tuple[int, int]]:
        out = [
            (u, nb.id)
            for u in range(1, self.n + 1)
            for nb in self.adjacency[u - 1]
            if u < nb.id
        ]
        out.sort()
        return out

    def coords(self) -> np.ndarray:
        return np.array(self.points, dtype=np.float64).reshape(-1, 2)

    def same_as(self, other: "OrderedThetaGraph") -> bool:
        return (
            self.k == other.k
            and self.points == other.points
            and self.adjacency == other.adjacency
        )


def _as_points(points: Sequence[PointLike]) -> list[Point]:
    pts = [Point(float(p[0]), float(p[1])) for p in points]
    for p in pts:
        if not (np.isfinite(p.x) and np.isfinite(p.y)):
            raise ValueError(f"non-finite coordinate {p}")
    return pts


def _first_duplicate(pts: Sequence[Point]) -> tuple[int, int] | None:
    first_seen: dict[Point, int] = {}
    for i, p in enumerate(pts, start=1):
        if p in first_seen:
            return first_seen[p], i
        first_seen[p] = i
    return None


def _scan(pts: Sequence[Point], k: int, tol: float, backend: str | None):
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    arr = np.array(pts, dtype=np.float64).reshape(-1, 2)
    bis = np.array([bisector(i, k) for i in range(k)], dtype=np.float64)
    return _kernels.insertion_scan(arr[:, 0], arr[:, 1], k, bis[:, 0], bis[:, 1], tol, backend)


def _edges_from_nearest(nearest: np.ndarray) -> list[tuple[int, int]]:
    rows, cones = np.nonzero(nearest >= 0)
    return [(int(nearest[r, c]) + 1, int(r) + 1) for r, c in zip(rows, cones)]


def _angle_violations(graph: OrderedThetaGraph, tol: float) -> list[Violation]:
    out = []
    for u in range(1, graph.n + 1):
        row = graph.neighbours(u)
        if len(row) < 2:
            continue
        pairs = list(zip(row, row[1:])) + [(row[-1], row[0])]
        for a, b in pairs:
            gap = (b.angle - a.angle) % (2 * np.pi)
            if min(gap, 2 * np.pi - gap) <= tol:
                out.append(
                    Violation("angle", u, max(a.id, b.id),
                              f"neighbours v{a.id} and v{b.id} share a direction")
                )
                break
    return out


def _collect(pts, k, tol, backend):
    dup = _first_duplicate(pts)
    if dup is not None:
        return [Violation("duplicate", dup[1], dup[0], "identical coordinates")], None
    nearest, boundary, tie = _scan(pts, k, tol, backend)
    violations = []
    for i in np.flatnonzero(boundary >= 0):
        j = int(boundary[i])
        violations.append(
            Violation("boundary", int(i) + 1, j + 1,
                      f"v{j + 1} lies on a cone boundary ray of v{int(i) + 1}")
        )
    for i in np.flatnonzero(tie >= 0):
        j = int(tie[i])
        violations.append(
            Violation("tie", int(i) + 1, j + 1,
                      f"v{j + 1} ties the closest vertex in its cone of v{int(i) + 1}")
        )
    graph = OrderedThetaGraph.from_edges(k, pts, _edges_from_nearest(nearest))
    violations.extend(_angle_violations(graph, tol))
    violations.sort(key=lambda v: (v.vertex, v.kind, v.other))
    return violations, graph


def validate_general_position(
    points: Sequence[PointLike], k: int, tol: float = DEFAULT_TOL, backend: str | None = None
) -> ValidationReport:
    """Check the input against the general-position assumptions.

    Reports earlier vertices on a cone boundary ray of a later vertex,
    projection ties with the per-cone closest vertex, and pairs of
    neighbours seen in the same direction.
    """
    violations, _ = _collect(_as_points(points), k, tol, backend)
    return ValidationReport(tuple(violations))


def build(
    points: Sequence[PointLike], k: int, tol: float = DEFAULT_TOL, backend: str | None = None
) -> OrderedThetaGraph:
    """Insert ``points`` in order and connect each to its closest earlier vertex per cone."""
    pts = _as_points(points)
    dup = _first_duplicate(pts)
    if dup is not None:
        raise DuplicatePoint(*dup)
    violations, graph = _collect(pts, k, tol, backend)
    if violations:
        raise DegenerateInput(violations)
    return graph
