"""Global brute-force references.

Everything here may inspect the whole graph.  None of it goes through the
routing engine or the step functions; only the scalar geometry predicates
are shared, so the local algorithms are checked against an independent
computation.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from typing import Optional, Sequence

from .builder import OrderedThetaGraph
from .geometry import PointLike, cone_and_projection, cone_index


def dijkstra(graph: OrderedThetaGraph, s: int, t: int) -> tuple[float, list[int]]:
    """Euclidean-weighted shortest path from ``s`` to ``t``."""
    dist = {s: 0.0}
    parent: dict[int, int] = {}
    heap = [(0.0, s)]
    done = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == t:
            break
        pu = graph.point(u)
        for nb in graph.neighbours(u):
            nd = d + math.hypot(nb.x - pu.x, nb.y - pu.y)
            if nd < dist.get(nb.id, math.inf):
                dist[nb.id] = nd
                parent[nb.id] = u
                heapq.heappush(heap, (nd, nb.id))
    if t not in done:
        return math.inf, []
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return dist[t], path[::-1]


def bfs_hops(graph: OrderedThetaGraph, s: int) -> dict[int, int]:
    hops = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for nb in graph.neighbours(u):
            if nb.id not in hops:
                hops[nb.id] = hops[u] + 1
                queue.append(nb.id)
    return hops


def connected(graph: OrderedThetaGraph) -> bool:
    if graph.n == 0:
        return True
    return len(bfs_hops(graph, 1)) == graph.n


def theta_edges_bruteforce(points: Sequence[PointLike], k: int) -> set[tuple[int, int]]:
    """Edge set of the ordered theta graph by a per-cone argmin over earlier vertices."""
    edges = set()
    for i in range(1, len(points)):
        best: dict[int, tuple[float, int]] = {}
        for j in range(i):
            c, d = cone_and_projection(points[i], points[j], k)
            if c not in best or d < best[c][0]:
                best[c] = (d, j)
        for _, j in best.values():
            edges.add((j + 1, i + 1))
    return edges


def ordered_theta_next(graph: OrderedThetaGraph, u: int, target: int) -> Optional[int]:
    """Global evaluation of one ordered-theta step from ``u`` towards ``target``."""
    if u == target:
        return None
    nbrs = graph.neighbour_ids(u)
    if target in nbrs:
        return target
    pu = graph.point(u)
    tc, td = cone_and_projection(pu, graph.point(target), graph.k)
    best, best_d = None, math.inf
    for v in nbrs:
        if v >= u:
            continue
        c, d = cone_and_projection(pu, graph.point(v), graph.k)
        if c == tc and d <= td and d < best_d:
            best, best_d = v, d
    return best


def ordered_theta_path(graph: OrderedThetaGraph, start: int) -> list[int]:
    """Full ordered-theta route from ``start`` to vertex 1."""
    path = [start]
    while path[-1] != 1:
        nxt = ordered_theta_next(graph, path[-1], 1)
        if nxt is None or len(path) > graph.n:
            raise AssertionError(f"ordered-theta routing towards v1 stuck at v{path[-1]}")
        path.append(nxt)
    return path


def is_exploration_candidate(graph: OrderedThetaGraph, u: int, v: int, t: int) -> bool:
    if not (u < v <= t):
        return False
    if u == 1:
        return True
    pv = graph.point(v)
    return cone_index(pv, graph.point(u), graph.k) == cone_index(pv, graph.point(1), graph.k)


def exploration_space(graph: OrderedThetaGraph, t: int) -> set[int]:
    """Least fixpoint of candidate expansion starting from vertex 1."""
    space = {1}
    frontier = [1]
    while frontier:
        u = frontier.pop()
        for v in graph.neighbour_ids(u):
            if v not in space and is_exploration_candidate(graph, u, v, t):
                space.add(v)
                frontier.append(v)
    return space
