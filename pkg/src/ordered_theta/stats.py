"""Summary statistics for a built graph."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .algorithms import ROUTERS, make_router
from .builder import OrderedThetaGraph
from .engine import run
from .oracles import bfs_hops, dijkstra


@dataclass
class StatsReport:
    n: int
    m: int
    k: int
    max_degree: int
    diameter: int
    max_stretch: float
    pairs: int
    router_success: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def sample_pairs(n: int, count: int, seed: int = 0) -> list[tuple[int, int]]:
    if n < 2:
        return []
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        s, t = (int(v) for v in rng.integers(1, n + 1, size=2))
        if s != t:
            out.append((s, t))
    return out


def compute_stats(graph: OrderedThetaGraph, pairs: int = 100, seed: int = 0) -> StatsReport:
    diameter = max((max(bfs_hops(graph, v).values()) for v in range(1, graph.n + 1)), default=0)
    sampled = sample_pairs(graph.n, pairs, seed)
    stretch = 1.0
    success = {name: 0 for name in ROUTERS}
    for s, t in sampled:
        ps, pt = graph.point(s), graph.point(t)
        d, _ = dijkstra(graph, s, t)
        stretch = max(stretch, d / math.hypot(ps.x - pt.x, ps.y - pt.y))
        for name in ROUTERS:
            success[name] += run(graph, make_router(name), s, t).arrived
    return StatsReport(
        n=graph.n,
        m=graph.m,
        k=graph.k,
        max_degree=max((graph.degree(v) for v in range(1, graph.n + 1)), default=0),
        diameter=diameter,
        max_stretch=stretch,
        pairs=len(sampled),
        router_success=success,
    )
