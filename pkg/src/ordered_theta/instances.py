"""Generators for adversarial and random inputs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .builder import OrderedThetaGraph, build, validate_general_position
from .errors import EpsilonSearchFailed, RetryLimitExceeded
from .geometry import Point
from .oracles import connected

DEFAULT_KS = tuple(range(2, 13))
MAX_HALVINGS = 60


def make_fig3() -> list[Point]:
    """Three points where v3 sits in an empty cone of v1 (k = 4)."""
    return [Point(0.0, 0.0), Point(2.0, 1.0), Point(1.0, 3.0)]


def make_backtrack_demo() -> list[Point]:
    """The three-point instance plus a fourth vertex west of v1; reaching it from v1 needs two backtracks."""
    return make_fig3() + [Point(-2.0, 1.0)]


@dataclass(frozen=True)
class LRPair:
    left: list[Point]
    right: list[Point]
    h: int
    k: int
    epsilon: float

    @property
    def source(self) -> int:
        return 1

    @property
    def target(self) -> int:
        return 2 * self.h + 3

    def graphs(self) -> tuple[OrderedThetaGraph, OrderedThetaGraph]:
        return build(self.left, self.k), build(self.right, self.k)


def lr_points(h: int, k: int, epsilon: float, side: int) -> list[Point]:
    """Point list of the left (``side=-1``) or right (``side=+1``) witness graph."""
    theta = 2.0 * math.pi / k
    pts = [Point(0.0, 0.0)]
    for i in range(1, h + 1):
        pts.append(Point(i / h, -i * epsilon))
        pts.append(Point(-i / h, -i * epsilon))
    pts.append(Point(2.0 * side, -2 * h * epsilon))
    pts.append(Point(0.0, -2.0 / math.tan(theta / 2.0) - 3 * h * epsilon))
    return pts


def _is_simple_path(graph: OrderedThetaGraph) -> bool:
    return (
        graph.m == graph.n - 1
        and connected(graph)
        and all(graph.degree(v) <= 2 for v in range(1, graph.n + 1))
    )


def _lr_valid(left: list[Point], right: list[Point], k: int) -> bool:
    for pts in (left, right):
        if not validate_general_position(pts, k).ok:
            return False
        if not _is_simple_path(build(pts, k)):
            return False
    return True


def make_lr(h: int, k: int) -> LRPair:
    """Build the pair of witness graphs that no memoryless ``h``-local router can tell apart.

    ``epsilon = 0`` is tried first, then ``1/(100h)`` halved until both
    point lists are in general position and build to simple paths.
    """
    if h < 1 or k < 2:
        raise ValueError(f"need h >= 1 and k >= 2, got h={h}, k={k}")
    eps0 = 1.0 / (100 * h)
    for eps in [0.0] + [eps0 * 2.0**-j for j in range(MAX_HALVINGS + 1)]:
        left = lr_points(h, k, eps, -1)
        right = lr_points(h, k, eps, +1)
        if _lr_valid(left, right, k):
            return LRPair(left, right, h, k, eps)
    raise EpsilonSearchFailed(f"no epsilon validates the witness pair for h={h}, k={k}")


def random_points(
    n: int, seed: int, retry_limit: int = 100, ks: Iterable[int] = DEFAULT_KS
) -> list[Point]:
    """``n`` uniform points in the unit square, in general position for every k in ``ks``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ks = tuple(ks)
    rng = np.random.default_rng(seed)
    for _ in range(max(1, retry_limit)):
        arr = rng.random((n, 2))
        pts = [Point(float(x), float(y)) for x, y in arr]
        if all(validate_general_position(pts, k).ok for k in ks):
            return pts
    raise RetryLimitExceeded(f"no valid sample of {n} points after {retry_limit} attempts")
