"""Cone indexing, bisector projections and angular ordering.

Cones around an apex have aperture ``2*pi/k``.  Cone 0 is bisected by the
upward vertical half-line and indices increase clockwise.  All predicates
work in double precision; points that fall within ``tol`` radians of a cone
boundary ray are reported as degenerate instead of being silently binned.
``tol=None`` skips that check and bins half-open by the floor of the shifted
bearing; the routing heuristics use it for destination directions, which
general position does not cover.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional, Sequence

from .errors import DegeneratePosition, IdenticalPoints

TWO_PI = 2.0 * math.pi
DEFAULT_TOL = 1e-12

PointLike = Sequence[float]


class Point(NamedTuple):
    x: float
    y: float


def aperture(k: int) -> float:
    """Angular width of one cone."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return TWO_PI / k


def _offset(apex: PointLike, target: PointLike) -> tuple[float, float]:
    dx = float(target[0]) - float(apex[0])
    dy = float(target[1]) - float(apex[1])
    if dx == 0.0 and dy == 0.0:
        raise IdenticalPoints(f"apex and target coincide at ({apex[0]}, {apex[1]})")
    return dx, dy


def _cone_of_offset(dx: float, dy: float, k: int, tol: Optional[float]) -> int:
    theta = aperture(k)
    # clockwise bearing from north
    phi = math.atan2(dx, dy)
    if phi < 0.0:
        phi += TWO_PI
    shifted = phi + 0.5 * theta
    idx = math.floor(shifted / theta)
    rem = shifted - idx * theta
    if tol is not None and min(rem, theta - rem) <= tol:
        raise DegeneratePosition(
            f"offset ({dx}, {dy}) lies on a boundary ray of a {k}-cone partition"
        )
    return idx % k


def cone_index(apex: PointLike, target: PointLike, k: int, tol: Optional[float] = DEFAULT_TOL) -> int:
    """Index of the cone of ``apex`` that strictly contains ``target``."""
    dx, dy = _offset(apex, target)
    return _cone_of_offset(dx, dy, k, tol)


def bisector(i: int, k: int) -> tuple[float, float]:
    """Unit vector along the bisector of cone ``i``."""
    b = i * aperture(k)
    return math.sin(b), math.cos(b)


def cone_and_projection(
    apex: PointLike, target: PointLike, k: int, tol: Optional[float] = DEFAULT_TOL
) -> tuple[int, float]:
    dx, dy = _offset(apex, target)
    i = _cone_of_offset(dx, dy, k, tol)
    bx, by = bisector(i, k)
    return i, dx * bx + dy * by


def projection_distance(
    apex: PointLike, target: PointLike, k: int, tol: Optional[float] = DEFAULT_TOL
) -> float:
    """Distance from ``apex`` to the projection of ``target`` on its cone bisector."""
    return cone_and_projection(apex, target, k, tol)[1]


def in_canonical_triangle(
    u: PointLike, v: PointLike, w: PointLike, k: int, tol: Optional[float] = DEFAULT_TOL
) -> bool:
    """Whether ``w`` lies in the canonical triangle of ``u`` defined by ``v``.

    The triangle is closed on the side opposite the apex.
    """
    cv, dv = cone_and_projection(u, v, k, tol)
    cw, dw = cone_and_projection(u, w, k, tol)
    return cw == cv and dw <= dv


def angle_from_east(u: PointLike, v: PointLike) -> float:
    """Counter-clockwise angle of ``u -> v`` from the positive x axis, in [0, 2*pi)."""
    dx, dy = _offset(u, v)
    a = math.atan2(dy, dx)
    if a < 0.0:
        a += TWO_PI
        if a >= TWO_PI:
            a = 0.0
    return a
