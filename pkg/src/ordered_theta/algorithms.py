"""Local routing functions on ordered theta graphs.

Step functions take a :class:`~ordered_theta.engine.LocalView` and return
the id of the neighbour to forward to.  ``None`` means stuck (or, for
:func:`a_down_step`, that the current vertex is the first inserted one).

The destination and later-inserted neighbours may sit on a cone boundary of
the current vertex even for inputs in general position, so the theta steps
bin those directions half-open instead of raising.

The routers at the bottom wrap step functions for :func:`engine.run`.
"""

from __future__ import annotations

import math
from typing import Optional

from .builder import OrderedThetaGraph, Vertex
from .engine import HopKind, LocalView, Phase, RoutingMemory, Step, Trace, run
from .errors import InternalStuck
from .geometry import PointLike, cone_and_projection, cone_index


def theta_step(view: LocalView) -> Optional[int]:
    """Classic cone routing: closest neighbour in the cone containing the destination."""
    cur, dest = view.current, view.destination
    if view.neighbour(dest.id) is not None:
        return dest.id
    target_cone = cone_index(cur.point, dest.point, view.k, tol=None)
    best_id, best_d = None, math.inf
    for nb in view.neighbours:
        c, d = cone_and_projection(cur.point, nb.point, view.k, tol=None)
        if c == target_cone and d < best_d:
            best_id, best_d = nb.id, d
    return best_id


def ordered_theta_step(view: LocalView, target: Vertex) -> Optional[int]:
    """Move to ``target`` if adjacent, else to the closest earlier neighbour in its canonical triangle."""
    cur = view.current
    if view.neighbour(target.id) is not None:
        return target.id
    t_cone, t_d = cone_and_projection(cur.point, target.point, view.k, tol=None)
    best_id, best_d = None, math.inf
    for nb in view.neighbours:
        if nb.id >= cur.id:
            continue
        c, d = cone_and_projection(cur.point, nb.point, view.k)
        if c == t_cone and d <= t_d and d < best_d:
            best_id, best_d = nb.id, d
    return best_id


def a_down_step(view: LocalView) -> Optional[int]:
    """Smallest-id neighbour with an id below the current one."""
    lower = [nb.id for nb in view.neighbours if nb.id < view.current.id]
    return min(lower) if lower else None


def candidate_check(u: Vertex, v: Vertex | PointLike, t_id: int, v1: Vertex, k: int) -> bool:
    """Whether neighbour ``v`` of ``u`` is worth exploring on the way to ``t``.

    Holds iff ``id(u) < id(v) <= t_id`` and ``u`` lies in the cone of ``v``
    that contains ``v1``; equivalently, an ordered-theta step from ``v``
    towards ``v1`` would lead back to ``u``.
    """
    if not (u.id < v.id <= t_id):
        return False
    if u.id == v1.id:
        return True
    pv = (v.x, v.y)
    return cone_index(pv, u.point, k) == cone_index(pv, v1.point, k)


def a_up_step(view: LocalView, memory: RoutingMemory) -> Step:
    """One hop of the stackless depth-first exploration from ``v1`` towards the destination.

    With ``state == 1`` the sweep covers every neighbour by ascending angle
    from east.  After a backtrack (``state == 0``) it resumes strictly after
    the direction of ``memory.prev`` and stops before completing the turn.
    When no exploration candidate is left, an ordered-theta step towards
    ``v1`` returns to the vertex this one was explored from.
    """
    cur, v1 = view.current, memory.v1
    if memory.phase is not Phase.UP or v1 is None:
        raise ValueError("a_up_step needs memory in the UP phase with v1 recorded")
    t_id = view.destination.id
    resume_after = -1.0
    if memory.state == 0:
        prev_nb = view.neighbour(memory.prev.id)
        if prev_nb is None:
            raise InternalStuck(f"v{memory.prev.id} is not adjacent to v{cur.id}")
        resume_after = prev_nb.angle

    checks = 0
    for nb in view.neighbours:
        if nb.angle <= resume_after:
            continue
        checks += 1
        if candidate_check(cur, nb, t_id, v1, view.k):
            return Step(nb.id, HopKind.EXPLORE, memory.evolve(state=1), checks)

    back = ordered_theta_step(view, v1) if cur.id != v1.id else None
    if back is None:
        raise InternalStuck(f"no way to backtrack from v{cur.id} towards v{v1.id}")
    return Step(back, HopKind.BACKTRACK, memory.evolve(prev=cur, state=0), checks)


class RouterA:
    """Two-phase router: descend to ``v1``, then explore upwards."""

    name = "a"
    memoryless = False

    def step(self, view: LocalView, memory: RoutingMemory) -> Step:
        if memory.phase is Phase.DOWN:
            nxt = a_down_step(view)
            if nxt is not None:
                return Step(nxt, HopKind.DOWN, memory)
            memory = RoutingMemory(phase=Phase.UP, v1=view.current, prev=None, state=1)
        return a_up_step(view, memory)


class ThetaRouter:
    name = "theta"
    memoryless = True

    def step(self, view: LocalView, memory: RoutingMemory) -> Step:
        return Step(theta_step(view), HopKind.THETA, memory)


class OrderedThetaRouter:
    """Ordered-theta routing aimed directly at the destination."""

    name = "ordered-theta"
    memoryless = True

    def step(self, view: LocalView, memory: RoutingMemory) -> Step:
        return Step(ordered_theta_step(view, view.destination), HopKind.THETA, memory)


class GreedyRouter:
    """Forward to the neighbour closest to the destination (ties: smallest id)."""

    name = "greedy"
    memoryless = True

    def step(self, view: LocalView, memory: RoutingMemory) -> Step:
        dest = view.destination
        best = min(
            view.neighbours,
            key=lambda nb: (math.hypot(nb.x - dest.x, nb.y - dest.y), nb.id),
            default=None,
        )
        return Step(best.id if best is not None else None, HopKind.THETA, memory)


ROUTERS = {
    "a": RouterA,
    "ordered-theta": OrderedThetaRouter,
    "theta": ThetaRouter,
    "greedy": GreedyRouter,
}
MEMORYLESS_ROUTERS = ("theta", "greedy", "ordered-theta")


def make_router(name: str):
    try:
        return ROUTERS[name]()
    except KeyError:
        raise ValueError(f"unknown router {name!r}; choose from {sorted(ROUTERS)}") from None


def route_a(graph: OrderedThetaGraph, s: int, t: int, budget: Optional[int] = None) -> Trace:
    return run(graph, RouterA(), s, t, budget)
