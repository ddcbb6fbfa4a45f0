"""Routing engine enforcing the 1-local, constant-memory contract.

A router only ever receives a :class:`LocalView` (current vertex, its
neighbours in counter-clockwise order, the destination and ``k``) together
with the :class:`RoutingMemory` header it returned on the previous step.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional, Protocol

from .builder import Neighbour, OrderedThetaGraph, Vertex
from .errors import IllegalMove, MemoryOverflow

MAX_MEMORY_WORDS = 8


class Phase(str, enum.Enum):
    DOWN = "down"
    UP = "up"


class HopKind(str, enum.Enum):
    DOWN = "down"
    EXPLORE = "explore"
    BACKTRACK = "backtrack"
    THETA = "theta"


class Result(str, enum.Enum):
    ARRIVED = "arrived"
    STUCK = "stuck"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class LocalView:
    k: int
    current: Vertex
    destination: Vertex
    neighbours: tuple[Neighbour, ...]

    def neighbour(self, vid: int) -> Optional[Neighbour]:
        for nb in self.neighbours:
            if nb.id == vid:
                return nb
        return None


@dataclass(frozen=True)
class RoutingMemory:
    """Header carried with the message.

    Word accounting: the phase and the state bit take one word each, a stored
    vertex takes three (id, x, y).
    """

    phase: Phase = Phase.DOWN
    v1: Optional[Vertex] = None
    prev: Optional[Vertex] = None
    state: int = 1

    def words(self) -> int:
        return 2 + (3 if self.v1 is not None else 0) + (3 if self.prev is not None else 0)

    def evolve(self, **changes) -> "RoutingMemory":
        return replace(self, **changes)


class Step(NamedTuple):
    """A router's decision. ``next_id`` is None when the router is stuck."""

    next_id: Optional[int]
    kind: HopKind
    memory: RoutingMemory
    verifications: int = 0


class Router(Protocol):
    name: str

    def step(self, view: LocalView, memory: RoutingMemory) -> Step: ...


class Hop(NamedTuple):
    frm: int
    to: int
    kind: HopKind


@dataclass
class Trace:
    source: int
    target: int
    hops: list[Hop] = field(default_factory=list)
    result: Result = Result.ARRIVED
    candidate_verifications: int = 0
    peak_memory_words: int = 0
    stuck_at: Optional[int] = None

    @property
    def hop_count(self) -> int:
        return len(self.hops)

    @property
    def arrived(self) -> bool:
        return self.result is Result.ARRIVED

    def vertices(self) -> list[int]:
        return [self.source] + [h.to for h in self.hops]

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "result": self.result.value,
            "hops": [{"from": h.frm, "to": h.to, "kind": h.kind.value} for h in self.hops],
            "counters": {
                "hops": self.hop_count,
                "candidate_verifications": self.candidate_verifications,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Trace":
        hops = [Hop(int(h["from"]), int(h["to"]), HopKind(h["kind"])) for h in data["hops"]]
        counters = data.get("counters", {})
        return cls(
            source=int(data["source"]),
            target=int(data["target"]),
            hops=hops,
            result=Result(data["result"]),
            candidate_verifications=int(counters.get("candidate_verifications", 0)),
        )


def local_view(graph: OrderedThetaGraph, current: int, target: int) -> LocalView:
    return LocalView(
        k=graph.k,
        current=graph.vertex(current),
        destination=graph.vertex(target),
        neighbours=graph.neighbours(current),
    )


def default_budget(graph: OrderedThetaGraph) -> int:
    return 4 * graph.n


def run(
    graph: OrderedThetaGraph,
    router: Router,
    s: int,
    t: int,
    budget: Optional[int] = None,
) -> Trace:
    """Route a message from ``s`` to ``t`` with ``router``.

    Stops on arrival, when the router declares itself stuck, or after
    ``budget`` hops (default ``4 * n``).
    """
    for vid in (s, t):
        if not 1 <= vid <= graph.n:
            raise ValueError(f"vertex id {vid} out of range 1..{graph.n}")
    if budget is None:
        budget = default_budget(graph)
    if budget < 0:
        raise ValueError("budget must be non-negative")

    trace = Trace(source=s, target=t)
    memory = RoutingMemory()
    trace.peak_memory_words = memory.words()
    current = s
    while current != t:
        if trace.hop_count >= budget:
            trace.result = Result.BUDGET_EXHAUSTED
            return trace
        view = local_view(graph, current, t)
        step = router.step(view, memory)
        trace.candidate_verifications += step.verifications
        if step.next_id is None:
            trace.result = Result.STUCK
            trace.stuck_at = current
            return trace
        if view.neighbour(step.next_id) is None:
            raise IllegalMove(
                f"{router.name} forwarded from v{current} to non-neighbour v{step.next_id}"
            )
        words = step.memory.words()
        if words > MAX_MEMORY_WORDS:
            raise MemoryOverflow(f"{router.name} carries {words} words (limit {MAX_MEMORY_WORDS})")
        trace.peak_memory_words = max(trace.peak_memory_words, words)
        trace.hops.append(Hop(current, step.next_id, step.kind))
        memory = step.memory
        current = step.next_id
    trace.result = Result.ARRIVED
    return trace


@dataclass(frozen=True)
class Neighbourhood:
    """Induced subgraph around a centre vertex."""

    centre: int
    vertices: dict[int, tuple[float, float]]
    edges: frozenset[tuple[int, int]]


def h_neighbourhood(graph: OrderedThetaGraph, u: int, h: int) -> Neighbourhood:
    """All vertices within ``h`` hops of ``u`` and the edges they induce."""
    if h < 0:
        raise ValueError("h must be non-negative")
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] == h:
            continue
        for nb in graph.neighbours(x):
            if nb.id not in dist:
                dist[nb.id] = dist[x] + 1
                queue.append(nb.id)
    verts = {v: tuple(graph.point(v)) for v in dist}
    edges = frozenset(
        (a, nb.id) for a in dist for nb in graph.neighbours(a) if a < nb.id and nb.id in dist
    )
    return Neighbourhood(u, verts, edges)


def views_equal(a: Neighbourhood, b: Neighbourhood) -> bool:
    return a.vertices == b.vertices and a.edges == b.edges
