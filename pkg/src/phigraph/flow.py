"""Dinic max-flow and bounded-outdegree (Hakimi) orientations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph


class FlowNetwork:
    """Directed network with integer capacities, stored as paired residual arcs.

    Arc ``2*i`` is the i-th arc added; arc ``2*i + 1`` is its reverse.
    """

    def __init__(self, num_nodes: int, source: int, sink: int) -> None:
        if source == sink:
            raise ValueError("source and sink must differ")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.head: list[int] = []
        self.cap: list[int] = []
        self.residual: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError(f"negative capacity {capacity} on arc {u}->{v}")
        idx = len(self.head) // 2
        self.head += [v, u]
        self.cap += [capacity, 0]
        self.residual += [capacity, 0]
        self.out[u].append(2 * idx)
        self.out[v].append(2 * idx + 1)
        return idx

    @property
    def num_arcs(self) -> int:
        return len(self.head) // 2

    def tail(self, arc: int) -> int:
        return self.head[arc ^ 1]

    def flow(self, arc: int) -> int:
        """Flow currently on forward arc number ``arc`` (as returned by add_arc)."""
        return self.cap[2 * arc] - self.residual[2 * arc]

    def _levels(self) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[self.source] = 0
        q = deque([self.source])
        while q:
            u = q.popleft()
            for a in self.out[u]:
                v = self.head[a]
                if self.residual[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[self.sink] >= 0 else None

    def _blocking_flow(self, level: list[int]) -> int:
        # Iterative DFS with current-arc pointers; recursion depth would be
        # bounded only by the sink's BFS level.
        ptr = [0] * self.num_nodes
        total = 0
        s, t = self.source, self.sink
        while True:
            path: list[int] = []
            u = s
            while u != t:
                arcs = self.out[u]
                advanced = False
                while ptr[u] < len(arcs):
                    a = arcs[ptr[u]]
                    v = self.head[a]
                    if self.residual[a] > 0 and level[v] == level[u] + 1:
                        path.append(a)
                        u = v
                        advanced = True
                        break
                    ptr[u] += 1
                if not advanced:
                    if u == s:
                        return total
                    # dead end: retreat and skip the arc that led here
                    level[u] = -1
                    a = path.pop()
                    u = self.head[a ^ 1]
                    ptr[u] += 1
            push = min(self.residual[a] for a in path)
            for a in path:
                self.residual[a] -= push
                self.residual[a ^ 1] += push
            total += push

    def max_flow(self) -> int:
        value = 0
        while (level := self._levels()) is not None:
            value += self._blocking_flow(level)
        return value

    def source_side(self) -> set[int]:
        """Nodes reachable from the source in the residual network (a min cut after max_flow)."""
        seen = {self.source}
        stack = [self.source]
        while stack:
            u = stack.pop()
            for a in self.out[u]:
                v = self.head[a]
                if self.residual[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


@dataclass(frozen=True)
class FlowResult:
    value: int
    flows: tuple[int, ...]


def max_flow(net: FlowNetwork) -> FlowResult:
    value = net.max_flow()
    return FlowResult(value, tuple(net.flow(i) for i in range(net.num_arcs)))


@dataclass(frozen=True)
class Orientation:
    """Direction for every edge of ``host``; ``arcs[j]`` is (tail, head) for ``host.edges[j]``."""

    host: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.arcs) != self.host.m:
            raise ValueError("orientation must direct every edge exactly once")
        for (t, h), (u, v) in zip(self.arcs, self.host.edges):
            if (min(t, h), max(t, h)) != (u, v):
                raise ValueError(f"arc {t}->{h} does not match edge {u}-{v}")

    @property
    def outdeg(self) -> list[int]:
        out = [0] * self.host.n
        for t, _ in self.arcs:
            out[t] += 1
        return out

    @property
    def indeg(self) -> list[int]:
        inn = [0] * self.host.n
        for _, h in self.arcs:
            inn[h] += 1
        return inn

    def max_outdegree(self) -> int:
        return max(self.outdeg, default=0)

    def format(self) -> str:
        return "".join(f"{t} -> {h}\n" for t, h in self.arcs)


def verify_orientation(o: Orientation, k: int) -> bool:
    return all(d <= k for d in o.outdeg)


def orient_bounded_outdegree(g: Graph, k: int) -> Orientation | None:
    """Orientation of ``g`` with every outdegree at most ``k``, or None if none exists.

    Network: source -> edge node (cap 1), edge node -> both endpoints (cap 1),
    vertex -> sink (cap k). The endpoint that absorbs the edge's unit becomes
    the tail.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    m, n = g.m, g.n
    if m == 0:
        return Orientation(g, ())
    source, sink = m + n, m + n + 1
    net = FlowNetwork(m + n + 2, source, sink)
    to_first: list[int] = []
    for j, (u, v) in enumerate(g.edges):
        net.add_arc(source, j, 1)
        to_first.append(net.add_arc(j, m + u, 1))
        net.add_arc(j, m + v, 1)
    for v in range(n):
        if g.degree[v]:
            net.add_arc(m + v, sink, k)
    if net.max_flow() < m:
        return None
    tails = [u if net.flow(to_first[j]) else v for j, (u, v) in enumerate(g.edges)]
    _lex_min_outdegrees(g, tails, k)
    arcs = tuple((t, u + v - t) for t, (u, v) in zip(tails, g.edges))
    return Orientation(g, arcs)


def _lex_min_outdegrees(g: Graph, tails: list[int], k: int) -> None:
    """Rewrite ``tails`` in place so the outdegree vector is lexicographically minimal.

    For v = 0, 1, ... reverse directed paths from v to any later vertex with
    spare capacity; vertices before v keep their outdegree because a path only
    changes the outdegree of its endpoints.
    """
    out_edges: list[set[int]] = [set() for _ in range(g.n)]
    for j, t in enumerate(tails):
        out_edges[t].add(j)
    outdeg = [len(s) for s in out_edges]
    for v in range(g.n):
        while outdeg[v]:
            via = {v: -1}
            q = deque([v])
            target = -1
            while q and target < 0:
                x = q.popleft()
                for j in sorted(out_edges[x]):
                    a, b = g.edges[j]
                    y = a + b - x
                    if y in via:
                        continue
                    via[y] = j
                    if y > v and outdeg[y] < k:
                        target = y
                        break
                    q.append(y)
            if target < 0:
                break
            y = target
            while y != v:
                j = via[y]
                a, b = g.edges[j]
                x = a + b - y
                out_edges[x].remove(j)
                out_edges[y].add(j)
                tails[j] = y
                y = x
            outdeg[v] -= 1
            outdeg[target] += 1


def pseudoarboricity(g: Graph) -> int:
    """Smallest k admitting an orientation with outdegree <= k (0 for edgeless graphs)."""
    if g.m == 0:
        return 0
    lo = max(1, -(-g.m // g.n))
    hi = g.max_degree()
    while lo < hi:
        mid = (lo + hi) // 2
        if orient_bounded_outdegree(g, mid) is None:
            lo = mid + 1
        else:
            hi = mid
    return lo
