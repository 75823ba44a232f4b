"""Simple undirected graphs with dense integer vertex ids, plus edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph would violate the simple-graph invariants."""


class GraphFormatError(GraphError):
    """Raised for a malformed edge-list document."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored normalized (``u < v``) and sorted, so iteration order
    is deterministic regardless of how the graph was built.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degree: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        seen: set[tuple[int, int]] = set()
        deg = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = _normalize(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            deg[u] += 1
            deg[v] += 1
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "degree", tuple(deg))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> Graph:
        pairs = [(int(u), int(v)) for u, v in edges]
        if n is None:
            n = 1 + max((max(e) for e in pairs), default=-1)
        return cls(n, tuple(pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def is_regular(self) -> bool:
        return len(set(self.degree)) <= 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()


def degree_sequence(g: Graph) -> list[int]:
    return list(g.degree)


def vertex_set(g: Graph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Validate ``vertices`` against ``g`` and return them sorted, deduplicated."""
    s = sorted(set(vertices))
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
    return tuple(s)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled to ``0..|s|-1`` in sorted order."""
    s = vertex_set(g, vertices)
    index = {v: i for i, v in enumerate(s)}
    edges = tuple(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(s), edges)


def from_edge_list(text: str) -> Graph:
    """Parse the whitespace-separated edge-list format.

    Blank lines and ``#`` comments are skipped. The first content line may be
    ``n <count>`` to declare isolated trailing vertices.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_content and parts[0] == "n":
            first_content = False
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"bad vertex-count header {line!r}", lineno)
            declared = int(parts[1])
            continue
        first_content = False
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise GraphFormatError(f"expected two nonnegative integers, got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = _normalize(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first seen at line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    n = 1 + max((v for _, v in edges), default=-1)
    if declared is not None:
        if declared < n:
            raise GraphFormatError(f"declared n={declared} but vertex id {n - 1} present")
        n = declared
    return Graph(n, tuple(edges))


def to_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize ``g``; the ``n`` header is always written so isolated vertices survive."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh.read())
