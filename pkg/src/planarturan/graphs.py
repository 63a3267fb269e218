"""Immutable simple undirected graphs with vertices labeled 0..n-1.

Every operation returns a new graph; nothing here mutates.  Adjacency is
kept twice: as sorted neighbor tuples (stable iteration, goldens) and as
per-vertex integer bitmasks (fast set algebra in the search code).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph, value-semantic and immutable.

    Vertices are 0..n-1.  No self-loops, no parallel edges.  Derived data
    (canonical code) is cached lazily; caching is not observable.
    """

    __slots__ = ("n", "_adj", "_masks", "_code")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._adj = tuple(tuple(_bits(m)) for m in masks)
        self._code: bytes | None = None

    # ------------------------------------------------------------------
    # basic accessors
    # ------------------------------------------------------------------

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self._masks[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def degree_profile(self) -> dict[int, int]:
        """Map degree -> number of vertices with that degree."""
        return dict(sorted(Counter(len(a) for a in self._adj).items()))

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    # ------------------------------------------------------------------
    # edits (all return new graphs)
    # ------------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges() + [(u, v)])

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        e = (min(u, v), max(u, v))
        return Graph(self.n, [f for f in self.edges() if f != e])

    def delete_vertex(self, v: int) -> Graph:
        """Remove v; remaining labels compact to 0..n-2 preserving order."""
        self._check_vertex(v)
        return self.delete_vertices([v])

    def delete_vertices(self, vs: Iterable[int]) -> Graph:
        drop = set(vs)
        for v in drop:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in drop]
        newid = {v: i for i, v in enumerate(keep)}
        edges = [(newid[u], newid[v]) for u, v in self.edges()
                 if u not in drop and v not in drop]
        return Graph(len(keep), edges)

    def add_vertex(self, adjacent_to: Iterable[int] = ()) -> Graph:
        """Append a vertex with index n, joined to the given vertices."""
        nbrs = sorted(set(adjacent_to))
        for v in nbrs:
            self._check_vertex(v)
        return Graph(self.n + 1, self.edges() + [(v, self.n) for v in nbrs])

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """G[S], relabeled to 0..|S|-1 in increasing original order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        newid = {v: i for i, v in enumerate(keep)}
        edges = [(newid[u], newid[v]) for u, v in self.edges()
                 if u in newid and v in newid]
        return Graph(len(keep), edges)

    def neighborhood_subgraph(self, v: int) -> Graph:
        """Induced subgraph on the open neighborhood N(v)."""
        self._check_vertex(v)
        return self.induced_subgraph(self._adj[v])

    def relabel(self, perm: list[int]) -> Graph:
        """Apply permutation perm (old label -> new label)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    # ------------------------------------------------------------------
    # connectivity
    # ------------------------------------------------------------------

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            stack = [s]
            while stack:
                u = stack.pop()
                fresh = self._masks[u] & ~comp
                comp |= fresh
                stack.extend(_bits(fresh))
            seen |= comp
            out.append(list(_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # ------------------------------------------------------------------
    # dunder plumbing
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


# ----------------------------------------------------------------------
# primitive families
# ----------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(t: int) -> Graph:
    """The star with t leaves; the hub is vertex 0."""
    if t < 1:
        raise ValueError("a star needs at least 1 leaf")
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


PRIMITIVES = {
    "empty": empty_graph,
    "complete": complete_graph,
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
}


def build_primitive(kind: str, size: int) -> Graph:
    """Dispatch by name; used by the command line front-end."""
    try:
        builder = PRIMITIVES[kind]
    except KeyError:
        raise ValueError(f"unknown primitive kind {kind!r}") from None
    return builder(size)


# ----------------------------------------------------------------------
# combination operators
# ----------------------------------------------------------------------

def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint copies plus every edge between the two parts.

    Vertices of g keep their labels; vertices of h are shifted by |g|.
    """
    off = g.n
    edges = g.edges()
    edges += [(u + off, v + off) for u, v in h.edges()]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()])


def copies(t: int, g: Graph) -> Graph:
    """Disjoint union of t copies of g."""
    if t < 1:
        raise ValueError("need at least one copy")
    out = g
    for _ in range(t - 1):
        out = disjoint_union(out, g)
    return out
