"""Forbidden-pattern detection: subgraph (not induced) containment.

Every pattern of interest here is either an explicit graph or a cone
K_1 + X over a small graph X, which makes the hub reduction the workhorse:
K_1 + X sits inside G exactly when some vertex v has a copy of X inside
the induced neighborhood graph G[N(v)].  The generic backtracking search
stays available as the semantic reference for all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, _bits, complete_graph, copies, cycle_graph, join, path_graph, star_graph
from .matching import max_matching, maximum_matching_edges

DEFAULT_GUARD = 16


class PatternGuardError(ValueError):
    """A path/cycle search was asked to run on too large a graph."""


# ----------------------------------------------------------------------
# pattern specifications
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Wheel:
    """K_1 + C_k."""
    k: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("wheel rim needs at least 3 vertices")


@dataclass(frozen=True)
class Star:
    """K_{1,t}."""
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("star needs at least 1 leaf")


@dataclass(frozen=True)
class Fan:
    """K_1 + t copies of K_{r-1}; the (t, r)-fan."""
    t: int
    r: int = 3

    def __post_init__(self):
        if self.t < 2 or self.r < 2:
            raise ValueError("fan requires t >= 2 and r >= 2")


@dataclass(frozen=True)
class ConePath:
    """K_1 + P_t."""
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("cone path needs t >= 1")


@dataclass(frozen=True)
class ConeGraph:
    """K_1 + H for a linear forest H (disjoint union of paths)."""
    forest: Graph

    def __post_init__(self):
        if not is_linear_forest(self.forest):
            raise ValueError("cone base must be a disjoint union of paths")


@dataclass(frozen=True)
class Explicit:
    graph: Graph


PatternSpec = Wheel | Star | Fan | ConePath | ConeGraph | Explicit


def is_linear_forest(g: Graph) -> bool:
    if g.max_degree() > 2:
        return False
    # degree <= 2 and acyclic <=> every component has e = n - 1 or is a point
    for comp in g.components():
        e = sum(g.degree(v) for v in comp) // 2
        if e >= len(comp):
            return False
    return True


@lru_cache(maxsize=None)
def realize(spec: PatternSpec) -> Graph:
    """The pattern as an explicit graph (hub of a cone gets label 0)."""
    if isinstance(spec, Wheel):
        return join(complete_graph(1), cycle_graph(spec.k))
    if isinstance(spec, Star):
        return star_graph(spec.t)
    if isinstance(spec, Fan):
        return join(complete_graph(1), copies(spec.t, complete_graph(spec.r - 1)))
    if isinstance(spec, ConePath):
        return join(complete_graph(1), path_graph(spec.t))
    if isinstance(spec, ConeGraph):
        return join(complete_graph(1), spec.forest)
    if isinstance(spec, Explicit):
        return spec.graph
    raise TypeError(f"not a pattern spec: {spec!r}")


def pattern_name(spec: PatternSpec) -> str:
    if isinstance(spec, Wheel):
        return f"wheel:{spec.k}"
    if isinstance(spec, Star):
        return f"star:{spec.t}"
    if isinstance(spec, Fan):
        return f"fan:{spec.t},{spec.r}"
    if isinstance(spec, ConePath):
        return f"conepath:{spec.t}"
    if isinstance(spec, ConeGraph):
        return f"cone:{'+'.join(str(len(c)) for c in spec.forest.components())}"
    return f"explicit:{spec.graph.n}v{spec.graph.edge_count}e"


# ----------------------------------------------------------------------
# matches
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Match:
    """An injective map pattern-vertex -> host-vertex preserving edges."""

    pattern: Graph
    mapping: tuple[int, ...]

    def verify(self, host: Graph) -> bool:
        m = self.mapping
        if len(m) != self.pattern.n or len(set(m)) != len(m):
            return False
        if any(not (0 <= v < host.n) for v in m):
            return False
        return all(host.has_edge(m[u], m[v]) for u, v in self.pattern.edges())


# ----------------------------------------------------------------------
# generic monomorphism search
# ----------------------------------------------------------------------

def _degree_dominates(host: Graph, pat: Graph) -> bool:
    hd = sorted((host.degree(v) for v in range(host.n)), reverse=True)
    pd = sorted((pat.degree(v) for v in range(pat.n)), reverse=True)
    return all(h >= p for h, p in zip(hd, pd))


def _mono_order(pat: Graph, lex: bool) -> list[int]:
    if lex or pat.n == 0:
        return list(range(pat.n))
    # greedy: start at max degree, then most-connected-to-placed first
    order = [max(range(pat.n), key=lambda v: (pat.degree(v), -v))]
    placed = {order[0]}
    while len(order) < pat.n:
        best = None
        key = None
        for v in range(pat.n):
            if v in placed:
                continue
            back = sum(1 for u in pat.neighbors(v) if u in placed)
            k = (back, pat.degree(v), -v)
            if key is None or k > key:
                key = k
                best = v
        order.append(best)
        placed.add(best)
    return order


def _find_monomorphism(host_masks: tuple[int, ...], host_n: int,
                       pat: Graph, lex: bool) -> list[int] | None:
    k = pat.n
    if k > host_n:
        return None
    order = _mono_order(pat, lex)
    host_deg = [host_masks[v].bit_count() for v in range(host_n)]
    full = (1 << host_n) - 1
    image = [-1] * k
    pat_deg = [pat.degree(v) for v in range(k)]

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        pv = order[i]
        cand = full & ~used
        for pu in pat.neighbors(pv):
            img = image[pu]
            if img >= 0:
                cand &= host_masks[img]
        need = pat_deg[pv]
        for hv in _bits(cand):
            if host_deg[hv] < need:
                continue
            image[pv] = hv
            if rec(i + 1, used | (1 << hv)):
                return True
        image[pv] = -1
        return False

    if rec(0, 0):
        return image
    return None


def contains_subgraph(host: Graph, pattern: Graph) -> Match | None:
    """A Match witnessing pattern ⊆ host (not induced), or None.

    When several embeddings exist the returned mapping is the
    lexicographically smallest vertex map.
    """
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return None
    if not _degree_dominates(host, pattern):
        return None
    # fast existence probe first, lex-minimal map only when one exists
    if _find_monomorphism(host._masks, host.n, pattern, lex=False) is None:
        return None
    image = _find_monomorphism(host._masks, host.n, pattern, lex=True)
    assert image is not None
    return Match(pattern, tuple(image))


# ----------------------------------------------------------------------
# searches inside a vertex subset (bitmask) of a host graph
# ----------------------------------------------------------------------

def _cycle_in_mask(masks, mask: int, k: int, guard: int) -> list[int] | None:
    """Vertices of a k-cycle inside the induced subgraph on `mask`."""
    members = list(_bits(mask))
    if len(members) < k:
        return None
    if k == 3:
        for x in members:
            mx = masks[x] & mask
            for y in _bits(mx):
                if y <= x:
                    continue
                common = mx & masks[y] & mask
                if common:
                    z = (common & -common).bit_length() - 1
                    return [x, y, z]
        return None
    if k == 4:
        # opposite corners are two vertices with two common neighbors
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                common = masks[x] & masks[y] & mask & ~(1 << x) & ~(1 << y)
                if common.bit_count() >= 2:
                    c1 = (common & -common).bit_length() - 1
                    rest = common ^ (1 << c1)
                    c2 = (rest & -rest).bit_length() - 1
                    return [x, c1, y, c2]
        return None
    if len(members) > guard:
        raise PatternGuardError(
            f"cycle search on {len(members)} vertices exceeds guard {guard}")

    # DFS for longer cycles; the smallest cycle vertex anchors the search
    def extend(start: int, path: list[int], used: int) -> list[int] | None:
        if len(path) == k:
            return path[:] if masks[path[-1]] >> start & 1 else None
        for w in _bits(masks[path[-1]] & mask & ~used):
            if w <= start:
                continue
            path.append(w)
            got = extend(start, path, used | (1 << w))
            if got:
                return got
            path.pop()
        return None

    for s in members:
        got = extend(s, [s], 1 << s)
        if got:
            return got
    return None


def _path_in_mask(masks, mask: int, t: int, guard: int) -> list[int] | None:
    """Vertices of a path on t vertices inside the induced subgraph."""
    members = list(_bits(mask))
    if len(members) < t:
        return None
    if t == 1:
        return [members[0]]
    if len(members) > guard:
        raise PatternGuardError(
            f"path search on {len(members)} vertices exceeds guard {guard}")

    def extend(path: list[int], used: int) -> list[int] | None:
        if len(path) == t:
            return path[:]
        for w in _bits(masks[path[-1]] & mask & ~used):
            path.append(w)
            got = extend(path, used | (1 << w))
            if got:
                return got
            path.pop()
        return None

    for s in members:
        got = extend([s], 1 << s)
        if got:
            return got
    return None


def _disjoint_edges_in_mask(masks, mask: int, t: int) -> list[int] | None:
    """2t vertices of t pairwise disjoint edges, or None."""
    sub = _induced(masks, mask)
    edges = maximum_matching_edges(sub[0])
    if len(edges) < t:
        return None
    back = sub[1]
    out = []
    for u, v in edges[:t]:
        out.extend((back[u], back[v]))
    return out


def _disjoint_cliques_in_mask(masks, mask: int, t: int, size: int) -> list[int] | None:
    """Vertices of t pairwise disjoint K_size cliques, in clique blocks."""
    if size == 1:
        members = list(_bits(mask))
        return members[:t] if len(members) >= t else None
    if size == 2:
        return _disjoint_edges_in_mask(masks, mask, t)

    def clique_extend(base: list[int], cand: int) -> list[list[int]]:
        if len(base) == size:
            return [base[:]]
        out = []
        for w in _bits(cand):
            out.extend(clique_extend(base + [w], cand & masks[w] & ~((1 << (w + 1)) - 1)))
        return out

    def rec(avail: int, left: int, acc: list[int]) -> list[int] | None:
        if left == 0:
            return acc
        if avail.bit_count() < size * left:
            return None
        v = (avail & -avail).bit_length() - 1
        # cliques through v, then the branch where v is unused
        for cl in clique_extend([v], masks[v] & avail & ~((1 << (v + 1)) - 1)):
            got = rec(avail & ~sum(1 << x for x in cl), left - 1, acc + cl)
            if got:
                return got
        return rec(avail ^ (1 << v), left, acc)

    return rec(mask, t, [])


def _induced(masks, mask: int) -> tuple[Graph, list[int]]:
    members = list(_bits(mask))
    idx = {v: i for i, v in enumerate(members)}
    edges = []
    for v in members:
        for u in _bits(masks[v] & mask):
            if u > v:
                edges.append((idx[v], idx[u]))
    return Graph(len(members), edges), members


# ----------------------------------------------------------------------
# pattern occurrence finder (shared by freeness checks and the oracle)
# ----------------------------------------------------------------------

def find_pattern(masks: tuple[int, ...], n: int, spec: PatternSpec,
                 guard: int = DEFAULT_GUARD) -> list[int] | None:
    """One occurrence of the pattern in the graph given by bitmask rows.

    Returns the vertex images indexed by realize(spec)'s labels, or None.
    Cone patterns go through the hub reduction; Explicit uses the generic
    search.  Deterministic for fixed input.
    """
    if isinstance(spec, Star):
        for v in range(n):
            m = masks[v]
            if m.bit_count() >= spec.t:
                return [v] + list(_bits(m))[:spec.t]
        return None
    if isinstance(spec, Wheel):
        for v in range(n):
            got = _cycle_in_mask(masks, masks[v], spec.k, guard)
            if got:
                return [v] + got
        return None
    if isinstance(spec, Fan):
        for v in range(n):
            got = _disjoint_cliques_in_mask(masks, masks[v], spec.t, spec.r - 1)
            if got:
                return [v] + got
        return None
    if isinstance(spec, ConePath):
        for v in range(n):
            got = _path_in_mask(masks, masks[v], spec.t, guard)
            if got:
                return [v] + got
        return None
    if isinstance(spec, ConeGraph):
        for v in range(n):
            if masks[v].bit_count() < spec.forest.n:
                continue
            sub, back = _induced(masks, masks[v])
            image = _find_monomorphism(sub._masks, sub.n, spec.forest, lex=False)
            if image is not None:
                return [v] + [back[i] for i in image]
        return None
    if isinstance(spec, Explicit):
        pat = spec.graph
        if pat.n > n:
            return None
        return _find_monomorphism(masks, n, pat, lex=False)
    raise TypeError(f"not a pattern spec: {spec!r}")


def pattern_occurrence_edges(masks, n, spec, guard=DEFAULT_GUARD) -> list[tuple[int, int]] | None:
    """Host edges of one pattern occurrence; the oracle branches on these."""
    image = find_pattern(masks, n, spec, guard)
    if image is None:
        return None
    pat = realize(spec)
    out = []
    for u, v in pat.edges():
        a, b = image[u], image[v]
        out.append((a, b) if a < b else (b, a))
    return out


def is_pattern_free(g: Graph, spec: PatternSpec, guard: int = DEFAULT_GUARD) -> bool:
    """True iff g contains no copy of the pattern as a subgraph."""
    return find_pattern(g._masks, g.n, spec, guard) is None


def pattern_match(g: Graph, spec: PatternSpec, guard: int = DEFAULT_GUARD) -> Match | None:
    """A verifiable Match for the pattern in g, or None when g is free.

    The fast checker decides presence; the reported map is then the
    lexicographically smallest one, matching contains_subgraph.
    """
    if find_pattern(g._masks, g.n, spec, guard) is None:
        return None
    match = contains_subgraph(g, realize(spec))
    assert match is not None
    return match


# ----------------------------------------------------------------------
# small exact decision helpers used by the classifier
# ----------------------------------------------------------------------

def has_cycle_of_length(g: Graph, k: int, guard: int = DEFAULT_GUARD) -> bool:
    """Does g contain C_k as a subgraph (k >= 3)?"""
    if k < 3:
        raise ValueError("cycles have length at least 3")
    full = (1 << g.n) - 1
    return _cycle_in_mask(g._masks, full, k, guard) is not None


def has_path_on(g: Graph, t: int, guard: int = DEFAULT_GUARD) -> bool:
    """Does g contain a path on t vertices (t >= 1)?"""
    if t < 1:
        raise ValueError("paths have at least one vertex")
    full = (1 << g.n) - 1
    return _path_in_mask(g._masks, full, t, guard) is not None


def _k_colorable(g: Graph, k: int) -> bool:
    n = g.n
    colors = [-1] * n
    adj = g.adjacency
    deg = [g.degree(v) for v in range(n)]

    def rec(done: int, palette: int) -> bool:
        if done == n:
            return True
        # most saturated uncolored vertex, ties by degree
        best, key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] != -1})
            kv = (sat, deg[v])
            if key is None or kv > key:
                best, key = v, kv
        v = best
        forbidden = {colors[u] for u in adj[v]}
        limit = min(k, palette + 1)  # new colors introduced in order
        for c in range(limit):
            if c in forbidden:
                continue
            colors[v] = c
            if rec(done + 1, max(palette, c + 1)):
                return True
            colors[v] = -1
        return False

    return rec(0, 0)


def chromatic_classify(g: Graph) -> str:
    """Exact chromatic bucket: 'bipartite', '3-chromatic', '4-chromatic', '5+'."""
    if g.n > 24:
        raise ValueError("exact coloring supported only up to 24 vertices")
    if _k_colorable(g, 2):
        return "bipartite"
    if _k_colorable(g, 3):
        return "3-chromatic"
    if _k_colorable(g, 4):
        return "4-chromatic"
    return "5+"


def has_three_disjoint_cycles(g: Graph) -> bool:
    """Does g contain three pairwise vertex-disjoint cycles?"""
    if g.n > 24:
        raise ValueError("disjoint-cycle packing supported only up to 24 vertices")
    masks = g._masks

    def cycles_through(v: int, avail: int, max_len: int):
        # simple cycles through v inside avail; direction fixed by 2nd < last
        def extend(path: list[int], used: int):
            last = path[-1]
            if len(path) >= 3 and masks[last] >> v & 1 and path[1] < last:
                yield used
            if len(path) == max_len:
                return
            for w in _bits(masks[last] & avail & ~used):
                path.append(w)
                yield from extend(path, used | (1 << w))
                path.pop()

        yield from extend([v], 1 << v)

    def rec(avail: int, left: int) -> bool:
        if left == 0:
            return True
        if avail.bit_count() < 3 * left:
            return False
        v = (avail & -avail).bit_length() - 1
        if rec(avail ^ (1 << v), left):
            return True
        limit = avail.bit_count() - 3 * (left - 1)
        for used in cycles_through(v, avail, limit):
            if rec(avail & ~used, left - 1):
                return True
        return False

    return rec((1 << g.n) - 1, 3)
