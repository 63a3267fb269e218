"""Ground truth by exhaustive search.

Three pillars:

* a census of plane triangulations up to isomorphism, generated by
  vertex splitting (the inverse of contracting a contractible edge, which
  every simple triangulation on >= 5 vertices has), deduplicated with
  canonical codes and cached as sorted graph6 files;

* exact planar Turán values by iterative deepening on edge deletions:
  every planar graph on n >= 3 vertices is a spanning subgraph of some
  triangulation on the same vertices, so the maximum pattern-free edge
  count is 3n-6-d for the least d such that some census triangulation
  minus d edges is pattern-free;

* witness search / nonexistence proofs over the same space, by plain
  lexicographic subset scans with cheap degree screens.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import store
from .canon import canonical_code
from .embedding import embed_planar
from .graphs import Graph, _bits, complete_graph
from .patterns import (
    DEFAULT_GUARD,
    PatternSpec,
    Star,
    pattern_occurrence_edges,
    realize,
)
from .values import TuranValue

CENSUS_MAX_N = 14
DEFAULT_MAX_N = 12  # 13 and 14 sit behind the expensive flag
_DECODE_CACHE_LIMIT = 20000


class ExpensiveCensusError(RuntimeError):
    """Census size requires the explicit expensive opt-in."""


class BudgetExhausted(RuntimeError):
    """A search ran out of budget before reaching a definite answer."""


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the deletion searches; None means unlimited."""

    max_deletions: int | None = None
    seconds: float | None = None

    def __post_init__(self):
        if self.max_deletions is not None and self.max_deletions < 0:
            raise ValueError("max_deletions must be non-negative")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("seconds must be positive")

    def deadline(self) -> float | None:
        return None if self.seconds is None else time.monotonic() + self.seconds


class TriangulationCensus:
    """All isomorphism classes of plane triangulations on n vertices."""

    def __init__(self, n: int, codes: Sequence[str]):
        self.n = n
        self.codes = tuple(codes)
        self._decoded: list[Graph] | None = None

    def __len__(self) -> int:
        return len(self.codes)

    def graphs(self) -> Iterator[Graph]:
        from .graph6 import from_graph6
        if self._decoded is not None:
            yield from self._decoded
            return
        if len(self.codes) <= _DECODE_CACHE_LIMIT:
            self._decoded = [from_graph6(c) for c in self.codes]
            yield from self._decoded
        else:
            for c in self.codes:
                yield from_graph6(c)


# ----------------------------------------------------------------------
# census generation
# ----------------------------------------------------------------------

def _vertex_splits(parent: Graph, rotation: Sequence[Sequence[int]]) -> Iterator[Graph]:
    """All triangulations obtained by splitting one vertex of parent.

    Splitting v along two of its neighbors a, b partitions the rotation
    at v into two arcs; v keeps one arc plus {a, b}, the new vertex w
    takes the other arc plus {a, b}, and the edge vw is added.
    """
    n = parent.n
    w = n
    base = parent.edges()
    for v in range(n):
        rot = rotation[v]
        d = len(rot)
        for i in range(d):
            for j in range(i + 1, d):
                a, b = rot[i], rot[j]
                moved = set(rot[i + 1:j])
                edges = []
                for x, y in base:
                    if x == v and y in moved:
                        edges.append((y, w))
                    elif y == v and x in moved:
                        edges.append((x, w))
                    else:
                        edges.append((x, y))
                edges += [(v, w), (a, w), (b, w)]
                child = Graph(n + 1, edges)
                assert child.edge_count == 3 * (n + 1) - 6
                yield child


def _children_codes(parent: Graph) -> set[bytes]:
    emb = embed_planar(parent)
    assert emb is not None
    return {canonical_code(c) for c in _vertex_splits(parent, emb.rotation)}


def _worker(codes: list[str]) -> set[bytes]:
    from .graph6 import from_graph6
    out: set[bytes] = set()
    for c in codes:
        out |= _children_codes(from_graph6(c))
    return out


def enumerate_triangulations(n: int,
                             cache_root: str | Path | None = None,
                             expensive: bool = False,
                             processes: int = 1) -> TriangulationCensus:
    """The census at n (4 <= n <= 14), generating and caching as needed.

    n in {13, 14} is refused without expensive=True unless already cached.
    """
    if not 4 <= n <= CENSUS_MAX_N:
        raise ValueError(f"census supported for 4 <= n <= {CENSUS_MAX_N}, got {n}")
    root = store.cache_root(cache_root)
    path = store.census_path(root, n)
    if path.exists():
        codes = [line.strip() for line in path.read_text().splitlines() if line.strip()]
        return TriangulationCensus(n, codes)
    if n > DEFAULT_MAX_N and not expensive:
        raise ExpensiveCensusError(
            f"census at n={n} is expensive; pass expensive=True to generate it")

    if n == 4:
        codes_set = {canonical_code(complete_graph(4))}
    else:
        parents = enumerate_triangulations(n - 1, cache_root=root,
                                           expensive=expensive, processes=processes)
        codes_set = set()
        if processes > 1 and len(parents) > 4 * processes:
            from concurrent.futures import ProcessPoolExecutor
            chunk = max(1, len(parents.codes) // (processes * 8))
            batches = [list(parents.codes[i:i + chunk])
                       for i in range(0, len(parents.codes), chunk)]
            with ProcessPoolExecutor(max_workers=processes) as pool:
                for part in pool.map(_worker, batches):
                    codes_set |= part
        else:
            for parent in parents.graphs():
                codes_set |= _children_codes(parent)

    codes = sorted(c.decode("ascii") for c in codes_set)
    store.atomic_write_text(path, "\n".join(codes) + "\n")
    store.update_manifest(root, n, len(codes))
    return TriangulationCensus(n, codes)


# ----------------------------------------------------------------------
# exact planar Turán values
# ----------------------------------------------------------------------

class _Deadline:
    __slots__ = ("at", "ticks")

    def __init__(self, at: float | None):
        self.at = at
        self.ticks = 0

    def check(self) -> None:
        if self.at is None:
            return
        self.ticks += 1
        if self.ticks & 1023 == 0 and time.monotonic() > self.at:
            raise BudgetExhausted("time budget exhausted")


def _exists_free_deletion(g: Graph, spec: PatternSpec, d: int,
                          guard: int, clock: _Deadline) -> bool:
    """Is there a set of exactly d edges whose removal makes g free?

    Bounded hitting-set search: any solution must delete an edge of the
    currently found occurrence; extra deletions keep freeness, so finding
    freeness within budget d suffices.  Called with increasing d, so a
    success at depth < d would have been caught in an earlier round.
    """
    masks = list(g._masks)
    n = g.n
    star_t = spec.t if isinstance(spec, Star) else None
    deg = [m.bit_count() for m in masks]
    visited: set[frozenset] = set()

    def lower_bound() -> int:
        # each deletion lowers total degree excess by at most 2
        excess = sum(dv - (star_t - 1) for dv in deg if dv >= star_t)
        return (excess + 1) // 2

    def rec(deleted: frozenset, budget: int) -> bool:
        clock.check()
        occ = pattern_occurrence_edges(masks, n, spec, guard)
        if occ is None:
            return True
        if budget == 0:
            return False
        if star_t is not None and lower_bound() > budget:
            return False
        for u, v in occ:
            key = deleted | {(u, v)}
            if key in visited:
                continue
            visited.add(key)
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u
            deg[u] -= 1
            deg[v] -= 1
            ok = rec(key, budget - 1)
            masks[u] ^= 1 << v
            masks[v] ^= 1 << u
            deg[u] += 1
            deg[v] += 1
            if ok:
                return True
        return False

    return rec(frozenset(), d)


@lru_cache(maxsize=None)
def _pattern_size(spec: PatternSpec) -> int:
    return realize(spec).n


def exact_planar_turan(n: int, spec: PatternSpec,
                       budget: SearchBudget | None = None,
                       cache_root: str | Path | None = None,
                       expensive: bool = False,
                       processes: int = 1,
                       guard: int = DEFAULT_GUARD) -> TuranValue:
    """Exact maximum edge count of a pattern-free planar graph on n vertices.

    Iterative deepening over deletion depth d; the answer is 3n-6-d for
    the least d at which some census triangulation minus d edges is free.
    On budget exhaustion an interval with provenance
    "oracle:budget-exhausted" is returned instead.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    census = enumerate_triangulations(n, cache_root=cache_root, expensive=expensive,
                                      processes=processes)
    max_e = 3 * n - 6
    if realize(spec).edge_count == 0:
        raise ValueError("pattern with no edges is never avoidable")
    clock = _Deadline(budget.deadline() if budget else None)
    for d in range(max_e + 1):
        if budget and budget.max_deletions is not None and d > budget.max_deletions:
            return TuranValue(0, max_e - d, provenance="oracle:budget-exhausted")
        if _pattern_size(spec) > n and d == 0:
            # pattern cannot fit at all; any triangulation is free
            return TuranValue.exactly(max_e, provenance="oracle")
        try:
            for g in census.graphs():
                if _exists_free_deletion(g, spec, d, guard, clock):
                    return TuranValue.exactly(max_e - d, provenance="oracle")
        except BudgetExhausted:
            return TuranValue(0, max_e - d, provenance="oracle:budget-exhausted")
    raise AssertionError("unreachable: the empty graph is always pattern-free")


# ----------------------------------------------------------------------
# witness search
# ----------------------------------------------------------------------

def search_witness(n: int, e: int, *,
                   free_of: Iterable[PatternSpec] = (),
                   profile: dict[int, int] | None = None,
                   profile_exact: bool = True,
                   max_degree: int | None = None,
                   predicate: Callable[[Graph], bool] | None = None,
                   budget: SearchBudget | None = None,
                   cache_root: str | Path | None = None,
                   expensive: bool = False,
                   guard: int = DEFAULT_GUARD) -> Graph | None:
    """First planar graph with n vertices and e edges meeting the constraints.

    Scans census triangulations in canonical order, deleting each
    lexicographic (3n-6-e)-subset of edges.  Returns a witness or a
    verified None (the scan is exhaustive over isomorphism classes).
    Raises BudgetExhausted when the time budget runs out first.
    """
    if e > 3 * n - 6:
        return None
    d = 3 * n - 6 - e
    specs = tuple(free_of)
    census = enumerate_triangulations(n, cache_root=cache_root, expensive=expensive)
    clock = _Deadline(budget.deadline() if budget else None)

    want_counts = dict(profile) if profile else None
    if want_counts is not None and profile_exact:
        if sum(want_counts.values()) != n:
            raise ValueError("exact profile must account for every vertex")

    for g in census.graphs():
        base_deg = [g.degree(v) for v in range(g.n)]
        if max_degree is not None:
            # each deletion lowers the total excess over max_degree by <= 2
            excess = sum(dv - max_degree for dv in base_deg if dv > max_degree)
            if excess > 2 * d:
                continue
        edges = g.edges()
        for subset in combinations(range(len(edges)), d):
            clock.check()
            deg = base_deg[:]
            for k in subset:
                u, v = edges[k]
                deg[u] -= 1
                deg[v] -= 1
            if max_degree is not None and max(deg) > max_degree:
                continue
            if want_counts is not None and not _profile_ok(deg, want_counts, profile_exact):
                continue
            if specs or predicate:
                masks = list(g._masks)
                for k in subset:
                    u, v = edges[k]
                    masks[u] ^= 1 << v
                    masks[v] ^= 1 << u
                if any(pattern_occurrence_edges(masks, g.n, s, guard) is not None
                       for s in specs):
                    continue
                cand = Graph(g.n, [edges[k] for k in range(len(edges)) if k not in subset])
                if predicate is not None and not predicate(cand):
                    continue
                return cand
            return Graph(g.n, [edges[k] for k in range(len(edges)) if k not in subset])
    return None


def _profile_ok(deg: list[int], want: dict[int, int], exact: bool) -> bool:
    counts: dict[int, int] = {}
    for dv in deg:
        counts[dv] = counts.get(dv, 0) + 1
    if exact:
        return counts == want
    return all(counts.get(k, 0) == v for k, v in want.items())


def exists_planar_with_degree_profile(n: int, profile: dict[int, int],
                                      cache_root: str | Path | None = None,
                                      budget: SearchBudget | None = None,
                                      expensive: bool = False) -> Graph | None:
    """A planar graph on n vertices realizing the full degree profile, or
    a verified None.  The profile must cover all n vertices.
    """
    if sum(profile.values()) != n:
        raise ValueError("profile must account for every vertex")
    total = sum(d * c for d, c in profile.items())
    if total % 2:
        raise ValueError("degree sum must be even")
    e = total // 2
    if e > 3 * n - 6:
        return None
    return search_witness(n, e, profile=profile, profile_exact=True,
                          max_degree=max(profile), budget=budget,
                          cache_root=cache_root, expensive=expensive)
