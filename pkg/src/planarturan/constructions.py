"""Deterministic builders for the extremal families.

Every builder self-verifies on construction: planarity, exact vertex and
edge counts, and the pattern-freeness the family is used for.  A failed
check raises ConstructionError; it is a bug, never a warning.

Families that exist in the source material only as drawings (the
wheel-free 11-vertex graph, the bounded-degree triangulations, the tight
fan-free 8-vertex graph) are reconstructed by property search through the
oracle and cached as graph6 files; the derived variants are produced by
the textual edit recipes, with the participating vertices located by a
deterministic first-fit rule over embedding faces.
"""

from __future__ import annotations

from pathlib import Path

from . import store
from .canon import canonical_code
from .embedding import PlaneEmbedding, embed_planar, is_triangulation
from .graph6 import from_graph6, to_graph6
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    join,
)
from .patterns import Explicit, Fan, PatternSpec, Star, Wheel, is_pattern_free, pattern_name

_K4 = Explicit(complete_graph(4))


class ConstructionError(RuntimeError):
    """A construction failed its own verification."""


def _verify(g: Graph, what: str, *,
            n: int | None = None,
            e: int | None = None,
            planar: bool = True,
            triangulation: bool = False,
            max_degree: int | None = None,
            free: tuple[PatternSpec, ...] = (),
            connected: bool | None = None) -> Graph:
    if n is not None and g.n != n:
        raise ConstructionError(f"{what}: expected {n} vertices, built {g.n}")
    if e is not None and g.edge_count != e:
        raise ConstructionError(f"{what}: expected {e} edges, built {g.edge_count}")
    if max_degree is not None and g.max_degree() > max_degree:
        raise ConstructionError(f"{what}: max degree {g.max_degree()} > {max_degree}")
    if connected is not None and g.is_connected() != connected:
        raise ConstructionError(f"{what}: connectivity check failed")
    if triangulation:
        if not is_triangulation(g):
            raise ConstructionError(f"{what}: not a plane triangulation")
    elif planar and embed_planar(g) is None:
        raise ConstructionError(f"{what}: not planar")
    for spec in free:
        if not is_pattern_free(g, spec, guard=max(g.n, 16)):
            raise ConstructionError(f"{what}: contains forbidden {pattern_name(spec)}")
    return g


# ----------------------------------------------------------------------
# serpentine outerplanar family and its triangulation relatives
# ----------------------------------------------------------------------

def _serpentine_chords(n: int) -> list[tuple[int, int]]:
    chords = [(1, n - 1)]
    a, b = 1, n - 1
    step = 0
    while len(chords) < n - 3:
        if step % 2 == 0:
            b -= 1
        else:
            a += 1
        chords.append((a, b))
        step += 1
    return chords


def serpentine(n: int) -> Graph:
    """The maximal outerplanar graph with max degree 4: an n-cycle plus
    the alternating zigzag of n-3 chords."""
    if n < 5:
        raise ValueError("serpentine needs n >= 5")
    edges = [(i, (i + 1) % n) for i in range(n)] + _serpentine_chords(n)
    g = Graph(n, edges)
    _verify(g, f"serpentine({n})", n=n, e=2 * n - 3, max_degree=4)
    emb = embed_planar(g)
    counts = emb.face_vector().counts
    if counts != {3: n - 2, n: 1}:
        raise ConstructionError(f"serpentine({n}): not maximal outerplanar: {counts}")
    return g


def double_serpentine(n: int) -> Graph:
    """Triangulation glueing two serpentine chord systems onto one n-cycle,
    the second rotated by the least shift keeping the graph simple."""
    if n < 5:
        raise ValueError("double serpentine needs n >= 5")
    inner = {tuple(sorted(c)) for c in _serpentine_chords(n)}
    cycle_edges = [(i, (i + 1) % n) for i in range(n)]
    for s in range(1, n):
        outer = {tuple(sorted(((u + s) % n, (v + s) % n))) for u, v in inner}
        if inner & outer:
            continue
        g = Graph(n, cycle_edges + sorted(inner) + sorted(outer))
        if g.edge_count == 3 * n - 6 and g.max_degree() <= 6 and is_triangulation(g):
            return g
    raise ConstructionError(f"double_serpentine({n}): no usable shift found")


def apex_serpentine(n: int) -> Graph:
    """K_1 joined to the serpentine on n-1 vertices; the apex is vertex 0."""
    if n < 6:
        raise ValueError("apex serpentine needs n >= 6")
    g = join(complete_graph(1), serpentine(n - 1))
    return _verify(g, f"apex_serpentine({n})", n=n, e=3 * n - 6, triangulation=True)


def two_apex_cycle(n: int) -> Graph:
    """Two non-adjacent apexes joined to a cycle on n-2 vertices."""
    if n < 5:
        raise ValueError("two-apex cycle needs n >= 5")
    g = join(empty_graph(2), cycle_graph(n - 2))
    _verify(g, f"two_apex_cycle({n})", n=n, e=3 * n - 6, triangulation=True)
    if n >= 7:
        profile = g.degree_profile()
        if profile != {4: n - 2, n - 2: 2} or g.has_edge(0, 1):
            raise ConstructionError(f"two_apex_cycle({n}): apex structure wrong")
    return g


# ----------------------------------------------------------------------
# pentagonal stack (wheel-free triangulations for large n)
# ----------------------------------------------------------------------

def pentagonal_stack(t: int) -> Graph:
    """t stacked 5-rings, consecutive rings triangulated, two capping
    apexes; a K_4-free and 4-wheel-free triangulation on 5t+2 vertices."""
    if t < 2:
        raise ValueError("pentagonal stack needs t >= 2")

    def ring(i: int, j: int) -> int:  # i in 1..t, j in 0..4
        return (i - 1) * 5 + j

    u, v = 5 * t, 5 * t + 1
    edges = []
    for i in range(1, t + 1):
        edges += [(ring(i, j), ring(i, (j + 1) % 5)) for j in range(5)]
    for i in range(1, t):
        for j in range(5):
            edges.append((ring(i, j), ring(i + 1, j)))
            edges.append((ring(i, j), ring(i + 1, (j + 1) % 5)))
    edges += [(u, ring(1, j)) for j in range(5)]
    edges += [(v, ring(t, j)) for j in range(5)]
    g = Graph(5 * t + 2, edges)
    n = g.n
    _verify(g, f"pentagonal_stack({t})", n=n, e=3 * n - 6, triangulation=True,
            free=(Wheel(4), _K4))
    want = {5: 12} if t == 2 else {5: 12, 6: 5 * (t - 2)}
    if g.degree_profile() != want:
        raise ConstructionError(f"pentagonal_stack({t}): degree profile {g.degree_profile()}")
    return g


def pentagonal_stack_plus(t: int, i: int) -> Graph:
    """pentagonal_stack(t) with i extra degree-3 vertices stacked into i
    pairwise vertex-disjoint triangular faces (first-fit face choice)."""
    if not 1 <= i <= 4:
        raise ValueError("i must be in 1..4")
    base = pentagonal_stack(t)
    emb = embed_planar(base)
    faces = sorted({tuple(sorted(w)) for w in emb.faces() if len(w) == 3})

    def pick(start: int, chosen: list, used: set):
        if len(chosen) == i:
            return chosen
        for k in range(start, len(faces)):
            f = faces[k]
            if used.isdisjoint(f):
                got = pick(k + 1, chosen + [f], used | set(f))
                if got:
                    return got
        return None

    selection = pick(0, [], set())
    if selection is None:
        raise ConstructionError(f"pentagonal_stack_plus({t},{i}): no disjoint faces")
    g = base
    for f in selection:
        g = g.add_vertex(f)
    n = 5 * t + 2 + i
    _verify(g, f"pentagonal_stack_plus({t},{i})", n=n, e=3 * n - 6,
            triangulation=True, free=(Wheel(4),))
    new = list(range(5 * t + 2, n))
    for a in new:
        for b in new:
            if a < b and (g.has_edge(a, b) or g.neighbor_mask(a) & g.neighbor_mask(b)):
                raise ConstructionError(
                    f"pentagonal_stack_plus({t},{i}): stacked vertices interact")
    return g


def small_wheel_free(n: int) -> Graph:
    """K_2 + (K_2 ∪ K_{n-4}): the 4-wheel-free planar graph with 3n-7
    edges used at n = 5, 6."""
    if n not in (5, 6):
        raise ValueError("small wheel-free family is defined for n in {5, 6}")
    g = join(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(n - 4)))
    return _verify(g, f"small_wheel_free({n})", n=n, e=3 * n - 7, free=(Wheel(4),))


# ----------------------------------------------------------------------
# star rings (K_{1,6}-free, almost 5-regular)
# ----------------------------------------------------------------------

def _star_ring_base(q: int, p: int) -> Graph:
    # layout: x 0..q-1, y q..q+p-1, a q+p..2q+p-1, b 2q+p..2q+2p-1
    x = lambda i: (i - 1) % q
    y = lambda j: q + (j - 1) % p
    a = lambda i: q + p + (i - 1)          # defined for 1 <= i <= q only
    b = lambda i: 2 * q + p + (i - 1)      # defined for 1 <= i <= p only
    n_b = p  # p = q: b_1..b_q; p = q+1: b_1..b_{q+1}
    edges = []
    edges += [(x(i), x(i + 1)) for i in range(1, q + 1)]
    edges += [(y(j), y(j + 1)) for j in range(1, p + 1)]
    # ring alternating b_1, a_1, b_2, a_2, ..., with the extra b at the end
    seq = []
    for i in range(1, q + 1):
        seq += [b(i), a(i)]
    if p == q + 1:
        seq.append(b(q + 1))
    edges += [(seq[k], seq[(k + 1) % len(seq)]) for k in range(len(seq))]
    for i in range(1, q + 1):
        nxt = b(i + 1) if i + 1 <= n_b else b(1)
        edges += [(x(i), a(i)), (x(i), b(i)), (x(i), nxt)]
    for j in range(1, p + 1):
        edges.append((y(j), b(j)))
        # a-spokes: indices outside 1..q are dropped, not wrapped, when p=q+1
        for idx in (j - 1, j):
            if p == q:
                idx = (idx - 1) % q + 1
            if 1 <= idx <= q:
                edges.append((y(j), a(idx)))
    return Graph(2 * q + 2 * p, sorted(set(tuple(sorted(e)) for e in edges)))


def star_ring(q: int, p: int) -> Graph:
    """The ring-of-stars planar graph on 2q+2p vertices: three nested
    cycles with degree-5 wiring; K_{1,6}-free with 10q edges when p=q and
    10q+3 when p=q+1."""
    if p not in (q, q + 1):
        raise ValueError("p must be q or q+1")
    if p == q and q < 4:
        raise ValueError("star_ring with p=q needs q >= 4")
    if p == q + 1 and q < 3:
        raise ValueError("star_ring with p=q+1 needs q >= 3")
    g = _star_ring_base(q, p)
    e = 10 * q if p == q else 10 * q + 3
    return _verify(g, f"star_ring({q},{p})", n=2 * q + 2 * p, e=e,
                   max_degree=5, free=(Star(6),))


def star_ring_odd1(q: int) -> Graph:
    """star_ring(q,q) rewired around one new vertex: n = 4q+1, e = 10q+2."""
    if q < 4:
        raise ValueError("star_ring_odd1 needs q >= 4")
    g = _star_ring_base(q, q)
    y = lambda j: q + (j - 1) % q
    g = g.delete_edge(y(2), y(3)).delete_edge(y(1), y(q))
    g = g.add_vertex([y(2), y(3), y(1), y(q)])
    return _verify(g, f"star_ring_odd1({q})", n=4 * q + 1, e=10 * q + 2,
                   max_degree=5, free=(Star(6),))


def star_ring_odd2(q: int) -> Graph:
    """star_ring(q,q) rewired around two new vertices: 5-regular on 4q+2."""
    if q < 4:
        raise ValueError("star_ring_odd2 needs q >= 4")
    g = _star_ring_base(q, q)
    x = lambda i: (i - 1) % q
    y = lambda j: q + (j - 1) % q
    a = lambda i: 2 * q + (i - 1)
    b = lambda i: 3 * q + (i - 1)
    for u_, v_ in [(y(2), y(3)), (y(1), y(q)), (x(2), x(3)), (x(1), x(q)), (b(1), a(q))]:
        g = g.delete_edge(u_, v_)
    g = g.add_vertex([y(2), y(3), y(1), y(q), a(q)])
    g = g.add_vertex([x(2), x(3), x(1), x(q), b(1)])
    g = _verify(g, f"star_ring_odd2({q})", n=4 * q + 2, e=10 * q + 5,
                max_degree=5, free=(Star(6),))
    if g.degree_profile() != {5: 4 * q + 2}:
        raise ConstructionError(f"star_ring_odd2({q}): not 5-regular")
    return g


def star_ring_apex(q: int) -> Graph:
    """star_ring(q,q+1) plus an apex over the seam: n = 4q+3, e = 10q+7."""
    if q < 3:
        raise ValueError("star_ring_apex needs q >= 3")
    p = q + 1
    g = _star_ring_base(q, p)
    y = lambda j: q + (j - 1)
    b = lambda i: 2 * q + p + (i - 1)
    g = g.add_vertex([y(1), b(1), y(p), b(p)])
    return _verify(g, f"star_ring_apex({q})", n=4 * q + 3, e=10 * q + 7,
                   max_degree=5, free=(Star(6),))


# ----------------------------------------------------------------------
# small-star families
# ----------------------------------------------------------------------

def prism_star4(n: int) -> Graph:
    """K_{1,4}-free planar graph with floor(3n/2) edges: a prism for even
    n, a prism with one subdivided rung for odd n."""
    if n < 5:
        raise ValueError("prism family needs n >= 5")
    if n % 2 == 0:
        m = n // 2
        edges = [(i, (i + 1) % m) for i in range(m)]
        edges += [(m + i, m + (i + 1) % m) for i in range(m)]
        edges += [(i, m + i) for i in range(m)]
        g = Graph(n, edges)
    else:
        m = (n - 1) // 2
        if m == 2:
            base = complete_graph(4)
        else:
            base = prism_star4(n - 1)
        g = base.delete_edge(0, m).add_vertex([0, m])
    return _verify(g, f"prism_star4({n})", n=n, e=3 * n // 2,
                   max_degree=3, free=(Star(4),))


def small_star_family(t: int, n: int) -> Graph:
    """The K_{1,t}-free planar graph with floor((t-1)n/2) edges for small
    t: a cycle (t=3), the prism family (t=4), the threaded cycle (t=5)."""
    if t == 3:
        if n < 4:
            raise ValueError("the cycle family needs n >= 4")
        g = cycle_graph(n)
        return _verify(g, f"small_star_family(3,{n})", n=n, e=n, free=(Star(3),))
    if t == 4:
        return prism_star4(n)
    if t == 5:
        return matching_cycle_star5(n)
    raise ValueError("small-star families cover t in {3, 4, 5}")


def matching_cycle_star5(n: int) -> Graph:
    """K_{1,5}-free planar graph with 2n edges (n >= 8): an even cycle
    threaded by an alternating inner path, closed up by four seam edges."""
    if n < 8:
        raise ValueError("this family needs n >= 8")
    m = n // 2
    u = lambda i: i - 1          # u_1..u_m
    w = lambda i: m + i - 1      # w_1..w_m
    cycle = [u(i) for i in range(1, m + 1)] + [w(i) for i in range(m, 0, -1)]
    edges = [(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))]
    for i in range(1, m):
        edges.append((w(i), u(i + 1)))
        if i + 1 <= m - 1:
            edges.append((u(i + 1), w(i + 1)))
    g = Graph(2 * m, edges)
    if n % 2 == 0:
        for e in [(u(1), u(m)), (u(1), w(m)), (w(1), w(m))]:
            g = g.add_edge(*e)
    else:
        z = 2 * m
        g = g.delete_edge(u(2), u(3)).add_vertex([u(2), u(3)])
        for e in [(z, u(1)), (z, u(m)), (w(1), w(m)), (u(1), w(m))]:
            g = g.add_edge(*e)
    return _verify(g, f"matching_cycle_star5({n})", n=n, e=2 * n,
                   max_degree=4, free=(Star(5),))


# ----------------------------------------------------------------------
# fan lower-bound families
# ----------------------------------------------------------------------

def two_apex_lower(n: int) -> Graph:
    """K_2 + (n-2)K_1: (K_1+2K_2)-free planar graph with 2n-3 edges."""
    if n < 5:
        raise ValueError("two-apex lower bound needs n >= 5")
    g = join(complete_graph(2), empty_graph(n - 2))
    return _verify(g, f"two_apex_lower({n})", n=n, e=2 * n - 3, free=(Fan(2, 3),))


def icosahedron() -> Graph:
    """The unique 5-regular planar triangulation on 12 vertices."""
    edges = [(0, k) for k in range(1, 6)] + [(11, 6 + k) for k in range(5)]
    edges += [(1 + k, 1 + (k + 1) % 5) for k in range(5)]
    edges += [(6 + k, 6 + (k + 1) % 5) for k in range(5)]
    for k in range(5):
        edges += [(1 + k, 6 + k), (1 + k, 6 + (k + 1) % 5)]
    g = Graph(12, edges)
    _verify(g, "icosahedron", n=12, e=30, triangulation=True)
    if g.degree_profile() != {5: 12}:
        raise ConstructionError("icosahedron: not 5-regular")
    return g


def icosahedron_pair() -> Graph:
    """Two icosahedra joined by three independent edges between a
    triangular face of each: (K_1+3K_2)-free planar, n=24, e=63."""
    ico = icosahedron()
    g2 = disjoint_union(ico, ico)
    face = (0, 1, 2)  # a face: the icosahedron has no separating triangles
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        g = g2
        for s, t in zip(face, perm):
            g = g.add_edge(s, 12 + t)
        if embed_planar(g) is None:
            continue
        return _verify(g, "icosahedron_pair", n=24, e=63, free=(Fan(3, 3),))
    raise ConstructionError("icosahedron_pair: no planar face pairing found")


# ----------------------------------------------------------------------
# search-backed witnesses and their derived transforms
# ----------------------------------------------------------------------

def _cached_witness(key: str, builder, checker, cache_root=None) -> Graph:
    root = store.cache_root(cache_root)
    path = store.witness_path(root, key)
    if path.exists():
        g = from_graph6(path.read_text())
        checker(g)
        return g
    g = builder()
    checker(g)
    store.atomic_write_text(path, to_graph6(g) + "\n")
    return g


def _faces3(g: Graph) -> list[tuple[int, int, int]]:
    emb = embed_planar(g)
    return sorted({tuple(sorted(w)) for w in emb.faces() if len(w) == 3})


def _stackable_face(g: Graph, limit: int = 4) -> tuple[int, int, int] | None:
    for f in _faces3(g):
        if all(g.degree(v) <= limit for v in f):
            return f
    return None


def _quad_sites(g: Graph) -> list[tuple[int, int, int, int]]:
    """Edges (u,v) of a triangulation with their two face apexes (a1,a2)."""
    apexes: dict[tuple[int, int], list[int]] = {}
    emb = embed_planar(g)
    for w in emb.faces():
        if len(w) != 3:
            continue
        xs = sorted(w)
        for k in range(3):
            e = tuple(sorted((w[k], w[(k + 1) % 3])))
            other = next(x for x in xs if x not in e)
            apexes.setdefault(e, []).append(other)
    out = []
    for (u, v), aps in sorted(apexes.items()):
        aps = sorted(set(aps))
        if len(aps) == 2:
            out.append((u, v, aps[0], aps[1]))
    return out


def _quad_expansion_site(g: Graph) -> tuple[int, int, int, int] | None:
    for u, v, a1, a2 in _quad_sites(g):
        if g.degree(a1) <= 4 and g.degree(a2) <= 4:
            return (u, v, a1, a2)
    return None


def _pentagon_sites(g: Graph) -> list[tuple[int, ...]]:
    """Pentagon expansion sites of a near-triangulation with one 4-face.

    Each site is (x1..x5): the quad boundary edge x1x3 about to be
    deleted, the apex x2 of the triangle across it, and the far quad
    corners x4, x5.  Sites are listed deterministically.
    """
    emb = embed_planar(g)
    quads = [w for w in emb.faces() if len(w) == 4]
    tris = [w for w in emb.faces() if len(w) == 3]
    sites = []
    for quad in quads:
        for k in range(4):
            # x1x3 is the quad boundary edge about to go; x2 the apex across
            x1, x3 = quad[k], quad[(k + 1) % 4]
            x4, x5 = quad[(k + 2) % 4], quad[(k + 3) % 4]
            e = tuple(sorted((x1, x3)))
            for t in tris:
                if e[0] in t and e[1] in t:
                    apex = next(x for x in t if x not in e)
                    sites.append((x1, apex, x3, x4, x5))
    return sorted(set(sites))


def _pentagon_expansion_site(g: Graph) -> tuple[int, ...] | None:
    for x1, x2, x3, x4, x5 in _pentagon_sites(g):
        if all(g.degree(v) <= 4 for v in (x2, x4, x5)):
            return (x1, x2, x3, x4, x5)
    return None


def wheel4_free_witness(n: int, cache_root=None) -> Graph:
    """A 4-wheel-free plane graph with n vertices and 3n-8 edges, for
    7 <= n <= 11; smaller members are induced subgraphs of the 11-vertex
    one, obtained by peeling independent 3-vertices."""
    if not 7 <= n <= 11:
        raise ValueError("wheel4-free witnesses cover 7 <= n <= 11")

    def indep_3vertices(g: Graph) -> bool:
        b = [v for v in range(g.n) if g.degree(v) == 3]
        return all(not g.has_edge(u, v) for u in b for v in b if u < v)

    def build():
        from .oracle import search_witness
        g = search_witness(11, 25, free_of=[Wheel(4)], profile={3: 5},
                           profile_exact=False, predicate=indep_3vertices,
                           cache_root=cache_root)
        if g is None:
            raise ConstructionError("wheel4 base witness: search found none")
        return g

    def check(g: Graph):
        _verify(g, "wheel4_free_witness(11)", n=11, e=25, free=(Wheel(4),))
        if g.degree_profile().get(3, 0) != 5 or not indep_3vertices(g):
            raise ConstructionError("wheel4 base witness: 3-vertex set wrong")

    base = _cached_witness("wheel4-base-11", build, check, cache_root)
    if n == 11:
        return base
    b = [v for v in range(base.n) if base.degree(v) == 3]
    g = base.delete_vertices(b[:11 - n])
    return _verify(g, f"wheel4_free_witness({n})", n=n, e=3 * n - 8, free=(Wheel(4),))


def _search_max_degree5(n: int, e: int, predicate, cache_root=None,
                        expensive: bool = False) -> Graph:
    from .oracle import search_witness
    g = search_witness(n, e, max_degree=5, predicate=predicate,
                       cache_root=cache_root, expensive=expensive)
    if g is None:
        raise ConstructionError(f"no planar graph with n={n}, e={e}, max degree 5")
    return g


def triangulation_max_degree5(n: int, cache_root=None) -> Graph:
    """A plane triangulation with maximum degree 5, for n in
    {7, 8, 9, 10, 12}; K_{1,6}-free and (K_1+3K_2)-free by degree."""
    if n not in (7, 8, 9, 10, 12):
        raise ValueError("max-degree-5 triangulations exist only for n in {7,8,9,10,12}")

    def check_for(m):
        def check(g: Graph):
            _verify(g, f"triangulation_max_degree5({m})", n=m, e=3 * m - 6,
                    triangulation=True, max_degree=5, free=(Star(6), Fan(3, 3)))
        return check

    if n == 7:
        def build7():
            g = _search_max_degree5(
                7, 15,
                lambda g: g.degree_profile().get(3, 0) == 1 and _stackable_face(g),
                cache_root)
            return g
        return _cached_witness("maxdeg5-tri-07", build7, check_for(7), cache_root)
    if n == 8:
        def build8():
            base = triangulation_max_degree5(7, cache_root)
            face = _stackable_face(base)
            if face is None:
                raise ConstructionError("no stackable face in the 7-vertex base")
            return base.add_vertex(face)
        return _cached_witness("maxdeg5-tri-08", build8, check_for(8), cache_root)
    if n == 9:
        def build9():
            return _search_max_degree5(9, 21, _quad_expansion_site, cache_root)
        return _cached_witness("maxdeg5-tri-09", build9, check_for(9), cache_root)
    if n == 10:
        def build10():
            base = triangulation_max_degree5(9, cache_root)
            site = _quad_expansion_site(base)
            if site is None:
                raise ConstructionError("no quad expansion site in the 9-vertex base")
            u, v, a1, a2 = site
            return base.delete_edge(u, v).add_vertex([u, a1, v, a2])
        return _cached_witness("maxdeg5-tri-10", build10, check_for(10), cache_root)

    def build12():
        base = star6_free_witness(11, cache_root)
        site = _pentagon_expansion_site(base)
        if site is None:
            raise ConstructionError("no pentagon expansion site in the 11-vertex base")
        x1, x2, x3, x4, x5 = site
        return base.delete_edge(x1, x3).add_vertex([x1, x2, x3, x4, x5])
    return _cached_witness("maxdeg5-tri-12", build12, check_for(12), cache_root)


def star6_free_witness(n: int, cache_root=None, expensive: bool = False) -> Graph:
    """The K_{1,6}-free extremal witnesses at the exceptional sizes:
    3n-7 edges at n=11, 3n-8 at n in {13, 14}.  n=14 needs the expensive
    census unless already cached."""
    if n not in (11, 13, 14):
        raise ValueError("exceptional star witnesses exist for n in {11, 13, 14}")
    if n == 11:
        def build11():
            return _search_max_degree5(11, 26, _pentagon_expansion_site, cache_root)

        def check11(g: Graph):
            _verify(g, "star6_free_witness(11)", n=11, e=26, max_degree=5,
                    free=(Star(6), Fan(3, 3)))
        return _cached_witness("star6-free-11", build11, check11, cache_root)
    if n == 13:
        def build13():
            base = star6_free_witness(11, cache_root)
            site = _pentagon_expansion_site(base)
            if site is None:
                raise ConstructionError("no pentagon site in the 11-vertex base")
            x1, x2, x3, x4, x5 = site
            g = base.delete_edge(x1, x3)
            g = g.add_vertex([x1, x2, x3])          # y1 = 11
            g = g.add_vertex([x4, x5, 11])          # y2 = 12, adjacent to y1
            return g

        def check13(g: Graph):
            _verify(g, "star6_free_witness(13)", n=13, e=31, max_degree=5,
                    free=(Star(6), Fan(3, 3)))
        return _cached_witness("star6-free-13", build13, check13, cache_root)

    def build14():
        return _search_max_degree5(14, 34, None, cache_root, expensive=expensive)

    def check14(g: Graph):
        _verify(g, "star6_free_witness(14)", n=14, e=34, max_degree=5,
                free=(Star(6), Fan(3, 3)))
    return _cached_witness("star6-free-14", build14, check14, cache_root)


def star5_extremal_witness(n: int, cache_root=None) -> Graph:
    """K_{1,5}-free planar witnesses: 2n edges (n=6, n>=8), 2n-1 (n=7)."""
    if n < 6:
        raise ValueError("star5 witnesses need n >= 6")
    if n >= 8:
        return matching_cycle_star5(n)
    if n == 6:
        base = triangulation_max_degree5(7, cache_root)
        three = [v for v in range(base.n) if base.degree(v) == 3]
        if len(three) != 1:
            raise ConstructionError("expected a unique 3-vertex in the 7-vertex base")
        g = base.delete_vertex(three[0])
        return _verify(g, "star5_extremal_witness(6)", n=6, e=12,
                       triangulation=True, max_degree=4, free=(Star(5),))
    base = star5_extremal_witness(6, cache_root)
    u, v = base.edges()[0]
    g = base.delete_edge(u, v).add_vertex([u, v])
    return _verify(g, "star5_extremal_witness(7)", n=7, e=13,
                   max_degree=4, free=(Star(5),))


def fan2_equality_witness(cache_root=None) -> Graph:
    """The 8-vertex (K_1+2K_2)-free plane graph with 19n/8-4 = 15 edges."""
    def build():
        from .oracle import search_witness
        g = search_witness(8, 15, free_of=[Fan(2, 3)], cache_root=cache_root)
        if g is None:
            raise ConstructionError("fan2 equality witness: search found none")
        return g

    def check(g: Graph):
        _verify(g, "fan2_equality_witness", n=8, e=15, free=(Fan(2, 3),))
    return _cached_witness("fan2-equality-08", build, check, cache_root)


# ----------------------------------------------------------------------
# theorem-facing factories: best known witness per (pattern, n)
# ----------------------------------------------------------------------

def wheel4_extremal_witness(n: int, cache_root=None) -> Graph:
    if n in (5, 6):
        return small_wheel_free(n)
    if 7 <= n <= 11:
        return wheel4_free_witness(n, cache_root)
    if n >= 12:
        i = (n - 2) % 5
        t = (n - 2 - i) // 5
        return pentagonal_stack(t) if i == 0 else pentagonal_stack_plus(t, i)
    raise ValueError("wheel4 witnesses need n >= 5")


def star6_extremal_witness(n: int, cache_root=None, expensive: bool = False) -> Graph:
    if n in (7, 8, 9, 10, 12):
        return triangulation_max_degree5(n, cache_root)
    if n in (11, 13, 14):
        return star6_free_witness(n, cache_root, expensive=expensive)
    if n >= 15:
        q, r = divmod(n, 4)
        if r == 0:
            return star_ring(q, q)
        if r == 1:
            return star_ring_odd1(q)
        if r == 2:
            return star_ring_odd2(q)
        return star_ring_apex(q)
    raise ValueError("star6 witnesses need n >= 7")


def fan3_extremal_witness(n: int, cache_root=None, expensive: bool = False) -> Graph:
    if n == 24:
        return icosahedron_pair()
    return star6_extremal_witness(n, cache_root, expensive=expensive)


def fan2_extremal_witness(n: int, cache_root=None) -> Graph:
    if n == 8:
        return fan2_equality_witness(cache_root)
    return two_apex_lower(n)


# ----------------------------------------------------------------------
# family registry for the command line
# ----------------------------------------------------------------------

FAMILIES = {
    "serpentine": (serpentine, ("n",)),
    "double-serpentine": (double_serpentine, ("n",)),
    "apex-serpentine": (apex_serpentine, ("n",)),
    "two-apex-cycle": (two_apex_cycle, ("n",)),
    "pentagonal-stack": (pentagonal_stack, ("t",)),
    "pentagonal-stack-plus": (pentagonal_stack_plus, ("t", "i")),
    "small-wheel-free": (small_wheel_free, ("n",)),
    "star-ring": (star_ring, ("q", "p")),
    "star-ring-odd1": (star_ring_odd1, ("q",)),
    "star-ring-odd2": (star_ring_odd2, ("q",)),
    "star-ring-apex": (star_ring_apex, ("q",)),
    "prism-star4": (prism_star4, ("n",)),
    "matching-cycle-star5": (matching_cycle_star5, ("n",)),
    "small-star": (small_star_family, ("t", "n")),
    "two-apex-lower": (two_apex_lower, ("n",)),
    "icosahedron": (icosahedron, ()),
    "icosahedron-pair": (icosahedron_pair, ()),
    "wheel4-witness": (wheel4_extremal_witness, ("n",)),
    "star5-witness": (star5_extremal_witness, ("n",)),
    "star6-witness": (star6_extremal_witness, ("n",)),
    "fan2-witness": (fan2_extremal_witness, ("n",)),
    "fan3-witness": (fan3_extremal_witness, ("n",)),
}
