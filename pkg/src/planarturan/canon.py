"""Canonical labeling by color refinement plus individualization.

The canonical code of a graph is the graph6 string (as bytes) of the
lexicographically smallest relabeling reachable through the refinement
tree.  Codes are equal exactly when graphs are isomorphic; they double as
stable dedup keys and golden-file lines.
"""

from __future__ import annotations

from .graphs import Graph, _bits


def _refine(n: int, masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate (color, sorted neighbor colors) until the partition is stable."""
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in _bits(masks[v]))
            sigs.append((colors[v], tuple(nb)))
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _leaf_code(g: Graph, colors: list[int]) -> bytes:
    # discrete partition: color order is the new labeling
    n = g.n
    pos = [0] * n
    for v in range(n):
        pos[v] = colors[v]
    rows = [0] * n
    for v in range(n):
        m = 0
        for u in _bits(g.neighbor_mask(v)):
            m |= 1 << pos[u]
        rows[pos[v]] = m
    # inline graph6 of the permuted graph
    out = [n + 63] if n <= 62 else [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for v in range(1, n):
        row = rows[v]
        bits.extend((row >> u) & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i:i + 6]:
            word = word << 1 | b
        out.append(word + 63)
    return bytes(out)


def _search(g: Graph, colors: list[int], best: list[bytes | None]) -> None:
    colors = _refine(g.n, g._masks, colors)
    ncolors = len(set(colors))
    if ncolors == g.n:
        code = _leaf_code(g, colors)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    # first non-singleton color class, in color order
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    target = min(c for c, vs in by_color.items() if len(vs) > 1)
    cell = by_color[target]
    for v in cell:
        child = [2 * c for c in colors]
        child[v] -= 1  # individualize v below its class
        _search(g, child, best)


def canonical_code(g: Graph) -> bytes:
    """Label-invariant certificate; equal codes iff isomorphic graphs."""
    if g._code is None:
        best: list[bytes | None] = [None]
        _search(g, [0] * g.n, best)
        assert best[0] is not None
        g._code = best[0]
    return g._code


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of g (decode of its code)."""
    from .graph6 import from_graph6
    return from_graph6(canonical_code(g).decode("ascii"))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree_profile().items()) != sorted(h.degree_profile().items()):
        return False
    return canonical_code(g) == canonical_code(h)
