"""graph6 encoding/decoding and DOT export.

graph6 follows the published format: printable bytes 63..126, size field
N(n), then the upper triangle of the adjacency matrix in column-major
order packed six bits per byte.
"""

from __future__ import annotations

from .graphs import Graph

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> list[int]:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    raise ValueError("graph too large for this encoder")


def to_graph6(g: Graph) -> str:
    out = _encode_size(g.n)
    bits = []
    for v in range(1, g.n):
        mask = g.neighbor_mask(v)
        bits.extend((mask >> u) & 1 for u in range(v))
    # pad to a multiple of six
    bits.extend([0] * (-len(bits) % 6))
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i:i + 6]:
            word = word << 1 | b
        out.append(word + 63)
    return "".join(chr(c) for c in out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = n * (n - 1) // 2
    if len(data) * 6 < need:
        raise ValueError("truncated graph6 body")
    bits = []
    for word in data:
        bits.extend((word >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return [from_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
