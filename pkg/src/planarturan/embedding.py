"""Planarity, combinatorial embeddings, faces, and Euler bookkeeping.

The planarity verdict itself is delegated to networkx (left-right
algorithm); everything downstream of the rotation system — face walks,
face vectors, triangle incidence, the Euler checks — is computed here so
an embedding can be validated independently of how it was produced.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graphs import Graph


class DisconnectedGraphError(ValueError):
    """Raised where a face count is requested for a disconnected graph."""


class EmbeddingError(ValueError):
    """A rotation system failed the face-walk / Euler validation."""


@dataclass(frozen=True)
class FaceVector:
    """Face-order histogram of an embedding: counts[i] = number of i-faces."""

    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, order: int) -> int:
        return self.counts.get(order, 0)

    def weighted_sum(self) -> int:
        return sum(i * f for i, f in self.counts.items())


class PlaneEmbedding:
    """A rotation system certifying planarity of a graph.

    rotation[v] is the cyclic order of v's neighbors.  Faces are the
    orbits of the next-dart rule: after arriving at v from u, leave along
    the successor of u in rotation[v].  Validated on construction.
    """

    def __init__(self, graph: Graph, rotation: list[list[int]],
                 outer_face: int | None = None):
        self.graph = graph
        self.rotation = tuple(tuple(r) for r in rotation)
        self.outer_face = outer_face  # advisory only
        self._faces: list[tuple[int, ...]] | None = None
        self._validate()

    # ------------------------------------------------------------------

    def faces(self) -> list[tuple[int, ...]]:
        """Face boundary walks, one tuple of vertices per face.

        Each directed edge appears on exactly one walk; a bridge appears
        twice on the same walk.  Deterministic: walks start from the
        smallest unused dart.
        """
        if self._faces is None:
            succ = {}
            for v, rot in enumerate(self.rotation):
                d = len(rot)
                for i, u in enumerate(rot):
                    # arriving u -> v continues to rotation successor of u
                    succ[(u, v)] = (v, rot[(i + 1) % d])
            seen = set()
            walks = []
            for start in sorted(succ):
                if start in seen:
                    continue
                walk = []
                dart = start
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart[0])
                    dart = succ[dart]
                walks.append(tuple(walk))
            self._faces = walks
        return self._faces

    def face_vector(self) -> FaceVector:
        if not self.graph.is_connected():
            raise DisconnectedGraphError(
                "face counts are defined only for connected graphs")
        counts: dict[int, int] = {}
        for w in self.faces():
            counts[len(w)] = counts.get(len(w), 0) + 1
        return FaceVector(dict(sorted(counts.items())))

    def incident_triangle_count(self, v: int) -> int:
        """Number of distinct 3-faces whose boundary contains v."""
        self.graph._check_vertex(v)
        return sum(1 for w in self.faces() if len(w) == 3 and v in w)

    # ------------------------------------------------------------------
    # serialization: one "v: a b c" line per vertex
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{v}: {' '.join(map(str, rot))}" for v, rot in enumerate(self.rotation)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> PlaneEmbedding:
        rotation: list[list[int]] = [[] for _ in range(graph.n)]
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            head, _, rest = line.partition(":")
            rotation[int(head)] = [int(x) for x in rest.split()]
        return cls(graph, rotation)

    # ------------------------------------------------------------------

    def _validate(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError("rotation size does not match vertex count")
        for v, rot in enumerate(self.rotation):
            if sorted(rot) != list(g.neighbors(v)):
                raise EmbeddingError(f"rotation at {v} is not a permutation of N({v})")
        # Euler's formula per connected component: n - e + f = 2 (e >= 1)
        faces = self.faces()
        if sum(len(w) for w in faces) != 2 * g.edge_count:
            raise EmbeddingError("face walks do not partition the darts")
        for comp in g.components():
            cset = set(comp)
            e = sum(g.degree(v) for v in comp) // 2
            if e == 0:
                continue
            f = sum(1 for w in faces if w[0] in cset)
            if len(comp) - e + f != 2:
                raise EmbeddingError(
                    f"Euler check failed on component {comp[:4]}...: "
                    f"n={len(comp)} e={e} f={f}")


# ----------------------------------------------------------------------
# planarity
# ----------------------------------------------------------------------

def _to_networkx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    return ng


def embed_planar(g: Graph) -> PlaneEmbedding | None:
    """A plane embedding of g, or None when g is non-planar.

    The verdict is stable across relabelings; the particular rotation
    system is whatever the planarity algorithm produced and is only
    guaranteed to satisfy the face-walk invariants.
    """
    ok, emb = nx.check_planarity(_to_networkx(g), counterexample=False)
    if not ok:
        return None
    data = emb.get_data()
    return PlaneEmbedding(g, [data.get(v, []) for v in range(g.n)])


def is_planar(g: Graph) -> bool:
    return embed_planar(g) is not None


def is_triangulation(g: Graph) -> bool:
    """True iff g is a plane triangulation: connected, n >= 3, e = 3n-6, planar."""
    return (g.n >= 3 and g.edge_count == 3 * g.n - 6
            and g.is_connected() and is_planar(g))
