"""Finite simple graphs and induced-subgraph search."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path


def vertex_key(v):
    """Total order on mixed labels: ints before strings, tuples compared elementwise."""
    if isinstance(v, bool):
        return (0, int(v))
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    return (3, repr(v))


def sorted_vertices(vs):
    return sorted(vs, key=vertex_key)


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset  # of frozenset pairs

    def __init__(self, vertices=(), edges=()):
        vs = frozenset(vertices)
        es = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge {u!r}-{v!r} has an endpoint outside the vertex set")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        adj = {v: set() for v in vs}
        for e in es:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})
        object.__setattr__(self, "_order", tuple(sorted_vertices(vs)))

    def __repr__(self):
        es = sorted((sorted_vertices(e) for e in self.edges), key=lambda e: [vertex_key(x) for x in e])
        return f"Graph({self.order()}, {es})"

    def order(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> list:
        return list(self._order)

    def sorted_edges(self) -> list[tuple]:
        es = [tuple(sorted_vertices(e)) for e in self.edges]
        return sorted(es, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def adjacent(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def isolated_vertices(self) -> list:
        return [v for v in self.sorted_vertices() if not self._adj[v]]

    def induced(self, vs) -> "Graph":
        vs = frozenset(vs)
        return Graph(vs, (e for e in self.edges if e <= vs))

    def to_json(self) -> dict:
        return {
            "vertices": [str(v) for v in self.sorted_vertices()],
            "edges": [[str(u), str(v)] for u, v in self.sorted_edges()],
            "convention": "anticommutation",
        }


def complement(g: Graph) -> Graph:
    vs = g.sorted_vertices()
    return Graph(vs, ((u, v) for u, v in itertools.combinations(vs, 2) if not g.adjacent(u, v)))


def path_graph(m: int) -> Graph:
    if m < 0:
        raise ValueError("path length must be non-negative")
    return Graph(range(1, m + 1), ((i, i + 1) for i in range(1, m)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"cycles need at least 3 vertices, got {m}")
    return Graph(range(1, m + 1), ((i, i % m + 1) for i in range(1, m + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices are relabeled ``(index, v)``."""
    vs, es = [], []
    for i, g in enumerate(graphs):
        vs.extend((i, v) for v in g.vertices)
        es.extend(((i, u), (i, v)) for u, v in (tuple(e) for e in g.edges))
    return Graph(vs, es)


def is_full_embedding(f: dict, pattern: Graph, host: Graph) -> bool:
    """Injective, total, and preserving both edges and non-edges."""
    if set(f) != set(pattern.vertices) or len(set(f.values())) != len(f):
        return False
    if not set(f.values()) <= host.vertices:
        return False
    return all(
        pattern.adjacent(u, v) == host.adjacent(f[u], f[v])
        for u, v in itertools.combinations(pattern.sorted_vertices(), 2)
    )


def find_full_embeddings(pattern: Graph, host: Graph) -> list[dict]:
    """All induced embeddings of ``pattern`` into ``host``, in deterministic order.

    Backtracking over pattern vertices in sorted order; a host vertex is a
    candidate only if its degree is at least the pattern vertex's degree.
    """
    pvs = pattern.sorted_vertices()
    hvs = host.sorted_vertices()
    if len(pvs) > len(hvs):
        return []
    found = []
    assignment: dict = {}
    used = set()

    def extend(i):
        if i == len(pvs):
            found.append(dict(assignment))
            return
        v = pvs[i]
        for x in hvs:
            if x in used or host.degree(x) < pattern.degree(v):
                continue
            if all(pattern.adjacent(v, u) == host.adjacent(x, assignment[u]) for u in pvs[:i]):
                assignment[v] = x
                used.add(x)
                extend(i + 1)
                used.discard(x)
                del assignment[v]

    extend(0)
    return found


def graph_from_json(doc: dict) -> Graph:
    """Load the graph file format, normalizing to the anti-commutation convention.

    With ``"convention": "commutation"`` the listed edges are commuting pairs
    and the graph is complemented on load.
    """
    try:
        vertices = [str(v) for v in doc["vertices"]]
        edges = [(str(u), str(v)) for u, v in doc.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from None
    convention = doc.get("convention", "anticommutation")
    g = Graph(vertices, edges)
    if convention == "commutation":
        return complement(g)
    if convention != "anticommutation":
        raise ValueError(f"unknown convention {convention!r}")
    return g


def load_graph(path) -> Graph:
    return graph_from_json(json.loads(Path(path).read_text()))
