"""Multi-valued homomorphisms, covering maps and path lifting.

A multi-valued homomorphism ``phi: Gamma ~> Lambda`` sends each vertex of
``Gamma`` to a non-empty set of vertices of ``Lambda`` such that adjacent
vertices go to sets that are completely joined to each other.  ``Gamma`` plays
the role of the intersection pattern of Dehn twist curves and ``Lambda`` the
defining graph of the group being mapped in, so the induced group
homomorphism runs the other way, ``G(Lambda) -> G(Gamma)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..graphs import Graph, graph_from_json, is_full_embedding, path_graph, sorted_vertices
from .homs import RaagHom
from .words import Raag, Word


@dataclass(frozen=True)
class MultiValuedHom:
    source: Graph
    target: Graph
    assignment: dict  # source vertex -> frozenset of target vertices

    def __post_init__(self):
        object.__setattr__(
            self, "assignment", {v: frozenset(us) for v, us in self.assignment.items()}
        )

    def __call__(self, v) -> frozenset:
        return self.assignment[v]

    def preimage(self, u) -> list:
        return [x for x in self.source.sorted_vertices() if u in self.assignment.get(x, ())]

    def vertex_image(self) -> set:
        return set().union(*self.assignment.values()) if self.assignment else set()

    def covered_edges(self) -> set:
        """Target edges {u1,u2} with u1 in phi(x), u2 in phi(y) for some source edge {x,y}."""
        out = set()
        for e in self.source.edges:
            x, y = tuple(e)
            for u1 in self.assignment[x]:
                for u2 in self.assignment[y]:
                    if u1 != u2:
                        out.add(frozenset((u1, u2)))
        return out


def validate_mvh(phi: MultiValuedHom) -> list[str]:
    """Every violation of the axioms; an empty list means ``phi`` is valid."""
    problems = []
    src, tgt = phi.source, phi.target
    for v in sorted_vertices(set(phi.assignment) - src.vertices):
        problems.append(f"{v!r} is not a source vertex")
    for v in src.sorted_vertices():
        image = phi.assignment.get(v)
        if not image:
            problems.append(f"axiom 0: {v!r} has empty image")
            continue
        stray = image - tgt.vertices
        if stray:
            problems.append(f"{v!r} maps to non-target vertices {sorted_vertices(stray)!r}")
    for x, y in src.sorted_edges():
        for u1 in sorted_vertices(phi.assignment.get(x, ())):
            for u2 in sorted_vertices(phi.assignment.get(y, ())):
                if not tgt.adjacent(u1, u2):
                    problems.append(f"axiom 1: edge {x!r}-{y!r} maps onto non-edge {u1!r},{u2!r}")
    return problems


def is_valid_mvh(phi: MultiValuedHom) -> bool:
    return not validate_mvh(phi)


@dataclass(frozen=True)
class TwistAssignment:
    """Each target vertex is sent to a product of commuting twist powers.

    ``twists[u]`` lists ``(gamma_vertex, exponent)`` pairs; the listed gamma
    vertices must be pairwise non-adjacent in ``gamma``.
    """

    lam: Graph
    gamma: Graph
    twists: dict

    def __post_init__(self):
        for u in self.lam.sorted_vertices():
            items = self.twists.get(u)
            if not items:
                raise ValueError(f"{u!r} has no twists")
            xs = [x for x, _ in items]
            if len(set(xs)) != len(xs):
                raise ValueError(f"{u!r} repeats a twist curve")
            for x, e in items:
                if x not in self.gamma.vertices:
                    raise ValueError(f"{x!r} is not a vertex of gamma")
                if e == 0:
                    raise ValueError(f"zero exponent for twist {x!r} in {u!r}")
            for x, y in itertools.combinations(xs, 2):
                if self.gamma.adjacent(x, y):
                    raise ValueError(f"twists {x!r} and {y!r} in {u!r} do not commute")
        extra = set(self.twists) - self.lam.vertices
        if extra:
            raise ValueError(f"twists given for non-vertices {sorted_vertices(extra)!r}")


@dataclass
class TwistShadow:
    mvh: MultiValuedHom
    violations: list[str]
    unwitnessed_edges: list[tuple] = field(default_factory=list)

    @property
    def obstructed(self) -> bool:
        """The assignment cannot come from an injective twist-product homomorphism."""
        return bool(self.violations)


def mvh_from_twist_assignment(t: TwistAssignment) -> TwistShadow:
    """Graph-level shadow of a twist-product homomorphism.

    Each occurring curve is sent to the set of target vertices whose image
    uses it; ``gamma`` is restricted to the occurring curves.  Target edges
    that no curve edge sits over are reported in ``unwitnessed_edges``: an
    injective homomorphism would need such a witness.
    """
    assignment: dict = {}
    for u in t.lam.sorted_vertices():
        for x, _ in t.twists[u]:
            assignment.setdefault(x, set()).add(u)
    source = t.gamma.induced(assignment)
    phi = MultiValuedHom(source, t.lam, assignment)
    covered = phi.covered_edges()
    unwitnessed = [e for e in t.lam.sorted_edges() if frozenset(e) not in covered]
    return TwistShadow(phi, validate_mvh(phi), unwitnessed)


def induced_raag_hom(phi: MultiValuedHom, exps: dict | None = None) -> RaagHom:
    """u -> product over x in phi^-1(u) of x^e(u, x), a map G(target) -> G(source).

    Factors are taken in sorted source-vertex order.  ``exps`` maps
    ``(u, x)`` to a non-zero integer and defaults to 1.  The relation check
    is run and a failure raises ``RuntimeError``: for a valid ``phi`` it
    cannot happen.
    """
    problems = validate_mvh(phi)
    if problems:
        raise ValueError("not a multi-valued homomorphism: " + "; ".join(problems))
    exps = exps or {}
    images = {}
    for u in phi.target.sorted_vertices():
        syl = []
        for x in phi.preimage(u):
            e = exps.get((u, x), 1)
            if e == 0:
                raise ValueError(f"zero exponent for ({u!r}, {x!r})")
            syl.append((x, e))
        images[u] = Word(syl)
    hom = RaagHom(Raag(phi.target), Raag(phi.source), images)
    bad = hom.relation_failures()
    if bad:
        raise RuntimeError(f"induced map is not a homomorphism on {bad!r}")
    return hom


def is_covering_map(f: dict, source: Graph, target: Graph) -> bool:
    """Surjective, edge-preserving and a bijection on every vertex neighbourhood."""
    if set(f) != set(source.vertices) or set(f.values()) != set(target.vertices):
        return False
    for x in source.vertices:
        nbrs = [f[y] for y in source.neighbors(x)]
        if len(set(nbrs)) != len(nbrs) or set(nbrs) != set(target.neighbors(f[x])):
            return False
    return True


def covering_mvh(f: dict, source: Graph, target: Graph) -> MultiValuedHom:
    return MultiValuedHom(source, target, {x: {u} for x, u in f.items()})


@dataclass
class CoveringEmbedding:
    psi: RaagHom  # G(target) -> G(source), u -> product of its fibre
    projection: RaagHom  # x -> f(x) on words; need not respect the relations
    power: RaagHom  # u -> u^(fibre size)
    projection_failures: list = field(default_factory=list)

    @property
    def projection_is_homomorphism(self) -> bool:
        return not self.projection_failures


def covering_embedding_data(f: dict, source: Graph, target: Graph) -> CoveringEmbedding:
    """The embedding G(target) -> G(source) attached to a covering map.

    Checks that projecting the fibre product recovers the power map
    u -> u^#fibre on every generator.  The projection x -> f(x) is applied
    as a substitution of words.  It is a homomorphism only when non-adjacent
    vertices always have non-adjacent images, which fails for C_6 -> C_3
    (1 and 3 commute upstairs but not downstairs); the offending pairs are
    kept in ``projection_failures``.
    """
    if not is_covering_map(f, source, target):
        raise ValueError("not a covering map")
    psi = induced_raag_hom(covering_mvh(f, source, target))
    g_src, g_tgt = Raag(source), Raag(target)
    proj = RaagHom(g_src, g_tgt, {x: Word.gen(u) for x, u in f.items()})
    fibres = {u: sum(1 for x in f if f[x] == u) for u in target.vertices}
    power = RaagHom(g_tgt, g_tgt, {u: Word.gen(u, n) for u, n in fibres.items()})
    composite = proj.compose(psi)
    for u in g_tgt.generators:
        if composite.images[u] != power.images[u]:
            raise RuntimeError(f"projection of fibre product differs from power map at {u!r}")
    return CoveringEmbedding(psi, proj, power, proj.relation_failures())


def _search_lift(phi: MultiValuedHom, path: list) -> list | None:
    gamma = phi.source
    candidates = [
        [x for x in gamma.sorted_vertices() if u in phi.assignment[x]] for u in path
    ]
    chosen: list = []

    def extend(k):
        if k == len(path):
            return True
        for x in candidates[k]:
            if x in chosen:
                continue
            if k and not gamma.adjacent(chosen[-1], x):
                continue
            if any(gamma.adjacent(y, x) for y in chosen[:-1]):
                continue
            chosen.append(x)
            if extend(k + 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if extend(0) else None


def lift_path(phi: MultiValuedHom, iota: dict) -> dict | None:
    """Lift a full embedding of a path into the target to one into the source.

    ``iota`` maps ``1..n`` onto an induced path of ``phi.target``.  Returns
    the lexicographically first ``k -> x`` with ``iota[k] in phi(x)`` whose
    image is an induced path of ``phi.source``, or ``None``.
    """
    problems = validate_mvh(phi)
    if problems:
        raise ValueError("not a multi-valued homomorphism: " + "; ".join(problems))
    n = len(iota)
    if not is_full_embedding(iota, path_graph(n), phi.target):
        raise ValueError("iota is not a full embedding of a path")
    lift = _search_lift(phi, [iota[k] for k in range(1, n + 1)])
    if lift is None:
        return None
    return {k: x for k, x in zip(range(1, n + 1), lift)}


def mvh_from_json(doc: dict) -> MultiValuedHom:
    """``{"source": graph, "target": graph, "assignment": {x: [u, ...]}}``.

    Graphs use the graph file format; labels are strings.
    """
    try:
        source = graph_from_json(doc["source"])
        target = graph_from_json(doc["target"])
        assignment = {str(x): {str(u) for u in us} for x, us in doc["assignment"].items()}
    except (KeyError, AttributeError, TypeError) as exc:
        raise ValueError(f"malformed multi-valued homomorphism document: {exc}") from None
    return MultiValuedHom(source, target, assignment)


__all__ = [
    "CoveringEmbedding",
    "MultiValuedHom",
    "TwistAssignment",
    "TwistShadow",
    "covering_embedding_data",
    "covering_mvh",
    "induced_raag_hom",
    "is_covering_map",
    "is_valid_mvh",
    "lift_path",
    "mvh_from_json",
    "mvh_from_twist_assignment",
    "validate_mvh",
]
