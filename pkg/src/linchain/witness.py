"""Explicit maximal chains and cycles of curves, with a checker.

Planar curves are described combinatorially.  On the punctured sphere an
``Interval`` curve encloses a run of consecutive punctures on a line, and a
``CircularInterval`` curve encloses a run of punctures placed around a
circle.  Whether two such curves can be made disjoint is read off from the
puncture sets: two round curves enclosing sets A and B are disjoint iff the
sets are nested, disjoint, or together cover every puncture (so that the
complements are nested).

``ChainCurve`` and ``ExtensionCurve`` stand for the standard chain of
curves around the handles and the curves that continue it around the
punctures.  Their intersections are declared by fixed rules rather than
computed:

* ChainCurve i meets ChainCurve j iff |i - j| = 1 (cyclically in a cycle);
* ExtensionCurve j meets ExtensionCurve k iff |j - k| = 1;
* ExtensionCurve 1 meets exactly the last ChainCurve among the chain curves;
* every other pair is disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .decisions import max_cycle_in_mcg
from .surfaces import Surface, as_surface, ell_closed_form


class CurveKind(Enum):
    INTERVAL = "Interval"
    CIRCULAR_INTERVAL = "CircularInterval"
    CHAIN = "ChainCurve"
    EXTENSION = "ExtensionCurve"


PLANAR = (CurveKind.INTERVAL, CurveKind.CIRCULAR_INTERVAL)


class OutOfScope(ValueError):
    """No maximal configuration is known for the requested surface."""


@dataclass(frozen=True)
class CurveDescriptor:
    kind: CurveKind
    a: int  # first puncture, chain index, or extension index
    b: int | None = None  # last puncture for planar kinds
    modulus: int | None = None  # number of punctures on the circle

    @classmethod
    def interval(cls, a, b):
        if not 1 <= a <= b:
            raise ValueError(f"bad interval [{a},{b}]")
        return cls(CurveKind.INTERVAL, a, b)

    @classmethod
    def circular(cls, start, length, modulus):
        """Punctures start, start+1, ..., start+length-1 taken mod ``modulus`` (1-based)."""
        if not (1 <= start <= modulus and 1 <= length < modulus):
            raise ValueError(f"bad circular interval start={start} length={length} on {modulus}")
        return cls(CurveKind.CIRCULAR_INTERVAL, start, start + length - 1, modulus)

    @classmethod
    def chain(cls, k):
        return cls(CurveKind.CHAIN, k)

    @classmethod
    def extension(cls, j):
        return cls(CurveKind.EXTENSION, j)

    def punctures(self) -> frozenset:
        if self.kind is CurveKind.INTERVAL:
            return frozenset(range(self.a, self.b + 1))
        if self.kind is CurveKind.CIRCULAR_INTERVAL:
            return frozenset((i - 1) % self.modulus + 1 for i in range(self.a, self.b + 1))
        raise ValueError(f"{self.kind.value} has no puncture set")

    def __str__(self):
        if self.kind is CurveKind.INTERVAL:
            return f"I[{self.a},{self.b}]"
        if self.kind is CurveKind.CIRCULAR_INTERVAL:
            return "C{" + ",".join(str(i) for i in sorted(self.punctures())) + "}"
        if self.kind is CurveKind.CHAIN:
            return f"c{self.a}"
        return f"e{self.a}"

    def to_json(self) -> dict:
        doc = {"kind": self.kind.value, "index": self.a}
        if self.kind in PLANAR:
            doc = {"kind": self.kind.value, "punctures": sorted(self.punctures())}
        return doc


def _linked(A: frozenset, B: frozenset, universe: frozenset | None) -> bool:
    if A <= B or B <= A or not (A & B):
        return False
    if universe is not None and A | B >= universe:
        return False
    return True


def interval_adjacency(c1: CurveDescriptor, c2: CurveDescriptor, punctures: int | None = None) -> bool:
    """True iff the two planar curves must intersect.

    Without ``punctures`` only nesting and disjointness of the ranges are
    used.  Given the puncture count, two ranges that together cover every
    puncture also count as disjoint (their complements are nested).

    >>> I = CurveDescriptor.interval
    >>> interval_adjacency(I(1, 2), I(2, 3)), interval_adjacency(I(1, 4), I(2, 3))
    (True, False)
    """
    if c1.kind not in PLANAR or c2.kind is not c1.kind:
        raise ValueError(f"cannot compare {c1.kind.value} with {c2.kind.value}")
    if c1.kind is CurveKind.CIRCULAR_INTERVAL:
        if c1.modulus != c2.modulus:
            raise ValueError("circular intervals live on different circles")
        punctures = c1.modulus
    universe = frozenset(range(1, punctures + 1)) if punctures is not None else None
    return _linked(c1.punctures(), c2.punctures(), universe)


def _schema_adjacency(c1: CurveDescriptor, c2: CurveDescriptor, chain_len: int, cyclic: bool) -> bool:
    k1, k2 = c1.kind, c2.kind
    if k1 is CurveKind.CHAIN and k2 is CurveKind.CHAIN:
        d = abs(c1.a - c2.a)
        return d == 1 or (cyclic and d == chain_len - 1 and chain_len > 2)
    if k1 is CurveKind.EXTENSION and k2 is CurveKind.EXTENSION:
        return abs(c1.a - c2.a) == 1
    if {k1, k2} == {CurveKind.CHAIN, CurveKind.EXTENSION}:
        ch, ex = (c1, c2) if k1 is CurveKind.CHAIN else (c2, c1)
        return ex.a == 1 and ch.a == chain_len
    return False


@dataclass(frozen=True)
class ChainWitness:
    surface: Surface
    pattern: str  # "path" or "cycle"
    curves: tuple
    adjacency: tuple  # tuple of tuples of bool

    def __len__(self):
        return len(self.curves)

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.curves)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def to_json(self) -> dict:
        return {
            "surface": {"g": self.surface.genus, "p": self.surface.punctures},
            "pattern": self.pattern,
            "curves": [c.to_json() for c in self.curves],
            "edges": [list(e) for e in self.edges()],
        }

    def to_dot(self) -> str:
        lines = [f'graph "{self.surface}" {{']
        for i, c in enumerate(self.curves):
            lines.append(f'  {i} [label="{c}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _pattern_matrix(n: int, cyclic: bool) -> tuple:
    def hit(i, j):
        d = abs(i - j)
        return d == 1 or (cyclic and n > 2 and d == n - 1)

    return tuple(tuple(hit(i, j) for j in range(n)) for i in range(n))


def _derived_matrix(surface: Surface, curves, cyclic: bool) -> tuple:
    chain_len = sum(1 for c in curves if c.kind is CurveKind.CHAIN)
    n = len(curves)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(False)
            elif curves[i].kind in PLANAR and curves[j].kind is curves[i].kind:
                row.append(interval_adjacency(curves[i], curves[j], surface.punctures))
            else:
                row.append(_schema_adjacency(curves[i], curves[j], chain_len, cyclic))
        rows.append(tuple(row))
    return tuple(rows)


def build_path_witness(s) -> ChainWitness:
    """A linear chain of maximal length on ``s``."""
    s = as_surface(s)
    g, p = s.genus, s.punctures
    ell = ell_closed_form(s)
    if ell == 0:
        raise ValueError(f"{s} carries no linear chain")
    I = CurveDescriptor.interval
    if g == 0:
        # on S_{0,4} the curve around {3,4} is the curve around {1,2}
        curves = [I(1, 2), I(2, 3)] if p == 4 else [I(i, i + 1) for i in range(1, p)]
    elif g == 1 and p <= 1:
        curves = [CurveDescriptor.chain(1), CurveDescriptor.chain(2)]
    elif g == 1:
        curves = [CurveDescriptor.chain(k) for k in range(1, 4)]
        curves += [CurveDescriptor.extension(j) for j in range(1, p)]
    else:
        curves = [CurveDescriptor.chain(k) for k in range(1, 2 * g + 2)]
        curves += [CurveDescriptor.extension(j) for j in range(1, p + 1)]
    curves = tuple(curves)
    return ChainWitness(s, "path", curves, _pattern_matrix(len(curves), False))


def build_cycle_witness(s) -> ChainWitness:
    """A cycle of curves of maximal length, for the two families where it is known."""
    s = as_surface(s)
    g, p = s.genus, s.punctures
    if g == 0 and p >= 5:
        curves = tuple(CurveDescriptor.circular(i, 2, p) for i in range(1, p + 1))
    elif g >= 2 and p == 0:
        curves = tuple(CurveDescriptor.chain(k) for k in range(1, 2 * g + 3))
    else:
        raise OutOfScope(f"maximal cycles on {s} are not determined")
    return ChainWitness(s, "cycle", curves, _pattern_matrix(len(curves), True))


def _canonical(c: CurveDescriptor, surface: Surface):
    """Isotopy key: on a sphere a curve and its complementary curve coincide."""
    if c.kind in PLANAR and surface.genus == 0:
        A = c.punctures()
        B = frozenset(range(1, surface.punctures + 1)) - A
        return ("planar", frozenset((A, B)))
    return (c.kind, c.a, c.b, c.modulus)


def verify_witness(w: ChainWitness) -> list[str]:
    """Violations of the chain axioms; empty for a correct witness."""
    out = []
    s, n = w.surface, len(w.curves)
    cyclic = w.pattern == "cycle"
    if w.pattern == "path":
        expected = ell_closed_form(s)
    elif cyclic:
        expected = max_cycle_in_mcg(s).value
    else:
        return [f"unknown pattern {w.pattern!r}"]
    if expected is None or n != expected:
        out.append(f"length {n} differs from the maximum {expected}")
    if len(w.adjacency) != n or any(len(row) != n for row in w.adjacency):
        return out + ["adjacency matrix has the wrong shape"]
    for i in range(n):
        for j in range(i + 1, n):
            if w.adjacency[i][j] != w.adjacency[j][i]:
                out.append(f"adjacency not symmetric at ({i},{j})")
    pattern = _pattern_matrix(n, cyclic)
    for i in range(n):
        if w.adjacency[i][i]:
            out.append(f"curve {i} intersects itself")
        for j in range(i + 1, n):
            if w.adjacency[i][j] and not pattern[i][j]:
                out.append(f"non-consecutive intersect: {w.curves[i]} and {w.curves[j]}")
            elif pattern[i][j] and not w.adjacency[i][j]:
                out.append(f"consecutive disjoint: {w.curves[i]} and {w.curves[j]}")
    for c in w.curves:
        if c.kind is CurveKind.INTERVAL:
            size = c.b - c.a + 1
            if c.b > s.punctures or not 2 <= size <= s.punctures - 2:
                out.append(f"{c} is not essential on {s}")
        elif c.kind is CurveKind.CIRCULAR_INTERVAL:
            if c.modulus != s.punctures or not 2 <= len(c.punctures()) <= s.punctures - 2:
                out.append(f"{c} is not essential on {s}")
        elif c.kind is CurveKind.CHAIN and not 1 <= c.a <= 2 * s.genus + 2:
            out.append(f"{c} exceeds the handle chain of {s}")
        elif c.kind is CurveKind.EXTENSION and not 1 <= c.a <= s.punctures:
            out.append(f"{c} exceeds the punctures of {s}")
    derived = _derived_matrix(s, w.curves, cyclic)
    for i in range(n):
        for j in range(i + 1, n):
            if derived[i][j] != w.adjacency[i][j]:
                out.append(f"declared adjacency of {w.curves[i]}, {w.curves[j]} contradicts the curve calculus")
    seen = {}
    for c in w.curves:
        key = _canonical(c, s)
        if key in seen:
            out.append(f"duplicate descriptor {c} (same curve as {seen[key]})")
        else:
            seen[key] = c
    return out
