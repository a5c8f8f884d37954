"""Words in right-angled Artin groups.

Convention: an edge of the defining graph means the two generators do NOT
commute.  Every generator commutes with itself and with every generator it is
not joined to.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..graphs import Graph, complement, vertex_key

_TOKEN = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Word:
    syllables: tuple  # of (generator, non-zero exponent)

    def __init__(self, syllables=()):
        merged = []
        for gen, exp in syllables:
            if exp == 0:
                raise ValueError(f"zero exponent on {gen!r}")
            if merged and merged[-1][0] == gen:
                total = merged[-1][1] + exp
                merged.pop()
                if total:
                    merged.append((gen, total))
            else:
                merged.append((gen, exp))
        object.__setattr__(self, "syllables", tuple(merged))

    @classmethod
    def gen(cls, v, exp=1) -> "Word":
        return cls(((v, exp),))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse whitespace-separated ``v`` or ``v^k`` tokens, e.g. ``"u v^-1 u"``."""
        out = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"bad token {tok!r}")
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if exp == 0:
                raise ValueError(f"zero exponent in {tok!r}")
            out.append((m.group(1), exp))
        return cls(out)

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.syllables * n)

    def __bool__(self):
        return bool(self.syllables)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    def letters(self) -> list:
        """Expand into ``(generator, +1 | -1)`` letters."""
        out = []
        for g, e in self.syllables:
            out.extend([(g, 1 if e > 0 else -1)] * abs(e))
        return out

    def generators(self) -> set:
        return {g for g, _ in self.syllables}


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


class Raag:
    """The right-angled Artin group on an anti-commutation graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._rank = {v: i for i, v in enumerate(graph.sorted_vertices())}

    @classmethod
    def from_commutation_graph(cls, graph: Graph) -> "Raag":
        return cls(complement(graph))

    def __repr__(self):
        return f"Raag({self.graph!r})"

    def __eq__(self, other):
        return isinstance(other, Raag) and self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    @property
    def generators(self) -> list:
        return self.graph.sorted_vertices()

    def commutes(self, u, v) -> bool:
        return u == v or not self.graph.adjacent(u, v)

    def check_word(self, w: Word):
        unknown = w.generators() - self.graph.vertices
        if unknown:
            raise ValueError(f"unknown generators {sorted(unknown, key=vertex_key)!r}")

    def reduce(self, w: Word) -> list:
        """Freely and partially-commutatively reduced letter list.

        Each new letter looks back past letters it commutes with; meeting its
        own inverse cancels both.  Cancelling never unblocks an earlier pair,
        so one left-to-right pass suffices.
        """
        self.check_word(w)
        out: list = []
        for gen, sign in w.letters():
            j = len(out) - 1
            cancelled = False
            while j >= 0:
                g2, s2 = out[j]
                if g2 == gen:
                    if s2 == -sign:
                        del out[j]
                        cancelled = True
                    break
                if not self.commutes(g2, gen):
                    break
                j -= 1
            if not cancelled:
                out.append((gen, sign))
        return out

    def normal_form(self, w: Word) -> Word:
        """Canonical shortest representative of ``w``.

        The reduced letters are rearranged into the lexicographically least
        order reachable by swapping adjacent commuting letters, using the
        sorted vertex order (then sign) as the alphabet order.
        """
        rest = self.reduce(w)
        out = []
        while rest:
            best = None
            for i, (gen, sign) in enumerate(rest):
                if all(self.commutes(g2, gen) and g2 != gen for g2, _ in rest[:i]):
                    key = (self._rank[gen], sign)
                    if best is None or key < best[0]:
                        best = (key, i)
            out.append(rest.pop(best[1]))
        return Word(out)

    def is_trivial(self, w: Word) -> bool:
        return not self.reduce(w)

    def equal(self, a: Word, b: Word) -> bool:
        return self.is_trivial(a * b.inverse())

    def support(self, w: Word) -> set:
        return self.normal_form(w).generators()

    def center_generators(self) -> list:
        return self.graph.isolated_vertices()

    def is_centerless(self) -> bool:
        """True iff no generator is central, i.e. no isolated vertex.

        The trivial group (empty graph) counts as centerless.
        """
        return not self.graph.isolated_vertices()


def normal_form(r: Raag, w: Word) -> Word:
    return r.normal_form(w)


def support(r: Raag, w: Word) -> set:
    return r.support(w)


def is_centerless(r: Raag) -> bool:
    return r.is_centerless()
