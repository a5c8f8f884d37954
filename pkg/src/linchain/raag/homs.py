"""Homomorphisms between right-angled Artin groups given on generators."""

from __future__ import annotations

import itertools

from .words import Raag, Word, commutator


class RaagHom:
    """A map of generators extended multiplicatively.

    Construction does not check the relations; ``relation_failures`` does.
    """

    def __init__(self, source: Raag, target: Raag, images: dict):
        missing = set(source.generators) - set(images)
        if missing:
            raise ValueError(f"no image given for {sorted(map(str, missing))}")
        for v, w in images.items():
            target.check_word(w)
        self.source = source
        self.target = target
        self.images = {v: target.normal_form(w) for v, w in images.items()}

    def __call__(self, w: Word) -> Word:
        self.source.check_word(w)
        out = Word()
        for gen, exp in w.syllables:
            out = out * self.images[gen] ** exp
        return self.target.normal_form(out)

    def relation_failures(self) -> list[tuple]:
        """Commuting generator pairs whose images fail to commute."""
        bad = []
        for u, v in itertools.combinations(self.source.generators, 2):
            if self.source.commutes(u, v):
                if not self.target.is_trivial(commutator(self.images[u], self.images[v])):
                    bad.append((u, v))
        return bad

    def is_homomorphism(self) -> bool:
        return not self.relation_failures()

    def compose(self, first: "RaagHom") -> "RaagHom":
        """``self`` after ``first``."""
        return RaagHom(first.source, self.target, {v: self(w) for v, w in first.images.items()})

    def __repr__(self):
        body = ", ".join(f"{v}->{w}" for v, w in self.images.items())
        return f"RaagHom({body})"


def power_endomorphism(r: Raag, exps) -> RaagHom:
    """v -> v^exps[v]; ``exps`` may be a single integer for all generators."""
    if isinstance(exps, int):
        exps = {v: exps for v in r.generators}
    for v in r.generators:
        if exps.get(v, 0) == 0:
            raise ValueError(f"power endomorphism needs a non-zero exponent for {v!r}")
    hom = RaagHom(r, r, {v: Word.gen(v, exps[v]) for v in r.generators})
    if hom.relation_failures():
        raise RuntimeError("power map failed the relation check")
    return hom
