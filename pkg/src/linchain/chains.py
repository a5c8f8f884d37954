"""Recursive bounds for linear chains obtained by cutting surfaces.

Two quantities are computed by mutual recursion on (genus, punctures):

* ``ell_recursive``: the longest linear chain.  Removing the last curve of a
  chain leaves, on one piece of the cut surface, a chained pair whose chain
  is two shorter.
* ``chained_recursive``: the longest chain occurring in a chained pair
  (chain plus an arc meeting only its last curve).  Cutting along the arc
  leaves a chained pair one shorter on one of the pieces.

Both are memoized with ``functools.lru_cache``, which is safe to share
between threads; results never depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .surfaces import (
    CutKind,
    CutOutcome,
    Surface,
    as_surface,
    ell_closed_form,
    enumerate_arc_cuts,
    enumerate_curve_cuts,
    f_closed_form,
)

SPORADIC = frozenset({(0, 4), (1, 0), (1, 1)})


def _best_component(outcome: CutOutcome) -> int:
    return max(_chained(c.genus, c.punctures) for c in outcome.components)


@lru_cache(maxsize=None)
def _chained(g: int, p: int) -> int:
    s = Surface(g, p)
    # no arcs on a closed surface, so no chained pair either
    if not s.has_essential_curve() or p == 0:
        return 0
    best = max((1 + _best_component(cut) for cut in enumerate_arc_cuts(s)), default=0)
    return max(2, best)


@lru_cache(maxsize=None)
def _ell(g: int, p: int) -> int:
    if g == 0 and p <= 3:
        return 0
    if (g, p) in SPORADIC:
        return 2
    return 2 + max(_best_component(cut) for cut in enumerate_curve_cuts(Surface(g, p)))


def chained_recursive(s) -> int:
    s = as_surface(s)
    return _chained(s.genus, s.punctures)


def ell_recursive(s) -> int:
    s = as_surface(s)
    return _ell(s.genus, s.punctures)


def clear_memo():
    _chained.cache_clear()
    _ell.cache_clear()


def maximizing_curve_cuts(s) -> list[CutOutcome]:
    """Curve cuts attaining the maximum in the ``ell_recursive`` step."""
    s = as_surface(s)
    cuts = enumerate_curve_cuts(s)
    if not cuts or (s.genus, s.punctures) in SPORADIC:
        return []
    top = max(_best_component(c) for c in cuts)
    return [c for c in cuts if _best_component(c) == top]


def maximizing_arc_cuts(s) -> list[CutOutcome]:
    s = as_surface(s)
    cuts = enumerate_arc_cuts(s)
    if not cuts or _chained(s.genus, s.punctures) == 0:
        return []
    top = max(_best_component(c) for c in cuts)
    if 1 + top < 2:
        return []
    return [c for c in cuts if _best_component(c) == top]


@dataclass(frozen=True)
class TraceStep:
    surface: Surface
    quantity: str  # "ell" or "chained"
    cut: CutOutcome | None
    piece: Surface | None
    value: int


@dataclass
class ChainBounds:
    surface: Surface
    ell_recursive: int
    chained_recursive: int
    trace: list[TraceStep] = field(default_factory=list)

    def replay(self) -> int:
        """Recompute the chain length from the trace alone."""
        total = 0
        for step in self.trace:
            if step.cut is None:
                return total + step.value
            total += 2 if step.quantity == "ell" else 1
        return total


def chain_bounds(s) -> ChainBounds:
    """Both recursive values for ``s`` plus the sequence of maximizing cuts.

    The trace follows the ``ell`` recursion: one curve cut, then arc cuts
    until a floor or base case is reached.  Ties go to the first outcome in
    enumeration order.
    """
    s = as_surface(s)
    trace = []
    cur, quantity = s, "ell"
    while True:
        if quantity == "ell":
            value = _ell(cur.genus, cur.punctures)
            cuts = maximizing_curve_cuts(cur)
        else:
            value = _chained(cur.genus, cur.punctures)
            cuts = maximizing_arc_cuts(cur)
            # the floor of 2 is a base case, not a cut
            if cuts and 1 + _best_component(cuts[0]) < value:
                cuts = []
        if not cuts:
            trace.append(TraceStep(cur, quantity, None, None, value))
            break
        cut = cuts[0]
        piece = max(cut.components, key=lambda c: _chained(c.genus, c.punctures))
        trace.append(TraceStep(cur, quantity, cut, piece, value))
        cur, quantity = piece, "chained"
    return ChainBounds(s, _ell(s.genus, s.punctures), _chained(s.genus, s.punctures), trace)


def _equality_region(s: Surface) -> bool:
    g, p = s.genus, s.punctures
    return (g == 0 and p >= 4) or (g >= 1 and p >= 1)


@dataclass
class GridReport:
    max_genus: int
    max_punctures: int
    cells: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "max_genus": self.max_genus,
            "max_punctures": self.max_punctures,
            "cells": self.cells,
            "violations": list(self.violations),
        }


def verify_grid(max_genus: int, max_punctures: int) -> GridReport:
    """Cross-check both recursions against the closed forms on a rectangle."""
    if max_genus < 0 or max_punctures < 0:
        raise ValueError("grid bounds must be non-negative")
    violations = []
    cells = 0
    for g in range(max_genus + 1):
        for p in range(max_punctures + 1):
            cells += 1
            s = Surface(g, p)
            ell_r, ell_c = ell_recursive(s), ell_closed_form(s)
            ch_r, f_c = chained_recursive(s), f_closed_form(s)
            if ell_r != ell_c:
                violations.append(f"{s}: ell recursive {ell_r} != closed form {ell_c}")
            if ch_r > f_c:
                violations.append(f"{s}: chained recursive {ch_r} > f {f_c}")
            elif _equality_region(s) and ch_r != f_c:
                violations.append(f"{s}: chained recursive {ch_r} != f {f_c}")
    return GridReport(max_genus, max_punctures, cells, violations)


__all__ = [
    "ChainBounds",
    "CutKind",
    "GridReport",
    "TraceStep",
    "chain_bounds",
    "chained_recursive",
    "clear_memo",
    "ell_recursive",
    "maximizing_arc_cuts",
    "maximizing_curve_cuts",
    "verify_grid",
]
