"""Surface arithmetic and cut enumeration.

A surface is recorded only by its genus and the number of punctures; boundary
components and punctures are counted together.  Cutting along an essential
simple closed curve or an essential properly embedded arc produces one or two
pieces, and the enumerators below list every topological type that can occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True, order=True)
class Surface:
    genus: int
    punctures: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError(f"genus and punctures must be non-negative, got {self.genus}, {self.punctures}")

    def __str__(self):
        return f"S_{{{self.genus},{self.punctures}}}"

    @classmethod
    def parse(cls, text: str) -> "Surface":
        """Parse ``"g,p"``."""
        try:
            g, p = (int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"expected 'g,p', got {text!r}") from None
        return cls(g, p)

    @property
    def euler(self) -> int:
        return euler(self)

    def has_essential_curve(self) -> bool:
        return self.genus >= 1 or self.punctures >= 4


def as_surface(s) -> Surface:
    if isinstance(s, Surface):
        return s
    g, p = s
    return Surface(g, p)


class CutKind(Enum):
    NON_SEPARATING_CURVE = "NonSeparatingCurve"
    SEPARATING_CURVE = "SeparatingCurve"
    NON_SEPARATING_ARC_GENUS_REDUCING = "NonSeparatingArcGenusReducing"
    NON_SEPARATING_ARC_GENUS_PRESERVING = "NonSeparatingArcGenusPreserving"
    SEPARATING_ARC = "SeparatingArc"

    @property
    def is_arc(self) -> bool:
        return self not in (CutKind.NON_SEPARATING_CURVE, CutKind.SEPARATING_CURVE)


@dataclass(frozen=True)
class CutOutcome:
    """The pieces left after one cut; ``components`` is sorted."""

    kind: CutKind
    components: tuple[Surface, ...]

    def __post_init__(self):
        if len(self.components) not in (1, 2):
            raise ValueError("a cut produces one or two components")
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    def euler_sum(self) -> int:
        return sum(euler(c) for c in self.components)

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.components) + "}"


def euler(s: Surface) -> int:
    return 2 - 2 * s.genus - s.punctures


def xi(s: Surface) -> int:
    """Topological complexity 3g - 3 + p; negative for the smallest surfaces."""
    return 3 * s.genus - 3 + s.punctures


def ell_closed_form(s: Surface) -> int:
    """Maximum length of a linear chain of curves on ``s``."""
    g, p = s.genus, s.punctures
    if g == 0 and p <= 3:
        return 0
    if (g, p) in ((0, 4), (1, 0), (1, 1)):
        return 2
    if g == 0:
        return p - 1
    if g == 1:
        return p + 2
    return 2 * g + p + 1


def f_closed_form(s: Surface) -> int:
    """Upper bound on the chain length of a chained pair (chain plus arc) on ``s``.

    Total and clamped at zero; only meaningful where ``s`` carries both an
    essential curve and an arc.
    """
    g, p = s.genus, s.punctures
    if g == 0:
        return max(p - 2, 0)
    if g == 1:
        return p + 1
    return 2 * g + p - 1


def _separating_splits(g: int, total: int, min_planar: int):
    """Unordered pairs {(g1,p1),(g2,p2)} with g1+g2=g, p1+p2=total."""
    seen = set()
    for g1 in range(g + 1):
        g2 = g - g1
        for p1 in range(1, total):
            p2 = total - p1
            if (g1 == 0 and p1 < min_planar) or (g2 == 0 and p2 < min_planar):
                continue
            pair = tuple(sorted((Surface(g1, p1), Surface(g2, p2))))
            if pair not in seen:
                seen.add(pair)
                yield pair


def enumerate_curve_cuts(s: Surface) -> list[CutOutcome]:
    """Every way an essential closed curve can cut ``s``.

    Empty when ``s`` has no essential curve.

    >>> [str(c) for c in enumerate_curve_cuts(Surface(2, 0))]
    ['{S_{1,2}}', '{S_{1,1}, S_{1,1}}']
    """
    if not s.has_essential_curve():
        return []
    out = []
    if s.genus >= 1:
        out.append(CutOutcome(CutKind.NON_SEPARATING_CURVE, (Surface(s.genus - 1, s.punctures + 2),)))
    for pair in _separating_splits(s.genus, s.punctures + 2, 3):
        out.append(CutOutcome(CutKind.SEPARATING_CURVE, pair))
    return out


def enumerate_arc_cuts(s: Surface) -> list[CutOutcome]:
    """Every way an essential arc can cut ``s``.

    Besides the genus-reducing non-separating arc (both ends on one boundary
    component) this includes the case of an arc joining two distinct
    boundary components, which leaves genus unchanged and merges the two
    boundaries into one.
    """
    g, p = s.genus, s.punctures
    if p < 1:
        return []
    out = []
    if g >= 1:
        out.append(CutOutcome(CutKind.NON_SEPARATING_ARC_GENUS_REDUCING, (Surface(g - 1, p + 1),)))
    if p >= 2:
        out.append(CutOutcome(CutKind.NON_SEPARATING_ARC_GENUS_PRESERVING, (Surface(g, p - 1),)))
    for pair in _separating_splits(g, p + 1, 2):
        out.append(CutOutcome(CutKind.SEPARATING_ARC, pair))
    return out
