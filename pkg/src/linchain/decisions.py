"""Decision tables and obstruction checks for path and cycle RAAGs.

Two kinds of answers come out of here.  Threshold questions ("does G(P_m)
embed in Mod(S)?") have complete answers and return booleans or Yes/No.
Virtual-embedding questions only have necessary conditions, so those
checks return ``Obstructed`` or ``NoObstructionFound`` and never ``Yes``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .surfaces import Surface, as_surface, euler, xi


class DomainError(ValueError):
    """Arguments outside the domain of the question (e.g. a cycle on 2 vertices)."""


class Answer(Enum):
    YES = "Yes"
    NO = "No"
    OBSTRUCTED = "Obstructed"
    NO_OBSTRUCTION_FOUND = "NoObstructionFound"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class Reason:
    name: str
    lhs: int
    rhs: int
    ok: bool

    @classmethod
    def at_most(cls, name, lhs, rhs):
        return cls(name, lhs, rhs, lhs <= rhs)

    def to_json(self):
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


@dataclass
class Verdict:
    answer: Answer
    reasons: list[Reason] = field(default_factory=list)
    scope_note: str = ""
    value: int | None = None  # the maximum, for table lookups
    bound: int | None = None  # informational upper bound outside the decided range

    @classmethod
    def from_checks(cls, reasons, note=""):
        """Obstructed iff some check fails."""
        answer = Answer.OBSTRUCTED if any(not r.ok for r in reasons) else Answer.NO_OBSTRUCTION_FOUND
        return cls(answer, list(reasons), note)

    @property
    def failing(self) -> list[Reason]:
        return [r for r in self.reasons if not r.ok]

    def to_json(self) -> dict:
        doc = {
            "answer": self.answer.value,
            "reasons": [r.to_json() for r in self.reasons],
            "scope_note": self.scope_note,
        }
        if self.value is not None:
            doc["value"] = self.value
        if self.bound is not None:
            doc["bound"] = self.bound
        return doc


@dataclass(frozen=True)
class BraidTarget:
    strands: int
    pure: bool = False

    def __post_init__(self):
        if self.strands < 1:
            raise DomainError(f"a braid group needs at least one strand, got {self.strands}")

    def __str__(self):
        return f"{'PB' if self.pure else 'B'}_{self.strands}"


def _braid(t) -> BraidTarget:
    return t if isinstance(t, BraidTarget) else BraidTarget(int(t))


def max_path_in_mcg(s) -> int:
    """Largest m with G(P_m) embedded in Mod(S_{g,p})."""
    s = as_surface(s)
    g, p = s.genus, s.punctures
    if (g, p) in ((0, 0), (0, 1), (0, 2), (0, 3)):
        return 0
    if (g, p) in ((0, 4), (1, 0), (1, 1)):
        return 2
    if g == 0:
        return p - 1
    if g == 1:
        return p + 2
    return 2 * g + p + 1


def max_cycle_in_mcg(s) -> Verdict:
    """Largest m with G(C_m) embedded in Mod(S), on the families where it is known.

    Elsewhere the answer is OutOfScope; ``bound`` then carries the necessary
    condition m - 1 <= ell(S) coming from P_{m-1} inside C_m.
    """
    s = as_surface(s)
    g, p = s.genus, s.punctures
    if g == 0 and p >= 5:
        return Verdict(Answer.YES, value=p, scope_note="planar family: m <= p")
    if g >= 2 and p == 0:
        return Verdict(Answer.YES, value=2 * g + 2, scope_note="closed family: m <= 2g+2")
    return Verdict(
        Answer.OUT_OF_SCOPE,
        scope_note=f"cycle embeddings into Mod({s}) are only bounded, not decided",
        bound=max_path_in_mcg(s) + 1,
    )


def max_path_in_braid(t) -> int:
    """Same value for B_p and PB_p."""
    n = _braid(t).strands
    if n == 1:
        return 0
    if n in (2, 3):
        return n - 1
    return n


def max_cycle_in_braid(t) -> int:
    """0 means no cycle graph embeds (cycles have at least 3 vertices)."""
    n = _braid(t).strands
    if n <= 2:
        return 0
    if n == 3:
        return 3
    return n + 1


def _check_path(m):
    if m < 0:
        raise DomainError(f"path length must be non-negative, got {m}")


def _check_cycle(m):
    if m < 3:
        raise DomainError(f"cycles need at least 3 vertices, got {m}")


def decide_path_in_mcg(m: int, s) -> bool:
    _check_path(m)
    return m <= max_path_in_mcg(s)


def decide_cycle_in_mcg(m: int, s) -> Verdict:
    """Yes/No on the decided families, OutOfScope (with ``bound``) elsewhere."""
    _check_cycle(m)
    table = max_cycle_in_mcg(s)
    if table.answer is Answer.OUT_OF_SCOPE:
        return Verdict(Answer.OUT_OF_SCOPE, scope_note=table.scope_note, bound=table.bound)
    r = Reason.at_most("m <= max cycle", m, table.value)
    return Verdict(Answer.YES if r.ok else Answer.NO, [r], table.scope_note, value=table.value)


def decide_path_in_braid(m: int, t) -> bool:
    _check_path(m)
    return m <= max_path_in_braid(t)


def decide_cycle_in_braid(m: int, t) -> bool:
    _check_cycle(m)
    return m <= max_cycle_in_braid(t)


def ell(s) -> int:
    return max_path_in_mcg(s)


def max_abelian_rank(genus: int, punctures: int = 0, boundary: int = 0) -> int:
    """Maximal rank of a free abelian subgroup of Mod(S_{g,p}^b).

    A pants decomposition gives xi curves; each boundary component adds its
    own central twist, except on the disk (trivial group) and the annulus
    (one core twist).
    """
    if genus == 0 and punctures == 0 and boundary in (1, 2):
        return boundary - 1
    closed = Surface(genus, punctures + boundary)
    base = 1 if (closed.genus, closed.punctures) == (1, 0) else max(0, xi(closed))
    return base + boundary


def virtual_mcg_obstruction(source, target) -> Verdict:
    """Necessary conditions for a finite-index subgroup of Mod(source) to embed in Mod(target)."""
    a, b = as_surface(source), as_surface(target)
    if euler(a) >= 0:
        return Verdict(Answer.OUT_OF_SCOPE, scope_note=f"{a} has non-negative Euler characteristic")
    reasons = [
        Reason.at_most("xi", xi(a), xi(b)),
        Reason.at_most("ell", ell(a), ell(b)),
    ]
    if a.genus >= 2 and b.genus >= 2:
        reasons.append(Reason.at_most("3g+p", 3 * a.genus + a.punctures, 3 * b.genus + b.punctures))
        reasons.append(Reason.at_most("2g+p", 2 * a.genus + a.punctures, 2 * b.genus + b.punctures))
    return Verdict.from_checks(reasons, f"{a} -> {b}")


def sphere_into_closed_virtual(p: int, g: int) -> Verdict:
    """Mod(S_{0,p}) is virtually embedded in Mod(S_{g,0}) iff p <= 2g + 2, for g >= 2."""
    if g < 2:
        return Verdict(Answer.OUT_OF_SCOPE, scope_note="closed target must have genus at least 2")
    if p < 0:
        raise DomainError("puncture count must be non-negative")
    r = Reason.at_most("p <= 2g+2", p, 2 * g + 2)
    return Verdict(Answer.YES if r.ok else Answer.NO, [r], f"S_{{0,{p}}} -> S_{{{g},0}}")


def braid_virtual_obstruction(n: int, target, target_boundary: int = 0) -> Verdict:
    """Necessary conditions for a finite-index subgroup of B_n to embed in Mod(S_{g'}^b).

    ``target`` is a closed surface (no punctures) and ``target_boundary`` its
    number of boundary components.  Three checks run when they apply:

    * the genus inequality for n = 2g+1 into b in {0, 1}, or n = 2g+2 into
      b in {0, 2};
    * the free abelian rank n - 1 of B_n against the target's maximal rank;
    * the longest path RAAG in B_n against ell of the target with its
      boundary capped by punctures.
    """
    if n < 1:
        raise DomainError("braid groups need at least one strand")
    t = as_surface(target)
    if t.punctures != 0:
        return Verdict(Answer.OUT_OF_SCOPE, scope_note="target must have no punctures")
    if target_boundary not in (0, 1, 2):
        raise DomainError(f"boundary count must be 0, 1 or 2, got {target_boundary}")
    g_prime, b = t.genus, target_boundary
    reasons = []
    notes = []
    if n % 2:
        g = (n - 1) // 2
        if b in (0, 1):
            reasons.append(Reason.at_most("g <= g'", g, g_prime))
        else:
            notes.append("no genus inequality for odd strands into two boundary components")
    else:
        g = (n - 2) // 2
        if b == 0:
            reasons.append(Reason.at_most("g+1 <= g'", g + 1, g_prime))
        elif b == 2:
            reasons.append(Reason.at_most("g <= g'", g, g_prime))
        else:
            notes.append("no genus inequality for even strands into one boundary component")
    reasons.append(Reason.at_most("abelian rank", n - 1, max_abelian_rank(g_prime, 0, b)))
    m = max_path_in_braid(n)
    if m >= 2:
        # centerless, so it survives capping the boundary
        reasons.append(Reason.at_most("path bound", m, ell(Surface(g_prime, b))))
    sb = f"S_{{{g_prime},0}}" + (f"^{b}" if b else "")
    return Verdict.from_checks(reasons, "; ".join([f"B_{n} -> {sb}"] + notes))


def rigidity_check(a, b) -> Verdict:
    """Mutual virtual embedding of Mod(a) and Mod(b), genera >= 2, forces a = b."""
    a, b = as_surface(a), as_surface(b)
    if a.genus < 2 or b.genus < 2:
        return Verdict(Answer.OUT_OF_SCOPE, scope_note="both genera must be at least 2")
    forward = virtual_mcg_obstruction(a, b)
    backward = virtual_mcg_obstruction(b, a)
    reasons = [Reason(f"{a}->{b}: {r.name}", r.lhs, r.rhs, r.ok) for r in forward.reasons]
    reasons += [Reason(f"{b}->{a}: {r.name}", r.lhs, r.rhs, r.ok) for r in backward.reasons]
    failed = [
        d for d, v in ((f"{a}->{b}", forward), (f"{b}->{a}", backward)) if v.answer is Answer.OBSTRUCTED
    ]
    if failed:
        return Verdict(Answer.OBSTRUCTED, reasons, "obstructed: " + ", ".join(failed))
    if a != b:
        raise RuntimeError(f"both directions unobstructed for distinct surfaces {a}, {b}")
    return Verdict(Answer.YES, reasons, "a = b")
