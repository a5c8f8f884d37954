"""Brute-force reference implementations used by the tests.

Nothing here imports the package's algorithms; each oracle restates the
definition in the most direct (and slowest) way available.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import cache


# --- surfaces ---------------------------------------------------------------

def chi(g, p):
    return 2 - 2 * g - p


def brute_curve_cuts(g, p):
    """Cuts along an essential closed curve, as sorted tuples of (g, p) pieces.

    Non-separating: the genus drops and the curve leaves two new boundary
    components.  Separating: both sides get one new boundary and each side
    must have negative Euler characteristic (otherwise the curve bounds a
    disk or a once-punctured disk and is inessential).
    """
    out = set()
    if g >= 1:
        out.add(((g - 1, p + 2),))
    for g1, g2 in itertools.product(range(g + 1), repeat=2):
        for p1, p2 in itertools.product(range(1, p + 2), repeat=2):
            if g1 + g2 != g or chi(g1, p1) + chi(g2, p2) != chi(g, p):
                continue
            if chi(g1, p1) < 0 and chi(g2, p2) < 0:
                out.add(tuple(sorted(((g1, p1), (g2, p2)))))
    return out


def brute_arc_cuts(g, p):
    """Cuts along an essential arc.

    An arc meets the boundary, so p >= 1.  It raises the Euler
    characteristic by one.  A separating arc is essential iff neither side
    is a disk.
    """
    out = set()
    if p < 1:
        return out
    if g >= 1:
        out.add(((g - 1, p + 1),))  # both ends on the same boundary
    if p >= 2:
        out.add(((g, p - 1),))  # ends on two different boundaries
    for g1, g2 in itertools.product(range(g + 1), repeat=2):
        for p1, p2 in itertools.product(range(1, p + 1), repeat=2):
            if g1 + g2 != g or chi(g1, p1) + chi(g2, p2) != chi(g, p) + 1:
                continue
            if (g1, p1) != (0, 1) and (g2, p2) != (0, 1):
                out.add(tuple(sorted(((g1, p1), (g2, p2)))))
    return out


def has_curve(g, p):
    return g >= 1 or p >= 4


@cache
def brute_chained(g, p):
    if not has_curve(g, p) or p == 0:
        return 0
    best = max((brute_chained(*c) for cut in brute_arc_cuts(g, p) for c in cut), default=0)
    return max(2, 1 + best)


@cache
def brute_ell(g, p):
    if g == 0 and p <= 3:
        return 0
    if (g, p) in ((0, 4), (1, 0), (1, 1)):
        return 2
    return 2 + max(brute_chained(*c) for cut in brute_curve_cuts(g, p) for c in cut)


# --- graphs -----------------------------------------------------------------

def brute_full_embeddings(pattern_vs, pattern_adj, host_vs, host_adj):
    """All injections preserving edges and non-edges, as sets of item tuples."""
    out = set()
    for image in itertools.permutations(host_vs, len(pattern_vs)):
        f = dict(zip(pattern_vs, image))
        if all(
            pattern_adj(u, v) == host_adj(f[u], f[v])
            for u, v in itertools.combinations(pattern_vs, 2)
        ):
            out.add(tuple(sorted(f.items(), key=repr)))
    return out


# --- words ------------------------------------------------------------------

def letters_of(syllables):
    out = []
    for g, e in syllables:
        out.extend([(g, 1 if e > 0 else -1)] * abs(e))
    return out


def naive_reduce(letters, commutes):
    """Cancel x ... x^-1 whenever everything in between commutes with x; repeat."""
    w = list(letters)
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(range(len(w)), 2):
            (a, s), (b, t) = w[i], w[j]
            if a == b and s == -t and all(commutes(a, c) and c != a for c, _ in w[i + 1 : j]):
                del w[j]
                del w[i]
                changed = True
                break
    return w


def lexmin_shuffle(letters, commutes, rank):
    """Lexicographically least word reachable by swapping adjacent commuting letters."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a[0] != b[0] and commutes(a[0], b[0]):
                v = w[:i] + (b, a) + w[i + 2 :]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return min(seen, key=lambda w: [(rank[g], s) for g, s in w])


def brute_normal_form(letters, commutes, rank):
    return list(lexmin_shuffle(naive_reduce(letters, commutes), commutes, rank))


# --- planar curves ----------------------------------------------------------

def four_region_linked(A, B, universe):
    """Round curves around A and B must cross iff all four regions are occupied."""
    A, B = set(A), set(B)
    return bool(A & B) and bool(A - B) and bool(B - A) and bool(set(universe) - (A | B))


def line_linked(A, B):
    A, B = set(A), set(B)
    return bool(A & B) and bool(A - B) and bool(B - A)
