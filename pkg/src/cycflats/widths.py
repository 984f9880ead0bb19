"""Cyclic width and the inclusion-exclusion transversality test.

The cyclic width of a matroid is the width (largest antichain) of its
lattice of cyclic flats.  A matroid is transversal iff for every
antichain (X_1, ..., X_n) of cyclic flats

    r(X_1 n ... n X_n) <= sum over nonempty J of (-1)^(|J|+1) r(union_J X_j);

restricting to antichains loses nothing because a comparable pair lets
the larger flat be omitted from both sides.  Singletons give equality
and pairs reduce to semimodularity, so the search starts at size 3.
"""

from __future__ import annotations

from itertools import combinations

from .errors import TooManyCyclicFlats
from .lattices import width_of_family
from .matroid import Matroid
from .ops import dual


def cyclic_width(m: Matroid) -> int:
    """Width of the lattice of cyclic flats."""
    return width_of_family(m.flat_family())


def ingleton_transversal(m: Matroid, cap: int = 24):
    """Transversality via the inclusion-exclusion condition.

    Returns (True, None) or (False, witness) where witness is the first
    violating antichain in canonical order (size ascending, then lexicographic
    over the canonically ordered flats), as a tuple of flat masks.
    """
    flats = m.flats
    if len(flats) > cap:
        raise TooManyCyclicFlats(
            f"{len(flats)} cyclic flats exceeds antichain cap {cap}")
    # size-1 antichains are equalities, size-2 is semimodularity: both
    # always hold for a matroid rank function; assert rather than search.
    for x, y in combinations(flats, 2):
        assert m.rank(x & y) <= m.rank(x) + m.rank(y) - m.rank(x | y)
    width = width_of_family(m.flat_family())
    for size in range(3, width + 1):
        for combo in combinations(flats, size):
            if any(a & ~b == 0 or b & ~a == 0
                   for a, b in combinations(combo, 2)):
                continue
            inter = combo[0]
            for f in combo[1:]:
                inter &= f
            lhs = m.rank(inter)
            rhs = 0
            for j in range(1, size + 1):
                sign = 1 if j % 2 else -1
                for sub in combinations(combo, j):
                    union = 0
                    for f in sub:
                        union |= f
                    rhs += sign * m.rank(union)
            if lhs > rhs:
                return False, combo
    return True, None


def ingleton_all_families(m: Matroid, cap: int = 16):
    """The same condition evaluated over ALL nonempty families of cyclic
    flats, not just antichains.  Quadratically slower; used to spot-check
    that the antichain restriction is lossless."""
    flats = m.flats
    if len(flats) > cap:
        raise TooManyCyclicFlats(
            f"{len(flats)} cyclic flats exceeds cap {cap}")
    for size in range(1, len(flats) + 1):
        for combo in combinations(flats, size):
            inter = combo[0]
            for f in combo[1:]:
                inter &= f
            rhs = 0
            for j in range(1, size + 1):
                sign = 1 if j % 2 else -1
                for sub in combinations(combo, j):
                    union = 0
                    for f in sub:
                        union |= f
                    rhs += sign * m.rank(union)
            if m.rank(inter) > rhs:
                return False, combo
    return True, None


def bitransversal_cert(m: Matroid, cap: int = 24) -> bool:
    """True iff both m and its dual pass the transversality test."""
    ok, _ = ingleton_transversal(m, cap=cap)
    if not ok:
        return False
    ok, _ = ingleton_transversal(dual(m), cap=cap)
    return ok
