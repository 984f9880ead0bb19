"""Finite lattices and poset machinery.

Covers two flavors of input: abstract lattices given by cover relations,
and families of sets ordered by inclusion.  Provides meet/join tables,
chain and width computations (Dilworth duality via bipartite matching),
and poset isomorphism with a witness bijection.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import CyclicCovers, DuplicateSet, NotALattice, UnknownLabel
from .groundsets import SetFamily, bits, popcount


class FiniteLattice:
    """A finite lattice: named elements, order relation, meet/join tables.

    down[i] is the bitmask (over element indices) of elements <= element i,
    including i itself.  meet/join are total tables of element indices.
    """

    __slots__ = ("elements", "down", "meet", "join", "bottom", "top")

    def __init__(self, elements: Sequence[str], down: Sequence[int],
                 meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]]):
        self.elements = tuple(elements)
        self.down = tuple(down)
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        n = len(self.elements)
        self.bottom = min(range(n), key=lambda i: popcount(self.down[i]))
        self.top = max(range(n), key=lambda i: popcount(self.down[i]))

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, x: str, y: str) -> bool:
        i, j = self.elements.index(x), self.elements.index(y)
        return bool((self.down[j] >> i) & 1)

    def covers(self) -> list[tuple[str, str]]:
        """Cover pairs (lower, upper), in element order."""
        out = []
        n = len(self.elements)
        for j in range(n):
            for i in bits(self.down[j] & ~(1 << j)):
                strictly_between = any(
                    (self.down[j] >> k) & 1 and (self.down[k] >> i) & 1
                    for k in bits(self.down[j] & ~(1 << j) & ~(1 << i)))
                if not strictly_between:
                    out.append((self.elements[i], self.elements[j]))
        return out

    def __repr__(self) -> str:
        return f"FiniteLattice({list(self.elements)!r}, covers={self.covers()!r})"


def lattice_from_covers(elements: Sequence[str],
                        covers: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Build a FiniteLattice from element names and cover pairs.

    leq is the reflexive-transitive closure of the cover relation.
    Raises CyclicCovers if the cover digraph has a cycle and NotALattice
    if some pair lacks a unique meet or join.
    """
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise DuplicateSet(f"duplicate element names: {elements}")
    n = len(elements)
    up = [1 << i for i in range(n)]  # up[i]: mask of j with i <= j
    edges = [[] for _ in range(n)]
    for lo, hi in covers:
        if lo not in index or hi not in index:
            raise UnknownLabel(f"unknown cover element in ({lo!r}, {hi!r})")
        edges[index[lo]].append(index[hi])
    # transitive closure by repeated relaxation
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits(up[i]):
                for k in edges[j]:
                    acc |= up[k]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise CyclicCovers(
                    f"cycle through {elements[i]!r} and {elements[j]!r}")
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    meet, join = _tables_from_down(down)
    if isinstance(meet, tuple):  # failure: offending pair of indices
        x, y = meet
        raise NotALattice(elements[x], elements[y], join)
    return FiniteLattice(elements, down, meet, join)


def _tables_from_down(down: Sequence[int]):
    """Meet/join tables from down-masks.

    Returns (meet, join) as lists of lists on success; on failure returns
    ((i, j), reason) for the first offending pair in index order.
    """
    n = len(down)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    up = [0] * n
    for i in range(n):
        for j in bits(down[i]):
            up[j] |= 1 << i
    for i in range(n):
        for j in range(i, n):
            lower = down[i] & down[j]
            m = _unique_extreme(lower, down)
            if m is None:
                return (i, j), "no unique meet"
            upper = up[i] & up[j]
            jn = _unique_extreme(upper, up)
            if jn is None:
                return (i, j), "no unique join"
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = jn
    return meet, join


def _unique_extreme(candidates: int, down: Sequence[int]):
    """The candidate whose down-mask contains all candidates, if any."""
    for k in bits(candidates):
        if candidates & ~down[k] == 0:
            return k
    return None


def family_lattice_tables(family: SetFamily):
    """Check that a family of sets is a lattice under inclusion.

    Returns (True, (meet, join)) with tables of member indices on success,
    or (False, (mask_x, mask_y)) naming the first pair (canonical order)
    without a unique inclusion-greatest lower or inclusion-least upper
    member.  Meet and join are members of the family, not intersections
    and unions.
    """
    masks = family.masks
    down = [0] * len(masks)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if b & ~a == 0:  # b subset of a
                down[i] |= 1 << j
    result = _tables_from_down(down)
    if isinstance(result[1], str):
        (i, j), _reason = result
        return False, (masks[i], masks[j])
    meet, join = result
    return True, (meet, join)


def is_chain(family: SetFamily) -> bool:
    """True iff the members are pairwise comparable under inclusion."""
    masks = family.masks  # canonical order: sizes ascending
    return all(a & ~b == 0 for a, b in zip(masks, masks[1:]))


def width_of_family(family: SetFamily, method: str = "matching") -> int:
    """Maximum size of an antichain of members under inclusion.

    The default computes a minimum chain cover via maximum bipartite
    matching on the strict-comparability relation (Dilworth duality).
    method="brute" enumerates antichains directly; it is kept as an
    oracle and only suitable for small families.
    """
    if method == "brute":
        return _max_antichain_brute(family.masks)
    masks = family.masks
    n = len(masks)
    adj = [[j for j in range(n)
            if j != i and masks[i] != masks[j] and masks[i] & ~masks[j] == 0]
           for i in range(n)]
    match_r = [-1] * n

    def try_kuhn(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_r[j] < 0 or try_kuhn(match_r[j], seen):
                    match_r[j] = i
                    return True
        return False

    matched = 0
    for i in range(n):
        if try_kuhn(i, [False] * n):
            matched += 1
    return n - matched


def _max_antichain_brute(masks: Sequence[int]) -> int:
    best = 0
    for size in range(len(masks), 0, -1):
        if size <= best:
            break
        for combo in combinations(masks, size):
            if all(a & ~b != 0 and b & ~a != 0
                   for a, b in combinations(combo, 2)):
                best = size
                break
        if best:
            break
    return best


def _poset_of(obj):
    """Normalize a FiniteLattice or SetFamily to (items, down_masks).

    items are element names for lattices and label tuples for families.
    """
    if isinstance(obj, FiniteLattice):
        return list(obj.elements), list(obj.down)
    if isinstance(obj, SetFamily):
        items = [obj.ground.names(m) for m in obj.masks]
        down = [0] * len(obj.masks)
        for i, a in enumerate(obj.masks):
            for j, b in enumerate(obj.masks):
                if b & ~a == 0:
                    down[i] |= 1 << j
        return items, down
    raise TypeError(f"expected FiniteLattice or SetFamily, got {type(obj)!r}")


def _refine_signatures(down: Sequence[int]) -> list:
    """Iterated order-invariant per-element signatures (WL-style)."""
    n = len(down)
    up = [0] * n
    for i in range(n):
        for j in bits(down[i]):
            up[j] |= 1 << i
    sig = [(popcount(down[i]), popcount(up[i])) for i in range(n)]
    for _ in range(n):
        nxt = [(sig[i],
                tuple(sorted(sig[j] for j in bits(down[i]) if j != i)),
                tuple(sorted(sig[j] for j in bits(up[i]) if j != i)))
               for i in range(n)]
        if len(set(nxt)) == len(set(sig)):
            sig = nxt
            break
        sig = nxt
    return sig


def poset_isomorphic(a, b):
    """Order-isomorphism test with a witness bijection.

    Both arguments may be FiniteLattice or SetFamily.  Returns
    (True, witness) with witness a list of (item_a, item_b) pairs, or
    (False, None).  Backtracking search pruned by iterated degree/height
    signatures.
    """
    items_a, down_a = _poset_of(a)
    items_b, down_b = _poset_of(b)
    n = len(items_a)
    if n != len(items_b):
        return False, None
    sig_a = _refine_signatures(down_a)
    sig_b = _refine_signatures(down_b)
    if sorted(map(repr, sig_a)) != sorted(map(repr, sig_b)):
        return False, None
    # process rarest signatures first
    order = sorted(range(n), key=lambda i: (sig_a.count(sig_a[i]), i))
    mapping = [-1] * n
    used = [False] * n

    def ok(i: int, j: int) -> bool:
        for k in range(n):
            m = mapping[k]
            if m < 0:
                continue
            if bool((down_a[i] >> k) & 1) != bool((down_b[j] >> m) & 1):
                return False
            if bool((down_a[k] >> i) & 1) != bool((down_b[m] >> j) & 1):
                return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if not used[j] and sig_b[j] == sig_a[i] and ok(i, j):
                mapping[i] = j
                used[j] = True
                if search(pos + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    if search(0):
        return True, [(items_a[i], items_b[mapping[i]]) for i in range(n)]
    return False, None
