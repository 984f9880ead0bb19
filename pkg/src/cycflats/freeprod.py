"""The free product of matroids, defined through cyclic flats.

For matroids M, N on disjoint ground sets the cyclic flats of the free
product are the proper cyclic flats of M together with E(M) u Y for the
nonempty cyclic flats Y of N; E(M) itself belongs iff M has no isthmuses
and N has no loops.  Ranks carry over, shifted by r(M) on the N side.
The independence and rank characterizations are provided separately as
cross-check oracles.
"""

from __future__ import annotations

from itertools import count

from .errors import LabelInUse, OverlappingGroundSets
from .groundsets import GroundSet, popcount
from .matroid import Matroid
from .ops import _validated


def free_product(m: Matroid, n: Matroid) -> Matroid:
    """M box N on the concatenated ground set."""
    if set(m.ground.labels) & set(n.ground.labels):
        raise OverlappingGroundSets(
            f"shared labels: {set(m.ground.labels) & set(n.ground.labels)}")
    ground = GroundSet(m.ground.labels + n.ground.labels)
    shift = len(m.ground)
    em = m.ground.full
    entries = [(x, rx) for x, rx in zip(m.flats, m.flat_ranks) if x != em]
    entries += [(em | (y << shift), m.matroid_rank + ry)
                for y, ry in zip(n.flats, n.flat_ranks) if y != 0]
    if m.isthmuses() == 0 and n.loops() == 0:
        entries.append((em, m.matroid_rank))
    return _validated(ground, entries)


def _fresh_label(ground: GroundSet) -> str:
    taken = set(ground.labels)
    for i in count():
        if f"e{i}" not in taken:
            return f"e{i}"


def free_extension(m: Matroid, label: str | None = None) -> Matroid:
    """M + e: add an element as freely as possible (M box U_{0,1})."""
    if label is None:
        label = _fresh_label(m.ground)
    elif label in m.ground.index:
        raise LabelInUse(f"label {label!r} already in ground set")
    point = Matroid.from_labels([label], [([label], 0)])  # U_{0,1}
    return free_product(m, point)


def free_coextension(m: Matroid, label: str | None = None) -> Matroid:
    """The dual operation: U_{1,1} box M; every nonempty cyclic flat is
    augmented by the new element and all ranks increase by 1."""
    if label is None:
        label = _fresh_label(m.ground)
    elif label in m.ground.index:
        raise LabelInUse(f"label {label!r} already in ground set")
    point = Matroid.from_labels([label], [([], 0)])  # U_{1,1}
    return free_product(point, m)


def fp_rank_check(m: Matroid, n: Matroid, x: int, y: int) -> int:
    """Closed-form rank of X u Y in M box N:

        r_M(X) + r_N(Y) + min{r(M) - r_M(X), nu_N(Y)}.

    An oracle independent of the constructed product.
    """
    rx = m.rank(x)
    ry = n.rank(y)
    return rx + ry + min(m.matroid_rank - rx, popcount(y) - ry)


def fp_independent_check(m: Matroid, n: Matroid, x: int, y: int) -> bool:
    """Closed-form independence of X u Y in M box N: X independent in M
    and nu_N(Y) <= r(M) - |X|."""
    if not m.is_independent(x):
        return False
    nu_y = popcount(y) - n.rank(y)
    return nu_y <= m.matroid_rank - popcount(x)
