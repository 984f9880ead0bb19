"""Ground sets, bitmask subsets, and families of subsets.

Subsets of a ground set are plain integers used as bitmasks: bit i set
means the element with index i belongs to the subset.  All families are
iterated and serialized in canonical order: by cardinality first, then
lexicographically by the sorted index tuple.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DuplicateSet, UnknownLabel


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_key(mask: int) -> tuple:
    """Canonical sort key: cardinality, then sorted index tuple."""
    return (mask.bit_count(), tuple(bits(mask)))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class GroundSet:
    """An ordered finite set of distinct element names."""

    __slots__ = ("labels", "index", "full")

    def __init__(self, labels: Iterable[str]):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise DuplicateSet(f"duplicate labels in ground set: {self.labels}")
        self.full = (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    def mask(self, names: Iterable[str]) -> int:
        """Bitmask of the given element names."""
        m = 0
        for name in names:
            try:
                m |= 1 << self.index[name]
            except KeyError:
                raise UnknownLabel(f"unknown element {name!r}") from None
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        """Element names of a bitmask, in ground-set order."""
        if mask >> len(self.labels):
            raise UnknownLabel(f"mask {mask:#x} outside ground set")
        return tuple(self.labels[i] for i in bits(mask))


class SetFamily:
    """A collection of distinct subsets of one ground set.

    Members are stored in canonical order.
    """

    __slots__ = ("ground", "masks")

    def __init__(self, ground: GroundSet, masks: Iterable[int]):
        self.ground = ground
        ms = sorted(masks, key=subset_key)
        for m in ms:
            if m >> len(ground):
                raise UnknownLabel(f"mask {m:#x} outside ground set")
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise DuplicateSet(f"duplicate subset {ground.names(a)}")
        self.masks = tuple(ms)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.masks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SetFamily)
                and self.ground == other.ground and self.masks == other.masks)

    def __hash__(self) -> int:
        return hash((self.ground, self.masks))

    def __repr__(self) -> str:
        sets = [set(self.ground.names(m)) or "{}" for m in self.masks]
        return f"SetFamily({sets!r})"
