"""Generators: uniform matroids, lattice realizations, nested matroids,
the P_n excluded minors, the superexponential permutation family, a
small catalog, and the uniform-minor extraction from long chains.

Also houses the exhaustive small-lattice enumerator and the seeded
random-matroid generators used by the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import (ChainTooShort, InvalidParameters, NotNested, UnknownName)
from .groundsets import GroundSet, bits, popcount
from .lattices import (FiniteLattice, _tables_from_down, is_chain,
                       poset_isomorphic)
from .matroid import Matroid, RankedFamily, validate
from .ops import MinorSpec, direct_sum, dual, minor, truncate
from .freeprod import free_extension, free_product


def uniform(r: int, n: int, labels=None) -> Matroid:
    """The uniform matroid U_{r,n}."""
    if not 0 <= r <= n:
        raise InvalidParameters(f"need 0 <= r <= n, got r={r}, n={n}")
    if labels is None:
        labels = [f"e{i}" for i in range(1, n + 1)]
    labels = list(labels)
    if len(labels) != n:
        raise InvalidParameters(f"expected {n} labels, got {len(labels)}")
    if r == n:
        sets = [([], 0)]
    elif r == 0:
        sets = [(labels, 0)]
    else:
        sets = [([], 0), (labels, r)]
    return Matroid.from_labels(labels, sets)


def empty_matroid() -> Matroid:
    return Matroid.from_labels([], [([], 0)])


# -- lattice realization ------------------------------------------------

@dataclass(frozen=True)
class Realization:
    matroid: Matroid
    witness: tuple  # pairs (lattice element name, flat mask)


def realize_lattice(lat: FiniteLattice, variant: str = "plain") -> Realization:
    """A matroid whose lattice of cyclic flats is isomorphic to lat.

    plain: ground is B u {satellites}, where B is the lattice minus its
    top; the flat for z is V_z u {s_x : x <= z} with rank |V_z|, where
    V_z = {y : y not >= z}.  sublattice: each z gets its own block S_z of
    |V_z| + 1 fresh points and the flat for z is the union of the blocks
    below z; this variant additionally satisfies F_x n F_y = F_{x ^ y}.
    """
    if variant not in ("plain", "sublattice"):
        raise InvalidParameters(f"unknown variant {variant!r}")
    k = len(lat)
    up = [0] * k
    for i in range(k):
        for j in bits(lat.down[i]):
            up[j] |= 1 << i
    v = [up_complement(up[i], k) for i in range(k)]  # V_z as lattice-index mask

    if variant == "plain":
        base = [i for i in range(k) if i != lat.top]
        labels = [lat.elements[i] for i in base] \
            + [f"s:{lat.elements[i]}" for i in range(k)]
        pos = {i: p for p, i in enumerate(base)}
        entries = []
        witness = []
        for z in range(k):
            mask = 0
            for y in bits(v[z]):
                mask |= 1 << pos[y]
            for x in bits(lat.down[z]):
                mask |= 1 << (len(base) + x)
            entries.append((mask, popcount(v[z])))
            witness.append((lat.elements[z], mask))
    else:
        labels = []
        block = []
        for z in range(k):
            start = len(labels)
            size = popcount(v[z]) + 1
            labels += [f"{lat.elements[z]}:{t}" for t in range(size)]
            block.append(((1 << size) - 1) << start)
        entries = []
        witness = []
        for z in range(k):
            mask = 0
            for y in bits(lat.down[z]):
                mask |= block[y]
            entries.append((mask, popcount(v[z])))
            witness.append((lat.elements[z], mask))
    ground = GroundSet(labels)
    result = validate(RankedFamily(ground, entries))
    if not isinstance(result, Matroid):
        raise AssertionError(f"realization failed validation: {result}")
    return Realization(result, tuple(witness))


def up_complement(up_mask: int, k: int) -> int:
    """Indices not in up_mask, over a k-element index range."""
    return ((1 << k) - 1) & ~up_mask


# -- nested matroids ----------------------------------------------------

def nested_from_sequence(seq: str) -> Matroid:
    """Fold an i/f sequence into a nested matroid.

    'i' adds a fresh isthmus (cyclic flats unchanged); 'f' adds a fresh
    element freely.  Elements are labeled e1, e2, ... in step order.
    """
    if any(c not in "if" for c in seq):
        raise InvalidParameters(f"sequence must be over 'i'/'f': {seq!r}")
    m = empty_matroid()
    for pos, step in enumerate(seq, start=1):
        label = f"e{pos}"
        if step == "i":
            m = direct_sum(m, uniform(1, 1, [label]))
        else:
            m = free_extension(m, label)
    return m


def nested_sequence_of(m: Matroid) -> str:
    """Recover an i/f sequence from a nested matroid's chain.

    Loops come out as leading 'f' steps, each chain step X_{j-1} -> X_j
    as r-difference many 'i' steps followed by the remaining 'f' steps,
    and outside isthmuses as trailing 'i' steps.
    """
    if not is_chain(m.flat_family()):
        raise NotNested("lattice of cyclic flats is not a chain")
    steps = ["f"] * popcount(m.flats[0])
    for prev, prev_r, cur, cur_r in zip(m.flats, m.flat_ranks,
                                        m.flats[1:], m.flat_ranks[1:]):
        ni = cur_r - prev_r
        nf = popcount(cur & ~prev) - ni
        steps += ["i"] * ni + ["f"] * nf
    steps += ["i"] * popcount(m.ground.full & ~m.top)
    return "".join(steps)


def nested_subsequence_minor(seq_n: str, seq_m: str):
    """Subsequence test with the induced minor embedding.

    Returns (True, spec) where spec is the MinorSpec on
    nested_from_sequence(seq_m) that deletes unmatched free steps and
    contracts unmatched isthmus steps, or (False, None).  The match is
    the leftmost embedding.
    """
    positions = []
    it = 0
    for step in seq_n:
        while it < len(seq_m) and seq_m[it] != step:
            it += 1
        if it == len(seq_m):
            return False, None
        positions.append(it)
        it += 1
    matched = set(positions)
    contract = delete = 0
    for p, step in enumerate(seq_m):
        if p not in matched:
            if step == "i":
                contract |= 1 << p
            else:
                delete |= 1 << p
    return True, MinorSpec(contract, delete)


# -- excluded minors and the permutation family --------------------------

def excluded_minor_pn(n: int) -> Matroid:
    """P_n: the truncation to rank n of U_{n-1,n} + U_{n-1,n}."""
    if n < 2:
        raise InvalidParameters(f"need n >= 2, got {n}")
    left = uniform(n - 1, n, [f"a{i}" for i in range(1, n + 1)])
    right = uniform(n - 1, n, [f"b{i}" for i in range(1, n + 1)])
    m = direct_sum(left, right)
    while m.matroid_rank > n:
        m = truncate(m)
    return m


def gimenez_family(n: int, sigma) -> Matroid:
    """One member of the n! family on 4n+5 elements with cyclic width 2.

    sigma is a permutation of 1..n (sequence of images).  Two chains
    share bottom and top: A_i grows by {z_i, w_i}, B_i by {z_i,
    w_{sigma(i)}}; ranks are n+1+i on both chains and 2n+2 overall.
    """
    if n < 1:
        raise InvalidParameters(f"need n >= 1, got {n}")
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidParameters(f"not a permutation of 1..{n}: {sigma}")
    labels = (["a", "a'", "a''", "b", "b'"]
              + [f"x{i}" for i in range(1, n + 1)]
              + [f"y{i}" for i in range(1, n + 1)]
              + [f"z{i}" for i in range(1, n + 1)]
              + [f"w{i}" for i in range(1, n + 1)])
    a = ["a", "a'", "a''"] + [f"x{i}" for i in range(1, n + 1)]
    b = ["b", "b'"] + [f"y{i}" for i in range(1, n + 1)]
    sets = [([], 0), (list(a), n + 1), (list(b), n + 1)]
    for i in range(1, n + 1):
        a = a + [f"z{i}", f"w{i}"]
        b = b + [f"z{i}", f"w{sigma[i - 1]}"]
        sets.append((list(a), n + 1 + i))
        sets.append((list(b), n + 1 + i))
    sets.append((labels, 2 * n + 2))
    return Matroid.from_labels(labels, sets)


def catalog(name: str) -> Matroid:
    """Named matroids.  mk4 is the cycle matroid of K_4 on its six edge
    labels, given by the empty flat, the four triangles at rank 2, and
    the full edge set at rank 3."""
    if name == "mk4":
        edges = ["12", "13", "14", "23", "24", "34"]
        triangles = [["12", "13", "23"], ["12", "14", "24"],
                     ["13", "14", "34"], ["23", "24", "34"]]
        sets = [([], 0)] + [(t, 2) for t in triangles] + [(edges, 3)]
        return Matroid.from_labels(edges, sets)
    if name == "u24":
        return uniform(2, 4)
    if name == "p2":
        return excluded_minor_pn(2)
    if name == "p3":
        return excluded_minor_pn(3)
    raise UnknownName(f"unknown catalog entry {name!r}")


# -- uniform minors from chains ------------------------------------------

@dataclass(frozen=True)
class ChainMinor:
    """Minor specs extracted from a chain of k+2 cyclic flats: raw is the
    restriction/contraction/deletion from the constructive proof (a
    uniform minor of rank >= k and nullity >= 2); trimmed reduces it to
    exactly U_{k,k+2}."""

    raw: MinorSpec
    trimmed: MinorSpec


def uniform_minor_from_chain(m: Matroid, k: int) -> ChainMinor:
    """Extract a U_{k,k+2} minor from a matroid whose cyclic flats form a
    chain with at least k+2 members.

    Uses the first k+2 chain members X_0 c ... c X_{k+1}: restrict to
    X_{k+1}, contract I_{k+1}, and delete X_0 u F_1 u ... u F_{k-1},
    where each X_j - X_{j-1} splits into I_j (rank increase) and F_j
    (free part); the split is determined only in cardinality, so the
    lexicographically least choice is taken.
    """
    if k < 1:
        raise InvalidParameters(f"need k >= 1, got {k}")
    if not is_chain(m.flat_family()):
        raise NotNested("lattice of cyclic flats is not a chain")
    if len(m.flats) < k + 2:
        raise ChainTooShort(
            f"chain has {len(m.flats)} members, need at least {k + 2}")
    chain = m.flats[:k + 2]
    ranks = m.flat_ranks[:k + 2]
    isets, fsets = [0], [chain[0]]  # j = 0: X_0 is all loops (free part)
    for j in range(1, k + 2):
        diff = chain[j] & ~chain[j - 1]
        ni = ranks[j] - ranks[j - 1]
        iset = 0
        for x in bits(diff):
            if ni == 0:
                break
            iset |= 1 << x
            ni -= 1
        isets.append(iset)
        fsets.append(diff & ~iset)
    delete = m.ground.full & ~chain[k + 1]  # restrict to X_{k+1}
    delete |= chain[0]
    for j in range(1, k):
        delete |= fsets[j]
    raw = MinorSpec(isets[k + 1], delete)
    raw_minor = minor(m, raw)
    extra_contract_n = raw_minor.matroid_rank - k
    extra_delete_n = raw_minor.nullity - 2
    extra_contract = extra_delete = 0
    taken = 0
    for lab in raw_minor.ground.labels:
        bit = 1 << m.ground.index[lab]
        if taken < extra_contract_n:
            extra_contract |= bit
        elif taken < extra_contract_n + extra_delete_n:
            extra_delete |= bit
        else:
            break
        taken += 1
    trimmed = MinorSpec(raw.contract | extra_contract,
                        raw.delete | extra_delete)
    return ChainMinor(raw, trimmed)


# -- exhaustive small lattices -------------------------------------------

def all_lattices(max_size: int) -> list[FiniteLattice]:
    """Every lattice with 1..max_size elements, up to isomorphism.

    Posets are enumerated with the order compatible with the index order
    (every poset has such a labeling), filtered for unique meets and
    joins, and deduplicated by isomorphism.  Element names are v0, v1...
    """
    if max_size > 7:
        raise InvalidParameters("exhaustive enumeration capped at 7 elements")
    out: list[FiniteLattice] = []
    for n in range(1, max_size + 1):
        pairs = list(combinations(range(n), 2))
        found: list[FiniteLattice] = []
        for choice in range(1 << len(pairs)):
            rel = {pairs[i] for i in range(len(pairs)) if (choice >> i) & 1}
            if any((i, j) in rel and (j, k) in rel and (i, k) not in rel
                   for i in range(n) for j in range(i + 1, n)
                   for k in range(j + 1, n)):
                continue
            down = [(1 << i) for i in range(n)]
            for i, j in rel:
                down[j] |= 1 << i
            tables = _tables_from_down(down)
            if isinstance(tables[1], str):
                continue
            meet, join = tables
            lat = FiniteLattice([f"v{i}" for i in range(n)], down, meet, join)
            if not any(poset_isomorphic(lat, seen)[0] for seen in found):
                found.append(lat)
        out += found
    return out


# -- seeded random generators --------------------------------------------

def random_matroid(rng: random.Random, max_elems: int = 10) -> Matroid:
    """A random valid matroid built by composing constructions."""
    n = rng.randint(1, max(2, max_elems // 2))
    r = rng.randint(0, n)
    m = uniform(r, n, [f"g{i}" for i in range(1, n + 1)])
    serial = n
    for _ in range(rng.randint(0, 3)):
        op = rng.choice(["dual", "truncate", "free_ext", "sum", "freeprod"])
        if op == "dual":
            m = dual(m)
        elif op == "truncate" and m.matroid_rank >= 1:
            m = truncate(m)
        elif op == "free_ext" and len(m.ground) < max_elems:
            serial += 1
            m = free_extension(m, f"g{serial}")
        elif op in ("sum", "freeprod"):
            extra = rng.randint(1, 3)
            if len(m.ground) + extra > max_elems:
                continue
            labels = [f"g{serial + i}" for i in range(1, extra + 1)]
            serial += extra
            other = uniform(rng.randint(0, extra), extra, labels)
            m = direct_sum(m, other) if op == "sum" else free_product(m, other)
    return m


def random_cw2_matroid(rng: random.Random, max_elems: int = 9) -> Matroid:
    """A random valid matroid of cyclic width at most 2: a random chain
    plus, when possible, one extra incomparable cyclic flat."""
    for _ in range(20):
        length = rng.randint(2, max_elems)
        seq = "".join(rng.choice("if") for _ in range(length))
        m = nested_from_sequence(seq)
        n = len(m.ground)
        candidates = [(s, rho) for s in range(1, 1 << n)
                      for rho in range(1, popcount(s) + 1)]
        rng.shuffle(candidates)
        base = list(zip(m.flats, m.flat_ranks))
        for s, rho in candidates[:400]:
            if any(s == f for f in m.flats):
                continue
            if all(s & ~f == 0 or f & ~s == 0 for f in m.flats):
                continue  # comparable to everything: still a chain
            result = validate(RankedFamily(m.ground, base + [(s, rho)]))
            if isinstance(result, Matroid):
                return result
    return m  # fallback: the chain itself (cyclic width 1)
