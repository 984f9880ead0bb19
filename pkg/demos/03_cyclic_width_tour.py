"""A tour of cyclic width, nested matroids, and transversality.
===============================================================

Cyclic width is the size of the largest antichain in the lattice of
cyclic flats.  Width 1 means the lattice is a chain (a nested matroid,
encoded by an isthmus/free-extension sequence), and width 2 already
forces the matroid to be transversal together with its dual.

Run with:  python demos/03_cyclic_width_tour.py
"""

import random

import cycflats as cf

# ----------------------------------------------------------------------
# Nested matroids: chain lattices and their i/f sequences.
# ----------------------------------------------------------------------

m = cf.nested_from_sequence("ififif")
print(f"nested 'ififif' on {len(m.ground)} elements, rank {m.matroid_rank}")
print(f"  recovered sequence: {cf.nested_sequence_of(m)!r}")
print(f"  cyclic width: {cf.cyclic_width(m)}")

# a subsequence of the i/f encoding is automatically a minor
found, spec = cf.nested_subsequence_minor("ifif", "ififif")
sub = cf.minor(m, spec)
print(f"  'ifif' embeds as a minor: "
      f"{cf.is_isomorphic(sub, cf.nested_from_sequence('ifif'))[0]}")

# long chains contain large uniform minors
cm = cf.uniform_minor_from_chain(m, 2)
got = cf.minor(m, cm.trimmed)
print(f"  U_2,4 extracted from the chain: "
      f"{cf.is_isomorphic(got, cf.uniform(2, 4))[0]}")

# ----------------------------------------------------------------------
# The P_n family: the excluded minors for width 1.
# ----------------------------------------------------------------------

print("\nexcluded minors P_n for the nested class:")
for n in (2, 3, 4):
    p = cf.excluded_minor_pn(n)
    minors_ok = all(
        cf.cyclic_width(cf.minor(p, s)) == 1
        for x in range(len(p.ground))
        for s in (cf.MinorSpec(0, 1 << x), cf.MinorSpec(1 << x, 0)))
    print(f"  P_{n}: width {cf.cyclic_width(p)}, "
          f"all one-element minors nested: {minors_ok}")

# ----------------------------------------------------------------------
# Transversality through the inclusion-exclusion condition.  M(K4) has
# width 4 and fails on the antichain of its four triangles.
# ----------------------------------------------------------------------

mk4 = cf.catalog("mk4")
ok, witness = cf.ingleton_transversal(mk4)
print(f"\nM(K4): width {cf.cyclic_width(mk4)}, transversal: {ok}")
print("  violating antichain:",
      [sorted(mk4.ground.names(f)) for f in witness])

# width <= 2 forces both the matroid and its dual to pass
print("\nseeded random matroids of width <= 2:")
hits = sum(cf.bitransversal_cert(cf.random_cw2_matroid(random.Random(s)))
           for s in range(50))
print(f"  bitransversal: {hits}/50")

# ----------------------------------------------------------------------
# Width is invariant under duality and monotone under minors.
# ----------------------------------------------------------------------

g = cf.gimenez_family(2, [2, 1])
print(f"\nGimenez member on {len(g.ground)} elements: "
      f"width {cf.cyclic_width(g)}, dual width {cf.cyclic_width(cf.dual(g))}")
