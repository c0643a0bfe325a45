# # Checking against brute force
#
# Every graph on n vertices is generated and grouped into isomorphism classes.

from bipartite_species.oracle import FAMILIES, SmallGraph, canonical_form, oracle_count

c4 = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("C4 edges:", c4.edges(), "canonical form:", bin(canonical_form(c4)))
print("relabeled:", c4.relabel([2, 0, 3, 1]).edges(), "same form:", canonical_form(c4.relabel([2, 0, 3, 1])) == canonical_form(c4))

# +
for family in FAMILIES:
    print(f"{family:<24}", [oracle_count(family, n) for n in range(7)])
