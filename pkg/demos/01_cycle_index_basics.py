# # Cycle index series by hand
#
# A cycle index is a finite sum of power-sum monomials with rational
# coefficients, truncated at some degree.

from bipartite_species import CycleIndex, ci_comp_inverse, ci_divide, ci_plethysm, format_series, singleton

# +
h = CycleIndex({(1, 1): "1/2", (2,): "1/2"}, 4)  # sets of size two
g = CycleIndex({(1,): 1, (2,): 1}, 4)
print("h     =", format_series(h))
print("g     =", format_series(g))
print("h o g =", format_series(ci_plethysm(h, g)))

# +
# plethystic inverse of p1 + p1^2: Catalan numbers with alternating signs
f = singleton(6) + singleton(6) * singleton(6)
print(format_series(ci_comp_inverse(f, 6)))

# +
# exact division by a series that starts with p1
print(format_series(ci_divide(singleton(5), f.truncate(5), 4)))
