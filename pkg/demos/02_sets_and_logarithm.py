# # Sets and the combinatorial logarithm
#
# Omega undoes E+: composing one with the other gives back p[1].

from bipartite_species import ci_plethysm, e_plus, format_series, ogf_from_ci, omega

N = 6

print("E+    =", format_series(e_plus(3)))
print("Omega =", format_series(omega(3)))
print("Omega o E+ =", format_series(ci_plethysm(omega(N), e_plus(N))))
print("E+ o Omega =", format_series(ci_plethysm(e_plus(N), omega(N))))
print("unlabeled sets per size:", ogf_from_ci(e_plus(N)).integers())
