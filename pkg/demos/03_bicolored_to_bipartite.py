# # From bicolored graphs to bipartite graphs
#
# Color swapping acts on bicolored graphs. Counting connected bicolored graphs
# in both slots of the two-group cycle index and averaging gives connected
# bipartite graphs; sets of those give all bipartite graphs.

from bipartite_species import bc, bp, cbc, cbp, fast_bipartite_ogfs, ogf_from_ci

N = 10

both = bc(N)
print("bicolored              ", ogf_from_ci(both.at_e).integers())
print("color-swap symmetric   ", ogf_from_ci(both.at_tau).integers())

# +
conn = cbc(N)
print("connected bicolored    ", ogf_from_ci(conn.at_e).integers())
print("  with swap symmetry   ", ogf_from_ci(conn.at_tau).integers())
print("connected bipartite    ", ogf_from_ci(cbp(N)).integers())
print("bipartite              ", ogf_from_ci(bp(N)).integers())

# +
# the same numbers without ever building a cycle index
fast = fast_bipartite_ogfs(N)
print("fast c(x)              ", fast.c.integers())
print("fast b(x)              ", fast.b.integers())
