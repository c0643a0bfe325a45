# # Bipartite blocks
#
# Blocks are recovered from connected bipartite graphs by inverting the
# rooted-connected series and applying the logarithm to X/W.

import time

from bipartite_species import egf_from_ci, labeled_blocks_check, nbp, ogf_from_ci

N = 16

start = time.perf_counter()
blocks = nbp(N)
print(f"computed to degree {N} in {time.perf_counter() - start:.1f}s")

for n, count in enumerate(ogf_from_ci(blocks).integers()[1:], start=1):
    print(f"{n:>3}  {count}")

# +
# the labeled counts drop out of the same series
labeled = egf_from_ci(blocks.truncate(10)).labeled_counts()
print("labeled blocks         ", labeled)
print("from the EGF equation  ", labeled_blocks_check(10).labeled_counts())
