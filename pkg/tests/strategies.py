from hypothesis import strategies as st

from bipartite_species import CycleIndex
from bipartite_species.partitions import partition_tuples

COEFFS = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def series(draw, n, min_degree=0, max_terms=6):
    keys = [p for d in range(min_degree, n + 1) for p in partition_tuples(d)]
    chosen = draw(st.lists(st.sampled_from(keys), max_size=max_terms, unique=True))
    return CycleIndex({p: draw(COEFFS) for p in chosen}, n)
