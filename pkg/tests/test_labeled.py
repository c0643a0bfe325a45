from bipartite_species import labeled_bicolored, labeled_blocks_check
from bipartite_species.labeled import labeled_bicolored_egf


def test_bicolored_closed_form():
    assert [labeled_bicolored(n) for n in range(8)] == [1, 2, 6, 26, 162, 1442, 18306, 330626]


def test_egf_normalization():
    assert labeled_bicolored_egf(5).labeled_counts() == [1, 2, 6, 26, 162, 1442]


def test_blocks_from_functional_equation():
    assert labeled_blocks_check(8).labeled_counts() == [0, 1, 1, 0, 3, 10, 355, 6986, 297619]
    assert labeled_blocks_check(0).labeled_counts() == [0]
