from fractions import Fraction

import pytest

from bipartite_species import (
    SpeciesCatalog,
    bc_e,
    bc_tau,
    bp,
    cbp,
    ci_plethysm,
    dumps,
    e_plus,
    e_species,
    egf_from_ci,
    nbp,
    ogf_from_ci,
    omega,
    singleton,
    x_species,
    z_of,
)
from bipartite_species.partitions import partition_tuples
from bipartite_species.species import cross_exponent, reversing_exponent

TABLE_HEAD = [1, 1, 0, 1, 1, 5, 8, 42, 146, 956, 6643, 65921]


def test_exponents():
    assert cross_exponent((1,), (1,)) == 1
    assert cross_exponent((2,), (2,)) == 2
    assert cross_exponent((2, 1), (3,)) == 2
    assert reversing_exponent((1,)) == 1
    assert reversing_exponent((2,)) == 1
    assert reversing_exponent((1, 1)) == 3


def test_set_species():
    e = e_species(5)
    assert all(e.coefficient(p) == Fraction(1, z_of(p)) for d in range(6) for p in partition_tuples(d))
    assert ogf_from_ci(e).integers() == [1] * 6
    assert e_plus(5).constant_term == 0
    assert x_species(3).terms == {(1,): 1}


def test_omega_low_degrees():
    assert omega(3).terms == {
        (1,): 1,
        (1, 1): Fraction(-1, 2),
        (2,): Fraction(-1, 2),
        (1, 1, 1): Fraction(1, 3),
        (3,): Fraction(-1, 3),
    }


def test_bicolored_low_degrees():
    assert bc_e(2).component(2).terms == {(1, 1): 3, (2,): 1}
    assert bc_e(2).component(1).terms == {(1,): 2}
    assert bc_tau(4).terms == {(2,): 2, (2, 2): 4, (4,): 1}
    assert bc_tau(5).component(5).is_zero()


def test_bicolored_counts():
    assert ogf_from_ci(bc_e(8)).integers() == [0, 2, 4, 8, 17, 38, 94, 258, 815]
    assert ogf_from_ci(bc_tau(8)).integers() == [0, 0, 2, 0, 5, 0, 16, 0, 67]
    assert egf_from_ci(bc_e(6)).labeled_counts() == [0, 2, 6, 26, 162, 1442, 18306]


def test_bipartite_counts():
    assert ogf_from_ci(cbp(10)).integers() == [0, 1, 1, 1, 3, 5, 17, 44, 182, 730, 4032]
    assert ogf_from_ci(bp(10)).integers() == [1, 1, 2, 3, 7, 13, 35, 88, 303, 1119, 5479]
    assert bp(6) == ci_plethysm(e_species(6), cbp(6))


def test_blocks_head_of_table():
    assert ogf_from_ci(nbp(12)).integers() == [0] + TABLE_HEAD
    assert nbp(4).component(1).terms == {(1,): 1}
    assert nbp(4).component(2).terms == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}


def test_labeled_blocks():
    assert egf_from_ci(nbp(8)).labeled_counts() == [0, 1, 1, 0, 3, 10, 355, 6986, 297619]


def test_catalog_truncation_reuse():
    cat = SpeciesCatalog()
    big = cat.get("CBP", 8)
    assert cat.get("CBP", 5) == big.truncate(5)
    assert cat.get("CBP", 5).truncation == 5
    with pytest.raises(KeyError):
        cat.get("Nope", 3)
    with pytest.raises(ValueError):
        cat.get("CBP", -1)


def test_disk_cache(tmp_path):
    cold = SpeciesCatalog(tmp_path)
    value = cold.get("NBP", 7)
    assert (tmp_path / "NBP-N7.ci").read_text() == dumps(value)
    assert (tmp_path / "CBC-N8.ci").exists()
    warm = SpeciesCatalog(tmp_path)
    assert warm.get("NBP", 7) == value
    assert warm.get("NBP", 5) == value.truncate(5)
    assert warm.get("CBC", 6) == cold.get("CBC", 6)


def test_cache_file_is_trusted(tmp_path):
    # a stored file answers the request without recomputation
    (tmp_path / "Omega-N3.ci").write_text("truncation=3\ndeg=1 parts=1 coeff=7/1\n")
    assert SpeciesCatalog(tmp_path).get("Omega", 2).terms == {(1,): 7}


def test_one_vertex_block_convention():
    assert singleton(3).terms == {(1,): 1}
    assert nbp(1).terms == {(1,): 1}
