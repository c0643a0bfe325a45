"""Cycle-index enumeration of unlabeled bipartite graphs and bipartite blocks."""

from .cycle_index import (
    AlgebraError,
    CycleIndex,
    DivisibilityError,
    InverseError,
    PlethysmError,
    ci_add,
    ci_comp_inverse,
    ci_derivative,
    ci_divide,
    ci_mul,
    ci_plethysm,
    ci_point,
    ci_scale,
    constant,
    dumps,
    format_series,
    loads,
    monomial,
    power_sum,
    singleton,
)
from .fast import BipartiteOGFs, fast_bipartite_ogfs
from .gamma import TwoGroupCycleIndex, gci_lift_trivial, gci_plethysm, gci_quotient
from .labeled import labeled_bicolored, labeled_blocks_check
from .partitions import Partition, mobius, partitions_of, z_of
from .series import PowerSeries, egf_from_ci, ogf_from_ci
from .species import (
    SpeciesCatalog,
    bc,
    bc_e,
    bc_tau,
    bp,
    cbc,
    cbp,
    e_plus,
    e_species,
    nbp,
    omega,
    x_species,
)

__version__ = "0.1.0"
