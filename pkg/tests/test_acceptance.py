"""Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact."""

import io
import random
import subprocess
import sys
import time
from fractions import Fraction

from bipartite_species import (
    CycleIndex,
    bc,
    bc_e,
    bp,
    cbc,
    cbp,
    ci_comp_inverse,
    ci_divide,
    ci_mul,
    ci_plethysm,
    ci_point,
    dumps,
    e_plus,
    egf_from_ci,
    fast_bipartite_ogfs,
    gci_lift_trivial,
    gci_plethysm,
    labeled_bicolored,
    labeled_blocks_check,
    loads,
    nbp,
    ogf_from_ci,
    omega,
    singleton,
)
from bipartite_species.cli import main
from bipartite_species.gamma import dumps_gci, loads_gci
from bipartite_species.oracle import FAMILIES, oracle_count
from bipartite_species.partitions import partition_tuples

TABLE = [
    1, 1, 0, 1, 1, 5, 8, 42, 146, 956, 6643, 65921, 818448, 13442572, 287665498,
    8099980771, 300760170216, 14791653463768, 967055338887805, 84368806391412395,
    9855854129239183783, 1546801291978378704267, 327092325302250220001201,
    93454432085788531687319514,
]


def test_blocks_table(record_criterion):
    out = io.StringIO()
    start = time.perf_counter()
    code = main(["count", "--species", "blocks", "--max-n", "24"], out=out)
    elapsed = time.perf_counter() - start
    rows = [line.split() for line in out.getvalue().splitlines()]
    got = [int(c) for _, c in rows]
    ok = code == 0 and [int(n) for n, _ in rows] == list(range(1, 25)) and got == TABLE
    record_criterion(f"1 blocks table n <= 24 exact ({elapsed:.1f}s)", ok)
    assert ok


def test_oracle_equivalence(record_criterion):
    n = 6
    ogfs = fast_bipartite_ogfs(n)
    pipeline = {
        "bicolored": ogf_from_ci(bc_e(n)).integers(),
        "bicolored-tau-symmetric": ogf_from_ci(bc(n).at_tau).integers(),
        "connected-bicolored": ogf_from_ci(cbc(n).at_e).integers(),
        "bipartite": ogf_from_ci(bp(n)).integers(),
        "connected-bipartite": ogf_from_ci(cbp(n)).integers(),
        "bipartite-block": ogf_from_ci(nbp(n)).integers(),
    }
    start = time.perf_counter()
    bad = [
        (family, k)
        for family in FAMILIES
        for k in range(1, n + 1)
        if oracle_count(family, k) != pipeline[family][k]
    ]
    bad += [("fast f_e", k) for k in range(n + 1) if ogfs.f_e[k] != oracle_count("bicolored", k)]
    bad += [("fast f_tau", k) for k in range(n + 1) if ogfs.f_tau[k] != oracle_count("bicolored-tau-symmetric", k)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    note = f" first bad: {bad[:3]}" if bad else ""
    record_criterion(f"2 oracle equivalence n <= 6, six families ({elapsed:.1f}s){note}", ok)
    assert ok


def test_labeled_cross_checks(record_criterion):
    n = 12
    bicolored = egf_from_ci(bc_e(n)).labeled_counts()
    blocks = egf_from_ci(nbp(n)).labeled_counts()
    ok = bicolored[1:] == [labeled_bicolored(k) for k in range(1, n + 1)]
    ok = ok and blocks == labeled_blocks_check(n).labeled_counts()
    record_criterion("3 labeled bicolored and labeled blocks n <= 12", ok)
    assert ok


def _random_series(rng, n, min_degree):
    keys = [p for d in range(min_degree, n + 1) for p in partition_tuples(d)]
    chosen = rng.sample(keys, rng.randint(1, 5))
    return CycleIndex({p: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for p in chosen}, n)


def test_identity_suite(record_criterion):
    checks = {}
    x12 = singleton(12)
    checks["Omega o E+ = X"] = ci_plethysm(omega(12), e_plus(12)) == x12
    checks["E+ o Omega = X"] = ci_plethysm(e_plus(12), omega(12)) == x12

    pointed = ci_point(cbp(10))
    inv = ci_comp_inverse(pointed, 10)
    x10 = singleton(10)
    checks["inverse round trip"] = ci_plethysm(pointed, inv) == x10 and ci_plethysm(inv, pointed) == x10

    w = ci_comp_inverse(ci_point(cbp(11)), 11)
    q = ci_divide(singleton(11), w, 10)
    s = ci_mul(bp(10), omega(10))
    checks["divide/multiply round trip"] = (
        ci_mul(q, w, 11) == singleton(11) and ci_divide(ci_mul(s, w, 11), w, 10) == s
    )

    rebuilt = gci_plethysm(gci_lift_trivial(e_plus(10)), cbc(10))
    checks["BC = E+ o CBC, both slots"] = rebuilt.at_e == bc(10).at_e and rebuilt.at_tau == bc(10).at_tau

    rng = random.Random(20261016)
    assoc = True
    for _ in range(50):
        f = _random_series(rng, 6, 0)
        g = _random_series(rng, 6, 1)
        h = _random_series(rng, 6, 1)
        assoc &= ci_plethysm(ci_plethysm(f, g), h) == ci_plethysm(f, ci_plethysm(g, h))
    checks["associativity x50"] = assoc

    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    note = f" failed: {failed}" if failed else ""
    record_criterion(f"4 identity suite ({len(checks)} identities){note}", ok)
    assert ok


def test_dual_paths(record_criterion):
    n = 20
    fast = fast_bipartite_ogfs(n)
    ok = fast.c == ogf_from_ci(cbp(n)) and fast.b == ogf_from_ci(bp(n))
    record_criterion("5 fast OGF path equals cycle-index path for c and b through degree 20", ok)
    assert ok


def test_determinism(record_criterion, tmp_path):
    commands = [
        ["count", "--species", "blocks", "--max-n", "12"],
        ["count", "--species", "bipartite", "--max-n", "12", "--format", "json"],
        ["count", "--species", "labeled-blocks", "--max-n", "10", "--format", "csv"],
        ["cycle-index", "--species", "NBP", "--max-n", "8"],
        ["cycle-index", "--species", "CBC", "--max-n", "6"],
    ]
    same = True
    for argv in commands:
        cmd = [sys.executable, "-m", "bipartite_species", *argv]
        runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
        same &= runs[0] == runs[1] and bool(runs[0])
    series = [nbp(10), cbp(10), omega(8), bc_e(6)]
    round_trip = all(loads(dumps(f)) == f and dumps(loads(dumps(f))) == dumps(f) for f in series)
    round_trip &= loads_gci(dumps_gci(cbc(8))) == cbc(8)
    ok = same and round_trip
    record_criterion("6 byte-identical repeated runs and exact serialization round trip", ok)
    assert ok
