"""Command-line front end.

Commands
--------
count        table of counts for 1 <= n <= max_n
cycle-index  dump a catalog series in the cache format
eval         evaluate a species expression
verify       compare the pipeline against brute force and labeled formulas

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 algebra error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
from math import factorial
import sys
from dataclasses import dataclass

from . import species as sp
from .cycle_index import AlgebraError, dumps
from .dsl import DslError, evaluate
from .fast import fast_bipartite_ogfs
from .gamma import TwoGroupCycleIndex, dumps_gci
from .labeled import labeled_bicolored, labeled_blocks_check
from .oracle import DEFAULT_LIMIT, OPT_IN_LIMIT, oracle_count
from .series import egf_from_ci, ogf_from_ci

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_ALGEBRA = 0, 1, 2, 3

COUNT_SPECIES = (
    "bicolored",
    "connected-bicolored",
    "bipartite",
    "connected-bipartite",
    "blocks",
    "labeled-bicolored",
    "labeled-blocks",
)
FORMATS = ("table", "csv", "json")
DEFAULT_MAX_N = 16


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    species: str | None = None
    format: str = "table"
    cache_dir: str | None = None
    verify_limit: int = DEFAULT_LIMIT

    def __post_init__(self):
        if self.max_n < 1:
            raise UsageError("--max-n must be at least 1")
        if not 1 <= self.verify_limit <= OPT_IN_LIMIT:
            raise UsageError(f"--limit must be between 1 and {OPT_IN_LIMIT}")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")


def _catalog(config: RunConfig) -> sp.SpeciesCatalog:
    return sp.SpeciesCatalog(config.cache_dir)


def _rational_text(c) -> str:
    return str(int(c.numerator)) if c.denominator == 1 else f"{int(c.numerator)}/{int(c.denominator)}"


# -- count ------------------------------------------------------------------------

def compute_counts(config: RunConfig) -> list[int]:
    """Counts for n = 1..max_n of the configured family."""
    n, name = config.max_n, config.species
    if name == "blocks":
        return ogf_from_ci(_catalog(config).get("NBP", n)).integers()[1:]
    if name == "labeled-bicolored":
        return [labeled_bicolored(k) for k in range(1, n + 1)]
    if name == "labeled-blocks":
        return labeled_blocks_check(n).labeled_counts()[1:]
    ogfs = fast_bipartite_ogfs(n)
    series = {
        "bicolored": ogfs.f_e,
        "connected-bicolored": ogfs.g_e,
        "bipartite": ogfs.b,
        "connected-bipartite": ogfs.c,
    }[name]
    return series.integers()[1:]


def render_counts(species: str, counts: list[int], fmt: str) -> str:
    rows = [(str(n), str(c)) for n, c in enumerate(counts, start=1)]
    if fmt == "table":
        wn = max(len(r[0]) for r in rows)
        wc = max(len(r[1]) for r in rows)
        return "".join(f"{n:>{wn}}  {c:>{wc}}\n" for n, c in rows)
    if fmt == "csv":
        # counts quoted so spreadsheet-style readers keep every digit
        return "n,count\n" + "".join(f'{n},"{c}"\n' for n, c in rows)
    payload = {
        "species": species,
        "max_n": len(counts),
        "counts": [{"n": int(n), "count": c} for n, c in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_count(config: RunConfig, out) -> int:
    if config.species not in COUNT_SPECIES:
        raise UsageError(f"--species must be one of {', '.join(COUNT_SPECIES)}")
    out.write(render_counts(config.species, compute_counts(config), config.format))
    return EXIT_OK


# -- cycle-index ---------------------------------------------------------------------

def cmd_cycle_index(config: RunConfig, out) -> int:
    catalog = _catalog(config)
    if config.species not in catalog.names:
        raise UsageError(f"--species must be one of {', '.join(catalog.names)}")
    series = catalog.get(config.species, config.max_n)
    text = dumps_gci(series) if isinstance(series, TwoGroupCycleIndex) else dumps(series)
    if config.cache_dir is not None:
        path = os.path.join(config.cache_dir, f"{config.species}-N{config.max_n}.ci")
        if not os.path.exists(path):
            os.makedirs(config.cache_dir, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
    out.write(text)
    return EXIT_OK


# -- eval -----------------------------------------------------------------------------

def cmd_eval(expression: str, config: RunConfig, show_ogf: bool, out) -> int:
    result = evaluate(expression, config.max_n, _catalog(config))
    out.write(f"{result}\n")
    if show_ogf:
        out.write(" ".join(_rational_text(c) for c in ogf_from_ci(result)) + "\n")
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    family: str
    n: int
    expected: object
    actual: object


def _first_mismatch(family: str, expected: list, actual: list, start: int = 1):
    for n in range(start, len(expected)):
        if expected[n] != actual[n]:
            return Mismatch(family, n, expected[n], actual[n])
    return None


def _ogf_list(series, n: int) -> list:
    # rationals, not ints: a faulty series should be reported, not crash
    return list(ogf_from_ci(series, n))


def _labeled(series) -> list:
    return [c * factorial(k) for k, c in enumerate(egf_from_ci(series))]


def verification_checks(config: RunConfig):
    """Yield ``(label, mismatch_or_None)`` for every oracle and labeled comparison."""
    limit, catalog = config.verify_limit, _catalog(config)
    big = limit == OPT_IN_LIMIT

    def oracle(family):
        return [oracle_count(family, k, allow_seven=big) for k in range(limit + 1)]

    cbc = catalog.get("CBC", limit)
    pipeline = {
        "bicolored": _ogf_list(catalog.get("BCe", limit), limit),
        "bicolored-tau-symmetric": _ogf_list(catalog.get("BCtau", limit), limit),
        "connected-bicolored": _ogf_list(cbc.at_e, limit),
        "bipartite": _ogf_list(catalog.get("BP", limit), limit),
        "connected-bipartite": _ogf_list(catalog.get("CBP", limit), limit),
        "bipartite-block": _ogf_list(catalog.get("NBP", limit), limit),
    }
    for family, actual in pipeline.items():
        yield f"{family}: oracle vs cycle index, n <= {limit}", _first_mismatch(family, oracle(family), actual)

    fast = fast_bipartite_ogfs(limit)
    for family, series in (("bicolored", fast.f_e), ("bicolored-tau-symmetric", fast.f_tau)):
        yield f"{family}: oracle vs fast OGF, n <= {limit}", _first_mismatch(family, oracle(family), list(series))

    n = config.max_n
    labeled_bc = [labeled_bicolored(k) for k in range(n + 1)]
    yield (
        f"labeled-bicolored: cycle index EGF vs closed form, n <= {n}",
        _first_mismatch("labeled-bicolored", labeled_bc, _labeled(catalog.get("BCe", n))),
    )
    yield (
        f"labeled-blocks: cycle index EGF vs functional equation, n <= {n}",
        _first_mismatch(
            "labeled-blocks",
            labeled_blocks_check(n).labeled_counts(),
            _labeled(catalog.get("NBP", n)),
        ),
    )


def cmd_verify(config: RunConfig, out) -> int:
    first = None
    for label, mismatch in verification_checks(config):
        out.write(f"{'PASS' if mismatch is None else 'FAIL'}  {label}\n")
        if mismatch is not None and first is None:
            first = mismatch
    if first is not None:
        out.write(
            f"first mismatch: family={first.family} n={first.n} "
            f"expected={first.expected} actual={first.actual}\n"
        )
        return EXIT_VERIFY
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipartite-species", description="Count unlabeled bipartite graphs and blocks.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, species_required: bool):
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument("--cache-dir", default=None)
        if species_required:
            p.add_argument("--species", required=True)

    p = sub.add_parser("count", help="print counts for n = 1..max_n")
    common(p, True)
    p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("cycle-index", help="dump a cycle index in the cache format")
    common(p, True)

    p = sub.add_parser("eval", help="evaluate a species expression")
    p.add_argument("expression")
    common(p, False)
    p.add_argument("--ogf", action="store_true", help="also print OGF coefficients")

    p = sub.add_parser("verify", help="check the pipeline against brute force")
    common(p, False)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        config = RunConfig(
            max_n=args.max_n,
            species=getattr(args, "species", None),
            format=getattr(args, "format", "table"),
            cache_dir=args.cache_dir,
            verify_limit=getattr(args, "limit", DEFAULT_LIMIT),
        )
        if args.command == "count":
            return cmd_count(config, out)
        if args.command == "cycle-index":
            return cmd_cycle_index(config, out)
        if args.command == "eval":
            return cmd_eval(args.expression, config, args.ogf, out)
        return cmd_verify(config, out)
    except UsageError as exc:
        print(f"bipartite-species: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DslError as exc:
        print(f"bipartite-species: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"bipartite-species: algebra error: {exc}", file=sys.stderr)
        return EXIT_ALGEBRA


if __name__ == "__main__":
    sys.exit(main())
