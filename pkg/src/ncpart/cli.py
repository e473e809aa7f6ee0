"""Command-line interface.

Exit status: 0 on success, 1 when a verification finds a violated identity
or count, 2 on usage or input errors (including exceeded budgets).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from math import comb, gcd
from typing import Callable, Iterable, Sequence, TextIO

from . import census, kernels
from .errors import BudgetExceededError, NCPartError
from .partitions import SetPartition, enumerate_all, enumerate_nc, format_partition, parse_partition, stats
from .paths import balanced_to_sc, dyck_to_nc, nc_to_dyck, parse_path, sc_to_balanced
from .symmetry import (
    complement,
    kreweras,
    trichotomy_violations,
    rotate,
    rotation_classes,
    rotation_orbit,
    transpose,
    transpose_family_swap,
    verify_operator_identities,
)
from .trees import (
    canonical_code,
    enumerate_tree_classes,
    format_tree,
    free_plane_tree_codes,
    leaf_stats,
    nc_to_tree,
    parse_tree,
    reflection_fixed_classes,
    tree_to_nc,
)

SEQUENCES = ("ncpp", "dihedral", "chiral", "sc", "trees", "catalan", "bell", "fpt")
SUITES = ("identities", "theorem1", "theorem2", "trees", "clickable", "lemma1", "table")
TREE_BUDGET = 10
IDENTITY_BUDGET = 10

FORMULAS: dict[str, Callable[[int], int]] = {
    "ncpp": census.ncpp_formula,
    "dihedral": census.dihedral_formula,
    "chiral": census.chiral_pairs_formula,
    "sc": census.central_binomial,
    "trees": census.bicolored_tree_formula,
    "catalan": census.catalan,
    "bell": census.bell,
    "fpt": census.fpt_formula,
}


def _tree_budget(n: int, force: bool) -> None:
    if n > TREE_BUDGET and not force:
        raise BudgetExceededError(f"tree enumeration: n={n} exceeds the budget {TREE_BUDGET} (use --force)")


def brute_count(sequence: str, n: int, force: bool = False) -> int:
    if sequence == "ncpp":
        return census.ncpp_brute(n, force)
    if sequence == "dihedral":
        return census.dihedral_brute(n, force)
    if sequence == "chiral":
        return census.ncpp_brute(n, force) - census.dihedral_brute(n, force)
    if sequence == "sc":
        return census.sc_nc_brute(n, force)
    if sequence == "catalan":
        census._budget(n, census.SC_BUDGET, "catalan", force)
        return len(kernels.nc_rgs(n))
    if sequence == "bell":
        census._budget(n, census.CONJECTURE_BUDGET, "bell", force)
        return len(kernels.all_rgs(n))
    _tree_budget(n, force)
    if sequence == "trees":
        return len(enumerate_tree_classes(n))
    return len(free_plane_tree_codes(n))


class Report:
    """Collects named pass/fail checks and prints one line per check."""

    def __init__(self, out: TextIO) -> None:
        self.out = out
        self.failed = 0
        self.total = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.total += 1
        self.failed += not ok
        suffix = f" ({detail})" if detail else ""
        self.out.write(f"{'PASS' if ok else 'FAIL'} {name}{suffix}\n")

    def summary(self) -> int:
        self.out.write(f"{self.total - self.failed}/{self.total} checks passed\n")
        return 1 if self.failed else 0


def _suite_identities(n: int, rep: Report, force: bool) -> None:
    if n > IDENTITY_BUDGET and not force:
        raise BudgetExceededError(f"identities: n={n} exceeds the budget {IDENTITY_BUDGET} (use --force)")
    result = verify_operator_identities(n)
    for name, bad in result.failures.items():
        rep.check(f"{name} on {result.cases} NC partitions of [{n}]", not bad, ", ".join(bad[:3]))


def _sc_partitions(n: int) -> list[SetPartition]:
    a = kernels.nc_rgs(n)
    rows = a[kernels.transform_codes(a, 0, reflect=True) == kernels.codes(a)]
    return [SetPartition.from_rgs(r) for r in rows]


def _suite_theorem1(n: int, rep: Report, force: bool) -> None:
    want = census.central_binomial(n)
    got = census.sc_nc_brute(n, force)
    rep.check(f"self-complementary NC partitions of [{n}] = binom({n},{n // 2})", got == want, f"{got} vs {want}")
    if n % 2:
        return
    m = n // 2
    images = {}
    round_trip = True
    for p in _sc_partitions(n):
        q = sc_to_balanced(p)
        images[q.steps] = p
        round_trip &= balanced_to_sc(q, m) == p
    rep.check(f"sc_to_balanced injective on [{n}]", len(images) == want, f"{len(images)} images")
    balanced = all(s.count("U") == m for s in images)
    rep.check(f"images are the {comb(2 * m, m)} balanced {m}-paths", balanced and len(images) == comb(2 * m, m))
    rep.check("balanced_to_sc inverts sc_to_balanced", round_trip)


def _suite_theorem2(n: int, rep: Report, force: bool) -> None:
    want = census.central_binomial(n)
    got = census.achiral_classes_brute(n, force)
    rep.check(f"achiral rotation classes of [{n}] = binom({n},{n // 2})", got == want, f"{got} vs {want}")
    if n % 2 == 0:
        swap = transpose_family_swap(n)
        rep.check(
            "transpose swaps even/odd complement-order families",
            swap.passed,
            f"{swap.even_family} even, {swap.odd_family} odd" + (f"; {swap.failures[0]}" if swap.failures else ""),
        )


def _suite_trees(n: int, rep: Report, force: bool) -> None:
    _tree_budget(n, force)
    codes = enumerate_tree_classes(n)
    want = census.ncpp_formula(n)
    rep.check(f"distinct tree codes = NCPP({n})", len(codes) == want, f"{len(codes)} vs {want}")
    fixed = reflection_fixed_classes(n)
    rep.check(f"reflection-fixed tree codes = binom({n},{n // 2})", len(fixed) == census.central_binomial(n), str(len(fixed)))
    mismatched = 0
    for p in enumerate_nc(n):
        s = stats(p)
        if leaf_stats(nc_to_tree(p)) != (s.singletons, s.adjacencies):
            mismatched += 1
    rep.check("leaf colors match (singletons, adjacencies)", mismatched == 0, f"{mismatched} mismatches")
    total = sum(c.orbit_size for c in rotation_classes(n))
    rep.check(f"sum of orbit sizes = Catalan({n})", total == census.catalan(n), str(total))


def _suite_clickable(n: int, rep: Report, force: bool) -> None:
    for d in census.divisors(n):
        if n // d < 2:
            continue
        got = census.clickable_count_brute(n, d, force)
        rep.check(f"{d}-clickable NC partitions of [{n}] = binom({2 * d},{d})", got == comb(2 * d, d), str(got))
    for k in range(1, n):
        d = gcd(n, k)
        got = census.fixed_point_count_brute(n, k, force)
        rep.check(f"fixed points of R^{k} = binom({2 * d},{d})", got == comb(2 * d, d), str(got))


def _suite_lemma1(n: int, rep: Report, force: bool) -> None:
    census._budget(n, census.ORBIT_BUDGET, "lemma1", force)
    problems, count = [], 0
    for c in rotation_classes(n, achiral_only=True):
        count += 1
        problems += trichotomy_violations(c)
    rep.check(f"achiral trichotomy on {count} achiral classes of [{n}]", not problems, "; ".join(problems[:3]))


def _suite_table(n_max: int, rep: Report, force: bool) -> None:
    rows = census.table(n_max)
    golden = census.table_csv(rows, ("n", "ncpp", "dihedral", "chiral_pairs"))
    published = "n,ncpp,dihedral,chiral_pairs\n" + "".join(
        ",".join(map(str, r)) + "\n" for r in census.PUBLISHED_TABLE if r[0] <= n_max
    )
    rep.check(f"table rows 1..{min(n_max, 22)} match the published values", golden.startswith(published), "; ".join(census.published_mismatches(rows)[:3]))
    rep.check("NCPP = 2 FPT - C_((n-1)/2) on every row", all(r.ncpp == r.bicolored_trees for r in rows))


SUITE_RUNNERS = {
    "identities": _suite_identities,
    "theorem1": _suite_theorem1,
    "theorem2": _suite_theorem2,
    "trees": _suite_trees,
    "clickable": _suite_clickable,
    "lemma1": _suite_lemma1,
    "table": _suite_table,
}


def verify_suite(name: str, n: int, out: TextIO = sys.stdout, force: bool = False) -> int:
    rep = Report(out)
    SUITE_RUNNERS[name](n, rep, force)
    return rep.summary()


def _emit_rows(out: TextIO, fmt: str, field: str, values: Iterable[str]) -> None:
    if fmt == "csv":
        out.write(field + "\n")
    for v in values:
        out.write((json.dumps(v) if fmt == "json" else v) + "\n")


def _is_class_representative(p: SetPartition, dihedral: bool) -> bool:
    me = format_partition(p)
    images = [rotate(p, k) for k in range(1, p.n)]
    if dihedral:
        c = complement(p)
        images += [rotate(c, k) for k in range(p.n)]
    return all(me <= format_partition(q) for q in images)


def _enumerate(args, out: TextIO) -> int:
    source = enumerate_nc(args.n) if args.nc_only else enumerate_all(args.n)

    def keep(p: SetPartition) -> bool:
        if args.classes:
            if not _is_class_representative(p, args.classes == "dihedral"):
                return False
            if args.self_complementary:
                c = complement(p)
                return any(rotate(p, k) == c for k in range(p.n))
            return True
        return not args.self_complementary or complement(p) == p

    _emit_rows(out, args.format, "partition", (format_partition(p) for p in source if keep(p)))
    return 0


MAPS_FROM_PARTITION = {
    "nc-to-dyck": lambda p, a: nc_to_dyck(p).steps,
    "sc-to-balanced": lambda p, a: sc_to_balanced(p).steps,
    "nc-to-tree": lambda p, a: format_tree(nc_to_tree(p)),
    "kreweras": lambda p, a: format_partition(kreweras(p)),
    "transpose": lambda p, a: format_partition(transpose(p)),
    "complement": lambda p, a: format_partition(complement(p)),
    "rotate": lambda p, a: format_partition(rotate(p, a.k)),
}
MAPS_FROM_PATH = {
    "dyck-to-nc": lambda q, a: format_partition(dyck_to_nc(q)),
    "balanced-to-sc": lambda q, a: format_partition(balanced_to_sc(q, len(q) // 2)),
}
MAPS_FROM_TREE = {
    "tree-to-nc": lambda t, a: format_partition(tree_to_nc(t)),
    "tree-code": lambda t, a: canonical_code(t, a.chirality).code,
}


def _map(args, out: TextIO) -> int:
    kind = args.kind
    if kind in MAPS_FROM_PARTITION:
        source, value = "--partition", args.partition
        convert, table = parse_partition, MAPS_FROM_PARTITION
    elif kind in MAPS_FROM_PATH:
        source, value = "--path", args.path
        convert, table = parse_path, MAPS_FROM_PATH
    else:
        source, value = "--tree", args.tree
        convert, table = parse_tree, MAPS_FROM_TREE
    if value is None:
        raise NCPartError(f"map {kind} needs {source}")
    out.write(table[kind](convert(value), args) + "\n")
    return 0


def _count(args, out: TextIO) -> int:
    ns = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    for n in ns:
        if n < 1:
            raise NCPartError(f"n must be positive, got {n}")
    f = (lambda n: brute_count(args.sequence, n, args.force)) if args.brute_force else FORMULAS[args.sequence]
    values = [(n, f(n)) for n in ns]
    if args.format == "json":
        payload = [{"n": n, args.sequence: v} for n, v in values]
        out.write(json.dumps(payload[0] if args.n is not None else payload) + "\n")
    elif args.format == "csv":
        out.write(f"n,{args.sequence}\n" + "".join(f"{n},{v}\n" for n, v in values))
    elif args.n is not None:
        out.write(f"{values[0][1]}\n")
    else:
        out.write("".join(f"{n} {v}\n" for n, v in values))
    return 0


def _orbit(args, out: TextIO) -> int:
    c = rotation_orbit(parse_partition(args.partition))
    data = c.to_dict()
    if args.format == "json":
        out.write(json.dumps(data) + "\n")
    else:
        for key, value in data.items():
            out.write(f"{key}: {value}\n")
    return 0


def _table(args, out: TextIO) -> int:
    rows = census.table(args.n_max, brute_upto=args.brute_upto)
    render = {"csv": census.table_csv, "json": census.table_json, "text": census.table_text}[args.format]
    out.write(render(rows))
    return 0


def _conjecture(args, out: TextIO) -> int:
    r = census.conjecture_check(args.n, args.force)
    if args.format == "json":
        out.write(json.dumps({"n": r.n, "sc_partitions": r.sc_partitions, "sc_rotation_classes": r.sc_rotation_classes, "equal": r.equal}) + "\n")
    else:
        out.write(f"n={r.n} sc_partitions={r.sc_partitions} sc_rotation_classes={r.sc_rotation_classes} equal={str(r.equal).lower()}\n")
    return 0 if r.equal else 1


def _verify(args, out: TextIO) -> int:
    n = args.n_max if args.suite == "table" else args.n
    if n is None:
        raise NCPartError(f"verify {args.suite} needs {'--n-max' if args.suite == 'table' else '--n'}")
    if n < 1:
        raise NCPartError(f"n must be positive, got {n}")
    return verify_suite(args.suite, n, out, args.force)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncpart", description="Noncrossing partitions under rotation and reflection.")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("text", "csv", "json")

    p = sub.add_parser("count", help="evaluate a counting sequence")
    p.add_argument("--sequence", choices=SEQUENCES, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-max", type=int)
    p.add_argument("--brute-force", action="store_true", help="count by explicit enumeration")
    p.add_argument("--force", action="store_true", help="ignore brute-force budgets")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=_count)

    p = sub.add_parser("enumerate", help="stream partitions, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nc-only", action="store_true")
    p.add_argument("--classes", choices=("rotation", "dihedral"))
    p.add_argument("--self-complementary", action="store_true")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=_enumerate)

    p = sub.add_parser("map", help="apply an operator or bijection")
    p.add_argument("kind", choices=sorted({**MAPS_FROM_PARTITION, **MAPS_FROM_PATH, **MAPS_FROM_TREE}))
    p.add_argument("--partition")
    p.add_argument("--path")
    p.add_argument("--tree")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--chirality", choices=("rotation-only", "rotation-and-reflection"), default="rotation-only")
    p.set_defaults(func=_map)

    p = sub.add_parser("orbit", help="rotation class of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_orbit)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--force", action="store_true", help="ignore brute-force budgets")
    p.set_defaults(func=_verify)

    p = sub.add_parser("table", help="counting table from the closed formulas")
    p.add_argument("--n-max", type=int, default=22)
    p.add_argument("--brute-upto", type=int, default=0, help="also brute-check rows with n <= this")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=_table)

    p = sub.add_parser("conjecture", help="compare sc partitions and sc rotation classes over all partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_conjecture)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (NCPartError, ValueError) as exc:
        err.write(f"ncpart: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
