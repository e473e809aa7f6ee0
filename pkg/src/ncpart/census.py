"""Exact counting: closed formulas, brute-force orbit oracles, the count table.

All arithmetic is on Python integers. Every division in a formula is checked
for a zero remainder rather than assumed.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from numbers import Real

import numpy as np

from . import kernels
from .errors import BudgetExceededError, NCPartError
from .partitions import SetPartition

# Largest n each brute-force oracle accepts unless called with force=True.
SC_BUDGET = 14
ORBIT_BUDGET = 12
CONJECTURE_BUDGET = 10

TABLE_FIELDS = ("n", "ncpp", "dihedral", "chiral_pairs", "sc_nc", "catalan", "fpt")

# n, NC rotation classes, NC dihedral classes, chiral pairs.
PUBLISHED_TABLE = (
    (1, 1, 1, 0),
    (2, 2, 2, 0),
    (3, 3, 3, 0),
    (4, 6, 6, 0),
    (5, 10, 10, 0),
    (6, 28, 24, 4),
    (7, 63, 49, 14),
    (8, 190, 130, 60),
    (9, 546, 336, 210),
    (10, 1708, 980, 728),
    (11, 5346, 2904, 2442),
    (12, 17428, 9176, 8252),
    (13, 57148, 29432, 27716),
    (14, 191280, 97356, 93924),
    (15, 646363, 326399, 319964),
    (16, 2210670, 1111770, 1098900),
    (17, 7626166, 3825238, 3800928),
    (18, 26538292, 13293456, 13244836),
    (19, 93013854, 46553116, 46460738),
    (20, 328215300, 164200028, 164015272),
    (21, 1165060668, 582706692, 582353976),
    (22, 4158330416, 2079517924, 2078812492),
)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _positive(n: int, name: str = "n") -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise NCPartError(f"{name} must be a positive integer, got {n!r}")


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def central_binomial(n: int) -> int:
    return comb(n, n // 2)


def catalan(m) -> int:
    """Catalan number C_m; zero unless m is a non-negative integer."""
    if isinstance(m, Real) and not isinstance(m, bool):
        m = Fraction(m)
        if m.denominator == 1 and m >= 0:
            k = int(m)
            return comb(2 * k, k) // (k + 1)
    return 0


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n < 0:
        raise NCPartError(f"bell undefined for {n}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def euler_phi(m: int) -> int:
    _positive(m, "m")
    result, rest, p = m, m, 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def ncpp_formula(n: int) -> int:
    """Number of NC partition patterns (rotation classes) of n points."""
    _positive(n)
    total = catalan(n) + sum(euler_phi(n // i) * comb(2 * i, i) for i in divisors(n) if i < n)
    return _exact_div(total, n)


def fpt_formula(n: int) -> int:
    """Number of free (uncolored, unrooted) plane trees with n edges."""
    _positive(n)
    necklace = sum(euler_phi(n // d) * comb(2 * d, d) for d in divisors(n))
    half = Fraction(n - 1, 2)
    # FPT = S/(2n) - (C_n - C_{(n-1)/2})/2 over the common denominator 2n.
    return _exact_div(necklace - n * (catalan(n) - catalan(half)), 2 * n)


def bicolored_tree_formula(n: int) -> int:
    return 2 * fpt_formula(n) - catalan(Fraction(n - 1, 2))


def dihedral_formula(n: int) -> int:
    return _exact_div(ncpp_formula(n) + central_binomial(n), 2)


def chiral_pairs_formula(n: int) -> int:
    return _exact_div(ncpp_formula(n) - central_binomial(n), 2)


def _budget(n: int, limit: int, what: str, force: bool) -> None:
    _positive(n)
    if n > kernels.MAX_N:
        raise BudgetExceededError(f"{what}: n={n} exceeds the packed-code limit {kernels.MAX_N}")
    if n > limit and not force:
        raise BudgetExceededError(f"{what}: n={n} exceeds the brute-force budget {limit} (override with --force)")


def _check_clickable_args(n: int, d: int) -> None:
    _positive(n)
    _positive(d, "d")
    if n % d or n // d < 2:
        raise NCPartError(f"d={d} must be a proper divisor of n={n}")


def is_clickable(p: SetPartition, d: int) -> bool:
    """True iff p is fixed by rotation through d positions."""
    from .symmetry import rotate

    _check_clickable_args(p.n, d)
    return rotate(p, d) == p


def fixed_point_count_brute(n: int, k: int, force: bool = False) -> int:
    """How many NC partitions of [n] satisfy rotate(p, k) == p."""
    _budget(n, ORBIT_BUDGET, "fixed points", force)
    a = kernels.nc_rgs(n)
    return int(np.count_nonzero(kernels.transform_codes(a, k) == kernels.codes(a)))


def clickable_count_brute(n: int, d: int, force: bool = False) -> int:
    _check_clickable_args(n, d)
    return fixed_point_count_brute(n, d, force)


def ncpp_brute(n: int, force: bool = False) -> int:
    _budget(n, ORBIT_BUDGET, "rotation classes", force)
    return len(np.unique(kernels.orbit_min_codes(kernels.nc_rgs(n))))


def dihedral_brute(n: int, force: bool = False) -> int:
    _budget(n, ORBIT_BUDGET, "dihedral classes", force)
    return len(np.unique(kernels.orbit_min_codes(kernels.nc_rgs(n), dihedral=True)))


def _self_complementary_count(a: np.ndarray) -> int:
    return int(np.count_nonzero(kernels.transform_codes(a, 0, reflect=True) == kernels.codes(a)))


def _achiral_class_count(a: np.ndarray) -> int:
    n = a.shape[1]
    rmin = kernels.orbit_min_codes(a)
    reps = a[rmin == kernels.codes(a)]
    own = kernels.codes(reps)
    mirrored = kernels.transform_codes(reps, 0, reflect=True)
    for shift in range(1, n):
        np.minimum(mirrored, kernels.transform_codes(reps, shift, reflect=True), out=mirrored)
    return int(np.count_nonzero(mirrored == own))


def sc_nc_brute(n: int, force: bool = False) -> int:
    _budget(n, SC_BUDGET, "self-complementary", force)
    return _self_complementary_count(kernels.nc_rgs(n))


def achiral_classes_brute(n: int, force: bool = False) -> int:
    _budget(n, ORBIT_BUDGET, "achiral classes", force)
    return _achiral_class_count(kernels.nc_rgs(n))


@dataclass(frozen=True)
class ConjectureResult:
    n: int
    sc_partitions: int
    sc_rotation_classes: int

    @property
    def equal(self) -> bool:
        return self.sc_partitions == self.sc_rotation_classes


def conjecture_check(n: int, force: bool = False) -> ConjectureResult:
    """Compare self-complementary partitions and classes over ALL partitions of [n]."""
    _budget(n, CONJECTURE_BUDGET, "conjecture", force)
    a = kernels.all_rgs(n)
    return ConjectureResult(n, _self_complementary_count(a), _achiral_class_count(a))


@dataclass(frozen=True)
class CountRow:
    n: int
    ncpp: int
    dihedral: int
    chiral_pairs: int
    sc_nc: int
    achiral_classes: int
    catalan: int
    bell: int
    fpt: int
    bicolored_trees: int
    brute_verified: bool = False


def count_row(n: int, brute: bool = False) -> CountRow:
    sc = central_binomial(n)
    row = CountRow(
        n=n,
        ncpp=ncpp_formula(n),
        dihedral=dihedral_formula(n),
        chiral_pairs=chiral_pairs_formula(n),
        sc_nc=sc,
        achiral_classes=sc,
        catalan=catalan(n),
        bell=bell(n),
        fpt=fpt_formula(n),
        bicolored_trees=bicolored_tree_formula(n),
    )
    if row.bicolored_trees != row.ncpp:
        raise ArithmeticError(f"bicolored tree count disagrees with NCPP at n={n}")
    if not brute:
        return row
    checks = (
        (ncpp_brute(n), row.ncpp),
        (dihedral_brute(n), row.dihedral),
        (sc_nc_brute(n), row.sc_nc),
        (achiral_classes_brute(n), row.achiral_classes),
    )
    if any(got != want for got, want in checks):
        raise ArithmeticError(f"brute force disagrees with the formulas at n={n}: {checks}")
    return CountRow(**{**asdict(row), "brute_verified": True})


def table(n_max: int, brute_upto: int = 0) -> list[CountRow]:
    """One row per n in 1..n_max; rows with n <= brute_upto are also brute-checked."""
    _positive(n_max, "n_max")
    return [count_row(n, brute=n <= brute_upto) for n in range(1, n_max + 1)]


def table_csv(rows: list[CountRow], fields=TABLE_FIELDS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([getattr(row, f) for f in fields])
    return buf.getvalue()


def table_json(rows: list[CountRow], fields=TABLE_FIELDS) -> str:
    return json.dumps([{f: getattr(row, f) for f in fields} for row in rows], indent=2) + "\n"


def table_text(rows: list[CountRow], fields=TABLE_FIELDS) -> str:
    cells = [list(fields)] + [[str(getattr(row, f)) for f in fields] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(fields))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n" for r in cells)


def published_mismatches(rows: list[CountRow]) -> list[str]:
    """Differences between computed rows and the published three-column table."""
    published = {r[0]: r[1:] for r in PUBLISHED_TABLE}
    problems = []
    for row in rows:
        want = published.get(row.n)
        if want is None:
            continue
        got = (row.ncpp, row.dihedral, row.chiral_pairs)
        if got != want:
            problems.append(f"n={row.n}: computed {got}, published {want}")
    return problems


def fixed_point_prediction(n: int, k: int) -> int:
    """binom(2d, d) with d = gcd(n, k): the NC partitions fixed by R^k, for k not divisible by n."""
    d = gcd(n, k)
    return comb(2 * d, d) if d < n else catalan(n)
