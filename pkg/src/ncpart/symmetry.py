"""Rotation, complement, Kreweras complement and transpose; rotation classes.

Notation used in names below: R is ``rotate(., 1)`` (i -> i+1 mod n), C is
``complement`` (i -> n+1-i), H is ``kreweras`` and T is ``transpose`` = C o H.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .errors import NotAchiralError, NotNoncrossingError
from .partitions import SetPartition, enumerate_nc, format_partition, is_noncrossing

EVEN, ODD, NOT_APPLICABLE = "even", "odd", "not-applicable"


def rotate(p: SetPartition, k: int = 1) -> SetPartition:
    n = p.n
    return p.relabel(lambda i: (i - 1 + k) % n + 1)


def complement(p: SetPartition) -> SetPartition:
    n = p.n
    return p.relabel(lambda i: n + 1 - i)


def _require_nc(p: SetPartition) -> None:
    if not is_noncrossing(p):
        raise NotNoncrossingError(f"{format_partition(p)} is not noncrossing")


def kreweras(p: SetPartition) -> SetPartition:
    """Kreweras complement on the gaps of p.

    Gap ``i`` sits between elements ``i`` and ``i+1`` (gap ``n`` between ``n``
    and ``1``). Two gaps share a block iff no block of p separates them; the
    blocks are the cycles of ``i -> pred(i+1)``, where ``pred`` steps
    backwards cyclically inside a block of p. With this placement
    ``kreweras(kreweras(p)) == rotate(p, -1)``.
    """
    _require_nc(p)
    n = p.n
    pred = {}
    for block in p.blocks:
        for j, x in enumerate(block):
            pred[x] = block[j - 1]
    step = {i: pred[i % n + 1] for i in range(1, n + 1)}
    blocks, seen = [], set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(i)
            i = step[i]
        blocks.append(tuple(cycle))
    return SetPartition(n, tuple(blocks))


def transpose(p: SetPartition) -> SetPartition:
    return complement(kreweras(p))


def is_self_complementary(p: SetPartition) -> bool:
    return complement(p) == p


def orbit_period(p: SetPartition) -> int:
    """Least t >= 1 with rotate(p, t) == p."""
    for t in range(1, p.n + 1):
        if p.n % t == 0 and rotate(p, t) == p:
            return t
    raise AssertionError("rotation by n must fix every partition")


def complement_order(p: SetPartition) -> int:
    """Least i >= 1 with complement(p) == rotate(p, i)."""
    target = complement(p)
    for i in range(1, p.n + 1):
        if rotate(p, i) == target:
            return i
    raise NotAchiralError(f"the rotation class of {format_partition(p)} is not achiral")


@dataclass(frozen=True)
class RotationClass:
    representative: SetPartition
    orbit_size: int
    achiral: bool
    sc_members: tuple[int, ...]
    complement_order_parity: str

    def members(self) -> list[SetPartition]:
        return [rotate(self.representative, i) for i in range(self.orbit_size)]

    def to_dict(self) -> dict:
        return {
            "representative": format_partition(self.representative),
            "orbit_size": self.orbit_size,
            "achiral": self.achiral,
            "sc_members": list(self.sc_members),
            "sc_count": len(self.sc_members),
            "complement_order_parity": self.complement_order_parity,
        }


def rotation_orbit(p: SetPartition) -> RotationClass:
    """The rotation class of p with its mirror-symmetry data.

    The representative is the member whose formatted string is least; orbit
    indices in ``sc_members`` count rotations from that representative.
    """
    t = orbit_period(p)
    rep = min((rotate(p, i) for i in range(t)), key=format_partition)
    members = [rotate(rep, i) for i in range(t)]
    achiral = complement(rep) in members
    sc = tuple(i for i, q in enumerate(members) if is_self_complementary(q))
    if achiral:
        parity = EVEN if complement_order(rep) % 2 == 0 else ODD
    else:
        parity = NOT_APPLICABLE
    return RotationClass(rep, t, achiral, sc, parity)


@dataclass(frozen=True)
class AchiralClassification:
    orbit_size: int
    complement_order_parity: str | None
    sc_count: int

    @property
    def orbit_size_parity(self) -> str:
        return ODD if self.orbit_size % 2 else EVEN

    def to_dict(self) -> dict:
        return {
            "orbit_size": self.orbit_size,
            "achiral": True,
            "sc_count": self.sc_count,
            "complement_order_parity": self.complement_order_parity,
        }


def classify_achiral(c: RotationClass) -> AchiralClassification:
    """Parity data of an achiral class.

    Complement-order parity is reported only for even orbits, where every
    member shares it; for odd orbits it varies along the orbit and is None.
    """
    if not c.achiral:
        raise NotAchiralError(f"class of {format_partition(c.representative)} is not achiral")
    if c.orbit_size % 2:
        return AchiralClassification(c.orbit_size, None, len(c.sc_members))
    return AchiralClassification(c.orbit_size, c.complement_order_parity, len(c.sc_members))


def trichotomy_violations(c: RotationClass) -> list[str]:
    """Check the orbit-parity / complement-order / sc-count trichotomy member by member."""
    label = format_partition(c.representative)
    problems = []
    sc = len(c.sc_members)
    if sc > 2:
        problems.append(f"{label}: {sc} self-complementary members")
    if c.orbit_size % 2:
        if sc != 1:
            problems.append(f"{label}: odd orbit with {sc} self-complementary members")
        return problems
    parities = {complement_order(q) % 2 for q in c.members()}
    if len(parities) != 1:
        problems.append(f"{label}: mixed complement-order parity in an even orbit")
    elif parities == {0} and sc != 2:
        problems.append(f"{label}: even complement order but {sc} self-complementary members")
    elif parities == {1} and sc != 0:
        problems.append(f"{label}: odd complement order but {sc} self-complementary members")
    return problems


def rotation_classes(n: int, achiral_only: bool = False) -> Iterator[RotationClass]:
    """Every NC rotation class of [n], one per orbit, in order of least RGS code."""
    a = kernels.nc_rgs(n)
    own = kernels.codes(a)
    reps = a[kernels.orbit_min_codes(a) == own]
    if achiral_only:
        rep_codes = kernels.codes(reps)
        mirrored = np.minimum.reduce(
            [kernels.transform_codes(reps, s, reflect=True) for s in range(n)]
        )
        reps = reps[mirrored == rep_codes]
    for row in reps:
        yield rotation_orbit(SetPartition.from_rgs(row))


@dataclass
class IdentityReport:
    n: int
    cases: int = 0
    failures: dict[str, list[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for name, bad in self.failures.items():
            status = "PASS" if not bad else f"FAIL ({len(bad)} of {self.cases})"
            out.append(f"{name}: {status}")
        return out


def _iterate(f: Callable[[SetPartition], SetPartition], p: SetPartition, times: int) -> SetPartition:
    for _ in range(times):
        p = f(p)
    return p


def operator_identities(n: int) -> dict[str, Callable[[SetPartition], bool]]:
    R = lambda q: rotate(q, 1)  # noqa: E731
    Rinv = lambda q: rotate(q, -1)  # noqa: E731
    C, H, T = complement, kreweras, transpose
    return {
        "H^2 = R^-1": lambda p: H(H(p)) == Rinv(p),
        "T^2 = I": lambda p: T(T(p)) == p,
        "T = CH": lambda p: T(p) == C(H(p)),
        "TR = R^-1 T": lambda p: T(R(p)) == Rinv(T(p)),
        "CT = TRC": lambda p: C(T(p)) == T(R(C(p))),
        "CR = R^-1 C": lambda p: C(R(p)) == Rinv(C(p)),
        "H^2n = I": lambda p: _iterate(H, p, 2 * n) == p,
        "CHC = H^-1": lambda p: H(C(H(C(p)))) == p,
    }


def verify_operator_identities(n: int) -> IdentityReport:
    """Check every operator identity on every NC partition of [n]."""
    checks = operator_identities(n)
    report = IdentityReport(n, failures={name: [] for name in checks})
    for p in enumerate_nc(n):
        report.cases += 1
        for name, check in checks.items():
            if not check(p):
                report.failures[name].append(format_partition(p))
    return report


@dataclass
class SwapReport:
    n: int
    even_family: int = 0
    odd_family: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.even_family == self.odd_family


def transpose_family_swap(n: int) -> SwapReport:
    """Check that T swaps even- and odd-complement-order even-size achiral classes.

    T maps rotation orbits onto rotation orbits, so the map is checked on
    representatives: the image class must be achiral, of even size, with the
    opposite parity, and T of the image must land back in the original class.
    """
    report = SwapReport(n)
    if n % 2:
        return report
    for c in rotation_classes(n, achiral_only=True):
        if c.orbit_size % 2:
            continue
        label = format_partition(c.representative)
        if c.complement_order_parity == EVEN:
            report.even_family += 1
        else:
            report.odd_family += 1
        image = rotation_orbit(transpose(c.representative))
        if not image.achiral or image.orbit_size % 2:
            report.failures.append(f"{label}: transpose leaves the even-size achiral classes")
        elif image.complement_order_parity == c.complement_order_parity:
            report.failures.append(f"{label}: transpose keeps parity {c.complement_order_parity}")
        back = rotation_orbit(transpose(image.representative))
        if back.representative != c.representative:
            report.failures.append(f"{label}: transpose is not an involution on classes")
    return report
