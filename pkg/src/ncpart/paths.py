"""Up/Down lattice paths and their bijections with noncrossing partitions.

``dyck_to_nc`` numbers the upsteps 1..n, gives each downstep the number of
its matching upstep, and reads one block off each descent. For n = 2m the
self-complementary NC partitions of [2m] go to balanced m-paths through a
marked half-partition whose marked components are flipped below the axis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNoncrossingError, NotSelfComplementaryError, PathError
from .partitions import SetPartition, format_partition, is_noncrossing

UP, DOWN = "U", "D"


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self) -> None:
        bad = set(self.steps) - {UP, DOWN}
        if bad:
            raise PathError(f"illegal step(s) {''.join(sorted(bad))!r} in {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> list[int]:
        h, out = 0, [0]
        for s in self.steps:
            h += 1 if s == UP else -1
            out.append(h)
        return out

    @property
    def is_balanced(self) -> bool:
        return self.steps.count(UP) == self.steps.count(DOWN)

    @property
    def is_dyck(self) -> bool:
        return self.is_balanced and min(self.heights()) >= 0

    @property
    def peaks(self) -> int:
        return self.steps.count(UP + DOWN)

    @property
    def returns(self) -> int:
        """Steps that end at level 0."""
        return self.heights()[1:].count(0)

    def flipped(self) -> "LatticePath":
        return LatticePath(self.steps.translate(_FLIP))


_FLIP = str.maketrans({UP: DOWN, DOWN: UP})


def parse_path(text: str) -> LatticePath:
    return LatticePath(text.strip())


def format_path(p: LatticePath) -> str:
    return p.steps


def _require_dyck(p: LatticePath) -> None:
    if not p.is_dyck:
        raise PathError(f"{p.steps!r} is not a Dyck path")


def match_steps(p: LatticePath) -> dict[int, int]:
    """Map each Down step index to the index of its matching Up step (0-based)."""
    _require_dyck(p)
    pending, match = [], {}
    for i, s in enumerate(p.steps):
        if s == UP:
            pending.append(i)
        else:
            match[i] = pending.pop()
    return match


def dyck_to_nc(p: LatticePath) -> SetPartition:
    _require_dyck(p)
    if not p.steps:
        raise PathError("the empty path has no partition")
    match = match_steps(p)
    up_number = {}
    for i, s in enumerate(p.steps):
        if s == UP:
            up_number[i] = len(up_number) + 1
    blocks, current = [], []
    for i, s in enumerate(p.steps):
        if s == DOWN:
            current.append(up_number[match[i]])
        elif current:
            blocks.append(current)
            current = []
    blocks.append(current)
    return SetPartition(len(up_number), tuple(tuple(b) for b in blocks))


def nc_to_dyck(p: SetPartition) -> LatticePath:
    """Up for every element; after a block's largest element, one Down per block element."""
    if not is_noncrossing(p):
        raise NotNoncrossingError(f"{format_partition(p)} is not noncrossing")
    size_at_max = {block[-1]: len(block) for block in p.blocks}
    steps = []
    for i in range(1, p.n + 1):
        steps.append(UP)
        steps.append(DOWN * size_at_max.get(i, 0))
    return LatticePath("".join(steps))


def components(p: LatticePath) -> list[LatticePath]:
    """Split a balanced path at every return to level 0."""
    if not p.is_balanced:
        raise PathError(f"{p.steps!r} is not balanced")
    parts, start, h = [], 0, 0
    for i, s in enumerate(p.steps):
        h += 1 if s == UP else -1
        if h == 0:
            parts.append(LatticePath(p.steps[start : i + 1]))
            start = i + 1
    return parts


def _maximal_blocks(p: SetPartition) -> list[tuple[int, ...]]:
    return [
        b
        for b in p.blocks
        if not any(o[0] < b[0] and b[-1] < o[-1] for o in p.blocks)
    ]


def sc_to_balanced(p: SetPartition) -> LatticePath:
    """Balanced m-path of a self-complementary NC partition of [2m]."""
    n = p.n
    if n % 2:
        raise PathError(f"only even n is supported, got n={n}")
    if not is_noncrossing(p):
        raise NotNoncrossingError(f"{format_partition(p)} is not noncrossing")
    if p.relabel(lambda i: n + 1 - i) != p:
        raise NotSelfComplementaryError(f"{format_partition(p)} is not self-complementary")
    m = n // 2
    blocks = set(p.blocks)
    half = SetPartition(m, tuple(t for b in p.blocks if (t := tuple(x for x in b if x <= m))))
    marked = [
        tuple(sorted(t + tuple(n + 1 - x for x in t))) in blocks for t in _maximal_blocks(half)
    ]
    parts = components(nc_to_dyck(half))
    return LatticePath("".join(c.flipped().steps if mark else c.steps for c, mark in zip(parts, marked)))


def balanced_to_sc(q: LatticePath, m: int) -> SetPartition:
    """Inverse of :func:`sc_to_balanced`."""
    if len(q) != 2 * m or not q.is_balanced:
        raise PathError(f"{q.steps!r} is not a balanced {m}-path")
    if m < 1:
        raise PathError("m must be positive")
    parts = components(q)
    marked = [c.heights()[1] < 0 for c in parts]
    dyck = LatticePath("".join(c.flipped().steps if mark else c.steps for c, mark in zip(parts, marked)))
    half = dyck_to_nc(dyck)
    n = 2 * m
    maximal = dict(zip(_maximal_blocks(half), marked))
    blocks = []
    for t in half.blocks:
        mirror = tuple(n + 1 - x for x in t)
        if maximal.get(t, False):
            blocks.append(t + mirror)
        else:
            blocks.extend((t, mirror))
    return SetPartition(n, tuple(blocks))
