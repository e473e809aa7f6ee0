"""Set partitions of [n]: data model, text format, noncrossing test, generators.

Elements are 1-based everywhere. A partition is always stored in canonical
order: each block ascending, blocks sorted by their minimum. Text format is
``"1,3,4/2/5,6"`` (blocks separated by ``/``, elements by ``,``; whitespace
is ignored).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateElementError,
    ElementRangeError,
    EmptyBlockError,
    MissingElementError,
    PartitionError,
    PartitionSyntaxError,
)

__all__ = [
    "SetPartition",
    "PartitionStats",
    "parse_partition",
    "format_partition",
    "is_noncrossing",
    "enumerate_all",
    "enumerate_nc",
    "stats",
]

_ELEMENT = re.compile(r"\d+\Z")


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., n} held in canonical block order.

    Construct with :meth:`from_blocks` or :meth:`from_rgs`; the plain
    constructor validates too, and canonicalizes whatever order it is given.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PartitionError(f"ground set size must be positive, got {self.n}")
        seen: set[int] = set()
        canon = []
        for block in self.blocks:
            if not block:
                raise EmptyBlockError("empty block")
            for x in block:
                if x in seen:
                    raise DuplicateElementError(f"duplicate element {x}")
                if not 1 <= x <= self.n:
                    raise ElementRangeError(f"element {x} outside [1, {self.n}]")
                seen.add(x)
            canon.append(tuple(sorted(block)))
        if len(seen) != self.n:
            missing = min(set(range(1, self.n + 1)) - seen)
            raise MissingElementError(f"element {missing} missing")
        canon.sort()
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = max((max(b) for b in blocks if b), default=0)
        return cls(n, tuple(blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        """Build from a restricted growth string of 0-based block labels."""
        groups: dict[int, list[int]] = {}
        for i, label in enumerate(rgs, start=1):
            groups.setdefault(int(label), []).append(i)
        return cls(len(rgs), tuple(tuple(g) for g in groups.values()))

    def rgs(self) -> tuple[int, ...]:
        labels = [0] * self.n
        for b, block in enumerate(self.blocks):
            for x in block:
                labels[x - 1] = b
        return tuple(labels)

    def block_index(self) -> dict[int, int]:
        """Map each element to the index of its block."""
        return {x: b for b, block in enumerate(self.blocks) for x in block}

    def relabel(self, f) -> "SetPartition":
        """Apply an element map ``f: [n] -> [n]`` (assumed bijective) to every block."""
        return SetPartition(self.n, tuple(tuple(f(x) for x in block) for block in self.blocks))

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class PartitionStats:
    singletons: int
    adjacencies: int
    block_count: int
    maximal_block_count: int


def parse_partition(text: str, expected_n: int | None = None) -> SetPartition:
    """Parse ``"1,3,4/2/5,6"`` into a canonical :class:`SetPartition`.

    Each kind of malformed input raises its own ``PartitionError`` subclass.
    """
    cleaned = "".join(text.split())
    if not cleaned:
        raise PartitionSyntaxError("empty partition text")
    blocks: list[list[int]] = []
    seen: set[int] = set()
    for chunk in cleaned.split("/"):
        if chunk == "":
            raise EmptyBlockError(f"empty block in {text!r}")
        block = []
        for token in chunk.split(","):
            if not _ELEMENT.match(token):
                raise PartitionSyntaxError(f"bad element {token!r} in {text!r}")
            x = int(token)
            if x in seen:
                raise DuplicateElementError(f"duplicate element {x}")
            seen.add(x)
            block.append(x)
        blocks.append(block)
    n = max(seen) if expected_n is None else expected_n
    if min(seen) < 1 or max(seen) > n:
        bad = min(seen) if min(seen) < 1 else max(seen)
        raise ElementRangeError(f"element {bad} outside [1, {n}]")
    if len(seen) != n:
        missing = min(set(range(1, n + 1)) - seen)
        raise MissingElementError(f"element {missing} missing from [1, {n}]")
    return SetPartition(n, tuple(tuple(b) for b in blocks))


def format_partition(p: SetPartition) -> str:
    return "/".join(",".join(map(str, block)) for block in p.blocks)


def is_noncrossing(p: SetPartition) -> bool:
    """Single left-to-right scan with a stack of open blocks.

    A block is open between its minimum and its maximum. An element that
    continues a block must find that block on top of the stack.
    """
    where = p.block_index()
    last = [block[-1] for block in p.blocks]
    first = [block[0] for block in p.blocks]
    stack: list[int] = []
    for i in range(1, p.n + 1):
        b = where[i]
        if i != first[b]:
            if not stack or stack[-1] != b:
                return False
            if i == last[b]:
                stack.pop()
        elif i != last[b]:
            stack.append(b)
    return True


def enumerate_all(n: int) -> Iterator[SetPartition]:
    """All partitions of [n], restricted growth strings in lexicographic order."""
    if n < 1:
        raise PartitionError(f"n must be positive, got {n}")
    rgs = [0] * n
    # maxes[i] = max label among rgs[:i+1]
    maxes = [0] * n
    while True:
        yield SetPartition.from_rgs(rgs)
        i = n - 1
        while i > 0 and rgs[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            maxes[j] = maxes[i]


def enumerate_nc(n: int) -> Iterator[SetPartition]:
    """All noncrossing partitions of [n].

    Order is the restricted-growth-string lexicographic order of
    :func:`enumerate_all`, restricted to the noncrossing ones. The generator
    never visits a crossing partition: element ``i`` may only join a block on
    the open-block stack (closing every block above it) or open a new block.
    """
    if n < 1:
        raise PartitionError(f"n must be positive, got {n}")
    rgs = [0] * n

    def extend(i: int, stack: tuple[int, ...], nblocks: int) -> Iterator[SetPartition]:
        if i == n:
            yield SetPartition.from_rgs(rgs)
            return
        for depth, label in enumerate(stack):
            rgs[i] = label
            yield from extend(i + 1, stack[: depth + 1], nblocks)
        rgs[i] = nblocks
        yield from extend(i + 1, stack + (nblocks,), nblocks + 1)

    rgs[0] = 0
    yield from extend(1, (0,), 1)


def stats(p: SetPartition) -> PartitionStats:
    """Singletons, circular adjacencies, block count and maximal-block count.

    ``n`` and ``1`` count as consecutive, so the one-element partition has
    one adjacency (1 follows itself).
    """
    where = p.block_index()
    adjacencies = sum(1 for i in range(1, p.n + 1) if where[i] == where[i % p.n + 1])
    singletons = sum(1 for block in p.blocks if len(block) == 1)
    maximal = 0
    for block in p.blocks:
        lo, hi = block[0], block[-1]
        if not any(other[0] < lo and hi < other[-1] for other in p.blocks):
            maximal += 1
    return PartitionStats(singletons, adjacencies, len(p.blocks), maximal)
