"""Bicolored plane trees and the bijection with NC rotation classes.

The tree of an NC partition p has one yellow vertex per block of p, one white
vertex per block of ``kreweras(p)``, and one edge per element i, joining the
block of i to the Kreweras block of gap i. Around a yellow vertex the edges
follow the cyclic order of the block; around a white vertex they follow
``i -> pred(i + 1)``. The boundary walk of the resulting plane tree then
meets the edges in the order 1, 2, ..., n, which is how :func:`tree_to_nc`
reads the labels back.

Text format: color letter, then the parenthesized comma-separated children,
e.g. ``"W(Y,Y,Y)"``; a leaf is just its letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NotNoncrossingError, TreeError
from .partitions import SetPartition, enumerate_nc, format_partition, is_noncrossing

YELLOW, WHITE = "Y", "W"
ROTATION_ONLY = "rotation-only"
ROTATION_AND_REFLECTION = "rotation-and-reflection"
CHIRALITIES = (ROTATION_ONLY, ROTATION_AND_REFLECTION)

_OTHER = {YELLOW: WHITE, WHITE: YELLOW}


@dataclass(frozen=True)
class BicoloredPlaneTree:
    """A plane tree rooted at some vertex; children listed in rotation order."""

    color: str
    children: tuple["BicoloredPlaneTree", ...] = ()

    def __str__(self) -> str:
        return format_tree(self)

    @property
    def edge_count(self) -> int:
        return sum(1 + c.edge_count for c in self.children)

    def mirrored(self) -> "BicoloredPlaneTree":
        return BicoloredPlaneTree(self.color, tuple(c.mirrored() for c in reversed(self.children)))


@dataclass(frozen=True)
class TreeCode:
    code: str
    chirality: str


def format_tree(t: BicoloredPlaneTree) -> str:
    if not t.children:
        return t.color
    return t.color + "(" + ",".join(format_tree(c) for c in t.children) + ")"


def parse_tree(text: str) -> BicoloredPlaneTree:
    s = "".join(text.split())
    pos = 0

    def node() -> BicoloredPlaneTree:
        nonlocal pos
        if pos >= len(s) or s[pos] not in (YELLOW, WHITE):
            raise TreeError(f"expected Y or W at offset {pos} in {text!r}")
        color = s[pos]
        pos += 1
        kids = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            kids.append(node())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                kids.append(node())
            if pos >= len(s) or s[pos] != ")":
                raise TreeError(f"expected ')' at offset {pos} in {text!r}")
            pos += 1
        return BicoloredPlaneTree(color, tuple(kids))

    tree = node()
    if pos != len(s):
        raise TreeError(f"trailing text at offset {pos} in {text!r}")
    return tree


def check_coloring(t: BicoloredPlaneTree) -> None:
    stack = [t]
    while stack:
        v = stack.pop()
        if v.color not in _OTHER:
            raise TreeError(f"unknown color {v.color!r}")
        for c in v.children:
            if c.color != _OTHER[v.color]:
                raise TreeError("adjacent vertices share a color")
            stack.append(c)


def _rotations(p: SetPartition) -> tuple[dict[int, int], dict[int, int]]:
    """Yellow and white rotation permutations on edge labels [n]."""
    n = p.n
    succ, pred = {}, {}
    for block in p.blocks:
        for j, x in enumerate(block):
            succ[x] = block[(j + 1) % len(block)]
            pred[x] = block[j - 1]
    white = {i: pred[i % n + 1] for i in range(1, n + 1)}
    return succ, white


def nc_to_tree(p: SetPartition) -> BicoloredPlaneTree:
    """Tree of p rooted at the white vertex of edge 1, whose first child is edge 1."""
    if not is_noncrossing(p):
        raise NotNoncrossingError(f"{format_partition(p)} is not noncrossing")
    yellow_rot, white_rot = _rotations(p)

    def cycle_after(rot: dict[int, int], e: int) -> list[int]:
        out, f = [], rot[e]
        while f != e:
            out.append(f)
            f = rot[f]
        return out

    def yellow(e: int) -> BicoloredPlaneTree:
        return BicoloredPlaneTree(YELLOW, tuple(white(f) for f in cycle_after(yellow_rot, e)))

    def white(e: int) -> BicoloredPlaneTree:
        return BicoloredPlaneTree(WHITE, tuple(yellow(f) for f in cycle_after(white_rot, e)))

    return BicoloredPlaneTree(WHITE, tuple(yellow(f) for f in [1] + cycle_after(white_rot, 1)))


def _edge_rotations(t: BicoloredPlaneTree):
    """Number the edges in preorder and return (yellow rotation, white rotation, first edge)."""
    rot = {YELLOW: {}, WHITE: {}}
    counter = 0

    def visit(v: BicoloredPlaneTree, parent_edge: int | None) -> None:
        nonlocal counter
        edges = [] if parent_edge is None else [parent_edge]
        child_edges = []
        for _ in v.children:
            counter += 1
            child_edges.append(counter)
        edges += child_edges
        for j, e in enumerate(edges):
            rot[v.color][e] = edges[(j + 1) % len(edges)]
        for c, e in zip(v.children, child_edges):
            visit(c, e)

    visit(t, None)
    return rot[YELLOW], rot[WHITE]


def tree_to_nc(t: BicoloredPlaneTree) -> SetPartition:
    """An NC partition whose rotation class maps to t.

    Edges are labelled in boundary-walk order starting from the root's first
    edge; the blocks are the label sets around the yellow vertices.
    """
    check_coloring(t)
    if not t.children:
        raise TreeError("a tree needs at least one edge")
    yellow_rot, white_rot = _edge_rotations(t)
    n = len(yellow_rot)
    label, e = {}, 1
    while e not in label:
        label[e] = len(label) + 1
        e = yellow_rot[white_rot[e]]
    if len(label) != n:
        raise TreeError("boundary walk does not cover every edge")
    blocks, seen = [], set()
    for start in yellow_rot:
        if start in seen:
            continue
        block, f = [], start
        while f not in seen:
            seen.add(f)
            block.append(label[f])
            f = yellow_rot[f]
        blocks.append(tuple(block))
    return SetPartition(n, tuple(blocks))


@dataclass
class _Graph:
    colors: list[str]
    rotation: list[list[int]]  # neighbours of each vertex in cyclic order


def _graph(t: BicoloredPlaneTree) -> _Graph:
    """Vertices numbered in preorder; the root's rotation starts at its first child."""
    g = _Graph([], [])

    def visit(v: BicoloredPlaneTree, parent: int | None) -> int:
        me = len(g.colors)
        g.colors.append(v.color)
        g.rotation.append([] if parent is None else [parent])
        for c in v.children:
            g.rotation[me].append(visit(c, me))
        return me

    visit(t, None)
    return g


def _centers(g: _Graph) -> list[int]:
    size = len(g.colors)
    order, parent = [0], {0: -1}
    for v in order:
        for w in g.rotation[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    below = [1] * size
    for v in reversed(order[1:]):
        below[parent[v]] += below[v]
    worst = []
    for v in range(size):
        parts = [below[w] for w in g.rotation[v] if parent.get(w) == v]
        if v != 0:
            parts.append(size - below[v])
        worst.append(max(parts, default=0))
    best = min(worst)
    return [v for v in range(size) if worst[v] == best]


def tree_center(t: BicoloredPlaneTree) -> tuple[int, ...]:
    """Preorder indices of the one or two centers (vertices minimizing the largest branch)."""
    return tuple(_centers(_graph(t)))


def _planted(g: _Graph, v: int, parent: int, colored: bool) -> str:
    rot = g.rotation[v]
    k = rot.index(parent)
    kids = rot[k + 1 :] + rot[:k]
    head = g.colors[v] if colored else "V"
    if not kids:
        return head
    return head + "(" + ",".join(_planted(g, w, v, colored) for w in kids) + ")"


def _rotation_code(g: _Graph, colored: bool) -> str:
    centers = _centers(g)
    if len(centers) == 2:
        u, v = centers
        return min(
            "(" + _planted(g, a, b, colored) + "," + _planted(g, b, a, colored) + ")"
            for a, b in ((u, v), (v, u))
        )
    c = centers[0]
    head = g.colors[c] if colored else "V"
    subs = [_planted(g, w, c, colored) for w in g.rotation[c]]
    return min(head + "(" + ",".join(subs[k:] + subs[:k]) + ")" for k in range(len(subs)))


def canonical_code(t: BicoloredPlaneTree, chirality: str = ROTATION_ONLY, *, colored: bool = True) -> TreeCode:
    """Canonical code of the free plane tree underlying t.

    With ``colored=False`` the colors are erased, giving a code for the
    uncolored plane tree.
    """
    if chirality not in CHIRALITIES:
        raise TreeError(f"unknown chirality {chirality!r}")
    check_coloring(t)
    if not t.children:
        raise TreeError("a tree needs at least one edge")
    code = _rotation_code(_graph(t), colored)
    if chirality == ROTATION_AND_REFLECTION:
        code = min(code, _rotation_code(_graph(t.mirrored()), colored))
    return TreeCode(code, chirality)


def is_reflection_symmetric(t: BicoloredPlaneTree) -> bool:
    return canonical_code(t).code == canonical_code(t.mirrored()).code


def leaf_stats(t: BicoloredPlaneTree) -> tuple[int, int]:
    """(yellow leaves, white leaves); a vertex is a leaf when its degree is 1."""
    g = _graph(t)
    yellow = sum(1 for c, r in zip(g.colors, g.rotation) if len(r) == 1 and c == YELLOW)
    white = sum(1 for c, r in zip(g.colors, g.rotation) if len(r) == 1 and c == WHITE)
    return yellow, white


def _trees(n: int) -> Iterator[BicoloredPlaneTree]:
    for p in enumerate_nc(n):
        yield nc_to_tree(p)


def enumerate_tree_classes(n: int, chirality: str = ROTATION_ONLY) -> set[str]:
    """Canonical codes of the trees of all NC partitions of [n]."""
    return {canonical_code(t, chirality).code for t in _trees(n)}


def reflection_fixed_classes(n: int) -> set[str]:
    """Rotation-only codes whose tree equals its own mirror image."""
    fixed = set()
    for t in _trees(n):
        if is_reflection_symmetric(t):
            fixed.add(canonical_code(t).code)
    return fixed


def free_plane_tree_codes(n: int) -> set[str]:
    """Color-erased codes; every plane tree with n edges is 2-colorable, so this is all of them."""
    return {canonical_code(t, colored=False).code for t in _trees(n)}
