"""Planar binary trees: construction, enumeration, grafting and reversal.

A planar binary tree is either a leaf or an ordered pair of planar binary
trees.  The degree of a tree is its number of internal vertices, so a tree
of degree n has n + 1 leaves.  Trees are interned: building the same shape
twice returns the same object, which makes equality and hashing O(1) and
lets trees serve as dictionary keys everywhere else in the package.

The canonical text form follows the grammar ``T ::= "o" | "(" T " " T ")"``,
e.g. the two trees of degree 2 are ``((o o) o)`` and ``(o (o o))``.
"""

from __future__ import annotations

import math
from functools import cache
from typing import Iterator, Literal, NamedTuple, Union

from .errors import DegreeError

__all__ = [
    "Tree",
    "LEAF",
    "node",
    "unit",
    "from_text",
    "enumerate_trees",
    "catalan",
    "over",
    "under",
    "reverse",
    "decompose_basic",
    "Over",
    "UnderUnit",
    "comb",
    "left_comb",
    "right_comb",
    "iter_subtree_positions",
]


class Tree:
    """An immutable planar binary tree node (or the leaf singleton).

    Use :func:`node`, :func:`from_text` or the enumeration helpers to build
    trees; do not call the constructor directly, interning depends on it.
    """

    __slots__ = ("left", "right", "degree", "text")

    def __init__(self, left: Tree | None, right: Tree | None, text: str, degree: int):
        self.left = left
        self.right = right
        self.text = text
        self.degree = degree

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Tree({self.text!r})"

    def __str__(self) -> str:
        return self.text

    def __reduce__(self):
        return (from_text, (self.text,))


LEAF = Tree(None, None, "o", 0)

_interned: dict[str, Tree] = {"o": LEAF}


def node(left: Tree, right: Tree) -> Tree:
    """The tree with the given left and right subtrees, interned."""
    text = f"({left.text} {right.text})"
    t = _interned.get(text)
    if t is None:
        t = Tree(left, right, text, left.degree + right.degree + 1)
        _interned[text] = t
    return t


def unit() -> Tree:
    """The unique tree of degree 1."""
    return node(LEAF, LEAF)


def from_text(text: str) -> Tree:
    """Parse the canonical text form; inverse of ``t.text``."""
    t = _interned.get(text)
    if t is not None:
        return t
    tree, pos = _parse(text, 0)
    if pos != len(text):
        raise ValueError(f"trailing input at {pos}: {text!r}")
    return tree


def _parse(s: str, i: int) -> tuple[Tree, int]:
    if i >= len(s):
        raise ValueError(f"unexpected end of input: {s!r}")
    if s[i] == "o":
        return LEAF, i + 1
    if s[i] != "(":
        raise ValueError(f"expected 'o' or '(' at {i}: {s!r}")
    left, i = _parse(s, i + 1)
    if i >= len(s) or s[i] != " ":
        raise ValueError(f"expected ' ' at {i}: {s!r}")
    right, i = _parse(s, i + 1)
    if i >= len(s) or s[i] != ")":
        raise ValueError(f"expected ')' at {i}: {s!r}")
    return node(left, right), i + 1


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@cache
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees of degree n, sorted by canonical text form.

    Degree 0 is rejected: the operad has no arity-0 part.
    """
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    if n == 1:
        return (unit(),)
    out = []
    for k in range(n):
        lefts = (LEAF,) if k == 0 else enumerate_trees(k)
        rights = (LEAF,) if k == n - 1 else enumerate_trees(n - 1 - k)
        for l in lefts:
            for r in rights:
                out.append(node(l, r))
    out.sort(key=lambda t: t.text)
    return tuple(out)


def over(x: Tree, y: Tree) -> Tree:
    """Graft the root of x onto the leftmost leaf of y (the / product)."""
    if y.is_leaf:
        return x
    return node(over(x, y.left), y.right)


def under(x: Tree, y: Tree) -> Tree:
    """Graft the root of y onto the rightmost leaf of x (the \\ product)."""
    if x.is_leaf:
        return y
    return node(x.left, under(x.right, y))


@cache
def reverse(x: Tree) -> Tree:
    """Left-right mirror image; an involution exchanging over and under."""
    if x.is_leaf:
        return x
    return node(reverse(x.right), reverse(x.left))


class Over(NamedTuple):
    """Decomposition x = over(left, rest) with both parts nonempty."""

    left: Tree
    rest: Tree


class UnderUnit(NamedTuple):
    """Decomposition x = under(unit, rest)."""

    rest: Tree


def decompose_basic(x: Tree) -> Union[Over, UnderUnit]:
    """Split a tree of degree >= 2 as over(y, z) or under(unit, z).

    When the root has a vertex to its left, ``Over(y, z)`` is returned with
    y = the left subtree and z the remainder; otherwise the only option is
    ``UnderUnit(z)``.  Exactly one branch applies.
    """
    if x.degree < 2:
        raise DegreeError(f"degree must be >= 2, got {x.degree}")
    if not x.left.is_leaf:
        return Over(x.left, node(LEAF, x.right))
    return UnderUnit(x.right)


def left_comb(n: int) -> Tree:
    """The tree whose vertices chain down the left side; Tamari minimum."""
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    t = unit()
    for _ in range(n - 1):
        t = node(t, LEAF)
    return t


def right_comb(n: int) -> Tree:
    """The tree whose vertices chain down the right side; Tamari maximum."""
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    t = unit()
    for _ in range(n - 1):
        t = node(LEAF, t)
    return t


def comb(n: int, side: Literal["left", "right"]) -> Tree:
    if side == "left":
        return left_comb(n)
    if side == "right":
        return right_comb(n)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def iter_subtree_positions(t: Tree) -> Iterator[tuple[tuple[int, ...], Tree]]:
    """Yield (path, subtree) for every internal vertex, root path = ().

    Path entries are 0 for a left step and 1 for a right step.
    """
    if t.is_leaf:
        return
    yield (), t
    for step, child in ((0, t.left), (1, t.right)):
        for path, sub in iter_subtree_positions(child):
            yield (step,) + path, sub
