"""The Tamari order on planar binary trees of a fixed degree.

The order is generated by elementary moves rewriting one subtree of the
shape ``node(a, node(b, c))`` into ``node(node(a, b), c)``; the rewritten
tree sits strictly below the original.  Degree n carries a lattice whose
minimum is the left comb and whose maximum is the right comb.

:class:`TamariPoset` packages one degree: a fixed linear extension of the
elements, the order as a boolean matrix, the Hasse diagram with arrows
oriented downward, and the Moebius function as an exact integer matrix
(the inverse of the unitriangular zeta matrix).  Matrices are numpy
arrays; the Moebius inversion is performed by a triangular solve whose
intermediate values are integers well below 2**53, so the float solve is
exact, and the result is re-verified in integer arithmetic at build time.
"""

from __future__ import annotations

import heapq
import json
from functools import cache

import numpy as np
from scipy.linalg import solve_triangular

from .errors import DegreeError, InternalInvariantError
from .trees import Tree, enumerate_trees, left_comb, node, right_comb

__all__ = [
    "MAX_DEGREE",
    "TamariPoset",
    "poset",
    "build_poset",
    "lower_covers",
    "leq",
    "interval",
    "meet",
    "join",
    "euler_form",
    "euler",
    "hasse_dot",
    "matrices_json",
]

MAX_DEGREE = 9


def lower_covers(t: Tree) -> list[Tree]:
    """All trees one elementary move below t, sorted by text form."""
    out = set()
    _collect_moves(t, t, (), out)
    return sorted(out, key=lambda s: s.text)


def _collect_moves(root: Tree, t: Tree, path: tuple[int, ...], out: set[Tree]) -> None:
    if t.is_leaf:
        return
    if not t.right.is_leaf:
        moved = node(node(t.left, t.right.left), t.right.right)
        out.add(_replace_at(root, path, moved))
    _collect_moves(root, t.left, path + (0,), out)
    _collect_moves(root, t.right, path + (1,), out)


def _replace_at(t: Tree, path: tuple[int, ...], sub: Tree) -> Tree:
    if not path:
        return sub
    if path[0] == 0:
        return node(_replace_at(t.left, path[1:], sub), t.right)
    return node(t.left, _replace_at(t.right, path[1:], sub))


class TamariPoset:
    """The Tamari order on all trees of one degree; immutable once built."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_DEGREE:
            raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        self.n = n
        trees = enumerate_trees(n)
        cover_sets = {t: lower_covers(t) for t in trees}

        self.elements: tuple[Tree, ...] = self._linear_extension(trees, cover_sets)
        self.index: dict[Tree, int] = {t: i for i, t in enumerate(self.elements)}
        size = len(self.elements)
        # covers[i] lists the lower covers of element i (arrows point down)
        self.covers: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(self.index[c] for c in cover_sets[t])) for t in self.elements
        )

        self.leq_matrix = self._close(size)
        self.zeta = self.leq_matrix.astype(np.int64)
        self.mobius = self._invert_zeta()
        self._check_consistency(size)

    @staticmethod
    def _linear_extension(trees, cover_sets) -> tuple[Tree, ...]:
        # Kahn's algorithm from the bottom, lexicographic text as tie-break.
        above: dict[Tree, list[Tree]] = {t: [] for t in trees}
        pending = {}
        for t in trees:
            pending[t] = len(cover_sets[t])
            for c in cover_sets[t]:
                above[c].append(t)
        ready = [t.text for t in trees if pending[t] == 0]
        heapq.heapify(ready)
        order = []
        from .trees import from_text

        while ready:
            t = from_text(heapq.heappop(ready))
            order.append(t)
            for u in above[t]:
                pending[u] -= 1
                if pending[u] == 0:
                    heapq.heappush(ready, u.text)
        if len(order) != len(trees):
            raise InternalInvariantError("cover graph is cyclic")
        return tuple(order)

    def _close(self, size: int) -> np.ndarray:
        # down[i] as a bitset; index order is a linear extension so every
        # lower cover of i precedes i.
        down = [0] * size
        for i in range(size):
            bits = 1 << i
            for j in self.covers[i]:
                bits |= down[j]
            down[i] = bits
        m = np.zeros((size, size), dtype=bool)
        for i, bits in enumerate(down):
            for j in range(size):
                if bits >> j & 1:
                    m[j, i] = True
        return m

    def _invert_zeta(self) -> np.ndarray:
        z = self.zeta.astype(np.float64)
        m = solve_triangular(z, np.eye(len(z)), lower=False, unit_diagonal=True)
        mob = np.rint(m).astype(np.int64)
        # all intermediates are integers < 2**53, so equality must be exact
        if not np.array_equal(self.zeta.astype(np.float64) @ mob, np.eye(len(z))):
            raise InternalInvariantError("zeta inversion is not exact")
        return mob

    def _check_consistency(self, size: int) -> None:
        bottom, top = self.elements[0], self.elements[-1]
        if bottom is not left_comb(self.n) or top is not right_comb(self.n):
            raise InternalInvariantError("extremal elements are not the combs")
        # every elementary move must be a cover: nothing strictly between
        for i in range(size):
            for j in self.covers[i]:
                between = self.leq_matrix[j] & self.leq_matrix[:, i]
                if np.count_nonzero(between) != 2:
                    raise InternalInvariantError(
                        f"move {self.elements[i]} -> {self.elements[j]} is not a cover"
                    )

    # -- queries ---------------------------------------------------------

    def leq(self, x: Tree, y: Tree) -> bool:
        return bool(self.leq_matrix[self.index[x], self.index[y]])

    def interval(self, x: Tree, y: Tree) -> list[Tree]:
        ix, iy = self.index[x], self.index[y]
        mask = self.leq_matrix[ix] & self.leq_matrix[:, iy]
        return [self.elements[i] for i in np.flatnonzero(mask)]

    def _extremal_bound(self, x: Tree, y: Tree, lower: bool) -> Tree:
        ix, iy = self.index[x], self.index[y]
        if lower:
            cand = self.leq_matrix[:, ix] & self.leq_matrix[:, iy]
        else:
            cand = self.leq_matrix[ix] & self.leq_matrix[iy]
        idx = np.flatnonzero(cand)
        sub = self.leq_matrix[np.ix_(idx, idx)]
        hits = np.flatnonzero(sub.all(axis=0) if lower else sub.all(axis=1))
        if len(hits) != 1:
            raise InternalInvariantError(
                f"bound of {x} and {y} is not unique; not a lattice?"
            )
        return self.elements[idx[hits[0]]]

    def meet(self, x: Tree, y: Tree) -> Tree:
        return self._extremal_bound(x, y, lower=True)

    def join(self, x: Tree, y: Tree) -> Tree:
        return self._extremal_bound(x, y, lower=False)

    def vector(self, terms: dict[Tree, int]) -> np.ndarray:
        v = np.zeros(len(self.elements), dtype=np.int64)
        for t, c in terms.items():
            v[self.index[t]] = c
        return v

    def hasse_degree(self, t: Tree) -> int:
        i = self.index[t]
        down = len(self.covers[i])
        up = sum(1 for c in self.covers if i in c)
        return down + up


@cache
def poset(n: int) -> TamariPoset:
    return TamariPoset(n)


def build_poset(n: int) -> TamariPoset:
    """Build (or fetch the cached) Tamari poset of degree n."""
    return poset(n)


def _same_degree(x: Tree, y: Tree) -> int:
    if x.degree != y.degree:
        raise DegreeError(f"degrees differ: {x.degree} vs {y.degree}")
    return x.degree


def leq(x: Tree, y: Tree) -> bool:
    """Is x below y in the Tamari order?  Degrees must agree."""
    return poset(_same_degree(x, y)).leq(x, y)


def interval(x: Tree, y: Tree) -> list[Tree]:
    """All z with x <= z <= y, in linear-extension order; empty if x !<= y."""
    return poset(_same_degree(x, y)).interval(x, y)


def meet(x: Tree, y: Tree) -> Tree:
    return poset(_same_degree(x, y)).meet(x, y)


def join(x: Tree, y: Tree) -> Tree:
    return poset(_same_degree(x, y)).join(x, y)


def euler_form(a, b) -> int:
    """The bilinear form sum_{s<=t} a_s b_t mu(s, t) on degree-homogeneous
    integer combinations of trees (anything with .degree and .terms)."""
    if a.degree != b.degree:
        raise DegreeError(f"degrees differ: {a.degree} vs {b.degree}")
    p = poset(a.degree)
    va, vb = p.vector(a.terms), p.vector(b.terms)
    bound = (
        max(1, np.abs(va).max(initial=0))
        * max(1, np.abs(vb).max(initial=0))
        * len(p.elements) ** 2
    )
    if bound < 2**62:
        return int(va @ p.mobius @ vb)
    mob = p.mobius
    return sum(
        int(va[i]) * int(mob[i, j]) * int(vb[j])
        for i in np.flatnonzero(va)
        for j in np.flatnonzero(vb)
    )


def euler(a) -> int:
    """The quadratic form E(a) = <a, a>."""
    return euler_form(a, a)


# -- exports -----------------------------------------------------------------


def hasse_dot(n: int) -> str:
    """The Hasse diagram as a DOT digraph, arrows oriented downward."""
    p = poset(n)
    lines = [f'digraph "tamari_{n}" {{']
    for t in p.elements:
        lines.append(f'  "{t.text}";')
    for i, lows in enumerate(p.covers):
        for j in lows:
            lines.append(f'  "{p.elements[i].text}" -> "{p.elements[j].text}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrices_json(n: int) -> str:
    """Order and Moebius matrices with the element-order header, as JSON."""
    p = poset(n)
    doc = {
        "n": n,
        "elements": [t.text for t in p.elements],
        "leq": p.leq_matrix.astype(int).tolist(),
        "mobius": p.mobius.tolist(),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
