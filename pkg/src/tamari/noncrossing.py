"""Noncrossing trees and plants in a convex polygon, and their operad.

Degree n lives in a convex polygon with corners 0..n in clockwise order;
the base side is {0, n} and border side i is {i-1, i}.  A noncrossing
tree is a maximal noncrossing acyclic set of corner-to-corner edges (a
noncrossing spanning tree).  A noncrossing plant carries two disjoint
edge sets, denominator and numerator, such that no two edges cross, every
cycle of denominator edges surrounds exactly one numerator edge, every
numerator edge lies inside a denominator cycle, and the configuration is
maximal.  Crossing is decided purely combinatorially: {a,b} and {c,d}
cross iff a < c < b < d up to relabeling.

Composition glues the polygon of the second operand onto a border side of
the first; the gluing edge is kept when present on both sides, dropped
when present on exactly one, and turned into a numerator edge when absent
from both.  The unique operad map into tree combinations sends the three
degree-2 plants to left tree, left + right, and right tree respectively;
it is materialized degree by degree as a closure table and every
rediscovery of a plant must reproduce the stored image.

Angles of a noncrossing tree are consecutive pairs of edges around a
corner.  The three corners of an angle span a triangle, and the angle is
typed LEFT / MIDDLE / RIGHT according to whether its apex is the lowest,
middle or highest corner of that triangle.  A pivot trades one edge of an
angle for the third triangle side; the pivots taking a LEFT angle to a
MIDDLE angle are the good ones and mirror the Tamari covers.
"""

from __future__ import annotations

import itertools
import json
import math
import threading
from dataclasses import dataclass
from enum import Enum
from functools import cache
from typing import Iterable, NamedTuple

from . import dendriform as dd
from .errors import DegreeError, InternalInvariantError
from .trees import LEAF, Tree, left_comb, node, right_comb, unit

__all__ = [
    "MAX_ENUM_DEGREE",
    "MAX_TABLE_DEGREE",
    "NCPlant",
    "unit_edge",
    "gen_left",
    "gen_middle",
    "gen_right",
    "enumerate_nct",
    "enumerate_ncp",
    "compose_ncp",
    "star_ncp",
    "over_ncp",
    "under_ncp",
    "is_based",
    "decompose_star",
    "AngleType",
    "Angle",
    "AngleCounts",
    "angles",
    "angle_counts",
    "pivot",
    "good_pivots",
    "ncp_to_dend",
    "image_table",
    "plant_with_image",
    "simple_nct",
    "tree_of_simple",
    "ncp_to_json_obj",
    "ncp_from_json_obj",
    "ncp_dot",
    "ncp_svg",
]

MAX_ENUM_DEGREE = 6
MAX_TABLE_DEGREE = 6

Edge = tuple[int, int]


@cache
def _universe(n: int) -> tuple[tuple[Edge, ...], dict[Edge, int], dict[Edge, int]]:
    """All corner pairs of the (n+1)-gon, their indices and crossing masks."""
    edges = tuple(
        (u, v) for u in range(n + 1) for v in range(u + 1, n + 1)
    )
    index = {e: i for i, e in enumerate(edges)}
    cross = {}
    for a, b in edges:
        mask = 0
        for j, (c, d) in enumerate(edges):
            if a < c < b < d or c < a < d < b:
                mask |= 1 << j
        cross[(a, b)] = mask
    return edges, index, cross


def _edge_mask(n: int, edges: Iterable[Edge]) -> int:
    index = _universe(n)[1]
    mask = 0
    for e in edges:
        mask |= 1 << index[e]
    return mask


def _adjacency(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def _simple_cycles(adj: dict[int, list[int]]) -> list[tuple[int, ...]]:
    """All simple cycles, each as its increasing vertex tuple.

    On noncrossing edge sets a simple cycle visits its vertex set in
    circular order, so the vertex tuple determines the cycle.
    """
    cycles: set[tuple[int, ...]] = set()

    def walk(start: int, v: int, visited: set[int], path: list[int]) -> None:
        for w in adj[v]:
            if w == start and len(path) >= 3:
                cycles.add(tuple(sorted(path)))
            elif w > start and w not in visited:
                visited.add(w)
                path.append(w)
                walk(start, w, visited, path)
                path.pop()
                visited.remove(w)

    for s in sorted(adj):
        walk(s, s, {s}, [s])
    return sorted(cycles)


def _is_chord(e: Edge, cycle: tuple[int, ...]) -> bool:
    u, v = e
    if u not in cycle or v not in cycle:
        return False
    i, j = cycle.index(u), cycle.index(v)
    k = len(cycle)
    return (i - j) % k not in (1, k - 1)


def _faces(den: frozenset[Edge]) -> list[tuple[int, ...]]:
    """Boundary cycles of the bounded faces of the denominator graph.

    With all vertices in convex position a simple cycle bounds a face
    exactly when no denominator edge cuts through it as a chord.
    """
    cycles = _simple_cycles(_adjacency(den))
    return [
        cyc for cyc in cycles if not any(_is_chord(e, cyc) for e in den)
    ]


def _condition_violation(n: int, den: frozenset[Edge], num: frozenset[Edge]) -> str | None:
    """None when (den, num) satisfies every plant condition except maximality."""
    if den & num:
        return "denominator and numerator share an edge"
    _, index, cross = _universe(n)
    all_edges = den | num
    mask = _edge_mask(n, all_edges)
    for e in all_edges:
        if cross[e] & mask:
            return f"edge {e} crosses another edge"
    faces = _faces(den)
    for cyc in faces:
        inside = [e for e in num if _is_chord(e, cyc)]
        if len(inside) != 1:
            return f"cycle {cyc} surrounds {len(inside)} numerator edges"
    for e in num:
        if not any(_is_chord(e, cyc) for cyc in faces):
            return f"numerator edge {e} is not inside a denominator cycle"
    return None


def _insertion_violation(n: int, den: frozenset[Edge], num: frozenset[Edge]) -> Edge | None:
    """An absent edge whose insertion (as either kind) stays legal, if any."""
    edges, _, cross = _universe(n)
    present = den | num
    mask = _edge_mask(n, present)
    for e in edges:
        if e in present:
            continue
        if cross[e] & mask:
            continue
        if _condition_violation(n, den | {e}, num) is None:
            return e
        if _condition_violation(n, den, num | {e}) is None:
            return e
    return None


class NCPlant:
    """A noncrossing plant; a noncrossing tree when the numerator is empty.

    Construction validates every defining condition including maximality,
    so an ``NCPlant`` instance is always a genuine plant.
    """

    __slots__ = ("n", "den", "num", "_key", "_hash")

    def __init__(self, n: int, den: Iterable[Edge], num: Iterable[Edge] = ()):
        if n < 1:
            raise DegreeError(f"degree must be >= 1, got {n}")
        self.n = n
        self.den = frozenset(self._normalize(n, den))
        self.num = frozenset(self._normalize(n, num))
        reason = _condition_violation(n, self.den, self.num)
        if reason is not None:
            raise ValueError(f"not a noncrossing plant: {reason}")
        extra = _insertion_violation(n, self.den, self.num)
        if extra is not None:
            raise ValueError(f"not maximal: edge {extra} can still be inserted")
        self._key = (n, tuple(sorted(self.den)), tuple(sorted(self.num)))
        self._hash = hash(self._key)

    @staticmethod
    def _normalize(n: int, edges: Iterable[Edge]) -> list[Edge]:
        out = []
        for u, v in edges:
            if u == v or not (0 <= u <= n and 0 <= v <= n):
                raise ValueError(f"bad edge ({u}, {v}) on polygon 0..{n}")
            out.append((u, v) if u < v else (v, u))
        return out

    @property
    def is_tree(self) -> bool:
        return not self.num

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPlant) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        num = f", num={sorted(self.num)}" if self.num else ""
        return f"NCPlant({self.n}, {sorted(self.den)}{num})"


@cache
def unit_edge() -> NCPlant:
    return NCPlant(1, [(0, 1)])


@cache
def gen_left() -> NCPlant:
    """Degree-2 generator carrying the left tree."""
    return NCPlant(2, [(0, 1), (0, 2)])


@cache
def gen_middle() -> NCPlant:
    """Degree-2 generator carrying the sum of both degree-2 trees."""
    return NCPlant(2, [(0, 1), (1, 2)])


@cache
def gen_right() -> NCPlant:
    """Degree-2 generator carrying the right tree."""
    return NCPlant(2, [(1, 2), (0, 2)])


def _check_enum_degree(n: int, max_degree: int | None) -> None:
    cap = MAX_ENUM_DEGREE if max_degree is None else max_degree
    if not 1 <= n <= cap:
        raise DegreeError(f"degree must be in 1..{cap}, got {n}")


@cache
def _enumerate_nct_cached(n: int) -> tuple[NCPlant, ...]:
    edges, _, cross = _universe(n)
    found: list[frozenset[Edge]] = []

    def rec(idx: int, mask: int, parent: list[int], chosen: list[Edge]) -> None:
        if len(chosen) == n:
            found.append(frozenset(chosen))
            return
        if len(edges) - idx < n - len(chosen):
            return
        e = edges[idx]
        if not cross[e] & mask:
            roots = parent[:]

            def find(x: int) -> int:
                while roots[x] != x:
                    x = roots[x]
                return x

            ru, rv = find(e[0]), find(e[1])
            if ru != rv:
                roots[ru] = rv
                chosen.append(e)
                rec(idx + 1, mask | _edge_mask(n, [e]), roots, chosen)
                chosen.pop()
        rec(idx + 1, mask, parent, chosen)

    rec(0, 0, list(range(n + 1)), [])
    plants = [NCPlant(n, den) for den in found]
    plants.sort(key=NCPlant.key)
    return tuple(plants)


def enumerate_nct(n: int, max_degree: int | None = None) -> list[NCPlant]:
    """All noncrossing trees of degree n, in canonical order."""
    _check_enum_degree(n, max_degree)
    return list(_enumerate_nct_cached(n))


def _spanning_connected(n: int, den: frozenset[Edge]) -> bool:
    roots = list(range(n + 1))

    def find(x: int) -> int:
        while roots[x] != x:
            roots[x] = roots[roots[x]]
            x = roots[x]
        return x

    for u, v in den:
        roots[find(u)] = find(v)
    return len({find(v) for v in range(n + 1)}) == 1


@cache
def _enumerate_ncp_cached(n: int) -> tuple[NCPlant, ...]:
    edges, _, cross = _universe(n)
    plants: list[NCPlant] = []

    def emit(den: frozenset[Edge]) -> None:
        if not _spanning_connected(n, den):
            return
        chord_options = []
        for cyc in _faces(den):
            chords = [
                (cyc[i], cyc[j])
                for i in range(len(cyc))
                for j in range(i + 1, len(cyc))
                if _is_chord((cyc[i], cyc[j]), cyc)
            ]
            if not chords:
                return
            chord_options.append(chords)
        for combo in itertools.product(*chord_options):
            try:
                plants.append(NCPlant(n, den, combo))
            except ValueError:
                continue

    def rec(idx: int, mask: int, chosen: list[Edge]) -> None:
        if idx == len(edges):
            emit(frozenset(chosen))
            return
        e = edges[idx]
        if not cross[e] & mask:
            chosen.append(e)
            rec(idx + 1, mask | _edge_mask(n, [e]), chosen)
            chosen.pop()
        rec(idx + 1, mask, chosen)

    rec(0, 0, [])
    plants.sort(key=NCPlant.key)
    return tuple(plants)


def enumerate_ncp(n: int, max_degree: int | None = None) -> list[NCPlant]:
    """All noncrossing plants of degree n, in canonical order."""
    _check_enum_degree(n, max_degree)
    return list(_enumerate_ncp_cached(n))


# -- operad structure ----------------------------------------------------------


def compose_ncp(P: NCPlant, i: int, Q: NCPlant) -> NCPlant:
    """Glue Q onto border side i of P; the three-case rule on the glue edge."""
    m, n = P.n, Q.n
    if not 1 <= i <= m:
        raise DegreeError(f"slot must be in 1..{m}, got {i}")

    def p_map(v: int) -> int:
        return v if v <= i - 1 else v + n - 1

    def q_map(v: int) -> int:
        return v + i - 1

    glue = (i - 1, i + n - 1)
    den: set[Edge] = set()
    num = {(p_map(u), p_map(v)) for u, v in P.num}
    num |= {(q_map(u), q_map(v)) for u, v in Q.num}
    for u, v in P.den:
        e = (p_map(u), p_map(v))
        if e != glue:
            den.add(e)
    for u, v in Q.den:
        e = (q_map(u), q_map(v))
        if e != glue:
            den.add(e)
    in_p = (i - 1, i) in P.den
    in_q = (0, n) in Q.den
    if in_p and in_q:
        den.add(glue)
    elif not in_p and not in_q:
        num.add(glue)
    return NCPlant(m + n - 1, den, num)


def star_ncp(P: NCPlant, Q: NCPlant) -> NCPlant:
    """Glue P and Q onto the slanted sides of the middle generator."""
    return compose_ncp(compose_ncp(gen_middle(), 2, Q), 1, P)


def over_ncp(P: NCPlant, Q: NCPlant) -> NCPlant:
    return compose_ncp(compose_ncp(Q, 1, gen_left()), 1, P)


def under_ncp(P: NCPlant, Q: NCPlant) -> NCPlant:
    return compose_ncp(compose_ncp(P, P.n, gen_right()), P.n + 1, Q)


def is_based(P: NCPlant) -> bool:
    """Does the plant contain the base side {0, n}?"""
    return (0, P.n) in P.den


def decompose_star(P: NCPlant) -> list[NCPlant]:
    """The unique factorization of a noncrossing tree into based factors.

    Factors are read off the tree path from corner 0 to corner n: each
    path edge becomes the base side of one factor.
    """
    if not P.is_tree:
        raise ValueError("only noncrossing trees factor under the star product")
    adj = _adjacency(P.den)
    path = _tree_path(adj, 0, P.n)
    if path != sorted(path):
        raise InternalInvariantError(f"base path is not monotone: {path}")
    factors = []
    used = 0
    for a, b in zip(path, path[1:]):
        part = [e for e in P.den if a <= e[0] and e[1] <= b]
        used += len(part)
        factors.append(NCPlant(b - a, [(u - a, v - a) for u, v in part]))
    if used != len(P.den):
        raise InternalInvariantError("factor supports do not partition the tree")
    return factors


def _tree_path(adj: dict[int, list[int]], src: int, dst: int) -> list[int]:
    seen = {src: None}
    stack = [src]
    while stack:
        v = stack.pop()
        if v == dst:
            break
        for w in adj.get(v, ()):
            if w not in seen:
                seen[w] = v
                stack.append(w)
    if dst not in seen:
        raise InternalInvariantError(f"no path from {src} to {dst}")
    path = [dst]
    while path[-1] != src:
        path.append(seen[path[-1]])
    return path[::-1]


# -- angles and pivots ---------------------------------------------------------


class AngleType(Enum):
    LEFT = "L"
    MIDDLE = "M"
    RIGHT = "R"


@dataclass(frozen=True)
class Angle:
    vertex: int
    edges: tuple[Edge, Edge]
    triangle: tuple[int, int, int]
    type: AngleType


class AngleCounts(NamedTuple):
    left: int
    middle: int
    right: int


def angles(P: NCPlant) -> list[Angle]:
    """All angles of a noncrossing tree, swept corner by corner."""
    if not P.is_tree:
        raise ValueError("angles are defined for noncrossing trees only")
    adj = _adjacency(P.den)
    out = []
    for v in range(P.n + 1):
        nbrs = sorted(adj.get(v, ()), key=lambda w: (w - v) % (P.n + 1))
        for w1, w2 in zip(nbrs, nbrs[1:]):
            tri = tuple(sorted((v, w1, w2)))
            kind = (AngleType.LEFT, AngleType.MIDDLE, AngleType.RIGHT)[tri.index(v)]
            e1 = (min(v, w1), max(v, w1))
            e2 = (min(v, w2), max(v, w2))
            out.append(Angle(v, (e1, e2), tri, kind))
    return out


def angle_counts(P: NCPlant) -> AngleCounts:
    cnt = {t: 0 for t in AngleType}
    for a in angles(P):
        cnt[a.type] += 1
    return AngleCounts(cnt[AngleType.LEFT], cnt[AngleType.MIDDLE], cnt[AngleType.RIGHT])


def pivot(P: NCPlant, angle: Angle, removed: Edge) -> NCPlant:
    """Trade one angle edge for the third side of its triangle."""
    if removed not in angle.edges:
        raise ValueError(f"{removed} is not an edge of the angle at {angle.vertex}")
    a, b, c = angle.triangle
    sides = {(a, b), (b, c), (a, c)}
    (third,) = sides - set(angle.edges)
    return NCPlant(P.n, (P.den - {removed}) | {third})


def good_pivots(P: NCPlant) -> list[tuple[Angle, NCPlant]]:
    """The pivots turning a LEFT angle of P into a MIDDLE angle."""
    out = []
    for ang in angles(P):
        if ang.type is not AngleType.LEFT:
            continue
        a, b, c = ang.triangle
        q = pivot(P, ang, (a, c))
        landed = [
            x
            for x in angles(q)
            if set(x.edges) == {(a, b), (b, c)} and x.vertex == b
        ]
        if len(landed) != 1 or landed[0].type is not AngleType.MIDDLE:
            raise InternalInvariantError(f"pivot at {ang} did not produce a MIDDLE angle")
        out.append((ang, q))
    return out


# -- the operad map into tree combinations -------------------------------------


class _ImageTable:
    """Closure-generated map plant -> tree combination, degree by degree."""

    def __init__(self) -> None:
        self.by_plant: dict[int, dict[NCPlant, dd.DendElem]] = {}
        self.by_image: dict[int, dict[tuple, NCPlant]] = {}
        self._lock = threading.Lock()

    def degree(self, d: int) -> dict[NCPlant, dd.DendElem]:
        with self._lock:
            for k in range(1, d + 1):
                if k not in self.by_plant:
                    self._build(k)
        return self.by_plant[d]

    def _build(self, d: int) -> None:
        if d == 1:
            table = {unit_edge(): dd.DendElem.basis(unit())}
        elif d == 2:
            table = {
                gen_left(): dd.DendElem.basis(left_comb(2)),
                gen_middle(): dd.DendElem.sum_of([left_comb(2), right_comb(2)]),
                gen_right(): dd.DendElem.basis(right_comb(2)),
            }
        else:
            table = {}
            for m in range(2, d):
                n = d + 1 - m
                for P, p_img in self.by_plant[m].items():
                    for i in range(1, m + 1):
                        for Q, q_img in self.by_plant[n].items():
                            R = compose_ncp(P, i, Q)
                            img = dd.compose(p_img, i, q_img)
                            known = table.get(R)
                            if known is None:
                                table[R] = img
                            elif known != img:
                                raise InternalInvariantError(
                                    f"inconsistent images for {R}"
                                )
        reverse: dict[tuple, NCPlant] = {}
        for P, img in table.items():
            k = img.key()
            if k in reverse:
                raise InternalInvariantError(f"images of {P} and {reverse[k]} collide")
            reverse[k] = P
        self.by_plant[d] = table
        self.by_image[d] = reverse


_TABLE = _ImageTable()


def _check_table_degree(n: int, max_degree: int | None) -> None:
    cap = MAX_TABLE_DEGREE if max_degree is None else max_degree
    if not 1 <= n <= cap:
        raise DegreeError(f"degree must be in 1..{cap}, got {n}")


def image_table(n: int, max_degree: int | None = None) -> dict[NCPlant, dd.DendElem]:
    """The full plant -> combination table at degree n (a copy)."""
    _check_table_degree(n, max_degree)
    return dict(_TABLE.degree(n))


def ncp_to_dend(P: NCPlant, max_degree: int | None = None) -> dd.DendElem:
    """Image of a plant under the operad map into tree combinations."""
    _check_table_degree(P.n, max_degree)
    table = _TABLE.degree(P.n)
    img = table.get(P)
    if img is None:
        raise InternalInvariantError(f"{P!r} is missing from the generated table")
    return img


def plant_with_image(elem: dd.DendElem, max_degree: int | None = None) -> NCPlant | None:
    """The unique plant with the given image, or None."""
    _check_table_degree(elem.degree, max_degree)
    _TABLE.degree(elem.degree)
    return _TABLE.by_image[elem.degree].get(elem.key())


# -- simple noncrossing trees <-> planar binary trees --------------------------


def simple_nct(t: Tree) -> NCPlant:
    """The noncrossing tree without MIDDLE angles carrying the tree t.

    Built through the over/under composition formulas, so that the image
    property holds by the operad morphism rather than by construction.
    """
    if t.degree < 1:
        raise DegreeError("degree must be >= 1")
    if t.degree == 1:
        return unit_edge()
    l, r = t.left, t.right
    if l.is_leaf:
        return under_ncp(unit_edge(), simple_nct(r))
    if r.is_leaf:
        return over_ncp(simple_nct(l), unit_edge())
    return over_ncp(simple_nct(l), under_ncp(unit_edge(), simple_nct(r)))


def tree_of_simple(P: NCPlant) -> Tree:
    """Inverse of :func:`simple_nct`, by reading off the split structure.

    A simple noncrossing tree is its base side plus a simple part on the
    corners 0..a and another on a+1..n; the split corner a is the largest
    w < n with {0, w} an edge (0 when there is none).
    """
    if not P.is_tree:
        raise ValueError("plants with numerator edges carry no single tree")
    if angle_counts(P).middle != 0:
        raise ValueError("tree has MIDDLE angles, its image is not a single tree")
    return _tree_of_simple(P.n, P.den)


def _tree_of_simple(n: int, den: frozenset[Edge]) -> Tree:
    if n == 1:
        return unit()
    base = (0, n)
    if base not in den:
        raise InternalInvariantError("simple noncrossing tree is not based")
    rest = den - {base}
    a = max((v for u, v in rest if u == 0 and v < n), default=0)
    low = [e for e in rest if e[1] <= a]
    high = [(u - a - 1, v - a - 1) for u, v in rest if u >= a + 1]
    if len(low) + len(high) != len(rest):
        raise InternalInvariantError("split does not partition the edges")
    left = _tree_of_simple(a, frozenset(low)) if a >= 1 else LEAF
    right = _tree_of_simple(n - a - 1, frozenset(high)) if a + 1 < n else LEAF
    return node(left, right)


# -- serialization and drawing --------------------------------------------------


def ncp_to_json_obj(P: NCPlant) -> dict:
    return {
        "n": P.n,
        "den": [list(e) for e in sorted(P.den)],
        "num": [list(e) for e in sorted(P.num)],
    }


def ncp_from_json_obj(doc: dict) -> NCPlant:
    return NCPlant(
        int(doc["n"]),
        [tuple(e) for e in doc.get("den", [])],
        [tuple(e) for e in doc.get("num", [])],
    )


def _corner_xy(n: int, k: int, radius: float = 100.0) -> tuple[float, float]:
    ang = 2 * math.pi * k / (n + 1)
    return radius * math.cos(ang), radius * math.sin(ang)


def ncp_dot(P: NCPlant, name: str = "plant") -> str:
    """An undirected DOT graph with corners pinned on a circle."""
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    for k in range(P.n + 1):
        x, y = _corner_xy(P.n, k, radius=2.0)
        lines.append(f'  {k} [pos="{x:.4f},{y:.4f}!"];')
    for u, v in sorted(P.den):
        lines.append(f"  {u} -- {v};")
    for u, v in sorted(P.num):
        lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ncp_svg(plants: list[NCPlant] | NCPlant, columns: int = 6) -> str:
    """A standalone SVG drawing one or more plants on polygon circles."""
    if isinstance(plants, NCPlant):
        plants = [plants]
    cell, radius = 240, 100
    cols = max(1, min(columns, len(plants)))
    rows = (len(plants) + cols - 1) // cols
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{cols * cell}" height="{rows * cell}">'
    ]
    for idx, P in enumerate(plants):
        ox = (idx % cols) * cell + cell / 2
        oy = (idx // cols) * cell + cell / 2
        parts.append(f'<g transform="translate({ox},{oy})">')
        for u, v in sorted(P.den) + sorted(P.num):
            x1, y1 = _corner_xy(P.n, u, radius)
            x2, y2 = _corner_xy(P.n, v, radius)
            dash = ' stroke-dasharray="6,4"' if (u, v) in P.num else ""
            parts.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                f'stroke="black"{dash}/>'
            )
        for k in range(P.n + 1):
            x, y = _corner_xy(P.n, k, radius)
            parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
            lx, ly = _corner_xy(P.n, k, radius + 14)
            parts.append(
                f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="12" '
                f'text-anchor="middle">{k}</text>'
            )
        parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
