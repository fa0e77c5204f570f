"""Projective elements: lower-interval sums and their noncrossing form.

For a tree x of degree n, the projective element is the sum of all trees
below x in the Tamari order.  Every projective element is carried by a
unique noncrossing tree, which contains border side 1 and has no RIGHT
angle; conversely a noncrossing tree with no RIGHT angle is projective.
Good pivots between the noncrossing forms mirror the Tamari covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import lattice
from . import noncrossing as nc
from .dendriform import DendElem
from .errors import InternalInvariantError
from .trees import Tree, left_comb

__all__ = [
    "ProjectiveElem",
    "projective_table",
    "projective_element",
    "is_projective_nct",
    "is_projective_elem",
    "decompose_based",
    "star_factorization",
    "hasse_pivot_match",
    "PivotMatch",
]


@dataclass(frozen=True)
class ProjectiveElem:
    """One projective element in its three guises."""

    tree: Tree
    elem: DendElem
    nct: nc.NCPlant


@cache
def projective_table(n: int) -> dict[Tree, ProjectiveElem]:
    """All projective elements of degree n, keyed by their indexing tree."""
    p = lattice.poset(n)
    bottom = left_comb(n)
    table = {}
    for x in p.elements:
        elem = DendElem.sum_of(p.interval(bottom, x))
        plant = nc.plant_with_image(elem)
        if plant is None or not plant.is_tree:
            raise InternalInvariantError(
                f"no noncrossing tree carries the projective element at {x}"
            )
        table[x] = ProjectiveElem(x, elem, plant)
    return table


def projective_element(x: Tree) -> ProjectiveElem:
    """The projective element indexed by x."""
    return projective_table(x.degree)[x]


def is_projective_nct(P: nc.NCPlant) -> bool:
    """A noncrossing tree is projective iff it has no RIGHT angle."""
    return P.is_tree and nc.angle_counts(P).right == 0


@cache
def _image_keys(n: int) -> frozenset:
    return frozenset(pe.elem.key() for pe in projective_table(n).values())


def is_projective_elem(a: DendElem) -> bool:
    """Membership in the precomputed table of projective elements."""
    return a.key() in _image_keys(a.degree)


def decompose_based(P: nc.NCPlant) -> nc.NCPlant:
    """Strip the base triangle from a based projective noncrossing tree.

    Returns the unique projective Q with P = gen_left o_1 Q.
    """
    if not nc.is_based(P):
        raise ValueError("tree is not based")
    if P.n < 2:
        raise ValueError("degree must be >= 2")
    if not is_projective_nct(P):
        raise ValueError("tree is not projective")
    n = P.n
    if sum(1 for e in P.den if n in e) != 1:
        raise InternalInvariantError(f"corner {n} of {P!r} carries more than the base")
    Q = nc.NCPlant(n - 1, P.den - {(0, n)})
    if nc.compose_ncp(nc.gen_left(), 1, Q) != P:
        raise InternalInvariantError(f"stripping the base of {P!r} does not recompose")
    if not is_projective_nct(Q):
        raise InternalInvariantError(f"stripped factor of {P!r} is not projective")
    return Q


def star_factorization(P: nc.NCPlant) -> list[nc.NCPlant]:
    """Factor a projective noncrossing tree into based projective factors."""
    if not is_projective_nct(P):
        raise ValueError("tree is not projective")
    factors = nc.decompose_star(P)
    for f in factors:
        if not is_projective_nct(f):
            raise InternalInvariantError(f"factor {f!r} of {P!r} is not projective")
    return factors


@dataclass(frozen=True)
class PivotMatch:
    """One Hasse edge upper -> lower and its good pivot between projectives."""

    upper: Tree
    lower: Tree
    angle: nc.Angle


def hasse_pivot_match(n: int) -> list[PivotMatch]:
    """Match Tamari covers with good pivots; any mismatch is fatal.

    The cover y -> x (x directly below y) corresponds to the good pivot
    from the noncrossing form of the projective at x to the one at y.
    """
    p = lattice.poset(n)
    table = projective_table(n)
    by_nct = {pe.nct: x for x, pe in table.items()}
    edges = {
        (p.elements[i], p.elements[j])
        for i in range(len(p.elements))
        for j in p.covers[i]
    }
    matches = []
    seen = set()
    for x in p.elements:
        for angle, Q in nc.good_pivots(table[x].nct):
            y = by_nct.get(Q)
            if y is None:
                raise InternalInvariantError(
                    f"good pivot from the projective at {x} leaves the projectives"
                )
            if (y, x) not in edges:
                raise InternalInvariantError(
                    f"good pivot at {x} -> {y} matches no Tamari cover"
                )
            if (y, x) in seen:
                raise InternalInvariantError(f"cover {y} -> {x} matched twice")
            seen.add((y, x))
            matches.append(PivotMatch(upper=y, lower=x, angle=angle))
    if len(seen) != len(edges):
        raise InternalInvariantError(
            f"{len(edges) - len(seen)} Tamari covers have no good pivot"
        )
    return matches
