"""Named verification suites for every structural statement in the library.

Each suite checks one statement exhaustively up to a degree bound; the
bound stated here is where the statement is considered fully verified,
and the runner may lower it (never raise it) via ``max_degree``.  Suites
report failures instead of raising, so a broken invariant shows up in
the report; internal-consistency errors raised by the library are caught
and reported the same way.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import anticyclic as ac
from . import categorify as cat
from . import dendriform as dd
from . import lattice
from . import noncrossing as nc
from . import projective as pj
from .dendriform import DendElem
from .errors import TamariError
from .trees import (
    catalan,
    enumerate_trees,
    left_comb,
    over,
    reverse,
    right_comb,
    under,
    unit,
)

__all__ = ["SuiteResult", "SUITES", "suite_ids", "run_suite", "run_suites"]


@dataclass
class SuiteResult:
    suite: str
    statement: str
    max_degree: int
    checks: int
    passed: bool
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "statement": self.statement,
            "max_degree": self.max_degree,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


class _Run:
    """Collects check results; keeps only the first few failure messages."""

    def __init__(self) -> None:
        self.checks = 0
        self.failures: list[str] = []

    def check(self, cond: bool, msg: str = "") -> None:
        self.checks += 1
        if not cond and len(self.failures) < 5:
            self.failures.append(msg or "check failed")

    def equal(self, a, b, msg: str = "") -> None:
        self.check(a == b, f"{msg}: {a!r} != {b!r}" if msg else f"{a!r} != {b!r}")


def _basis(t) -> DendElem:
    return DendElem.basis(t)


def _pairs(total: int, lo: int = 1):
    """(m, n) with m, n >= lo and m + n <= total."""
    for m in range(lo, total - lo + 1):
        for n in range(lo, total - m + 1):
            yield m, n


# -- trees ---------------------------------------------------------------------


def _trees_catalan(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        r.equal(len(enumerate_trees(n)), catalan(n), f"|Y_{n}|")


def _trees_graft_assoc(cap: int, r: _Run) -> None:
    ts = [t for n in range(1, cap + 1) for t in enumerate_trees(n)]
    for x, y, z in itertools.product(ts, repeat=3):
        r.equal(over(over(x, y), z), over(x, over(y, z)), "over assoc")
        r.equal(under(under(x, y), z), under(x, under(y, z)), "under assoc")
        r.equal(under(over(x, y), z), over(x, under(y, z)), "mixed assoc")
        r.equal(over(x, y).degree, x.degree + y.degree, "degree additivity")


def _trees_reversal(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        for t in enumerate_trees(n):
            r.equal(reverse(reverse(t)), t, "involution")
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            for y in enumerate_trees(n):
                r.equal(reverse(over(x, y)), under(reverse(y), reverse(x)), "exchange")


# -- Tamari order ----------------------------------------------------------------


def _tamari_regularity(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        p = lattice.poset(n)
        for t in p.elements:
            r.equal(p.hasse_degree(t), n - 1, f"degree of {t} in Y_{n}")


def _tamari_antiauto(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        p = lattice.poset(n)
        for x in p.elements:
            for y in p.elements:
                r.equal(
                    p.leq(x, y), p.leq(reverse(y), reverse(x)), f"antiauto at {x},{y}"
                )


def _tamari_mobius(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        p = lattice.poset(n)
        prod = p.mobius.astype(np.float64) @ p.zeta.astype(np.float64)
        r.check(np.array_equal(prod, np.eye(len(prod))), f"mobius * zeta != I at {n}")
        vals = set(np.unique(p.mobius).tolist())
        r.check(vals <= {-1, 0, 1}, f"mobius values {vals} at {n}")


def _tamari_interval(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        p = lattice.poset(n)
        for x in p.elements:
            for y in p.elements:
                direct = lattice.interval(x, y)
                filtered = [z for z in p.elements if p.leq(x, z) and p.leq(z, y)]
                r.equal(direct, filtered, f"interval({x},{y})")


def _tamari_lattice(cap: int, r: _Run) -> None:
    for n in range(1, min(cap, 4) + 1):
        p = lattice.poset(n)
        for x in p.elements:
            for y in p.elements:
                m, j = lattice.meet(x, y), lattice.join(x, y)
                r.check(
                    p.leq(m, x) and p.leq(m, y) and p.leq(x, j) and p.leq(y, j),
                    f"bounds of {x},{y}",
                )


# -- operad -----------------------------------------------------------------------


def _dend_unit(cap: int, r: _Run) -> None:
    u = _basis(unit())
    for n in range(1, cap):
        for t in enumerate_trees(n):
            e = _basis(t)
            r.equal(dd.compose(u, 1, e), e, "left unit")
            for i in range(1, n + 1):
                r.equal(dd.compose(e, i, u), e, f"right unit at {i}")


def _dend_operad_axioms(cap: int, r: _Run) -> None:
    for m in range(1, cap - 1):
        for n in range(1, cap - m):
            for p in range(1, cap - m - n + 1):
                for x in enumerate_trees(m):
                    ex = _basis(x)
                    for y in enumerate_trees(n):
                        ey = _basis(y)
                        for z in enumerate_trees(p):
                            ez = _basis(z)
                            for i in range(1, m + 1):
                                xi = dd.compose(ex, i, ey)
                                for j in range(1, n + 1):
                                    r.equal(
                                        dd.compose(xi, i - 1 + j, ez),
                                        dd.compose(ex, i, dd.compose(ey, j, ez)),
                                        "nested",
                                    )
                                for j in range(i + 1, m + 1):
                                    r.equal(
                                        dd.compose(xi, j + n - 1, ez),
                                        dd.compose(dd.compose(ex, j, ez), i, ey),
                                        "disjoint",
                                    )


def _dend_compo_reverse(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    for m in range(1, hi + 1):
        for n in range(1, hi + 1):
            for x in enumerate_trees(m):
                for y in enumerate_trees(n):
                    for i in range(1, m + 1):
                        lhs = dd.reverse_elem(dd.compose(_basis(x), i, _basis(y)))
                        rhs = dd.compose(
                            _basis(reverse(x)), m + 1 - i, _basis(reverse(y))
                        )
                        r.equal(lhs, rhs, f"reversal of o_{i}")


def _dend_star_interval(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            for y in enumerate_trees(n):
                r.equal(
                    dd.star(_basis(x), _basis(y)),
                    dd.star_interval(x, y),
                    f"{x} * {y}",
                )


def _dend_star_assoc(cap: int, r: _Run) -> None:
    for m in range(1, cap - 1):
        for n in range(1, cap - m):
            for p in range(1, cap - m - n + 1):
                for x in enumerate_trees(m):
                    for y in enumerate_trees(n):
                        xy = dd.star(_basis(x), _basis(y))
                        for z in enumerate_trees(p):
                            r.equal(
                                dd.star(xy, _basis(z)),
                                dd.star(_basis(x), dd.star(_basis(y), _basis(z))),
                                "star assoc",
                            )


def _dend_star_reverse(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    for m in range(1, hi + 1):
        for n in range(1, hi + 1):
            for x in enumerate_trees(m):
                for y in enumerate_trees(n):
                    r.equal(
                        dd.reverse_elem(dd.star(_basis(x), _basis(y))),
                        dd.star(_basis(reverse(y)), _basis(reverse(x))),
                        "star reversal",
                    )


def _dend_overunder(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            for y in enumerate_trees(n):
                r.equal(
                    dd.over_elem(_basis(x), _basis(y)), _basis(over(x, y)), "over"
                )
                r.equal(
                    dd.under_elem(_basis(x), _basis(y)), _basis(under(x, y)), "under"
                )


def _dend_relations(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    for m in range(1, hi + 1):
        for n in range(1, hi + 1):
            for p in range(1, hi + 1):
                for x in enumerate_trees(m):
                    ex = _basis(x)
                    for y in enumerate_trees(n):
                        ey = _basis(y)
                        for z in enumerate_trees(p):
                            ez = _basis(z)
                            r.equal(
                                dd.over_elem(ex, dd.star(ey, ez)),
                                dd.star(dd.over_elem(ex, ey), ez),
                                "over vs star",
                            )
                            r.equal(
                                dd.over_elem(dd.compose(ex, 1, ey), ez),
                                dd.compose(dd.over_elem(ex, ez), 1, ey),
                                "over vs o_1",
                            )
                            r.equal(
                                dd.star(dd.compose(ex, 1, ey), ez),
                                dd.compose(dd.star(ex, ez), 1, ey),
                                "star vs o_1",
                            )


def _dend_multiplicity_free(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            for y in enumerate_trees(n):
                for i in range(1, m + 1):
                    r.check(
                        dd.compose_basis(x, i, y).is_multiplicity_free(),
                        f"{x} o_{i} {y} has multiplicities",
                    )


# -- Euler form --------------------------------------------------------------------


def _euler_circ(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap + 1):
        for x in enumerate_trees(m):
            ex = _basis(x)
            for y in enumerate_trees(n):
                ey = _basis(y)
                expected = lattice.euler(ex) * lattice.euler(ey)
                for i in range(1, m + 1):
                    r.equal(
                        lattice.euler(dd.compose_basis(x, i, y)),
                        expected,
                        f"E({x} o_{i} {y})",
                    )


def _euler_star(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            ex = _basis(x)
            for y in enumerate_trees(n):
                ey = _basis(y)
                r.equal(
                    lattice.euler(dd.star(ex, ey)),
                    lattice.euler(ex) * lattice.euler(ey),
                    f"E({x} * {y})",
                )


def _euler_diese(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap + 1):
        for x in enumerate_trees(m):
            ex = _basis(x)
            for y in enumerate_trees(n):
                ey = _basis(y)
                r.equal(
                    lattice.euler(ac.diese(ex, ey)),
                    lattice.euler(ex) * lattice.euler(ey),
                    f"E({x} # {y})",
                )


# -- anticyclic structure ------------------------------------------------------------


def _theta_identities(cap: int, r: _Run) -> None:
    ac.convention()
    u = _basis(unit())
    r.equal(ac.apply_theta(u), -1 * u, "theta(unit)")
    for m, n in _pairs(cap):
        for x in enumerate_trees(m):
            ex = _basis(x)
            tx, tix = ac.apply_theta(ex), ac.apply_theta_inv(ex)
            for y in enumerate_trees(n):
                ey = _basis(y)
                ty, tiy = ac.apply_theta(ey), ac.apply_theta_inv(ey)
                r.equal(
                    ac.apply_theta(dd.under_elem(ex, ey)),
                    -1 * dd.star(tx, ty),
                    "theta of under",
                )
                r.equal(
                    ac.apply_theta(dd.star(ex, ey)),
                    -1 * dd.over_elem(tx, ty),
                    "theta of star",
                )
                r.equal(
                    ac.apply_theta_inv(dd.over_elem(ex, ey)),
                    -1 * dd.star(tix, tiy),
                    "theta inverse of over",
                )
                r.equal(
                    ac.apply_theta_inv(dd.star(ex, ey)),
                    -1 * dd.under_elem(tix, tiy),
                    "theta inverse of star",
                )


def _theta_reverse(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        for t in enumerate_trees(n):
            e = _basis(t)
            r.equal(
                ac.apply_theta(_basis(reverse(t))),
                dd.reverse_elem(ac.apply_theta_inv(e)),
                f"theta vs reversal at {t}",
            )


def _anticyclic_axioms(cap: int, r: _Run) -> None:
    for nx, my in _pairs(cap + 1):
        for x in enumerate_trees(nx):
            ex = _basis(x)
            for y in enumerate_trees(my):
                ey = _basis(y)
                r.equal(
                    ac.apply_tau(dd.compose(ex, nx, ey)),
                    -1 * dd.compose(ac.apply_tau(ey), 1, ac.apply_tau(ex)),
                    "last-slot axiom",
                )
                for i in range(1, nx):
                    r.equal(
                        ac.apply_tau(dd.compose(ex, i, ey)),
                        dd.compose(ac.apply_tau(ex), i + 1, ey),
                        f"shift axiom at {i}",
                    )


def _tau_periodicity(cap: int, r: _Run) -> None:
    u = _basis(unit())
    r.equal(ac.apply_tau(u), -1 * u, "tau(unit)")
    for n in range(1, cap + 1):
        t = ac.tau(n)
        power = np.eye(len(t), dtype=np.int64)
        for _ in range(n + 1):
            power = ac.exact_matmul(power, t)
        r.check(
            np.array_equal(power, np.eye(len(t), dtype=power.dtype)),
            f"tau^{n + 1} != Id at degree {n}",
        )


# -- noncrossing operad ----------------------------------------------------------------


def _nc_angles(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        for P in nc.enumerate_nct(n):
            c = nc.angle_counts(P)
            r.equal(c.left + c.middle + c.right, n - 1, f"angles of {P!r}")


def _nc_star_closed(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap):
        for P in nc.enumerate_nct(m):
            for Q in nc.enumerate_nct(n):
                r.check(nc.star_ncp(P, Q).is_tree, f"{P!r} * {Q!r} is not a tree")


def _nc_generation(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        r.equal(
            sorted(p.key() for p in nc.image_table(n)),
            sorted(p.key() for p in nc.enumerate_ncp(n)),
            f"closure vs enumeration at {n}",
        )


def _nc_morphism(cap: int, r: _Run) -> None:
    for m in range(2, cap):
        n = cap + 1 - m
        tm, tn = nc.image_table(m), nc.image_table(n)
        for P in tm:
            for i in range(1, m + 1):
                for Q in tn:
                    r.equal(
                        nc.ncp_to_dend(nc.compose_ncp(P, i, Q)),
                        dd.compose(tm[P], i, tn[Q]),
                        f"morphism at {P!r} o_{i} {Q!r}",
                    )


def _nc_pas_plante(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap + 1, lo=2):
        for P in nc.enumerate_nct(m):
            for Q in nc.enumerate_nct(n):
                for i in range(1, m + 1):
                    got = nc.compose_ncp(P, i, Q).is_tree
                    expected = nc.is_based(Q) or (i - 1, i) in P.den
                    r.equal(got, expected, f"tree criterion at {P!r} o_{i} {Q!r}")


def _nc_simple_bijection(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        simples = [P for P in nc.enumerate_nct(n) if nc.angle_counts(P).middle == 0]
        r.equal(len(simples), catalan(n), f"simple count at {n}")
        for t in enumerate_trees(n):
            P = nc.simple_nct(t)
            r.equal(nc.tree_of_simple(P), t, f"roundtrip at {t}")
            r.equal(nc.ncp_to_dend(P), _basis(t), f"image at {t}")


def _nc_simple_pivots(cap: int, r: _Run) -> None:
    # Single-edge exchanges (mutations) between simple noncrossing trees
    # realize exactly the Tamari covers; angle pivots are the exchanges
    # that stay inside a triangle and land on Hasse edges too.
    for n in range(2, cap + 1):
        p = lattice.poset(n)
        simples = {nc.simple_nct(t): t for t in p.elements}
        exchange_edges = set()
        for P, Q in itertools.combinations(simples, 2):
            if len(P.den - Q.den) == 1:
                exchange_edges.add(frozenset((simples[P], simples[Q])))
        hasse_edges = {
            frozenset((p.elements[i], p.elements[j]))
            for i in range(len(p.elements))
            for j in p.covers[i]
        }
        r.equal(exchange_edges, hasse_edges, f"exchange graph vs Hasse at {n}")
        pivot_edges = set()
        for P, t in simples.items():
            for ang in nc.angles(P):
                for removed in ang.edges:
                    s = simples.get(nc.pivot(P, ang, removed))
                    if s is not None and s is not t:
                        pivot_edges.add(frozenset((t, s)))
        r.check(
            pivot_edges <= hasse_edges,
            f"an angle pivot misses the Hasse diagram at {n}",
        )


# -- projective elements -----------------------------------------------------------------


def _proj_characterization(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        table = pj.projective_table(n)
        passing = [P for P in nc.enumerate_nct(n) if pj.is_projective_nct(P)]
        r.equal(len(passing), catalan(n), f"count at {n}")
        r.equal(set(passing), {pe.nct for pe in table.values()}, f"match at {n}")
        for pe in table.values():
            r.check((0, 1) in pe.nct.den, f"{pe.nct!r} misses border side 1")
            c = nc.angle_counts(pe.nct)
            r.check(c.right == 0 and c.left + c.middle == n - 1, f"angles of {pe.nct!r}")
            r.check(pe.elem.is_multiplicity_free(), f"multiplicities at {pe.tree}")


def _proj_over(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    for m in range(1, hi + 1):
        for n in range(1, hi + 1):
            for x, px in pj.projective_table(m).items():
                for y, py in pj.projective_table(n).items():
                    r.equal(
                        dd.over_elem(px.elem, py.elem),
                        pj.projective_element(over(x, y)).elem,
                        f"over at {x},{y}",
                    )


def _proj_under(cap: int, r: _Run) -> None:
    u = _basis(unit())
    two = DendElem.sum_of([left_comb(2), right_comb(2)])
    for n in range(1, cap):
        for x, px in pj.projective_table(n).items():
            lhs = pj.projective_element(under(unit(), x)).elem
            r.equal(lhs, dd.star(u, px.elem), f"star form at {x}")
            r.equal(lhs, dd.compose(two, 2, px.elem), f"composed form at {x}")


def _proj_closure(cap: int, r: _Run) -> None:
    two = DendElem.sum_of([left_comb(2), right_comb(2)])
    for n in range(1, cap):
        for x, px in pj.projective_table(n).items():
            r.check(
                pj.is_projective_elem(dd.compose(two, 2, px.elem)),
                f"middle-composition at {x}",
            )
            based = nc.compose_ncp(nc.gen_left(), 1, px.nct)
            r.check(
                pj.is_projective_nct(based) and nc.is_based(based),
                f"base extension at {x}",
            )
    for m, n in _pairs(cap):
        tm, tn = pj.projective_table(m), pj.projective_table(n)
        for x, px in tm.items():
            for y, py in tn.items():
                r.check(
                    pj.is_projective_elem(dd.over_elem(px.elem, py.elem)),
                    f"over at {x},{y}",
                )
                r.check(
                    pj.is_projective_elem(dd.star(px.elem, py.elem)),
                    f"star at {x},{y}",
                )
    for m, n in _pairs(cap + 1):
        tm, tn = pj.projective_table(m), pj.projective_table(n)
        for x, px in tm.items():
            for y, py in tn.items():
                r.check(
                    pj.is_projective_elem(dd.compose(px.elem, 1, py.elem)),
                    f"first slot at {x},{y}",
                )
                for i in range(2, m + 1):
                    R = nc.compose_ncp(px.nct, i, py.nct)
                    if R.is_tree:
                        r.check(
                            pj.is_projective_nct(R), f"slot {i} at {x},{y}"
                        )


def _proj_based_decomp(cap: int, r: _Run) -> None:
    for n in range(2, cap + 1):
        for x, pe in pj.projective_table(n).items():
            if not nc.is_based(pe.nct):
                continue
            Q = pj.decompose_based(pe.nct)
            r.check(pj.is_projective_nct(Q), f"factor at {x}")
            r.equal(nc.compose_ncp(nc.gen_left(), 1, Q), pe.nct, f"roundtrip at {x}")


def _proj_star_factors(cap: int, r: _Run) -> None:
    for n in range(1, cap + 1):
        for x, pe in pj.projective_table(n).items():
            factors = pj.star_factorization(pe.nct)
            acc = factors[0]
            for f in factors[1:]:
                acc = nc.star_ncp(acc, f)
            r.equal(acc, pe.nct, f"recomposition at {x}")
            r.check(
                all(nc.is_based(f) and pj.is_projective_nct(f) for f in factors),
                f"factors at {x}",
            )


def _proj_alternative(cap: int, r: _Run) -> None:
    from .trees import decompose_basic, Over

    for n in range(2, cap + 1):
        for x, pe in pj.projective_table(n).items():
            split = decompose_basic(x)
            if isinstance(split, Over):
                q = pj.projective_element(split.left)
                s = pj.projective_element(split.rest)
                r.equal(nc.over_ncp(q.nct, s.nct), pe.nct, f"over split at {x}")
                r.equal(
                    dd.over_elem(q.elem, s.elem), pe.elem, f"over elements at {x}"
                )
            else:
                q = pj.projective_element(split.rest)
                r.equal(
                    nc.compose_ncp(nc.gen_middle(), 2, q.nct),
                    pe.nct,
                    f"middle split at {x}",
                )


def _proj_pivots(cap: int, r: _Run) -> None:
    for n in range(2, cap + 1):
        matches = pj.hasse_pivot_match(n)
        p = lattice.poset(n)
        r.equal(len(matches), sum(len(c) for c in p.covers), f"edge count at {n}")
        for x in p.elements:
            touching = sum(1 for m in matches if m.lower is x or m.upper is x)
            r.equal(touching, n - 1, f"pivots touching {x}")


# -- the # product -------------------------------------------------------------------


def _diese_assoc(cap: int, r: _Run) -> None:
    for m in range(1, cap - 1):
        for n in range(1, cap - m):
            for p in range(1, cap - m - n + 1):
                for x in enumerate_trees(m):
                    for y in enumerate_trees(n):
                        xy = ac.diese(_basis(x), _basis(y))
                        for z in enumerate_trees(p):
                            r.equal(
                                ac.diese(xy, _basis(z)),
                                ac.diese(_basis(x), ac.diese(_basis(y), _basis(z))),
                                "assoc",
                            )


def _diese_unit(cap: int, r: _Run) -> None:
    u = _basis(unit())
    for n in range(1, cap + 1):
        for t in enumerate_trees(n):
            e = _basis(t)
            r.equal(ac.diese(u, e), e, f"left unit at {t}")
            r.equal(ac.diese(e, u), e, f"right unit at {t}")


def _diese_reverse(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    for m in range(1, hi + 1):
        for n in range(1, hi + 1):
            for x in enumerate_trees(m):
                for y in enumerate_trees(n):
                    r.equal(
                        dd.reverse_elem(ac.diese(_basis(x), _basis(y))),
                        ac.diese(_basis(reverse(y)), _basis(reverse(x))),
                        "reversal",
                    )


def _diese_mixed(cap: int, r: _Run) -> None:
    hi = min(cap, 3)
    ts = [t for k in range(1, hi + 1) for t in enumerate_trees(k)]
    for x, y, z in itertools.product(ts, repeat=3):
        ex, ey, ez = _basis(x), _basis(y), _basis(z)
        r.equal(
            ac.diese(dd.star(ex, ey), ez),
            dd.star(ex, ac.diese(ey, ez)),
            "star absorbs on the left",
        )
        r.equal(
            dd.star(ac.diese(ex, ey), ez),
            ac.diese(ex, dd.star(ey, ez)),
            "star absorbs on the right",
        )
        r.equal(
            ac.diese(ex, dd.under_elem(ey, ez)),
            dd.under_elem(ac.diese(ex, ey), ez),
            "under slides out",
        )
        r.equal(
            ac.diese(dd.over_elem(ex, ey), ez),
            dd.over_elem(ex, ac.diese(ey, ez)),
            "over slides out",
        )


def _diese_sum(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap + 1):
        lhs = ac.diese(
            DendElem.sum_of(enumerate_trees(m)), DendElem.sum_of(enumerate_trees(n))
        )
        r.equal(lhs, DendElem.sum_of(enumerate_trees(m + n - 1)), f"sum at ({m},{n})")


def _diese_projective(cap: int, r: _Run) -> None:
    for m, n in _pairs(cap + 1):
        for x, px in pj.projective_table(m).items():
            for y, py in pj.projective_table(n).items():
                r.check(
                    pj.is_projective_elem(ac.diese(px.elem, py.elem)),
                    f"# at {x},{y}",
                )


def _diese_closure(cap: int, r: _Run) -> None:
    g = _basis(left_comb(2))
    two = DendElem.sum_of([left_comb(2), right_comb(2)])
    generated: dict[int, set] = {2: {g.key(), two.key()}}
    elems: dict[tuple, DendElem] = {g.key(): g, two.key(): two}
    for d in range(3, cap + 1):
        got = set()
        for m in range(2, d):
            n = d + 1 - m
            for ka in generated.get(m, ()):
                for kb in generated.get(n, ()):
                    for prod in (
                        dd.compose(elems[ka], 1, elems[kb]),
                        ac.diese(elems[ka], elems[kb]),
                    ):
                        got.add(prod.key())
                        elems[prod.key()] = prod
        generated[d] = got
    for d in range(2, cap + 1):
        expected = {pe.elem.key() for pe in pj.projective_table(d).values()}
        r.equal(generated.get(d, set()), expected, f"closure at degree {d}")


def _diese_subsets(cap: int, r: _Run) -> None:
    y2 = enumerate_trees(2)
    for bits_s in range(4):
        for bits_t in range(4):
            s = [t for k, t in enumerate(y2) if bits_s >> k & 1]
            t = [t for k, t in enumerate(y2) if bits_t >> k & 1]
            if not s or not t:
                continue
            prod = ac.diese(DendElem.sum_of(s), DendElem.sum_of(t))
            r.check(prod.is_multiplicity_free(), f"Y_2 subsets {bits_s},{bits_t}")
    rng = random.Random(20240810)
    y3 = enumerate_trees(3)
    for _ in range(100):
        s = [t for t in y3 if rng.random() < 0.5]
        t = [t for t in y3 if rng.random() < 0.5]
        if not s or not t:
            continue
        prod = ac.diese(DendElem.sum_of(s), DendElem.sum_of(t))
        r.check(prod.is_multiplicity_free(), "random Y_3 subsets")


# -- categorification -----------------------------------------------------------------


def _cat_kinds(cap: int):
    for kind in ("circ1", "star", "diese"):
        for m in range(1, cap + 1):
            for n in range(1, cap + 1):
                d = m + n if kind == "star" else m + n - 1
                if 1 <= d <= cap:
                    yield kind, m, n


def _cat_relations(cap: int, r: _Run) -> None:
    for kind, m, n in _cat_kinds(cap):
        rep = cat.check_relations(cat.build_M(kind, m, n))
        r.check(rep.ok, f"{kind} ({m},{n}): {rep.violations[:2]}")


def _cat_decat(cap: int, r: _Run) -> None:
    for kind, m, n in _cat_kinds(cap):
        M = cat.build_M(kind, m, n)
        pm, pn = lattice.poset(m), lattice.poset(n)
        for x in pm.elements:
            for y in pn.elements:
                N = cat.box_product(
                    cat.projective_module(m, x), cat.projective_module(n, y)
                )
                cls = cat.grothendieck_class(cat.tensor(N, M))
                px, py = pj.projective_element(x).elem, pj.projective_element(y).elem
                if kind == "circ1":
                    expected = dd.compose(px, 1, py)
                elif kind == "star":
                    expected = dd.star(px, py)
                else:
                    expected = ac.diese(px, py)
                r.equal(cls, expected, f"{kind} at ({x},{y})")


def _cat_mutant(cap: int, r: _Run) -> None:
    M = cat.build_M("circ1", 2, 2)
    live = M.live_arrows()
    r.check(bool(live), "no live arrows to flip")
    detected = sum(
        1 for arrow in live if not cat.check_relations(M.flip_map(*arrow)).ok
    )
    r.equal(detected, len(live), "every single flip detected")


def _cat_crosscheck(cap: int, r: _Run) -> None:
    for kind, m, n in _cat_kinds(min(cap, 4)):
        M = cat.build_M(kind, m, n)
        compared = cat.crosscheck_paths(M, samples=150, seed=7)
        rep = cat.check_relations(M)
        r.check(rep.ok, f"{kind} ({m},{n}) relations")
        r.check(compared >= 0, "crosscheck ran")


# -- registry --------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteSpec:
    fn: object
    spec_max: int
    statement: str


SUITES: dict[str, SuiteSpec] = {
    "trees.catalan": SuiteSpec(_trees_catalan, 8, "tree counts are the Catalan numbers"),
    "trees.graft_assoc": SuiteSpec(_trees_graft_assoc, 3, "over/under grafting is associative and degree-additive"),
    "trees.reversal": SuiteSpec(_trees_reversal, 5, "reversal is an involution exchanging over and under"),
    "tamari.regularity": SuiteSpec(_tamari_regularity, 7, "the Hasse diagram is regular of degree n-1"),
    "tamari.antiauto": SuiteSpec(_tamari_antiauto, 5, "reversal is an order anti-automorphism"),
    "tamari.mobius": SuiteSpec(_tamari_mobius, 8, "the Moebius matrix inverts zeta with values in {-1,0,1}"),
    "tamari.interval": SuiteSpec(_tamari_interval, 5, "intervals agree with the double filter"),
    "tamari.lattice": SuiteSpec(_tamari_lattice, 4, "meets and joins exist uniquely"),
    "dend.unit": SuiteSpec(_dend_unit, 7, "the one-vertex tree is a composition unit"),
    "dend.operad_assoc": SuiteSpec(_dend_operad_axioms, 7, "nested and disjoint composition axioms"),
    "dend.compo_reverse": SuiteSpec(_dend_compo_reverse, 6, "reversal swaps composition slots"),
    "dend.star_interval": SuiteSpec(_dend_star_interval, 7, "the star product equals the Tamari interval sum"),
    "dend.star_assoc": SuiteSpec(_dend_star_assoc, 6, "the star product is associative"),
    "dend.star_reverse": SuiteSpec(_dend_star_reverse, 6, "reversal is a star anti-automorphism"),
    "dend.overunder": SuiteSpec(_dend_overunder, 6, "operad formulas for over/under match grafting"),
    "dend.relations": SuiteSpec(_dend_relations, 3, "mixed relations between over, star and first-slot composition"),
    "dend.multiplicity_free": SuiteSpec(_dend_multiplicity_free, 7, "basis compositions are multiplicity-free"),
    "euler.circ": SuiteSpec(_euler_circ, 7, "composition preserves the Euler form"),
    "euler.star": SuiteSpec(_euler_star, 7, "the star product preserves the Euler form"),
    "euler.diese": SuiteSpec(_euler_diese, 6, "the # product preserves the Euler form"),
    "theta.identities": SuiteSpec(_theta_identities, 5, "theta convention probe and defining identities"),
    "theta.reverse": SuiteSpec(_theta_reverse, 5, "theta conjugates reversal into its inverse"),
    "anticyclic.axioms": SuiteSpec(_anticyclic_axioms, 5, "tau compatibilities with composition"),
    "tau.periodicity": SuiteSpec(_tau_periodicity, 6, "tau has order n+1"),
    "nc.angles": SuiteSpec(_nc_angles, 6, "every noncrossing tree has n-1 angles"),
    "nc.star_closed": SuiteSpec(_nc_star_closed, 5, "noncrossing trees are closed under star"),
    "nc.generation": SuiteSpec(_nc_generation, 5, "closure generation reproduces plant enumeration"),
    "nc.morphism": SuiteSpec(_nc_morphism, 5, "the plant-to-combination map is an operad morphism"),
    "nc.pas_plante": SuiteSpec(_nc_pas_plante, 5, "tree criterion for plant composition"),
    "nc.simple_bijection": SuiteSpec(_nc_simple_bijection, 5, "trees biject with MIDDLE-free noncrossing trees"),
    "nc.simple_pivots": SuiteSpec(_nc_simple_pivots, 5, "pivots between simple trees mirror Tamari covers"),
    "proj.characterization": SuiteSpec(_proj_characterization, 5, "projectives are RIGHT-free trees through side 1"),
    "proj.over": SuiteSpec(_proj_over, 6, "projectives multiply under over"),
    "proj.under": SuiteSpec(_proj_under, 5, "projective of unit-under equals unit star projective"),
    "proj.closure": SuiteSpec(_proj_closure, 5, "projectives are closed under the listed operations"),
    "proj.based_decomp": SuiteSpec(_proj_based_decomp, 5, "based projectives strip their base uniquely"),
    "proj.star_factors": SuiteSpec(_proj_star_factors, 5, "projectives factor into based projectives"),
    "proj.alternative": SuiteSpec(_proj_alternative, 5, "projectives split as over or middle composition"),
    "proj.pivots": SuiteSpec(_proj_pivots, 5, "good pivots biject with Tamari covers"),
    "diese.assoc": SuiteSpec(_diese_assoc, 6, "the # product is associative"),
    "diese.unit": SuiteSpec(_diese_unit, 4, "the one-vertex tree is a # unit"),
    "diese.reverse": SuiteSpec(_diese_reverse, 6, "reversal is a # anti-automorphism"),
    "diese.mixed": SuiteSpec(_diese_mixed, 3, "star and under/over slide through #"),
    "diese.sum": SuiteSpec(_diese_sum, 6, "full sums multiply to the full sum under #"),
    "diese.projective": SuiteSpec(_diese_projective, 5, "# of projectives is projective"),
    "diese.closure": SuiteSpec(_diese_closure, 5, "first-slot and # closure of the two generators is the projectives"),
    "diese.subsets": SuiteSpec(_diese_subsets, 3, "subset # subset is multiplicity-free"),
    "cat.relations": SuiteSpec(_cat_relations, 5, "tri-modules satisfy all quiver relations"),
    "cat.decat": SuiteSpec(_cat_decat, 4, "tensor functors decategorify to the products"),
    "cat.mutant": SuiteSpec(_cat_mutant, 4, "injected faults are detected"),
    "cat.crosscheck": SuiteSpec(_cat_crosscheck, 4, "randomized long-path cross-check"),
}


def suite_ids() -> list[str]:
    return sorted(SUITES)


def run_suite(suite_id: str, max_degree: int | None = None) -> SuiteResult:
    """Run one suite, capped at min(its verified range, max_degree)."""
    spec = SUITES.get(suite_id)
    if spec is None:
        raise KeyError(f"unknown suite {suite_id!r}")
    cap = spec.spec_max if max_degree is None else min(spec.spec_max, max_degree)
    cap = max(cap, 1)
    run = _Run()
    t0 = time.perf_counter()
    try:
        spec.fn(cap, run)
    except TamariError as exc:
        run.failures.append(f"internal error: {exc}")
    seconds = time.perf_counter() - t0
    return SuiteResult(
        suite=suite_id,
        statement=spec.statement,
        max_degree=cap,
        checks=run.checks,
        passed=not run.failures,
        failures=run.failures,
        seconds=seconds,
    )


def run_suites(
    ids: list[str] | None = None, max_degree: int | None = None, jobs: int = 1
) -> list[SuiteResult]:
    """Run several suites, optionally on a small thread pool."""
    ids = suite_ids() if ids is None else ids
    if jobs <= 1:
        return [run_suite(i, max_degree) for i in ids]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda i: run_suite(i, max_degree), ids))
