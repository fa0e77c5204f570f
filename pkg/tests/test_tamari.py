import json

import numpy as np
import pytest

from tamari import lattice
from tamari.dendriform import DendElem
from tamari.errors import DegreeError
from tamari.lattice import (
    build_poset,
    euler,
    euler_form,
    hasse_dot,
    interval,
    join,
    leq,
    lower_covers,
    matrices_json,
    meet,
    poset,
)
from tamari.trees import enumerate_trees, left_comb, reverse, right_comb, unit


def _reach_leq(x, y):
    """Independent order oracle: breadth-first search through single moves."""
    seen = {y}
    frontier = [y]
    while frontier:
        t = frontier.pop()
        if t is x:
            return True
        for s in lower_covers(t):
            if s not in seen:
                seen.add(s)
                frontier.append(s)
    return x in seen


def test_lower_covers_frozen():
    g, d = left_comb(2), right_comb(2)
    assert lower_covers(d) == [g]
    assert lower_covers(g) == []


def test_right_comb_cover_count():
    for n in range(2, 7):
        assert len(lower_covers(right_comb(n))) == n - 1


def test_leq_examples():
    assert leq(left_comb(2), right_comb(2))
    for n in (1, 2, 3, 4):
        for t in enumerate_trees(n):
            assert leq(t, t)


def test_leq_matches_reachability_oracle():
    for n in (2, 3, 4):
        for x in enumerate_trees(n):
            for y in enumerate_trees(n):
                assert leq(x, y) == _reach_leq(x, y)


def test_leq_degree_mismatch():
    with pytest.raises(DegreeError):
        leq(unit(), right_comb(2))


def test_reversal_antiautomorphism():
    for n in (2, 3, 4):
        for x in enumerate_trees(n):
            for y in enumerate_trees(n):
                assert leq(x, y) == leq(reverse(y), reverse(x))


def test_poset_degree_two_frozen():
    p = build_poset(2)
    assert [t.text for t in p.elements] == ["((o o) o)", "(o (o o))"]
    assert p.covers == ((), (0,))
    assert p.mobius.tolist() == [[1, -1], [0, 1]]


def test_pentagon():
    p = poset(3)
    assert len(p.elements) == 5
    assert all(p.hasse_degree(t) == 2 for t in p.elements)
    assert sum(len(c) for c in p.covers) == 5


def test_mobius_values_small():
    for n in (2, 3, 4, 5):
        assert set(np.unique(poset(n).mobius).tolist()) <= {-1, 0, 1}


def test_mobius_inverts_zeta_up_to_degree_8():
    for n in (6, 7, 8):
        p = poset(n)
        prod = p.mobius.astype(float) @ p.zeta.astype(float)
        assert np.array_equal(prod, np.eye(len(prod)))
        assert set(np.unique(p.mobius).tolist()) <= {-1, 0, 1}


def test_linear_extension_property():
    for n in (2, 3, 4, 5):
        p = poset(n)
        for i, x in enumerate(p.elements):
            for j, y in enumerate(p.elements):
                if i != j and p.leq(x, y):
                    assert i < j


def test_poset_out_of_range():
    with pytest.raises(DegreeError):
        build_poset(lattice.MAX_DEGREE + 1)


def test_interval_examples():
    for t in enumerate_trees(3):
        assert interval(t, t) == [t]
    assert interval(left_comb(3), right_comb(3)) == list(poset(3).elements)
    assert interval(left_comb(2), right_comb(2)) == [left_comb(2), right_comb(2)]
    assert interval(right_comb(2), left_comb(2)) == []


def test_interval_double_filter():
    for n in (2, 3, 4):
        p = poset(n)
        for x in p.elements:
            for y in p.elements:
                expected = [z for z in p.elements if p.leq(x, z) and p.leq(z, y)]
                assert interval(x, y) == expected


def test_meet_join_frozen():
    g, d = left_comb(2), right_comb(2)
    assert meet(g, d) is g
    assert join(g, d) is d


def test_meet_join_against_bound_oracle():
    for x in enumerate_trees(4):
        for y in enumerate_trees(4):
            lower = [z for z in enumerate_trees(4) if _reach_leq(z, x) and _reach_leq(z, y)]
            maxima = [z for z in lower if all(_reach_leq(w, z) for w in lower)]
            assert maxima == [meet(x, y)]
            upper = [z for z in enumerate_trees(4) if _reach_leq(x, z) and _reach_leq(y, z)]
            minima = [z for z in upper if all(_reach_leq(z, w) for w in upper)]
            assert minima == [join(x, y)]


def test_euler_form_examples():
    g, d = left_comb(2), right_comb(2)
    for n in (1, 2, 3):
        for t in enumerate_trees(n):
            assert euler(DendElem.basis(t)) == 1
    assert euler_form(DendElem.basis(g), DendElem.basis(d)) == -1
    assert euler_form(DendElem.basis(d), DendElem.basis(g)) == 0
    assert euler(DendElem.sum_of([g, d])) == 1
    with pytest.raises(DegreeError):
        euler_form(DendElem.basis(unit()), DendElem.basis(g))


def test_hasse_dot_pentagon():
    dot = hasse_dot(3)
    assert dot.startswith('digraph "tamari_3"')
    assert dot.count("->") == 5


def test_matrices_json_roundtrip():
    doc = json.loads(matrices_json(2))
    assert doc["elements"] == ["((o o) o)", "(o (o o))"]
    assert doc["leq"] == [[1, 1], [0, 1]]
    assert doc["mobius"] == [[1, -1], [0, 1]]
