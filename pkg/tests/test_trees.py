import pytest
from hypothesis import given, strategies as st

from tamari.errors import DegreeError
from tamari.trees import (
    LEAF,
    Over,
    UnderUnit,
    catalan,
    comb,
    decompose_basic,
    enumerate_trees,
    from_text,
    left_comb,
    node,
    over,
    reverse,
    right_comb,
    under,
    unit,
)

# random trees with up to 12 leaves, degree >= 1
trees_st = st.recursive(
    st.just(LEAF), lambda kids: st.builds(node, kids, kids), max_leaves=12
).filter(lambda t: t.degree >= 1)


def test_frozen_small_enumerations():
    assert [t.text for t in enumerate_trees(1)] == ["(o o)"]
    assert [t.text for t in enumerate_trees(2)] == ["((o o) o)", "(o (o o))"]
    assert len(enumerate_trees(5)) == 42


def test_catalan_counts():
    for n in range(1, 7):
        assert len(enumerate_trees(n)) == catalan(n)


def test_degree_zero_rejected():
    with pytest.raises(DegreeError):
        enumerate_trees(0)


def test_enumeration_is_sorted_and_distinct():
    for n in range(1, 6):
        texts = [t.text for t in enumerate_trees(n)]
        assert texts == sorted(texts)
        assert len(set(texts)) == len(texts)


@given(trees_st)
def test_text_roundtrip(t):
    assert from_text(t.text) is t


def test_parse_rejects_garbage():
    for bad in ["", "(o o", "oo", "(o  o)", "(o (o o)) ", "x"]:
        with pytest.raises(ValueError):
            from_text(bad)


def test_grafting_units():
    assert over(unit(), unit()) is left_comb(2)
    assert under(unit(), unit()) is right_comb(2)


def test_grafting_degree_additive():
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for x in enumerate_trees(m):
                for y in enumerate_trees(n):
                    assert over(x, y).degree == m + n
                    assert under(x, y).degree == m + n


def test_mixed_associativity_small():
    ts = [t for n in (1, 2, 3) for t in enumerate_trees(n)]
    for x in ts:
        for y in ts:
            for z in ts:
                assert under(over(x, y), z) is over(x, under(y, z))


@given(trees_st, trees_st)
def test_reverse_exchanges_products(x, y):
    assert reverse(over(x, y)) is under(reverse(y), reverse(x))
    assert reverse(under(x, y)) is over(reverse(y), reverse(x))


def test_reverse_frozen():
    assert reverse(left_comb(2)) is right_comb(2)
    g, d = left_comb(2), right_comb(2)
    # over(g, d) grafts g onto the leftmost leaf of d; mirror computed by hand
    assert over(g, d).text == "(((o o) o) (o o))"
    assert reverse(over(g, d)) is under(g, d)
    assert under(g, d).text == "((o o) (o (o o)))"


@given(trees_st)
def test_reverse_involution(t):
    assert reverse(reverse(t)) is t


def test_decompose_basic_frozen():
    assert decompose_basic(left_comb(2)) == Over(unit(), unit())
    assert decompose_basic(right_comb(2)) == UnderUnit(unit())
    with pytest.raises(DegreeError):
        decompose_basic(unit())


def test_decompose_basic_roundtrip():
    for n in range(2, 7):
        for t in enumerate_trees(n):
            split = decompose_basic(t)
            if isinstance(split, Over):
                assert split.left.degree >= 1 and split.rest.degree >= 1
                assert over(split.left, split.rest) is t
            else:
                assert under(unit(), split.rest) is t


def test_combs():
    assert comb(2, "left") is left_comb(2)
    assert comb(2, "right") is right_comb(2)
    assert left_comb(3).text == "(((o o) o) o)"
    assert right_comb(3).text == "(o (o (o o)))"
    with pytest.raises(ValueError):
        comb(2, "up")


def test_left_comb_is_the_unique_minimum_of_degree_4():
    from tamari.lattice import lower_covers

    minima = [t for t in enumerate_trees(4) if not lower_covers(t)]
    assert minima == [left_comb(4)]
