"""Integer combinations of trees and the dendriform operad structure.

``DendElem`` is a degree-homogeneous integer combination of planar binary
trees.  The composition maps ``compose(x, i, y)`` realize each basis tree
as an operation in a free dendriform algebra on labeled trees: a tree of
degree m acts on m arguments, with the two half-products

    x < y = node(left(x), root(x), right(x) * y)
    x > y = node(x * left(y), root(y), right(y))

where ``*`` is the sum of the two on nonempty pairs and absorbs an empty
side.  Substituting single labeled vertices for all arguments but slot i,
and a labeled copy of y at slot i, then stripping labels, gives the operad
composition.  Every intermediate term must carry its labels in infix order
1..m+n-1; this is asserted on every call, as is agreement of both ways of
parenthesizing the mixed case of the evaluation recursion.

The associative graded product ``star`` is defined by composition with the
sum of the two degree-2 trees; ``star_interval`` gives the same product as
a sum over a Tamari interval, and the two are cross-checked in the test
suite rather than sharing code.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import cache

from . import lattice
from .errors import DegreeError, InternalInvariantError
from .trees import LEAF, Tree, from_text, left_comb, node, over, right_comb, under

__all__ = [
    "DendElem",
    "eval_operation",
    "labeled_vertex",
    "compose",
    "compose_basis",
    "star",
    "star_interval",
    "over_elem",
    "under_elem",
    "reverse_elem",
]


class DendElem:
    """An element of the free Abelian group on trees of one degree."""

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, degree: int, terms: dict[Tree, int] | None = None):
        if degree < 1:
            raise DegreeError(f"degree must be >= 1, got {degree}")
        clean: dict[Tree, int] = {}
        for t, c in (terms or {}).items():
            if t.degree != degree:
                raise DegreeError(f"term {t} has degree {t.degree}, expected {degree}")
            if c != 0:
                clean[t] = int(c)
        self.degree = degree
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> DendElem:
        return cls(degree)

    @classmethod
    def basis(cls, t: Tree) -> DendElem:
        return cls(t.degree, {t: 1})

    @classmethod
    def sum_of(cls, trees) -> DendElem:
        trees = list(trees)
        if not trees:
            raise DegreeError("cannot infer the degree of an empty sum")
        acc = Counter()
        for t in trees:
            acc[t] += 1
        return cls(trees[0].degree, dict(acc))

    # -- group structure ----------------------------------------------------

    def _check(self, other: DendElem) -> None:
        if self.degree != other.degree:
            raise DegreeError(f"degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: DendElem) -> DendElem:
        self._check(other)
        acc = Counter(self.terms)
        acc.update(other.terms)
        return DendElem(self.degree, dict(acc))

    def __sub__(self, other: DendElem) -> DendElem:
        self._check(other)
        acc = Counter(self.terms)
        acc.subtract(other.terms)
        return DendElem(self.degree, dict(acc))

    def __neg__(self) -> DendElem:
        return DendElem(self.degree, {t: -c for t, c in self.terms.items()})

    def __rmul__(self, k: int) -> DendElem:
        return DendElem(self.degree, {t: k * c for t, c in self.terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DendElem)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- views ---------------------------------------------------------------

    def coeff(self, t: Tree) -> int:
        return self.terms.get(t, 0)

    def support(self) -> list[Tree]:
        return sorted(self.terms, key=lambda t: t.text)

    def items(self) -> list[tuple[Tree, int]]:
        return sorted(self.terms.items(), key=lambda tc: tc[0].text)

    def is_multiplicity_free(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def key(self) -> tuple:
        return (self.degree, tuple((t.text, c) for t, c in self.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return f"DendElem({self.degree}, 0)"
        body = " + ".join(
            (t.text if c == 1 else f"{c}*{t.text}") for t, c in self.items()
        )
        return f"DendElem({self.degree}, {body})"

    # -- JSON ------------------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"tree": t.text, "coeff": c} for t, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, doc: dict) -> DendElem:
        terms = Counter()
        for entry in doc["terms"]:
            terms[from_text(entry["tree"])] += int(entry["coeff"])
        return cls(int(doc["degree"]), dict(terms))

    @classmethod
    def from_json(cls, text: str) -> DendElem:
        return cls.from_json_obj(json.loads(text))


def _add_scaled(acc: Counter, terms: dict, c: int) -> None:
    if c == 1:
        acc.update(terms)
    elif c == -1:
        acc.subtract(terms)
    elif c != 0:
        for k, v in terms.items():
            acc[k] += c * v


# -- free dendriform evaluation on labeled trees ------------------------------
#
# A labeled tree is a tuple (left, label, right) with None for an empty side.

LTree = tuple


def labeled_vertex(label: int) -> dict[LTree, int]:
    return {(None, label, None): 1}


def _star_lt(x: LTree | None, y: LTree | None) -> dict[LTree, int]:
    if x is None:
        return {y: 1}
    if y is None:
        return {x: 1}
    acc = Counter(_prec_lt(x, y))
    acc.update(_succ_lt(x, y))
    return dict(acc)


def _prec_lt(x: LTree, y: LTree) -> dict[LTree, int]:
    l, a, r = x
    return {(l, a, z): c for z, c in _star_lt(r, y).items()}


def _succ_lt(x: LTree, y: LTree) -> dict[LTree, int]:
    l, b, r = y
    return {(z, b, r): c for z, c in _star_lt(x, l).items()}


def _bilinear(op, xs: dict, ys: dict) -> dict[LTree, int]:
    acc: Counter = Counter()
    for xt, xc in xs.items():
        for yt, yc in ys.items():
            _add_scaled(acc, op(xt, yt), xc * yc)
    return {t: c for t, c in acc.items() if c}


def eval_operation(t: Tree, args: list[dict[LTree, int]]) -> dict[LTree, int]:
    """Apply the operation of tree t to labeled-tree combinations.

    One argument per vertex of t, in infix order; each must be nonempty.
    """
    if len(args) != t.degree:
        raise DegreeError(f"expected {t.degree} arguments, got {len(args)}")
    for a in args:
        if not a:
            raise DegreeError("empty argument in evaluation")
    return _eval(t, args)


def _eval(t: Tree, args: list[dict[LTree, int]]) -> dict[LTree, int]:
    k = t.left.degree
    a = args[k]
    if t.left.is_leaf and t.right.is_leaf:
        return a
    if t.left.is_leaf:
        return _bilinear(_prec_lt, a, _eval(t.right, args[k + 1 :]))
    if t.right.is_leaf:
        return _bilinear(_succ_lt, _eval(t.left, args[:k]), a)
    lhs = _eval(t.left, args[:k])
    rhs = _eval(t.right, args[k + 1 :])
    result = _bilinear(_prec_lt, _bilinear(_succ_lt, lhs, a), rhs)
    other = _bilinear(_succ_lt, lhs, _bilinear(_prec_lt, a, rhs))
    if result != other:
        raise InternalInvariantError("mixed evaluation is parenthesization-dependent")
    return result


def _infix_labels(lt: LTree | None, out: list[int]) -> None:
    if lt is None:
        return
    l, a, r = lt
    _infix_labels(l, out)
    out.append(a)
    _infix_labels(r, out)


def _strip(lt: LTree | None) -> Tree:
    if lt is None:
        return LEAF
    l, a, r = lt
    return node(_strip(l), _strip(r))


@cache
def compose_basis(x: Tree, i: int, y: Tree) -> DendElem:
    """Operad composition of basis trees: substitute y at slot i of x."""
    m, n = x.degree, y.degree
    if not 1 <= i <= m:
        raise DegreeError(f"slot must be in 1..{m}, got {i}")
    args: list[dict[LTree, int]] = []
    for j in range(1, m + 1):
        if j < i:
            args.append(labeled_vertex(j))
        elif j == i:
            inner = eval_operation(y, [labeled_vertex(i + k) for k in range(n)])
            if len(inner) != 1 or next(iter(inner.values())) != 1:
                raise InternalInvariantError("unit substitution is not a single term")
            args.append(inner)
        else:
            args.append(labeled_vertex(j + n - 1))
    combo = eval_operation(x, args)
    expected = list(range(1, m + n))
    terms: dict[Tree, int] = {}
    for lt, c in combo.items():
        labels: list[int] = []
        _infix_labels(lt, labels)
        if labels != expected:
            raise InternalInvariantError(f"labels out of infix order: {labels}")
        terms[_strip(lt)] = c
    return DendElem(m + n - 1, terms)


def compose(a: DendElem, i: int, b: DendElem) -> DendElem:
    """Bilinear operad composition ``a o_i b``."""
    if not 1 <= i <= a.degree:
        raise DegreeError(f"slot must be in 1..{a.degree}, got {i}")
    acc: Counter = Counter()
    for s, cs in a.terms.items():
        for t, ct in b.terms.items():
            _add_scaled(acc, compose_basis(s, i, t).terms, cs * ct)
    return DendElem(a.degree + b.degree - 1, {t: c for t, c in acc.items() if c})


def _two_sum() -> DendElem:
    return DendElem.sum_of([left_comb(2), right_comb(2)])


def star(a: DendElem, b: DendElem) -> DendElem:
    """The associative graded product, via operad composition."""
    return compose(compose(_two_sum(), 2, b), 1, a)


def star_interval(x: Tree, y: Tree) -> DendElem:
    """The same product on basis trees, as a sum over a Tamari interval."""
    return DendElem.sum_of(lattice.interval(over(x, y), under(x, y)))


def over_elem(a: DendElem, b: DendElem) -> DendElem:
    """The over product through the operad: (b o_1 left2) o_1 a."""
    return compose(compose(b, 1, DendElem.basis(left_comb(2))), 1, a)


def under_elem(a: DendElem, b: DendElem) -> DendElem:
    """The under product through the operad: (a o_m right2) o_{m+1} b."""
    m = a.degree
    return compose(compose(a, m, DendElem.basis(right_comb(2))), m + 1, b)


def reverse_elem(a: DendElem) -> DendElem:
    from .trees import reverse

    return DendElem(a.degree, {reverse(t): c for t, c in a.terms.items()})
