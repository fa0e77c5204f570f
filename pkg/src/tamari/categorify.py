"""Modules over products of Tamari quivers and the tensor functors.

The Hasse diagram of a Tamari degree is read as a quiver with arrows
oriented downward and with all parallel paths identified.  A product
quiver takes one factor per degree, each either straight or opposite
(arrows reversed), its arrows moving one coordinate along one cover.

A :class:`TriModule` puts a 0/1-dimensional space on every vertex tuple
and the identity map on an arrow whenever both endpoints carry dimension
one, the zero map otherwise.  ``build_M`` supports the three kinds whose
tensor functor decategorifies to the first composition, the star product
and the # product: the support over (x, y) is the set of trees in the
corresponding product of the two projective elements.

``check_relations`` verifies that every relation of the quiver holds:
mixed commuting squares, plus full path-independence inside each factor
(two parallel paths may well have different lengths, the Tamari order is
not graded).  Together these generate all parallel-path identifications
in the product; ``crosscheck_paths`` re-verifies that reduction on
randomly sampled vertex pairs by brute-force path enumeration.

``tensor`` contracts a module over the straight product of the first two
factors against a tri-module, by exact rational linear algebra: for each
z the space is the direct sum over (x, y) modulo the bimodule relations,
and z-covers act on the quotients.  ``grothendieck_class`` reads the
dimension vector of a one-factor module in the simple basis.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import anticyclic
from . import dendriform as dd
from . import lattice
from .errors import DegreeError, InternalInvariantError
from .projective import projective_table
from .trees import Tree

__all__ = [
    "Factor",
    "ProductQuiver",
    "TriModule",
    "build_M",
    "RelationReport",
    "check_relations",
    "crosscheck_paths",
    "PosetModule",
    "projective_module",
    "simple_module",
    "box_product",
    "tensor",
    "grothendieck_class",
    "check_poset_module",
]

Vertex = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Factor:
    """One Tamari degree in a product quiver, straight or opposite."""

    n: int
    opposite: bool = False

    @cached_property
    def poset(self) -> lattice.TamariPoset:
        return lattice.poset(self.n)

    @cached_property
    def size(self) -> int:
        return len(self.poset.elements)

    @cached_property
    def targets(self) -> tuple[tuple[int, ...], ...]:
        """Arrow targets per element: lower covers, or upper when opposite."""
        covers = self.poset.covers
        if not self.opposite:
            return covers
        ups: list[list[int]] = [[] for _ in covers]
        for i, lows in enumerate(covers):
            for j in lows:
                ups[j].append(i)
        return tuple(tuple(u) for u in ups)

    def reachable(self, p: int, q: int) -> bool:
        """Is there a directed path p -> q along this factor's arrows?"""
        m = self.poset.leq_matrix
        return bool(m[p, q] if self.opposite else m[q, p])


@dataclass(frozen=True)
class ProductQuiver:
    factors: tuple[Factor, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    def vertices(self):
        return itertools.product(*(range(s) for s in self.sizes))

    def arrows_from(self, v: Vertex):
        """Yield (target, factor index) for every arrow leaving v."""
        for k, f in enumerate(self.factors):
            for j in f.targets[v[k]]:
                yield v[:k] + (j,) + v[k + 1 :], k

    def arrows(self):
        for v in self.vertices():
            for w, k in self.arrows_from(v):
                yield v, w, k


class TriModule:
    """A 0/1-dimensional module over a product quiver, maps id-or-zero."""

    def __init__(
        self,
        quiver: ProductQuiver,
        dims: dict[Vertex, int],
        kind: str = "",
        m: int = 0,
        n: int = 0,
        maps: dict[tuple[Vertex, Vertex], int] | None = None,
    ):
        self.quiver = quiver
        self.dims = dict(dims)
        self.kind, self.m, self.n = kind, m, n
        if maps is None:
            maps = {
                (v, w): 1 if self.dim(v) == 1 and self.dim(w) == 1 else 0
                for v, w, _ in quiver.arrows()
            }
        self.maps = maps

    def dim(self, v: Vertex) -> int:
        return self.dims.get(v, 0)

    def map_bit(self, v: Vertex, w: Vertex) -> int:
        return self.maps[(v, w)]

    def flip_map(self, v: Vertex, w: Vertex) -> TriModule:
        """A mutant copy with the arrow v -> w forced to the zero map."""
        if (v, w) not in self.maps:
            raise ValueError(f"{v} -> {w} is not an arrow of the quiver")
        maps = dict(self.maps)
        maps[(v, w)] = 0
        return TriModule(self.quiver, self.dims, self.kind, self.m, self.n, maps)

    def live_arrows(self) -> list[tuple[Vertex, Vertex]]:
        return sorted(a for a, bit in self.maps.items() if bit == 1)


_KINDS = {"circ1", "star", "diese"}


def build_M(kind: str, m: int, n: int) -> TriModule:
    """The tri-module whose tensor functor decategorifies to the product.

    Support over (x, y): the trees appearing in P(x) o_1 P(y) for circ1,
    in P(x) * P(y) for star, in P(x) # P(y) for diese.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {sorted(_KINDS)}, got {kind!r}")
    d = m + n if kind == "star" else m + n - 1
    if not (1 <= m and 1 <= n and d <= lattice.MAX_DEGREE):
        raise DegreeError(f"result degree {d} out of range 1..{lattice.MAX_DEGREE}")
    pm, pn, pd = lattice.poset(m), lattice.poset(n), lattice.poset(d)
    quiver = ProductQuiver((Factor(m, True), Factor(n, True), Factor(d, False)))
    dims: dict[Vertex, int] = {}
    tm, tn = projective_table(m), projective_table(n)
    for ix, x in enumerate(pm.elements):
        for iy, y in enumerate(pn.elements):
            a, b = tm[x].elem, tn[y].elem
            if kind == "circ1":
                prod = dd.compose(a, 1, b)
            elif kind == "star":
                prod = dd.star(a, b)
            else:
                prod = anticyclic.diese(a, b)
            if not prod.is_multiplicity_free():
                raise InternalInvariantError(
                    f"support of {kind} at ({x}, {y}) has multiplicities"
                )
            for z in prod.terms:
                dims[(ix, iy, pd.index[z])] = 1
    return TriModule(quiver, dims, kind, m, n)


@dataclass
class RelationReport:
    kind: str
    m: int
    n: int
    squares_checked: int = 0
    paths_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "squares_checked": self.squares_checked,
            "paths_checked": self.paths_checked,
            "violations": self.violations,
        }


def check_relations(M: TriModule, max_violations: int = 20) -> RelationReport:
    """Verify every quiver relation on M.

    Mixed squares compare the two orders of two arrows in different
    factors.  Within one factor, for every context and every ordered pair
    of dimension-one endpoints, either every directed path between them
    composes to the identity or every one composes to zero; a live path
    and a broken path between the same endpoints is a violation.
    """
    report = RelationReport(M.kind, M.m, M.n)
    quiver = M.quiver
    for v in quiver.vertices():
        if M.dim(v) != 1:
            continue
        outs = list(quiver.arrows_from(v))
        for (w1, k1), (w2, k2) in itertools.combinations(outs, 2):
            if k1 == k2:
                continue
            v3 = tuple(w2[k] if k == k2 else w1[k] for k in range(len(v)))
            if M.dim(v3) != 1:
                continue
            report.squares_checked += 1
            b1 = M.map_bit(v, w1) * M.map_bit(w1, v3)
            b2 = M.map_bit(v, w2) * M.map_bit(w2, v3)
            if b1 != b2:
                report.violations.append(
                    {"type": "square", "at": v, "via": [w1, w2], "to": v3}
                )
                if len(report.violations) >= max_violations:
                    return report
    for k, f in enumerate(quiver.factors):
        others = [range(s) for j, s in enumerate(quiver.sizes) if j != k]
        for ctx in itertools.product(*others):
            def vertex(e: int) -> Vertex:
                return ctx[:k] + (e,) + ctx[k:]

            live = {e: [] for e in range(f.size)}
            dead = []
            for p in range(f.size):
                for q in f.targets[p]:
                    if M.map_bit(vertex(p), vertex(q)):
                        live[p].append(q)
                    else:
                        dead.append((p, q))
            support = [e for e in range(f.size) if M.dim(vertex(e)) == 1]
            if len(support) < 2:
                continue
            live_reach = {p: _closure(live, p) for p in support}
            for p, q in itertools.permutations(support, 2):
                if not f.reachable(p, q):
                    continue
                report.paths_checked += 1
                has_live = q in live_reach[p]
                has_broken = any(
                    f.reachable(p, u) and f.reachable(w, q) for u, w in dead
                )
                if has_live and has_broken:
                    report.violations.append(
                        {
                            "type": "path",
                            "factor": k,
                            "context": ctx,
                            "from": vertex(p),
                            "to": vertex(q),
                        }
                    )
                    if len(report.violations) >= max_violations:
                        return report
    return report


def _closure(adj: dict[int, list[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def crosscheck_paths(M: TriModule, samples: int = 200, seed: int = 0) -> int:
    """Brute-force check of path-independence on random vertex pairs.

    Enumerates all directed paths between sampled pairs of dimension-one
    vertices and requires all composites to agree.  Returns the number of
    pairs with at least two paths compared; raises on any disagreement.
    """
    rng = random.Random(seed)
    quiver = M.quiver
    ones = sorted(v for v, d in M.dims.items() if d == 1)
    if not ones:
        return 0
    compared = 0
    for _ in range(samples):
        v = rng.choice(ones)
        w = rng.choice(ones)
        if v == w:
            continue
        composites = []

        def walk(u: Vertex, bit: int) -> None:
            if u == w:
                composites.append(bit)
                return
            for t, _ in quiver.arrows_from(u):
                walk(t, bit * M.maps[(u, t)])

        walk(v, 1)
        if len(composites) >= 2:
            compared += 1
            if len(set(composites)) != 1:
                raise InternalInvariantError(
                    f"path composites from {v} to {w} disagree"
                )
    return compared


# -- modules with genuine linear maps, and the tensor functor -------------------


def _zeros(rows: int, cols: int) -> Matrix:
    return tuple((Fraction(0),) * cols for _ in range(rows))


def _identity(k: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(k)) for i in range(k)
    )


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return _zeros(len(a), len(b[0]) if b else 0)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


class PosetModule:
    """A module over a straight product quiver with rational maps.

    ``maps[(v, w)]`` has shape (dim w, dim v); missing arrows act by zero.
    """

    def __init__(
        self,
        quiver: ProductQuiver,
        dims: dict[Vertex, int],
        maps: dict[tuple[Vertex, Vertex], Matrix],
    ):
        if any(f.opposite for f in quiver.factors):
            raise ValueError("poset modules live over straight quivers")
        self.quiver = quiver
        self.dims = {v: d for v, d in dims.items() if d}
        self.maps = maps

    def dim(self, v: Vertex) -> int:
        return self.dims.get(v, 0)

    def map_matrix(self, v: Vertex, w: Vertex) -> Matrix:
        got = self.maps.get((v, w))
        if got is None:
            return _zeros(self.dim(w), self.dim(v))
        return got


def projective_module(n: int, x: Tree) -> PosetModule:
    """One-dimensional spaces on the lower cone of x, identity maps inside."""
    p = lattice.poset(n)
    ix = p.index[x]
    quiver = ProductQuiver((Factor(n),))
    dims = {(i,): 1 for i in range(len(p.elements)) if p.leq_matrix[i, ix]}
    maps = {}
    for v, w, _ in quiver.arrows():
        if v in dims and w in dims:
            maps[(v, w)] = _identity(1)
    return PosetModule(quiver, dims, maps)


def simple_module(n: int, x: Tree) -> PosetModule:
    """One-dimensional space at x alone, all maps zero."""
    p = lattice.poset(n)
    quiver = ProductQuiver((Factor(n),))
    return PosetModule(quiver, {(p.index[x],): 1}, {})


def box_product(a: PosetModule, b: PosetModule) -> PosetModule:
    """External product over the concatenated quiver."""
    quiver = ProductQuiver(a.quiver.factors + b.quiver.factors)
    ka = len(a.quiver.factors)
    dims = {}
    for va, da in a.dims.items():
        for vb, db in b.dims.items():
            dims[va + vb] = da * db
    maps = {}
    for v in dims:
        va, vb = v[:ka], v[ka:]
        for (w, k) in quiver.arrows_from(v):
            wa, wb = w[:ka], w[ka:]
            if k < ka:
                mat = _kron(a.map_matrix(va, wa), _identity(b.dim(vb)))
            else:
                mat = _kron(_identity(a.dim(va)), b.map_matrix(vb, wb))
            if mat and mat[0]:
                maps[(v, w)] = mat
    return PosetModule(quiver, dims, maps)


def _kron(a: Matrix, b: Matrix) -> Matrix:
    ra, rb = len(a), len(b)
    ca = len(a[0]) if ra else 0
    cb = len(b[0]) if rb else 0
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(ca) for l in range(cb))
        for i in range(ra)
        for k in range(rb)
    )


def _rref(rows: list[list[Fraction]], width: int):
    """Reduced row echelon form; returns (rows, pivot column -> row index)."""
    pivots: dict[int, int] = {}
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [inv * e for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    return rows[:r], pivots


def _quotient_coords(vec: list[Fraction], rows, pivots, basis_cols) -> list[Fraction]:
    v = list(vec)
    for c, r in pivots.items():
        if v[c] != 0:
            f = v[c]
            v = [e - f * p for e, p in zip(v, rows[r])]
    return [v[c] for c in basis_cols]


def tensor(N: PosetModule, M: TriModule) -> PosetModule:
    """Contract N against the tri-module M; a module over the last factor.

    For each z the space is the direct sum of N(x, y) tensor M(x, y, z)
    modulo, for every cover arrow of the straight (x, y) quiver, the
    difference between acting on the N side and acting on the M side.
    """
    fm, fn, fd = M.quiver.factors
    if tuple(f.n for f in N.quiver.factors) != (fm.n, fn.n):
        raise DegreeError("module degrees do not match the tri-module")
    pairs_quiver = N.quiver
    d_factor = Factor(fd.n)
    out_quiver = ProductQuiver((d_factor,))

    spaces: dict[int, dict] = {}
    for iz in range(fd.size):
        gens: list[tuple[Vertex, int]] = []
        offset: dict[Vertex, int] = {}
        for xy in sorted(N.dims):
            if M.dim(xy + (iz,)) == 1:
                offset[xy] = len(gens)
                gens.extend((xy, alpha) for alpha in range(N.dim(xy)))
        rows: list[list[Fraction]] = []
        for v in sorted(N.dims):
            for w, _k in pairs_quiver.arrows_from(v):
                if M.dim(w + (iz,)) != 1:
                    continue
                a = N.map_matrix(v, w)
                bit = (
                    M.map_bit(w + (iz,), v + (iz,)) if M.dim(v + (iz,)) == 1 else 0
                )
                for alpha in range(N.dim(v)):
                    row = [Fraction(0)] * len(gens)
                    for beta in range(N.dim(w)):
                        row[offset[w] + beta] += a[beta][alpha]
                    if bit and v in offset:
                        row[offset[v] + alpha] -= Fraction(bit)
                    if any(row):
                        rows.append(row)
        red, pivots = _rref(rows, len(gens))
        basis_cols = [c for c in range(len(gens)) if c not in pivots]
        spaces[iz] = {
            "gens": gens,
            "offset": offset,
            "rows": red,
            "pivots": pivots,
            "basis": basis_cols,
        }

    dims = {(iz,): len(s["basis"]) for iz, s in spaces.items() if s["basis"]}
    maps: dict[tuple[Vertex, Vertex], Matrix] = {}
    pd = lattice.poset(fd.n)
    for iz in range(fd.size):
        src = spaces[iz]
        if not src["basis"]:
            continue
        for jz in pd.covers[iz]:
            tgt = spaces[jz]
            if not tgt["basis"]:
                continue
            cols = []
            for c in src["basis"]:
                xy, alpha = src["gens"][c]
                vec = [Fraction(0)] * len(tgt["gens"])
                if xy in tgt["offset"] and M.map_bit(xy + (iz,), xy + (jz,)):
                    vec[tgt["offset"][xy] + alpha] = Fraction(1)
                cols.append(
                    _quotient_coords(vec, tgt["rows"], tgt["pivots"], tgt["basis"])
                )
            mat = tuple(
                tuple(cols[j][i] for j in range(len(cols)))
                for i in range(len(tgt["basis"]))
            )
            maps[((iz,), (jz,))] = mat
    return PosetModule(out_quiver, dims, maps)


def grothendieck_class(N: PosetModule) -> dd.DendElem:
    """Dimension vector of a one-factor module, read in the simple basis."""
    if len(N.quiver.factors) != 1:
        raise DegreeError("classes are read off modules over a single degree")
    f = N.quiver.factors[0]
    p = f.poset
    return dd.DendElem(f.n, {p.elements[i]: d for (i,), d in N.dims.items()})


def check_poset_module(N: PosetModule, max_vertices: int = 4000) -> int:
    """Assert all parallel-path composites of N agree; returns pairs checked.

    Brute-force path enumeration; meant for small modules in tests.
    """
    verts = sorted(N.dims)
    if len(verts) > max_vertices:
        raise DegreeError("module too large for brute-force path checking")
    checked = 0
    for v in verts:
        composites: dict[Vertex, list[Matrix]] = {}

        def walk(u: Vertex, mat: Matrix) -> None:
            for w, _k in N.quiver.arrows_from(u):
                nxt = _mat_mul(N.map_matrix(u, w), mat)
                composites.setdefault(w, []).append(nxt)
                walk(w, nxt)

        walk(v, _identity(N.dim(v)))
        for w, mats in composites.items():
            if len(mats) >= 2:
                checked += 1
                if any(m != mats[0] for m in mats[1:]):
                    raise InternalInvariantError(
                        f"path composites from {v} to {w} disagree"
                    )
    return checked
