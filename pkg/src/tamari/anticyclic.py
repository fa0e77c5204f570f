"""The transforms theta and tau on tree combinations, and the # product.

theta is realized as a signed Coxeter-type matrix built from the order
(zeta) matrix of the Tamari lattice and its inverse.  Which of the
possible sign/transpose conventions is the right one is not hard-coded:
a probe runs once per process, testing the defining identities

    theta(unit) = -unit
    theta(under(x, y)) = -theta(x) * theta(y)
    theta(star(x, y))  = -theta(x) / theta(y)

at degrees 1..3 over all eight candidates (both products of the zeta
matrix with the transposed inverse, both orders, both signs, and their
inverses) and fixes the first that passes.  If none passes, the probe
raises instead of guessing.

tau is (-1)^n theta^2 and has order n + 1.  The # product is

    a # b = -theta^{-1}(theta(b) o_1 theta(a))
          = -theta(theta^{-1}(a) o_m theta^{-1}(b))     (m = degree of a)

and both expressions are evaluated and compared on every call.

All matrix arithmetic is exact: products run in int64 only when a bound
check rules out overflow, and fall back to Python integers otherwise.
"""

from __future__ import annotations

import json
from functools import cache

import numpy as np

from . import dendriform as dd
from . import lattice
from .errors import DegreeError, InternalInvariantError
from .trees import enumerate_trees, left_comb, right_comb, under, unit

__all__ = [
    "theta",
    "theta_inv",
    "tau",
    "apply_theta",
    "apply_theta_inv",
    "apply_tau",
    "diese",
    "exact_matmul",
    "convention",
    "matrices_json",
]

_INT64_SAFE = 2**62


def _maxabs(a: np.ndarray) -> int:
    return int(np.abs(a).max(initial=0))


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product that never wraps around.

    Uses int64 when a worst-case bound fits, otherwise Python integers.
    """
    bound = max(1, _maxabs(a)) * max(1, _maxabs(b)) * a.shape[1]
    if bound < _INT64_SAFE and a.dtype != object and b.dtype != object:
        return a @ b
    return np.array((a.astype(object) @ b.astype(object)).tolist(), dtype=object)


def _matvec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    bound = max(1, _maxabs(m)) * max(1, int(np.abs(v).max(initial=0))) * len(v)
    if bound < _INT64_SAFE and m.dtype != object:
        return m @ v
    return np.array((m.astype(object) @ v.astype(object)).tolist(), dtype=object)


# The four matrix shapes; each key maps to (builder, key of the inverse).
_FORMS = {
    "zeta@mobius.T": (lambda z, m: exact_matmul(z, m.T), "zeta.T@mobius"),
    "mobius.T@zeta": (lambda z, m: exact_matmul(m.T, z), "mobius@zeta.T"),
    "zeta.T@mobius": (lambda z, m: exact_matmul(z.T, m), "zeta@mobius.T"),
    "mobius@zeta.T": (lambda z, m: exact_matmul(m, z.T), "mobius.T@zeta"),
}


def _candidate(n: int, form: str, sign: int) -> np.ndarray:
    p = lattice.poset(n)
    return sign * _FORMS[form][0](p.zeta, p.mobius)


def _apply_matrix(m: np.ndarray, a: dd.DendElem) -> dd.DendElem:
    p = lattice.poset(a.degree)
    w = _matvec(m, p.vector(a.terms))
    return dd.DendElem(a.degree, {p.elements[i]: int(c) for i, c in enumerate(w) if c})


def _probe_candidate(form: str, sign: int) -> bool:
    def th(a: dd.DendElem) -> dd.DendElem:
        return _apply_matrix(_candidate(a.degree, form, sign), a)

    u = dd.DendElem.basis(unit())
    if th(u) != -1 * u:
        return False
    g, d = dd.DendElem.basis(left_comb(2)), dd.DendElem.basis(right_comb(2))
    if th(g) != d or th(d) != -1 * (g + d):
        return False
    for m, n in ((1, 1), (1, 2), (2, 1)):
        for x in enumerate_trees(m):
            for y in enumerate_trees(n):
                ex, ey = dd.DendElem.basis(x), dd.DendElem.basis(y)
                if th(dd.DendElem.basis(under(x, y))) != -1 * dd.star(th(ex), th(ey)):
                    return False
                if th(dd.star(ex, ey)) != -1 * dd.over_elem(th(ex), th(ey)):
                    return False
    return True


@cache
def convention() -> tuple[str, int]:
    """Probe and fix the matrix convention for theta; runs once."""
    for form in _FORMS:
        for sign in (-1, 1):
            if _probe_candidate(form, sign):
                return form, sign
    raise InternalInvariantError(
        "no sign/transpose convention satisfies the defining theta identities"
    )


@cache
def theta(n: int) -> np.ndarray:
    form, sign = convention()
    return _candidate(n, form, sign)


@cache
def theta_inv(n: int) -> np.ndarray:
    form, sign = convention()
    inv = _candidate(n, _FORMS[form][1], sign)
    prod = exact_matmul(theta(n), inv)
    if not np.array_equal(prod, np.eye(len(prod), dtype=prod.dtype)):
        raise InternalInvariantError("theta inverse pairing is wrong")
    return inv


@cache
def tau(n: int) -> np.ndarray:
    t = theta(n)
    return (-1) ** n * exact_matmul(t, t)


def apply_theta(a: dd.DendElem) -> dd.DendElem:
    return _apply_matrix(theta(a.degree), a)


def apply_theta_inv(a: dd.DendElem) -> dd.DendElem:
    return _apply_matrix(theta_inv(a.degree), a)


def apply_tau(a: dd.DendElem) -> dd.DendElem:
    return _apply_matrix(tau(a.degree), a)


def diese(a: dd.DendElem, b: dd.DendElem) -> dd.DendElem:
    """The associative # product, graded by degree minus one.

    Both defining expressions are computed; a mismatch means the fixed
    convention is wrong and is fatal.
    """
    first = -1 * apply_theta_inv(dd.compose(apply_theta(b), 1, apply_theta(a)))
    second = -1 * apply_theta(
        dd.compose(apply_theta_inv(a), a.degree, apply_theta_inv(b))
    )
    if first != second:
        raise InternalInvariantError("the two defining expressions of # disagree")
    return first


def matrices_json(n: int) -> str:
    """theta and tau matrices, row-major, with the element-order header."""
    if not 1 <= n <= lattice.MAX_DEGREE:
        raise DegreeError(f"degree must be in 1..{lattice.MAX_DEGREE}, got {n}")
    p = lattice.poset(n)
    doc = {
        "n": n,
        "elements": [t.text for t in p.elements],
        "theta": [[int(c) for c in row] for row in theta(n)],
        "tau": [[int(c) for c in row] for row in tau(n)],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
