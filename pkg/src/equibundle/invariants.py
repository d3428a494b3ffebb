"""Clutching invariants of the underlying non-equivariant bundles.

Only the cases with an explicit formula are supported; everything else
returns an ``unsupported`` value rather than a guess.

Over S^2 the clutching class is read off the isotropy weights.  Over S^4 the
fibers of J are single points for G = SO(3), SO(4), and the class is a
difference f(alpha) - f(beta) of a potential defined on R(4, G).  The
potential values are normalised so that the trivial homomorphism and the
identity of SO(4) have potential zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .classify import BundleClass
from .hom_classes import MINUS, HomClass

__all__ = [
    "InvariantValue",
    "clutching_class",
    "chern_number",
    "stiefel_whitney",
    "pontrjagin_euler",
    "PE_MATRIX",
]

INTEGER = "integer"
MOD2 = "integer_mod_2"
PAIR = "integer_pair"
NATURAL = "natural"
UNSUPPORTED = "unsupported"

# (p, e) = PE_MATRIX . C for SO(4)-bundles over S^4
PE_MATRIX = ((2, 2), (1, -1))


@dataclass(frozen=True)
class InvariantValue:
    kind: str
    value: Any = None

    @property
    def supported(self) -> bool:
        return self.kind != UNSUPPORTED

    def to_json(self) -> dict:
        v = list(self.value) if isinstance(self.value, tuple) else self.value
        return {"kind": self.kind, "value": v}


_NOT = InvariantValue(UNSUPPORTED)


def _weight_sum(h: HomClass) -> int:
    return sum(k * v.weight[0] for v, k in h.complex_counts().items())


def _pair_weight_sum(h: HomClass) -> int:
    """Sum of the positive weights of the 2-planes of an orthogonal SO(2)-representation."""
    return sum(c.mult * c.irrep.weight[0] for c in h.constituents if c.pair)


def _signed_weight(h: HomClass) -> int:
    s = _pair_weight_sum(h)
    return -s if h.so_label == MINUS else s


def _s4_key(h: HomClass) -> tuple:
    nontrivial = tuple(c.irrep.weight for c in h.constituents if not c.irrep.is_trivial)
    return nontrivial, h.so_label


# potential on R(4, SO(3)); (1,1) and (1,-1) are the two 3-dimensional irreps
_POTENTIAL_SO3 = {((), None): 0, (((1, 1),), None): 1, (((1, -1),), None): 0}
# potential on R(4, SO(4)); the 1 + 3 splittings and the two orientations of the vector rep
_POTENTIAL_SO4 = {
    ((), None): (0, 0),
    (((1, 1),), None): (0, 1),
    (((1, -1),), None): (-1, 0),
    (((1, 0),), "plus"): (0, 0),
    (((1, 0),), "minus"): (-1, 1),
}


def clutching_class(b: BundleClass) -> InvariantValue:
    """The class C of the underlying bundle, for the supported (n, G)."""
    n, fam, m = b.n, b.target.family, b.target.size
    a, c = b.alpha, b.beta
    if n == 2:
        if fam in ("U", "SU"):
            return InvariantValue(INTEGER, _weight_sum(a) - _weight_sum(c))
        if fam == "SO" and m == 2:
            return InvariantValue(INTEGER, _signed_weight(a) - _signed_weight(c))
        if fam == "SO":
            return InvariantValue(MOD2, (_pair_weight_sum(a) - _pair_weight_sum(c)) % 2)
        if fam == "O" and m == 2:
            p, q = _pair_weight_sum(a), _pair_weight_sum(c)
            twisted = any(b.coset)
            return InvariantValue(NATURAL, abs(p + q) if twisted else abs(p - q))
        return _NOT
    if n == 4 and fam == "SO" and m == 3:
        return InvariantValue(INTEGER, _POTENTIAL_SO3[_s4_key(a)] - _POTENTIAL_SO3[_s4_key(c)])
    if n == 4 and fam == "SO" and m == 4:
        fa, fc = _POTENTIAL_SO4[_s4_key(a)], _POTENTIAL_SO4[_s4_key(c)]
        return InvariantValue(PAIR, (fa[0] - fc[0], fa[1] - fc[1]))
    return _NOT


def chern_number(b: BundleClass) -> InvariantValue:
    """First Chern number over S^2 (U and SU targets): c = -C."""
    if b.n != 2 or b.target.family not in ("U", "SU"):
        return _NOT
    return InvariantValue(INTEGER, -clutching_class(b).value)


def stiefel_whitney(b: BundleClass) -> InvariantValue:
    """Second Stiefel-Whitney number over S^2 for SO(m)."""
    if b.n != 2 or b.target.family != "SO":
        return _NOT
    c = clutching_class(b)
    return InvariantValue(MOD2, c.value % 2)


def _euler_catalog(b: BundleClass) -> InvariantValue:
    # G = SO(2k), k >= 3: only the trivial class and the vector rep (two orientations) exist.
    a, c = b.alpha, b.beta
    if a == c:
        return InvariantValue(INTEGER, 0)
    return InvariantValue(INTEGER, 2 if a.so_label != MINUS else -2)


def pontrjagin_euler(b: BundleClass) -> InvariantValue:
    """p for SO(3) and (p, e) for SO(4) over S^4; the Euler number for SO(2k) over S^{2k}, k >= 3."""
    fam, m = b.target.family, b.target.size
    if b.n == 4 and fam == "SO" and m == 3:
        return InvariantValue(INTEGER, 4 * clutching_class(b).value)
    if b.n == 4 and fam == "SO" and m == 4:
        c = clutching_class(b).value
        return InvariantValue(PAIR, tuple(r[0] * c[0] + r[1] * c[1] for r in PE_MATRIX))
    if b.n == m and m % 2 == 0 and m >= 6 and fam == "SO":
        return _euler_catalog(b)
    return _NOT
