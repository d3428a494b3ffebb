"""Classification of SO(n)-equivariant principal G-bundles over S^n.

A bundle is determined by its pole isotropy classes (alpha, beta), which must
restrict to the same gamma on SO(n-1), together with a double coset of
pi_0(Z_gamma) modulo the images of pi_0(Z_alpha) and pi_0(Z_beta).  Since
all component groups here are F_2-vector spaces, the double cosets are the
cosets of the sum of the two images.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from . import gf2
from .centralizer import centralizer, image_of, pi0, pi0_inclusion
from .hom_classes import (
    MINUS,
    PLUS,
    HomClass,
    TargetGroup,
    ValidationError,
    delta_action,
    enumerate_hom_classes,
    hom_from_weights,
    restrict,
)
from .lie_kernel import Irrep

__all__ = [
    "BundleClass",
    "bundle_from_pair",
    "fiber_of_J",
    "enumerate_bundles",
    "compatible_pairs",
    "liftable_coset",
    "lifts_to_higher_action",
    "equivariant_structures_on",
    "double_coset_representatives",
]


def _coset_basis(alpha: HomClass, beta: HomClass, gamma: HomClass) -> list[gf2.Vector]:
    n = pi0(gamma).ambient_rank
    return gf2.rref(image_of(alpha, gamma) + image_of(beta, gamma), n)


def double_coset_representatives(alpha: HomClass, beta: HomClass) -> list[gf2.Vector]:
    """Canonical representatives of pi_0(Z_alpha) \\ pi_0(Z_gamma) / pi_0(Z_beta)."""
    gamma = _common_restriction(alpha, beta)
    basis = _coset_basis(alpha, beta, gamma)
    reps = {gf2.reduce(v, basis) for v in pi0(gamma).elements()}
    return sorted(reps)


def _common_restriction(alpha: HomClass, beta: HomClass) -> HomClass:
    if alpha.source_n != beta.source_n or alpha.target != beta.target:
        raise ValidationError("alpha and beta must have the same source SO(n) and target group")
    ga, gb = restrict(alpha), restrict(beta)
    if ga != gb:
        raise ValidationError(
            f"restrictions to SO({alpha.source_n - 1}) differ: alpha gives {ga}, beta gives {gb}"
        )
    return ga


@dataclass(frozen=True)
class BundleClass:
    """An element of E(n, G): pole isotropy classes plus a canonical double-coset vector."""

    alpha: HomClass
    beta: HomClass
    coset: tuple[int, ...]
    gamma: HomClass = field(compare=False)

    @property
    def n(self) -> int:
        return self.alpha.source_n

    @property
    def target(self) -> TargetGroup:
        return self.alpha.target

    @property
    def J(self) -> tuple[HomClass, HomClass]:
        return (self.alpha, self.beta)

    def key(self):
        return (self.gamma.key(), self.alpha.key(), self.beta.key(), self.coset)

    def __lt__(self, other: BundleClass) -> bool:
        return self.key() < other.key()

    def swap(self) -> BundleClass:
        """The bundle with the poles exchanged."""
        return bundle_from_pair(self.beta, self.alpha, self.coset)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target.to_json(),
            "gamma": self.gamma.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "coset": list(self.coset),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> BundleClass:
        try:
            alpha = HomClass.from_json(data["alpha"])
            beta = HomClass.from_json(data["beta"])
            coset = tuple(int(x) for x in data.get("coset", ()))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed bundle JSON: {exc}") from None
        return bundle_from_pair(alpha, beta, coset or None)

    def __str__(self) -> str:
        c = "".join(map(str, self.coset)) or "-"
        return f"([{self.alpha}], [{self.beta}]; coset {c})"


def bundle_from_pair(alpha: HomClass, beta: HomClass, coset=None) -> BundleClass:
    """The bundle with isotropy classes alpha, beta and the given pi_0(Z_gamma) datum."""
    gamma = _common_restriction(alpha, beta)
    group = pi0(gamma)
    if coset is None:
        coset = gf2.zero(group.ambient_rank)
    coset = tuple(int(x) for x in coset)
    if not group.contains(coset):
        raise ValidationError(f"{coset} is not an element of pi_0 of the centralizer of {gamma}")
    canon = gf2.reduce(coset, _coset_basis(alpha, beta, gamma))
    return BundleClass(alpha, beta, canon, gamma)


def fiber_of_J(alpha: HomClass, beta: HomClass) -> list[BundleClass]:
    """All bundles with isotropy classes (alpha, beta), one per double coset."""
    gamma = _common_restriction(alpha, beta)
    return [BundleClass(alpha, beta, rep, gamma) for rep in double_coset_representatives(alpha, beta)]


def compatible_pairs(
    n: int, target: TargetGroup, weight_bound: int | None = None
) -> list[tuple[HomClass, HomClass]]:
    """All (alpha, beta) in R(n,G) x R(n,G) with equal restrictions to SO(n-1)."""
    groups: dict[HomClass, list[HomClass]] = defaultdict(list)
    for h in enumerate_hom_classes(n, target, weight_bound):
        groups[restrict(h)].append(h)
    out = []
    for gamma in sorted(groups):
        for a in groups[gamma]:
            for b in groups[gamma]:
                out.append((a, b))
    return out


def enumerate_bundles(n: int, target: TargetGroup, weight_bound: int | None = None) -> list[BundleClass]:
    """E(n, G), in canonical order (for n = 2, with all weights bounded by weight_bound)."""
    if n < 2:
        raise ValidationError("bundles over S^n need n >= 2")
    out = []
    for a, b in compatible_pairs(n, target, weight_bound):
        out.extend(fiber_of_J(a, b))
    return sorted(out)


# -- SO(n+1)-liftability ---------------------------------------------------------------


def _tau(v: Irrep, mu: Irrep, pair: bool) -> int:
    """Parity of the twist that the lifted delta imposes on the mu-copies inside V."""
    n = v.n
    if n % 2:
        # delta is conjugation by -Diag(1,..,1,-1), central -1 on SO(n-1)
        return sum(mu.weight) % 2
    if pair:
        return 1
    if v.weight[-1] != 0:
        return 0
    return (sum(v.weight) - sum(mu.weight)) % 2


def _copies(alpha: HomClass, idx: int, mu: Irrep) -> int:
    """Copies of mu in one unit of the idx-th constituent of alpha restricted to SO(n-1)."""
    c = alpha.constituents[idx]
    total = c.irrep.branch().get(mu, 0)
    if c.pair:
        total += c.irrep.dual().branch().get(mu, 0)
    return total


def liftable_coset(alpha: HomClass) -> tuple[int, ...]:
    """Canonical double-coset vector of the unique SO(n+1)-liftable bundle over (alpha, delta(alpha))."""
    beta = delta_action(alpha)
    gamma = restrict(alpha)
    cg = centralizer(gamma)
    rows = cg.o_blocks
    size = len(rows)
    if size == 0:
        return ()
    flip_index = {}
    for i, c in enumerate(alpha.constituents):
        image = c.irrep.flip()
        if c.pair:
            image = image if image.weight[-1] > 0 else image.dual()
        flip_index[i] = next(j for j, d in enumerate(beta.constituents) if d.irrep == image)
    b = [0] * size
    for row, blk in enumerate(rows):
        mu = gamma.constituents[blk.constituent].irrep
        sizes = {}
        for i, c in enumerate(alpha.constituents):
            copies = _copies(alpha, i, mu)
            if not copies:
                continue
            if c.pair:
                b[row] += c.mult * c.irrep.branch().get(mu, 0) * _tau(c.irrep, mu, True)
            else:
                b[row] += c.mult * copies * _tau(c.irrep, mu, False)
            sizes[i] = c.mult * copies
        # sign of the permutation reordering the mu-copies from alpha's order to beta's
        idx = sorted(sizes)
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, j = idx[x], idx[y]
                if flip_index[i] > flip_index[j]:
                    b[row] += sizes[i] * sizes[j]
        b[row] %= 2
    d = cg.det_constraint
    odd_gamma = None if d is None else next((k for k, x in enumerate(d) if x), None)
    if alpha.so_label is not None and not gamma.splits:
        if (alpha.so_label == MINUS) != (beta.so_label == MINUS):
            assert odd_gamma is not None
            b[odd_gamma] ^= 1
    if d is not None and gf2.dot(d, b):
        ca = centralizer(alpha)
        odd_alpha = next((k for k, x in enumerate(ca.det_constraint) if x), None)
        assert odd_alpha is not None, "an odd-determinant correction needs an odd block of Z_alpha"
        column = [row[odd_alpha] for row in pi0_inclusion(alpha, gamma)]
        b = [(x + y) % 2 for x, y in zip(b, column)]
    assert d is None or gf2.dot(d, b) == 0
    return gf2.reduce(tuple(b), _coset_basis(alpha, beta, gamma))


def lifts_to_higher_action(bundle: BundleClass) -> bool:
    """Whether the SO(n)-action extends to an SO(n+1)-action on the bundle."""
    if bundle.beta != delta_action(bundle.alpha):
        return False
    return bundle.coset == liftable_coset(bundle.alpha)


# -- infinite families over S^2 --------------------------------------------------------


def _so2_class(target: TargetGroup, p: int) -> HomClass:
    """SO(2) -> SO(2) (or the pair block of SO(m)) with signed weight p."""
    if target.size == 2:
        if p == 0:
            return hom_from_weights(2, target, {(0,): 2})
        label = PLUS if p > 0 else MINUS
        return hom_from_weights(2, target, {(abs(p),): 1, (-abs(p),): 1}, label)
    rest = {(0,): target.size - 2} if target.size > 2 else {}
    weights = {(abs(p),): 1, (-abs(p),): 1} if p else {(0,): 2}
    merged = dict(rest)
    for w, k in weights.items():
        merged[w] = merged.get(w, 0) + k
    return hom_from_weights(2, target, merged)


def equivariant_structures_on(target: TargetGroup, value: int, count: int) -> list[BundleClass]:
    """``count`` distinct classes in E(2, G) whose underlying bundle has the given invariant.

    ``value`` is the Chern number for U(m), the clutching integer for SO(2),
    the Stiefel-Whitney number (0 or 1) for SO(m >= 3), and must be 0 for
    SU(m) and Sp(m).  The classes are (alpha_{q+C}, alpha_q) for consecutive q.
    """
    if count < 1:
        raise ValidationError("count must be positive")
    fam, m = target.family, target.size
    if not target.connected:
        raise ValidationError(f"{target} is not connected")

    def u_weights(p: int) -> dict:
        w = {(p,): 1}
        if m > 1:
            w[(0,)] = w.get((0,), 0) + m - 1
        return w

    out = []
    if fam == "U":
        shift = -value  # C = -c
        start = 1 if shift == 0 else -(shift // 2)
        for q in range(start, start + count):
            out.append(bundle_from_pair(hom_from_weights(2, target, u_weights(q + shift)), hom_from_weights(2, target, u_weights(q))))
    elif fam in ("SU", "Sp"):
        if value != 0:
            raise ValidationError(f"the underlying bundle over S^2 is trivial for {target}; only 0 is realizable")
        if fam == "SU" and m < 2:
            raise ValidationError(f"{target} admits only one homomorphism from SO(2)")
        for q in range(1, count + 1):
            if fam == "SU":
                w = {(q,): 1, (-q,): 1}
                if m > 2:
                    w[(0,)] = m - 2
            else:
                w = {(q,): 1, (-q,): 1}
                if m > 1:
                    w[(0,)] = 2 * (m - 1)
            h = hom_from_weights(2, target, w)
            out.append(bundle_from_pair(h, h))
    elif fam == "SO" and m == 2:
        start = 1 if value == 0 else -(value // 2)
        for q in range(start, start + count):
            out.append(bundle_from_pair(_so2_class(target, q + value), _so2_class(target, q)))
    elif fam == "SO":
        if value not in (0, 1):
            raise ValidationError("the Stiefel-Whitney number is 0 or 1")
        for q in range(count):
            lo = q + 1 if value == 0 else q
            out.append(bundle_from_pair(_so2_class(target, lo + value), _so2_class(target, lo)))
    else:
        raise ValidationError(f"unsupported target {target}")
    return out
