"""Conjugacy classes of homomorphisms SO(n) -> G for the classical compact groups.

A class is stored as a multiset of irreducible constituents in the form that
matches the target's ground field:

* ``U``/``SU``: every complex irrep separately with its complex multiplicity.
* ``O``/``SO``: real-type irreps with their multiplicity; a complex-type irrep
  and its dual form one real irreducible, stored once under the canonical
  member of the pair (``pair=True``).
* ``Sp``: real-type irreps with their symplectic multiplicity (half the
  complex one); complex pairs as for ``O``; quaternionic irreps with their
  complex multiplicity.

For ``SO`` targets an O-class splits into two SO-classes exactly when its
centralizer in O has no element of determinant -1; the two halves carry the
labels ``"plus"`` and ``"minus"``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from .lie_kernel import COMPLEX, QUATERNIONIC, REAL, Irrep, LieType, irreps_up_to_dim

__all__ = [
    "FAMILIES",
    "PLUS",
    "MINUS",
    "TargetGroup",
    "Constituent",
    "HomClass",
    "ValidationError",
    "enumerate_hom_classes",
    "restrict",
    "delta_action",
    "so_splitting",
    "hom_from_weights",
    "identity_class",
    "trivial_class",
]

FAMILIES = ("U", "SU", "SO", "O", "Sp")
PLUS = "plus"
MINUS = "minus"


class ValidationError(ValueError):
    """Invalid user-supplied data (bad group descriptor, weights or dimensions)."""


@dataclass(frozen=True, order=True)
class TargetGroup:
    family: str
    size: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown group family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.size, int) or self.size < 1:
            raise ValidationError(f"group size must be a positive integer, got {self.size!r}")

    @classmethod
    def parse(cls, text: str) -> TargetGroup:
        """Parse a ``FAMILY:SIZE`` descriptor such as ``SO:4``."""
        family, sep, size = text.partition(":")
        if not sep or not size.strip().isdigit():
            raise ValidationError(f"group descriptor {text!r} is not of the form FAMILY:SIZE")
        return cls(family.strip(), int(size))

    @property
    def connected(self) -> bool:
        return self.family != "O"

    @property
    def orthogonal(self) -> bool:
        return self.family in ("O", "SO")

    def __str__(self) -> str:
        return f"{self.family}({self.size})"

    def to_json(self) -> dict:
        return {"family": self.family, "size": self.size}


@dataclass(frozen=True)
class Constituent:
    """An isotypic block: irrep, multiplicity over the target's ground field, pair flag."""

    irrep: Irrep
    mult: int
    pair: bool = False

    def unit_size(self, family: str) -> int:
        """Dimension (over the target's ground field) consumed by one copy."""
        d = self.irrep.dim_c
        if family in ("U", "SU"):
            return d
        if family in ("O", "SO"):
            if self.irrep.fs_type == QUATERNIONIC:
                raise NotImplementedError("quaternionic constituents in orthogonal targets")
            return 2 * d if self.pair else d
        # Sp
        if self.irrep.fs_type == QUATERNIONIC:
            return d // 2
        return d

    def complex_counts(self, family: str) -> dict[Irrep, int]:
        """Complex multiplicities of the irreps making up this block."""
        if self.pair:
            return {self.irrep: self.mult, self.irrep.dual(): self.mult}
        if family == "Sp" and self.irrep.fs_type == REAL:
            return {self.irrep: 2 * self.mult}
        return {self.irrep: self.mult}

    @property
    def real_type(self) -> bool:
        return not self.pair and self.irrep.fs_type == REAL

    def key(self):
        return (self.irrep.sort_key(), self.mult, self.pair)

    def to_json(self) -> dict:
        return {
            "type": self.irrep.fs_type,
            "weight": list(self.irrep.weight),
            "mult": self.mult,
            "pair_flag": self.pair,
        }


def _pair_canonical(irrep: Irrep) -> Irrep:
    """Representative of {V, V*} for a complex-type irrep: last coordinate positive."""
    if irrep.fs_type != COMPLEX:
        return irrep
    return irrep if irrep.weight[-1] > 0 else irrep.dual()


def _encode(n: int, family: str, counts: Mapping[Irrep, int]) -> tuple[Constituent, ...]:
    """Constituents for ``family`` from a complex multiplicity table."""
    counts = {v: k for v, k in counts.items() if k}
    out = []
    for v, k in counts.items():
        if family in ("U", "SU"):
            out.append(Constituent(v, k))
            continue
        fs = v.fs_type
        if fs == COMPLEX:
            if counts.get(v.dual(), 0) != k:
                raise ValidationError(f"{v} and its dual occur with different multiplicities")
            if _pair_canonical(v) == v:
                out.append(Constituent(v, k, pair=True))
        elif fs == QUATERNIONIC:
            if family != "Sp":
                raise NotImplementedError("quaternionic constituents in orthogonal targets")
            out.append(Constituent(v, k))
        elif family == "Sp":
            if k % 2:
                raise ValidationError(f"real irrep {v} must occur with even multiplicity in Sp")
            out.append(Constituent(v, k // 2))
        else:
            out.append(Constituent(v, k))
    return tuple(sorted(out, key=Constituent.key))


@dataclass(frozen=True)
class HomClass:
    """Conjugacy class of a homomorphism SO(source_n) -> target."""

    source_n: int
    target: TargetGroup
    constituents: tuple[Constituent, ...]
    so_label: str | None = None

    def __post_init__(self):
        cons = tuple(sorted(self.constituents, key=Constituent.key))
        object.__setattr__(self, "constituents", cons)
        fam = self.target.family
        seen = set()
        for c in cons:
            if c.irrep.n != self.source_n:
                raise ValidationError(f"constituent {c.irrep} is not a representation of SO({self.source_n})")
            if c.mult < 1:
                raise ValidationError("multiplicities must be positive")
            if c.irrep in seen:
                raise ValidationError(f"irrep {c.irrep} listed twice")
            seen.add(c.irrep)
            if c.pair != (fam not in ("U", "SU") and c.irrep.fs_type == COMPLEX):
                raise ValidationError(f"pair flag of {c.irrep} inconsistent with its type in {self.target}")
            if c.pair and _pair_canonical(c.irrep) != c.irrep:
                raise ValidationError(f"pair {c.irrep} must be stored under its canonical member")
        total = sum(c.mult * c.unit_size(fam) for c in cons)
        if total != self.target.size:
            raise ValidationError(f"constituents have total dimension {total}, not {self.target.size}")
        if fam == "SU" and self.source_n == 2:
            if sum(k * v.weight[0] for v, k in self.complex_counts().items()) != 0:
                raise ValidationError("determinant of an SU-valued homomorphism must be trivial")
        if fam == "SO" and _splits(cons):
            if self.so_label not in (PLUS, MINUS):
                raise ValidationError("this SO-class splits; a label 'plus' or 'minus' is required")
        elif self.so_label is not None:
            raise ValidationError("an so_label is only allowed for split SO-classes")

    # -- accessors -----------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.source_n

    def complex_counts(self) -> dict[Irrep, int]:
        out: Counter = Counter()
        for c in self.constituents:
            out.update(c.complex_counts(self.target.family))
        return dict(out)

    @property
    def is_trivial(self) -> bool:
        return all(c.irrep.is_trivial for c in self.constituents)

    @property
    def splits(self) -> bool:
        return self.target.family == "SO" and _splits(self.constituents)

    def key(self):
        return (
            tuple(c.key() for c in self.constituents),
            {None: 0, PLUS: 1, MINUS: 2}[self.so_label],
        )

    def __lt__(self, other: HomClass) -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        parts = []
        for c in self.constituents:
            s = str(c.irrep)
            if c.pair:
                s += "+dual"
            parts.append(s if c.mult == 1 else f"{c.mult}{s}")
        body = " + ".join(parts)
        label = f" [{self.so_label}]" if self.so_label else ""
        return f"SO({self.source_n})->{self.target}: {body}{label}"

    # -- operations ----------------------------------------------------------------

    def restrict(self) -> HomClass:
        return restrict(self)

    def delta(self) -> HomClass:
        return delta_action(self)

    def to_json(self) -> dict:
        return {
            "source_n": self.source_n,
            "target": self.target.to_json(),
            "constituents": [c.to_json() for c in self.constituents],
            "so_label": self.so_label,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> HomClass:
        try:
            n = int(data["source_n"])
            target = TargetGroup(data["target"]["family"], int(data["target"]["size"]))
            cons = tuple(
                Constituent(Irrep(n, tuple(c["weight"])), int(c["mult"]), bool(c.get("pair_flag", False)))
                for c in data["constituents"]
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed homomorphism class JSON: {exc}") from None
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        return cls(n, target, cons, data.get("so_label"))


def _splits(cons: Iterable[Constituent]) -> bool:
    # Reflections in an O(k)-block of a real irrep V have determinant (-1)^dim V.
    return all(c.irrep.dim_c % 2 == 0 for c in cons if c.real_type)


def _build(n: int, target: TargetGroup, counts: Mapping[Irrep, int], label: str | None) -> list[HomClass]:
    cons = _encode(n, target.family, counts)
    if target.family == "SO" and _splits(cons):
        if label is None:
            return [HomClass(n, target, cons, PLUS), HomClass(n, target, cons, MINUS)]
        return [HomClass(n, target, cons, label)]
    return [HomClass(n, target, cons, None)]


def hom_from_weights(
    n: int, target: TargetGroup, weights: Mapping[tuple[int, ...], int] | Iterable, label: str | None = None
) -> HomClass:
    """Build a class from complex highest weights and complex multiplicities.

    ``weights`` is a mapping ``weight -> complex multiplicity`` or an iterable of
    weights (each occurrence counting once).  For orthogonal and symplectic
    targets both members of a complex pair must be listed.  ``label`` defaults
    to ``plus`` for split SO-classes.
    """
    if not isinstance(weights, Mapping):
        weights = Counter(tuple(w) if isinstance(w, (tuple, list)) else (w,) for w in weights)
    counts: Counter = Counter()
    for w, k in weights.items():
        w = tuple(w) if isinstance(w, (tuple, list)) else (w,)
        counts[Irrep(n, w)] += k
    cons = _encode(n, target.family, counts)
    if target.family == "SO" and _splits(cons):
        label = label or PLUS
    else:
        label = None
    return HomClass(n, target, cons, label)


def trivial_class(n: int, target: TargetGroup) -> HomClass:
    """The constant homomorphism."""
    triv = Irrep.trivial(n)
    mult = target.size
    return HomClass(n, target, (Constituent(triv, mult),), None)


def identity_class(n: int, family: str = "SO") -> HomClass:
    """The defining representation SO(n) -> SO(n) (or O(n), U(n)), labelled ``plus`` when split."""
    target = TargetGroup(family, n)
    if n == 1:
        return trivial_class(1, target)
    lt = LieType.of_so(n)
    if n == 2:
        return hom_from_weights(2, target, {(1,): 1, (-1,): 1})
    vec = (1,) + (0,) * (lt.rank - 1)
    return hom_from_weights(n, target, {vec: 1})


# -- enumeration -------------------------------------------------------------------


def _units(n: int, target: TargetGroup, weight_bound: int | None) -> list[tuple[Irrep, int]]:
    """Irreducible building blocks (stored irrep, unit size) fitting into the target."""
    fam, m = target.family, target.size
    if n == 1:
        cands = [Irrep.trivial(1)]
    elif n == 2:
        if fam in ("U", "SU"):
            cands = [Irrep(2, (p,)) for p in range(-weight_bound, weight_bound + 1)]
        else:
            cands = [Irrep(2, (p,)) for p in range(0, weight_bound + 1)]
    else:
        # the largest complex dimension any unit can have
        bound = {"U": m, "SU": m, "SO": m, "O": m, "Sp": 2 * m}[fam]
        cands = list(irreps_up_to_dim(n, bound))
        if fam not in ("U", "SU"):
            cands = [v for v in cands if _pair_canonical(v) == v]
    units = []
    for v in cands:
        pair = fam not in ("U", "SU") and v.fs_type == COMPLEX
        size = Constituent(v, 1, pair).unit_size(fam)
        if 0 < size <= m:
            units.append((v, size))
    return sorted(units, key=lambda u: u[0].sort_key())


def _compositions(units: list[tuple[Irrep, int]], total: int) -> Iterator[dict[Irrep, int]]:
    """Multiplicity assignments with sum(mult * size) == total."""

    def rec(i: int, remaining: int, acc: dict[Irrep, int]):
        if remaining == 0:
            yield dict(acc)
            return
        if i == len(units):
            return
        v, size = units[i]
        for k in range(remaining // size, -1, -1):
            if k:
                acc[v] = k
            yield from rec(i + 1, remaining - k * size, acc)
            acc.pop(v, None)

    yield from rec(0, total, {})


def enumerate_hom_classes(n: int, target: TargetGroup, weight_bound: int | None = None) -> list[HomClass]:
    """All classes in R(n, target), in canonical order.

    For n = 2 the set is infinite and ``weight_bound`` bounds every |weight|.
    """
    if n < 1:
        raise ValidationError("n must be at least 1")
    if n == 2 and (weight_bound is None or weight_bound < 0):
        raise ValidationError("n = 2 requires a non-negative weight bound (R(2,G) is infinite)")
    fam = target.family
    if n == 2 and fam in ("U", "SU"):
        weights = list(range(-weight_bound, weight_bound + 1))
        out = []
        for combo in combinations_with_replacement(weights, target.size):
            if fam == "SU" and sum(combo) != 0:
                continue
            out.append(hom_from_weights(2, target, combo))
        return sorted(out)
    units = _units(n, target, weight_bound)
    sizes = dict(units)
    out = []
    for assignment in _compositions(units, target.size):
        cons = tuple(
            Constituent(v, k, fam not in ("U", "SU") and v.fs_type == COMPLEX) for v, k in assignment.items()
        )
        assert sum(c.mult * sizes[c.irrep] for c in cons) == target.size
        if fam == "SO" and _splits(cons):
            out += [HomClass(n, target, cons, PLUS), HomClass(n, target, cons, MINUS)]
        else:
            out.append(HomClass(n, target, cons, None))
    return sorted(out)


# -- restriction, delta, splitting ----------------------------------------------------


def restrict(h: HomClass) -> HomClass:
    """The class of h restricted to SO(n-1) (the standard embedding)."""
    if h.source_n < 2:
        raise ValidationError("cannot restrict a homomorphism from SO(1)")
    counts: Counter = Counter()
    for v, k in h.complex_counts().items():
        for mu, b in v.branch().items():
            counts[mu] += k * b
    cons = _encode(h.source_n - 1, h.target.family, counts)
    label = None
    if h.target.family == "SO" and _splits(cons):
        # Labels of split classes are normalised so that they pass through restriction.
        assert h.so_label is not None, "a split restriction forces a split class"
        label = h.so_label
    return HomClass(h.source_n - 1, h.target, cons, label)


def epsilon(v: Irrep) -> int:
    """Parity of the determinant of Diag(1,...,1,-1) on a delta-fixed real irrep.

    Extends V to O(n) by the rule that the SO(n-1)-summand mu occurs with
    O(1)-sign (-1)^(|lambda| - |mu|).
    """
    if v.n <= 2:
        return 0
    size = sum(v.weight)
    return sum(mu.dim_c * b for mu, b in v.branch().items() if (size - sum(mu.weight)) % 2) % 2


def delta_parity(h: HomClass) -> int:
    """Parity deciding whether conjugation by Diag(1,...,1,-1) swaps the SO-labels of h."""
    total = 0
    for c in h.constituents:
        if c.pair:
            total += c.mult * c.irrep.dim_c
        elif c.irrep.fs_type == REAL and c.irrep.flip() == c.irrep:
            total += c.mult * epsilon(c.irrep)
    return total % 2


def delta_action(h: HomClass) -> HomClass:
    """The class of h composed with conjugation by Diag(1,...,1,-1) in SO(n)."""
    if h.source_n == 1 or h.source_n % 2:
        return h
    counts = {v.flip(): k for v, k in h.complex_counts().items()}
    cons = _encode(h.source_n, h.target.family, counts)
    label = h.so_label
    if label is not None and not restrict(h).splits and delta_parity(h):
        label = MINUS if label == PLUS else PLUS
    return HomClass(h.source_n, h.target, cons, label)


def so_splitting(h: HomClass) -> list[HomClass]:
    """The SO-classes inside the O-class of h (one or two)."""
    if h.target.family != "SO":
        raise ValidationError("SO-splitting only applies to SO targets")
    if not h.splits:
        return [h]
    return [HomClass(h.source_n, h.target, h.constituents, PLUS), HomClass(h.source_n, h.target, h.constituents, MINUS)]
