"""Weight combinatorics for the compact groups SO(k).

SO(1) is the trivial group, SO(2) the circle, SO(2r+1) has type B(r) and
SO(2r) (r >= 2) has type D(r).  Weights are integer vectors in the standard
epsilon coordinates; only integer (non-spin) weights occur.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

__all__ = [
    "LieType",
    "Irrep",
    "InvalidWeight",
    "weyl_dimension",
    "frobenius_schur",
    "branch",
    "delta_flip",
    "canonical_weight",
    "is_dominant",
    "dominant_weights",
    "irreps_up_to_dim",
    "REAL",
    "COMPLEX",
    "QUATERNIONIC",
]

REAL = "real"
COMPLEX = "complex"
QUATERNIONIC = "quaternionic"


class InvalidWeight(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    """Lie type of so(n).  ``kind`` is one of ``"trivial"``, ``"torus"``, ``"B"``, ``"D"``."""

    kind: str
    rank: int

    @classmethod
    def of_so(cls, n: int) -> LieType:
        if n < 1:
            raise ValueError(f"SO({n}) is not defined")
        if n == 1:
            return cls("trivial", 0)
        if n == 2:
            return cls("torus", 1)
        if n % 2:
            return cls("B", (n - 1) // 2)
        return cls("D", n // 2)

    @property
    def n(self) -> int:
        return {"trivial": 1, "torus": 2, "B": 2 * self.rank + 1, "D": 2 * self.rank}[self.kind]

    def __str__(self) -> str:
        if self.kind in ("trivial", "torus"):
            return f"so({self.n})"
        return f"{self.kind}{self.rank}"


def is_dominant(lt: LieType, weight: tuple[int, ...]) -> bool:
    if len(weight) != lt.rank or not all(isinstance(c, int) for c in weight):
        return False
    if lt.kind in ("trivial", "torus"):
        return True
    c = weight
    if any(c[i] < c[i + 1] for i in range(lt.rank - 2)):
        return False
    if lt.kind == "B":
        return (lt.rank == 1 or c[-2] >= c[-1]) and c[-1] >= 0
    return c[-2] >= abs(c[-1])


def _check(lt: LieType, weight: tuple[int, ...]) -> tuple[int, ...]:
    weight = tuple(int(c) for c in weight)
    if not is_dominant(lt, weight):
        raise InvalidWeight(f"{weight} is not a dominant integral weight for {lt}")
    return weight


def canonical_weight(lt: LieType, weight) -> tuple[int, ...]:
    """Dominant representative of the Weyl orbit of ``weight``."""
    weight = tuple(int(c) for c in weight)
    if len(weight) != lt.rank:
        raise InvalidWeight(f"{weight} has wrong length for {lt}")
    if lt.kind in ("trivial", "torus"):
        return weight
    mags = sorted((abs(c) for c in weight), reverse=True)
    if lt.kind == "D":
        negatives = sum(1 for c in weight if c < 0)
        if negatives % 2 and mags[-1] != 0:
            mags[-1] = -mags[-1]
    return tuple(mags)


def _rho(lt: LieType) -> list[Fraction]:
    r = lt.rank
    if lt.kind == "B":
        return [Fraction(2 * (r - i) - 1, 2) for i in range(r)]
    return [Fraction(r - 1 - i) for i in range(r)]


@lru_cache(maxsize=None)
def _weyl_dimension(lt: LieType, weight: tuple[int, ...]) -> int:
    if lt.kind in ("trivial", "torus"):
        return 1
    rho = _rho(lt)
    lam = [c + p for c, p in zip(weight, rho)]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(lt.rank):
        for j in range(i + 1, lt.rank):
            num *= lam[i] ** 2 - lam[j] ** 2
            den *= rho[i] ** 2 - rho[j] ** 2
        if lt.kind == "B":
            num *= lam[i]
            den *= rho[i]
    value = num / den
    assert value.denominator == 1 and value > 0
    return int(value)


def weyl_dimension(lt: LieType, weight) -> int:
    """Complex dimension of the irreducible representation with highest weight ``weight``."""
    return _weyl_dimension(lt, _check(lt, tuple(weight)))


def _dual_weight(lt: LieType, weight: tuple[int, ...]) -> tuple[int, ...]:
    # -w0 acts trivially except for D(r) with r odd (flip the last sign) and the torus.
    if lt.kind == "torus":
        return (-weight[0],)
    if lt.kind == "D" and lt.rank % 2:
        return weight[:-1] + (-weight[-1],)
    return weight


def _two_rho_check(lt: LieType) -> list[int]:
    # Coefficients of the sum of positive coroots in the epsilon basis.
    r = lt.rank
    if lt.kind == "B":
        return [2 * (r - 1 - i) + 2 for i in range(r)]
    if lt.kind == "D":
        return [2 * (r - 1 - i) for i in range(r)]
    return [0] * r


@lru_cache(maxsize=None)
def _symbolic_fs(lt: LieType, weight: tuple[int, ...]) -> str:
    if _dual_weight(lt, weight) != weight:
        return COMPLEX
    pairing = sum(c * k for c, k in zip(weight, _two_rho_check(lt)))
    return REAL if pairing % 2 == 0 else QUATERNIONIC


# Irreps up to this dimension have their Frobenius-Schur type confirmed by the
# character oracle the first time they are classified.
FS_ORACLE_DIM_BOUND = 64
FS_ORACLE_MAX_RANK = 3


@lru_cache(maxsize=None)
def _frobenius_schur(lt: LieType, weight: tuple[int, ...]) -> str:
    fs = _symbolic_fs(lt, weight)
    if (
        lt.kind != "trivial"
        and lt.rank <= FS_ORACLE_MAX_RANK
        and _weyl_dimension(lt, weight) <= FS_ORACLE_DIM_BOUND
    ):
        from .characters import oracle_fs_indicator

        expected = {1: REAL, 0: COMPLEX, -1: QUATERNIONIC}[oracle_fs_indicator(lt, weight)]
        if expected != fs:
            raise AssertionError(
                f"Frobenius-Schur mismatch for {lt}{weight}: parity rule {fs}, oracle {expected}"
            )
    return fs


def frobenius_schur(lt: LieType, weight) -> str:
    """Return ``"real"``, ``"complex"`` or ``"quaternionic"``."""
    return _frobenius_schur(lt, _check(lt, tuple(weight)))


def delta_flip(lt: LieType, weight) -> tuple[int, ...]:
    """Effect on highest weights of conjugation by Diag(1, ..., 1, -1)."""
    weight = _check(lt, tuple(weight))
    if lt.kind == "torus":
        return (-weight[0],)
    if lt.kind == "D":
        return weight[:-1] + (-weight[-1],)
    return weight


def _interlacing(upper: tuple[int, ...], lengths: int, last_abs: bool) -> Iterator[tuple[int, ...]]:
    """Sequences mu with upper[0] >= mu[0] >= upper[1] >= mu[1] >= ... (length ``lengths``)."""
    ranges = []
    for i in range(lengths):
        hi = upper[i]
        lo = upper[i + 1] if i + 1 < len(upper) else 0
        if last_abs and i == lengths - 1:
            # B(r) -> D(r): the last D coordinate ranges over [-c_r, c_r]
            ranges.append(range(-upper[i], upper[i] + 1))
        else:
            ranges.append(range(abs(lo), hi + 1))
    yield from product(*ranges)


@lru_cache(maxsize=None)
def _branch(lt: LieType, weight: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if lt.kind == "torus":
        return (((), 1),)
    if lt.kind == "B":
        # SO(2r+1) -> SO(2r): c1 >= m1 >= c2 >= ... >= c_r >= |m_r|
        r = lt.rank
        out = []
        for mu in _interlacing(weight, r, last_abs=True):
            out.append((tuple(mu), 1))
        return tuple(sorted(out))
    # SO(2r) -> SO(2r-1): c1 >= m1 >= c2 >= ... >= m_{r-1} >= |c_r|
    r = lt.rank
    ranges = [range(abs(weight[i + 1]), weight[i] + 1) for i in range(r - 1)]
    return tuple(sorted((tuple(mu), 1) for mu in product(*ranges)))


def branch(lt: LieType, weight) -> dict[tuple[int, ...], int]:
    """Restriction SO(n) -> SO(n-1) as {weight of SO(n-1): multiplicity}."""
    if lt.kind == "trivial":
        raise ValueError("SO(1) has no proper subgroup SO(0)")
    if lt.kind == "torus":
        raise ValueError("restriction SO(2) -> SO(1) is handled by hom_classes")
    return dict(_branch(lt, _check(lt, tuple(weight))))


def dominant_weights(lt: LieType, max_first: int) -> Iterator[tuple[int, ...]]:
    """All dominant weights whose first coordinate is at most ``max_first`` (torus: |p| <= max_first)."""
    if lt.kind == "trivial":
        yield ()
        return
    if lt.kind == "torus":
        for p in range(-max_first, max_first + 1):
            yield (p,)
        return
    r = lt.rank

    def rec(prefix: tuple[int, ...], bound: int):
        if len(prefix) == r:
            yield prefix
            return
        if lt.kind == "D" and len(prefix) == r - 1:
            for c in range(-bound, bound + 1):
                yield prefix + (c,)
            return
        for c in range(bound + 1):
            yield from rec(prefix + (c,), c)

    for w in rec((), max_first):
        yield w


@dataclass(frozen=True)
class Irrep:
    """Irreducible complex representation of SO(n) with a dominant integral highest weight."""

    n: int
    weight: tuple[int, ...]
    lie_type: LieType = field(init=False, compare=False, repr=False)
    dim_c: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        lt = LieType.of_so(self.n)
        w = _check(lt, tuple(self.weight))
        object.__setattr__(self, "weight", w)
        object.__setattr__(self, "lie_type", lt)
        object.__setattr__(self, "dim_c", _weyl_dimension(lt, w))

    @classmethod
    def trivial(cls, n: int) -> Irrep:
        return cls(n, (0,) * LieType.of_so(n).rank)

    @property
    def fs_type(self) -> str:
        if self.lie_type.kind == "trivial":
            return REAL
        return _frobenius_schur(self.lie_type, self.weight)

    @property
    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.weight)

    def dual(self) -> Irrep:
        if self.lie_type.kind == "trivial":
            return self
        return Irrep(self.n, _dual_weight(self.lie_type, self.weight))

    def flip(self) -> Irrep:
        if self.lie_type.kind == "trivial":
            return self
        return Irrep(self.n, delta_flip(self.lie_type, self.weight))

    def branch(self) -> dict[Irrep, int]:
        if self.n == 2:
            return {Irrep.trivial(1): 1}
        return {Irrep(self.n - 1, mu): k for mu, k in _branch(self.lie_type, self.weight)}

    def sort_key(self):
        return (self.dim_c, self.weight)

    def __lt__(self, other: Irrep) -> bool:
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def __str__(self) -> str:
        if self.lie_type.kind == "trivial":
            return "1"
        if self.lie_type.kind == "torus":
            return f"z^{self.weight[0]}"
        return "(" + ",".join(str(c) for c in self.weight) + ")"


def _monoid_generators(lt: LieType) -> list[tuple[int, ...]]:
    # e1 + ... + ek generate the integral dominant cone, plus (1,...,1,-1) in type D.
    r = lt.rank
    gens = [tuple(1 if i < k else 0 for i in range(r)) for k in range(1, r + 1)]
    if lt.kind == "D":
        gens.append((1,) * (r - 1) + (-1,))
    return gens


@lru_cache(maxsize=None)
def irreps_up_to_dim(n: int, max_dim: int) -> tuple[Irrep, ...]:
    """Irreps of SO(n), n >= 3, of complex dimension at most ``max_dim`` in canonical order."""
    if n < 3:
        raise ValueError("SO(1) and SO(2) have infinitely many or trivially few irreps; use weights")
    lt = LieType.of_so(n)
    gens = _monoid_generators(lt)
    # dim V(lam + mu) >= dim V(lam) for dominant mu, so the search can prune.
    seen = {(0,) * lt.rank}
    frontier = [(0,) * lt.rank]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = tuple(a + b for a, b in zip(w, g))
                if cand in seen or not is_dominant(lt, cand):
                    continue
                if _weyl_dimension(lt, cand) <= max_dim:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    if max_dim < 1:
        return ()
    return tuple(sorted((Irrep(n, w) for w in seen), key=Irrep.sort_key))
