"""Component-group calculus for cohomogeneity-one manifolds over an interval.

Special manifolds with a given isotropy group system are classified by the
double cosets pi_0(Omega_-) \\ pi_0(Gamma) / pi_0(Omega_+), and equivariant
bundles with fixed isotropy representations by pi_0(Z_-) \\ pi_0(Z_rho) /
pi_0(Z_+).  This module works with those finite groups abstractly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .hom_classes import TargetGroup, ValidationError

__all__ = [
    "FiniteGroup",
    "GroupHom",
    "DoubleCoset",
    "IsotropySystem",
    "BundleSystem",
    "ActionData",
    "Classification",
    "double_cosets",
    "special_manifolds",
    "bundle_fiber",
    "aut_quotient",
    "builtin_example",
    "load_system",
    "classify_system",
    "load_example_file",
    "example_path",
    "ex1",
    "ex2",
    "ex3",
    "odd_pairs",
    "DEFAULT_ORDER_BOUND",
]

DEFAULT_ORDER_BOUND = 10_000


# -- finite groups ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table on element indices 0..order-1."""

    labels: tuple
    table: tuple[tuple[int, ...], ...]
    identity: int
    _index: dict = field(repr=False, compare=False, default=None)
    _inverse: tuple = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ValidationError("a group needs at least one element")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValidationError("multiplication table must be square of size |labels|")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise ValidationError("every row of a group table is a permutation of the elements")
        for col in range(n):
            if sorted(self.table[r][col] for r in range(n)) != list(range(n)):
                raise ValidationError("every column of a group table is a permutation of the elements")
        e = self.identity
        if any(self.table[e][x] != x or self.table[x][e] != x for x in range(n)):
            raise ValidationError(f"element {self.labels[e]!r} is not an identity")
        inverse = []
        for x in range(n):
            inverse.append(self.table[x].index(e))
        object.__setattr__(self, "_inverse", tuple(inverse))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        if len(self._index) != n:
            raise ValidationError("element labels must be distinct")
        self._check_associative()

    def _check_associative(self):
        # Light's test: it suffices to check (x g) y = x (g y) for g in a generating set.
        for g in self.generating_set():
            for x in range(self.order):
                xg = self.table[x][g]
                for y in range(self.order):
                    if self.table[xg][y] != self.table[x][self.table[g][y]]:
                        raise ValidationError("multiplication table is not associative")

    # construction ---------------------------------------------------------------

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], labels: Sequence | None = None) -> FiniteGroup:
        n = len(table)
        if n > DEFAULT_ORDER_BOUND:
            raise ValidationError(f"group order {n} exceeds the bound {DEFAULT_ORDER_BOUND}")
        labels = tuple(labels) if labels is not None else tuple(range(n))
        table = tuple(tuple(int(x) for x in row) for row in table)
        ident = next((i for i in range(n) if list(table[i]) == list(range(n))), None)
        if ident is None:
            raise ValidationError("multiplication table has no identity element")
        return cls(labels, table, ident)

    @classmethod
    def from_generators(
        cls,
        generators: Iterable[Hashable],
        multiply: Callable[[Any, Any], Any],
        identity: Hashable,
        bound: int = DEFAULT_ORDER_BOUND,
    ) -> FiniteGroup:
        """Closure of ``generators`` under ``multiply`` (breadth first)."""
        gens = list(generators)
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        elements.append(y)
                        nxt.append(y)
                        if len(elements) > bound:
                            raise ValidationError(f"group generated exceeds order bound {bound}")
            frontier = nxt
        index = {v: i for i, v in enumerate(elements)}
        table = tuple(tuple(index[multiply(a, b)] for b in elements) for a in elements)
        return cls(tuple(elements), table, index[identity])

    @classmethod
    def from_permutations(cls, generators: Iterable[Sequence[int]], degree: int | None = None) -> FiniteGroup:
        """Permutation group; a permutation is the tuple of images of 0..degree-1."""
        gens = [tuple(int(x) for x in g) for g in generators]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValidationError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        ident = tuple(range(degree))

        def compose(p, q):  # apply p, then q
            return tuple(q[p[i]] for i in range(degree))

        return cls.from_generators(gens, compose, ident)

    @classmethod
    def cyclic(cls, k: int) -> FiniteGroup:
        return cls.from_table([[(a + b) % k for b in range(k)] for a in range(k)])

    @classmethod
    def trivial(cls) -> FiniteGroup:
        return cls.cyclic(1)

    @classmethod
    def elementary_abelian(cls, rank: int) -> FiniteGroup:
        """F_2^rank with elements labelled by bit tuples."""
        vecs = list(product((0, 1), repeat=rank))
        return cls.from_generators(
            [v for v in vecs if sum(v) == 1], lambda a, b: tuple((x + y) % 2 for x, y in zip(a, b)), (0,) * rank
        )

    @classmethod
    def symmetric(cls, degree: int) -> FiniteGroup:
        if degree < 2:
            return cls.from_permutations([], degree=max(degree, 1))
        swap = (1, 0) + tuple(range(2, degree))
        cycle = tuple(range(1, degree)) + (0,)
        return cls.from_permutations([swap, cycle], degree)

    # queries --------------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def index(self, label) -> int:
        key = tuple(label) if isinstance(label, list) else label
        try:
            return self._index[key]
        except KeyError:
            raise ValidationError(f"{label!r} is not an element of the group") from None

    def closure(self, elements: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given element indices."""
        gens = list(elements)
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(out)

    def is_subgroup(self, elements: Iterable[int]) -> bool:
        s = frozenset(elements)
        return bool(s) and self.closure(s) == s

    def generating_set(self) -> list[int]:
        gens: list[int] = []
        span = frozenset({self.identity})
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
        return gens


@dataclass(frozen=True, eq=False)
class GroupHom:
    """A homomorphism given by the images of all source elements (as target indices)."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.source.order:
            raise ValidationError("a homomorphism needs one image per source element")
        if any(not 0 <= x < self.target.order for x in imgs):
            raise ValidationError("image index out of range")
        s, t = self.source, self.target
        for a in range(s.order):
            for b in range(s.order):
                if imgs[s.mul(a, b)] != t.mul(imgs[a], imgs[b]):
                    raise ValidationError("map is not multiplicative")

    @classmethod
    def inclusion(cls, target: FiniteGroup, elements: Iterable[int]) -> GroupHom:
        """Inclusion of the subgroup generated by ``elements``."""
        sub = sorted(target.closure(elements))
        pos = {x: i for i, x in enumerate(sub)}
        table = [[pos[target.mul(a, b)] for b in sub] for a in sub]
        source = FiniteGroup.from_table(table, [target.labels[x] for x in sub])
        return cls(source, target, tuple(sub))

    @classmethod
    def trivial(cls, source: FiniteGroup, target: FiniteGroup) -> GroupHom:
        return cls(source, target, (target.identity,) * source.order)

    def image(self) -> frozenset[int]:
        return frozenset(self.images)


# -- double cosets ------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCoset:
    representative: int
    members: tuple[int, ...]


def _as_subgroup(g: FiniteGroup, spec, name: str) -> frozenset[int]:
    if isinstance(spec, GroupHom):
        if spec.target is not g:
            raise ValidationError(f"{name} does not map into the ambient group")
        return spec.image()
    s = frozenset(int(x) for x in spec)
    if not s or any(not 0 <= x < g.order for x in s):
        raise ValidationError(f"{name} contains indices outside the group")
    if not g.is_subgroup(s):
        raise ValidationError(f"{name} is not a subgroup")
    return s


def double_cosets(g: FiniteGroup, left, right) -> list[DoubleCoset]:
    """L \\ G / R as a partition of G; ``left``/``right`` are element lists or homomorphisms."""
    lset = sorted(_as_subgroup(g, left, "left subgroup"))
    rset = sorted(_as_subgroup(g, right, "right subgroup"))
    assigned = [False] * g.order
    out = []
    for x in range(g.order):
        if assigned[x]:
            continue
        members = sorted({g.mul(g.mul(l, x), r) for l in lset for r in rset})
        for y in members:
            assigned[y] = True
        out.append(DoubleCoset(x, tuple(members)))
    return out


# -- systems ----------------------------------------------------------------------


@dataclass(frozen=True)
class IsotropySystem:
    pi0_Gamma: FiniteGroup
    pi0_Omega_minus: GroupHom
    pi0_Omega_plus: GroupHom

    def __post_init__(self):
        for h in (self.pi0_Omega_minus, self.pi0_Omega_plus):
            if h.target is not self.pi0_Gamma:
                raise ValidationError("Omega homomorphisms must map into Gamma")


@dataclass(frozen=True)
class BundleSystem:
    pi0_Z_rho: FiniteGroup
    pi0_Z_minus: GroupHom
    pi0_Z_plus: GroupHom
    label: Any = None

    def __post_init__(self):
        for h in (self.pi0_Z_minus, self.pi0_Z_plus):
            if h.target is not self.pi0_Z_rho:
                raise ValidationError("centralizer homomorphisms must map into pi_0(Z_rho)")


@dataclass(frozen=True)
class ActionData:
    """Permutations of the classification index set (images of 0..k-1)."""

    generators: tuple[tuple[int, ...], ...] = ()


def special_manifolds(sys: IsotropySystem) -> list[DoubleCoset]:
    return double_cosets(sys.pi0_Gamma, sys.pi0_Omega_minus, sys.pi0_Omega_plus)


def bundle_fiber(sys: BundleSystem) -> list[DoubleCoset]:
    return double_cosets(sys.pi0_Z_rho, sys.pi0_Z_minus, sys.pi0_Z_plus)


def aut_quotient(size: int, action: ActionData | None) -> list[list[int]]:
    """Orbits of the group generated by the action on {0, ..., size-1}."""
    gens = [] if action is None else [tuple(p) for p in action.generators]
    for p in gens:
        if sorted(p) != list(range(size)):
            raise ValidationError(f"action generator {list(p)} is not a permutation of the {size} classes")
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for i in range(size):
            a, b = find(i), find(p[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: dict[int, list[int]] = {}
    for i in range(size):
        orbits.setdefault(find(i), []).append(i)
    return [orbits[k] for k in sorted(orbits)]


@dataclass
class Classification:
    """Result of classifying a cohomogeneity-one system."""

    name: str
    special: list[DoubleCoset]
    entries: list[tuple[Any, int]]  # (bundle index label, double coset representative)
    orbits: list[list[int]]
    expected: int | None = None

    @property
    def count(self) -> int:
        return len(self.orbits)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "special_manifold_classes": len(self.special),
            "count": self.count,
            "classes": [
                {"index": _jsonable(self.entries[orbit[0]][0]), "coset": self.entries[orbit[0]][1]}
                for orbit in self.orbits
            ],
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def classify_system(
    name: str,
    isotropy: IsotropySystem,
    bundles: Sequence[tuple[Sequence[Any], BundleSystem]],
    action: ActionData | None = None,
) -> Classification:
    """Special-manifold classes and the bundle classes (index label, coset) modulo the action."""
    special = special_manifolds(isotropy)
    entries = []
    for labels, sys in bundles:
        fiber = bundle_fiber(sys)
        for lab in labels:
            for dc in fiber:
                entries.append((lab, dc.representative))
    return Classification(name, special, entries, aut_quotient(len(entries), action))


# -- built-in examples ----------------------------------------------------------------


def _pi0_as_group(pi0group) -> tuple[FiniteGroup, list]:
    """An F_2 component group as a FiniteGroup labelled by its vectors."""
    from . import gf2

    elements = sorted(pi0group.elements())
    pos = {v: i for i, v in enumerate(elements)}
    table = [[pos[gf2.add(a, b)] for b in elements] for a in elements]
    return FiniteGroup.from_table(table, elements), elements


def _pi0_hom(alpha, gamma, source: FiniteGroup, target: FiniteGroup) -> GroupHom:
    from . import gf2
    from .centralizer import pi0_inclusion

    matrix = pi0_inclusion(alpha, gamma)
    images = []
    for v in source.labels:
        w = gf2.apply(matrix, v) if matrix else ()
        images.append(target.index(w))
    return GroupHom(source, target, tuple(images))


def ex1(n: int, target: TargetGroup, weight_bound: int | None = None) -> tuple[Classification, int]:
    """SO(n) on S^n over I; returns the classification and the count from the classify module."""
    from .centralizer import pi0
    from .classify import compatible_pairs, enumerate_bundles
    from .hom_classes import restrict

    gamma_group = FiniteGroup.cyclic(2) if n >= 3 else FiniteGroup.trivial()
    ident = GroupHom.inclusion(gamma_group, [gamma_group.order - 1])
    iso = IsotropySystem(gamma_group, ident, ident)
    systems = []
    for a, b in compatible_pairs(n, target, weight_bound):
        g = restrict(a)
        zg, _ = _pi0_as_group(pi0(g))
        za, _ = _pi0_as_group(pi0(a))
        zb, _ = _pi0_as_group(pi0(b))
        sys = BundleSystem(zg, _pi0_hom(a, g, za, zg), _pi0_hom(b, g, zb, zg), label=(str(a), str(b)))
        systems.append(([(str(a), str(b))], sys))
    result = classify_system(f"ex1(n={n}, G={target})", iso, systems)
    return result, len(enumerate_bundles(n, target, weight_bound))


def _sign_group() -> FiniteGroup:
    """Diagonal sign matrices of determinant one in SO(3), labelled by their diagonals."""
    elems = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return FiniteGroup.from_generators(
        elems[1:], lambda a, b: tuple(x * y for x, y in zip(a, b)), (1, 1, 1)
    )


def odd_pairs(bound: int) -> list[tuple[int, int]]:
    odds = range(1, bound + 1, 2)
    return [(p, q) for p in odds for q in odds]


def _ex2_gamma() -> IsotropySystem:
    s3 = FiniteGroup.symmetric(3)
    minus = GroupHom.inclusion(s3, [s3.index((0, 2, 1))])
    plus = GroupHom.inclusion(s3, [s3.index((1, 0, 2))])
    return IsotropySystem(s3, minus, plus)


def ex2(bound: int = 5) -> Classification:
    """SO(3) on S^4 (traceless symmetric matrices) with G = SO(3)."""
    h = _sign_group()
    zm = GroupHom.inclusion(h, [h.index((1, -1, -1))])
    zp = GroupHom.inclusion(h, [h.index((-1, -1, 1))])
    nontrivial = BundleSystem(h, zm, zp, label="odd pairs")
    one = FiniteGroup.trivial()
    trivial = BundleSystem(one, GroupHom.trivial(one, one), GroupHom.trivial(one, one), label="trivial")
    return classify_system("ex2", _ex2_gamma(), [([(0, 0)], trivial), (odd_pairs(bound), nontrivial)])


def ex3() -> Classification:
    """SU(3) on S^7 (traceless Hermitian matrices) with G = SU(3)."""
    one = FiniteGroup.trivial()
    triv = GroupHom.trivial(one, one)
    sys = BundleSystem(one, triv, triv)
    return classify_system("ex3", _ex2_gamma(), [(["trivial"], sys), (["standard"], sys)])


def builtin_example(name: str, *, n: int | None = None, target: TargetGroup | None = None, bound: int = 5):
    """One of ``ex1`` (needs n and target), ``ex2`` (index set truncated at ``bound``), ``ex3``."""
    if name == "ex1":
        if n is None or target is None:
            raise ValidationError("ex1 needs --n and --group")
        result, expected = ex1(n, target, bound if n == 2 else None)
        result.expected = expected
        return result
    if name == "ex2":
        return ex2(bound)
    if name == "ex3":
        return ex3()
    raise ValidationError(f"unknown example {name!r}; expected ex1, ex2 or ex3")


# -- JSON ingestion -------------------------------------------------------------------


def _group_from_json(spec: Mapping) -> FiniteGroup:
    if not isinstance(spec, Mapping):
        raise ValidationError("group specification must be an object")
    if "table" in spec:
        return FiniteGroup.from_table(spec["table"], spec.get("labels"))
    if "permutations" in spec:
        return FiniteGroup.from_permutations(spec["permutations"], spec.get("degree"))
    if "cyclic" in spec:
        return FiniteGroup.cyclic(int(spec["cyclic"]))
    if "elementary_abelian" in spec:
        return FiniteGroup.elementary_abelian(int(spec["elementary_abelian"]))
    if "symmetric" in spec:
        return FiniteGroup.symmetric(int(spec["symmetric"]))
    if spec.get("trivial"):
        return FiniteGroup.trivial()
    raise ValidationError(f"group specification needs one of table/permutations/cyclic/... got {sorted(spec)}")


def _hom_from_json(spec: Mapping, groups: Mapping[str, FiniteGroup], into: FiniteGroup) -> GroupHom:
    if "subgroup" in spec:
        return GroupHom.inclusion(into, [into.index(x) for x in spec["subgroup"]])
    if "source" in spec and "images" in spec:
        source = groups.get(spec["source"]) if isinstance(spec["source"], str) else _group_from_json(spec["source"])
        if source is None:
            raise ValidationError(f"unknown group {spec['source']!r}")
        return GroupHom(source, into, tuple(into.index(x) for x in spec["images"]))
    raise ValidationError("homomorphism needs either 'subgroup' or 'source' with 'images'")


def load_system(data: Mapping, bound: int = 5) -> Classification:
    """Classify a system given in the JSON ingestion schema (see the shipped example files)."""
    try:
        groups = {name: _group_from_json(g) for name, g in data.get("groups", {}).items()}

        def group(ref):
            if isinstance(ref, str):
                if ref not in groups:
                    raise ValidationError(f"unknown group {ref!r}")
                return groups[ref]
            return _group_from_json(ref)

        iso_spec = data["isotropy"]
        gamma = group(iso_spec["Gamma"])
        iso = IsotropySystem(
            gamma,
            _hom_from_json(iso_spec["Omega_minus"], groups, gamma),
            _hom_from_json(iso_spec["Omega_plus"], groups, gamma),
        )
        systems = []
        for entry in data.get("bundles", []):
            z = group(entry["Z_rho"])
            sys = BundleSystem(
                z,
                _hom_from_json(entry["Z_minus"], groups, z),
                _hom_from_json(entry["Z_plus"], groups, z),
                label=entry.get("label"),
            )
            if "indices" in entry:
                labels = [tuple(x) if isinstance(x, list) else x for x in entry["indices"]]
            elif entry.get("index_family") == "odd_pairs":
                labels = odd_pairs(bound)
            else:
                labels = [entry.get("label", len(systems))]
            systems.append((labels, sys))
        action = None
        if "action" in data:
            action = ActionData(tuple(tuple(int(i) for i in p) for p in data["action"].get("generators", [])))
        result = classify_system(data.get("name", "system"), iso, systems, action)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed cohomogeneity-one JSON: missing or bad field {exc}") from None
    result.expected = data.get("expected_count")
    return result


def example_path(name: str):
    return resources.files("equibundle") / "data" / f"{name}.json"


def load_example_file(name: str, bound: int = 5) -> Classification:
    with example_path(name).open() as fh:
        return load_system(json.load(fh), bound)
