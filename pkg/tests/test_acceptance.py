"""End-to-end acceptance checks, one per criterion, at exact tolerance.

Each ``criterion_k`` returns ``(passed, detail)``.  Under pytest the results
are collected and printed as one PASS/FAIL line each in the terminal
summary; ``python3 tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matrix_oracle import check_commutes, component_sign, intertwiners, real_models_of, sign_elements  # noqa: E402

from equibundle import gf2  # noqa: E402
from equibundle.centralizer import pi0, pi0_inclusion  # noqa: E402
from equibundle.characters import oracle_branch_multiplicity, oracle_fs_indicator  # noqa: E402
from equibundle.classify import (  # noqa: E402
    bundle_from_pair,
    compatible_pairs,
    enumerate_bundles,
    equivariant_structures_on,
    fiber_of_J,
    lifts_to_higher_action,
)
from equibundle.cohomog1 import FiniteGroup, builtin_example, double_cosets  # noqa: E402
from equibundle.hom_classes import (  # noqa: E402
    TargetGroup,
    delta_action,
    enumerate_hom_classes,
    hom_from_weights,
    identity_class,
    restrict,
    trivial_class,
)
from equibundle.invariants import chern_number, clutching_class, pontrjagin_euler  # noqa: E402
from equibundle.lie_kernel import COMPLEX, QUATERNIONIC, REAL, Irrep, LieType, irreps_up_to_dim  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

SETTINGS = [(4, "SO:3"), (4, "SO:4"), (3, "SO:3"), (5, "SO:5"), (7, "SO:7"), (6, "SO:6")]
EXPECTED_R = {(4, "SO:3"): 3, (4, "SO:4"): 5, (3, "SO:3"): 2, (5, "SO:5"): 2, (7, "SO:7"): 2, (6, "SO:6"): 3}
EXPECTED_E = {(4, "SO:3"): 5, (4, "SO:4"): 17, (3, "SO:3"): 3, (5, "SO:5"): 3, (7, "SO:7"): 3, (6, "SO:6"): 5}


def _g(text: str) -> TargetGroup:
    return TargetGroup.parse(text)


def _sigmas(target: TargetGroup):
    extra = {(0, 0): 1} if target.size == 4 else {}
    return (
        hom_from_weights(4, target, {**extra, (1, 1): 1}),
        hom_from_weights(4, target, {**extra, (1, -1): 1}),
    )


# -- criteria ---------------------------------------------------------------------------


def criterion_1():
    bad = []
    for n, g in SETTINGS:
        r = len(enumerate_hom_classes(n, _g(g)))
        e = len(enumerate_bundles(n, _g(g)))
        if r != EXPECTED_R[(n, g)]:
            bad.append(f"|R({n},{g})|={r} (want {EXPECTED_R[(n, g)]})")
        if e != EXPECTED_E[(n, g)]:
            bad.append(f"|E({n},{g})|={e} (want {EXPECTED_E[(n, g)]})")
    return not bad, "; ".join(bad) or "all 12 counts match"


def criterion_2():
    g4 = _g("SO:4")
    s1, s2 = _sigmas(g4)
    i = identity_class(4)
    d = delta_action(i)

    def pe(a, b):
        return tuple(pontrjagin_euler(bundle_from_pair(a, b)).value)

    got = {
        "H_hat": pe(s1, s2),
        "TS4": pe(i, d),
        "xi1": pe(i, s1),
        "xi2": pe(i, s2),
        "xi1_delta": pe(d, s1),
        "xi2_delta": pe(d, s2),
    }
    want = {"H_hat": (4, 0), "TS4": (0, 2), "xi1": (-2, 1), "xi2": (2, 1), "xi1_delta": (-2, -1), "xi2_delta": (2, -1)}
    t1, t2 = _sigmas(_g("SO:3"))
    got["p_H"] = pontrjagin_euler(bundle_from_pair(t1, t2)).value
    want["p_H"] = 4
    u1 = _g("U:1")
    tau = bundle_from_pair(hom_from_weights(2, u1, [(-1,)]), hom_from_weights(2, u1, [(1,)]))
    got["C_tau"], got["c_tau"] = clutching_class(tau).value, chern_number(tau).value
    want["C_tau"], want["c_tau"] = -2, 2
    bad = [f"{k}={got[k]} (want {want[k]})" for k in want if got[k] != want[k]]
    return not bad, "; ".join(bad) or "9 invariant values match"


def criterion_3():
    o2 = _g("O:2")

    def alpha(r):
        return hom_from_weights(2, o2, {(r,): 1, (-r,): 1} if r else {(0,): 2})

    bad = []
    for r in range(7):
        for s in range(7):
            size = len(fiber_of_J(alpha(r), alpha(s)))
            if size != (1 if r * s == 0 else 2):
                bad.append(f"(r,s)=({r},{s}) fiber {size}")
    return not bad, "; ".join(bad) or "49 fibers obey the law"


def _direct_c(h) -> int:
    return sum(k * v.weight[0] for v, k in h.complex_counts().items())


def criterion_4():
    bad = []
    for g in ("U:1", "U:2"):
        for a, b in compatible_pairs(2, _g(g), 3):
            fib = fiber_of_J(a, b)
            if len(fib) != 1:
                bad.append(f"{g} ({a},{b}) fiber {len(fib)}")
                continue
            if clutching_class(fib[0]).value != _direct_c(a) - _direct_c(b):
                bad.append(f"{g} ({a},{b}) C mismatch")
    return not bad, "; ".join(bad) or "J bijective with C = sum(p - q) on U(1), U(2), bound 3"


def _expected_liftable(n: int, target: TargetGroup) -> Counter:
    triv = trivial_class(n, target)
    if n == 4 and target.size == 3:
        s1, s2 = _sigmas(target)
        pairs = [(triv, triv), (s1, s2), (s2, s1)]
    elif n == 4:
        s1, s2 = _sigmas(target)
        i = identity_class(4)
        d = delta_action(i)
        pairs = [(triv, triv), (s1, s2), (s2, s1), (i, d), (d, i)]
    elif n % 2 == 0:
        i = identity_class(n)
        d = delta_action(i)
        pairs = [(triv, triv), (i, d), (d, i)]
    else:
        i = identity_class(n)
        pairs = [(triv, triv), (i, i)]
    return Counter(pairs)


def criterion_5():
    bad = []
    for n, g in SETTINGS:
        target = _g(g)
        lifted = [b for b in enumerate_bundles(n, target) if lifts_to_higher_action(b)]
        r = len(enumerate_hom_classes(n, target))
        if len(lifted) != r:
            bad.append(f"({n},{g}) {len(lifted)} liftable vs |R|={r}")
        if Counter(b.J for b in lifted) != _expected_liftable(n, target):
            bad.append(f"({n},{g}) liftable J-images differ from the listed bundles")
        # over (id, id) with n odd the trivial action bundle is the zero coset and must not lift
        if n % 2:
            i = identity_class(n)
            fib = fiber_of_J(i, i)
            if len(fib) > 1 and lifts_to_higher_action(fib[0]):
                bad.append(f"({n},{g}) the trivial bundle with action A(z,AB) lifts")
    return not bad, "; ".join(bad) or "liftable sets equal the listed bundles in all 6 settings"


def criterion_6():
    bad = []
    for n in (3, 5):
        for g in ("U:2", "U:3", "SU:3", "Sp:2"):
            off = [(a, b) for a, b in compatible_pairs(n, _g(g)) if a != b]
            if off:
                bad.append(f"n={n} {g}: {len(off)} off-diagonal pairs")
    return not bad, "; ".join(bad) or "every compatible pair is diagonal"


_FS = {1: REAL, 0: COMPLEX, -1: QUATERNIONIC}


def _sub_candidates(k: int, v: Irrep) -> list[Irrep]:
    if k == 2:
        c = v.weight[0]
        return [Irrep(2, (p,)) for p in range(-c - 1, c + 2)]
    return irreps_up_to_dim(k, v.dim_c)


def _so_of(g, n: int) -> np.ndarray:
    out = np.eye(n)
    out[: n - 1, : n - 1] = g
    return out


def _matrix_oracle_mismatches() -> list[str]:
    bad = []
    for n in (2, 3, 4):
        for fam in ("O", "SO"):
            for m in range(1, 5):
                for h in enumerate_hom_classes(n, TargetGroup(fam, m), 2 if n == 2 else None):
                    rho, xs = sign_elements(h)
                    if not check_commutes(rho, xs, n):
                        bad.append(f"{h}: sign element does not commute")
                        continue
                    gamma = restrict(h)
                    rho_g = lambda x, rho=rho, n=n: rho(_so_of(x, n))  # noqa: E731
                    ba = [intertwiners(mm, rho, n) for _, mm in real_models_of(n, h)]
                    bg = [intertwiners(mm, rho_g, n - 1) for _, mm in real_models_of(n - 1, gamma)]
                    seen = {}
                    for x in xs:
                        va = tuple(0 if component_sign(x, b) > 0 else 1 for b in ba)
                        seen[va] = tuple(0 if component_sign(x, b) > 0 else 1 for b in bg)
                    if set(seen) != set(pi0(h).elements()):
                        bad.append(f"{h}: pi0 {sorted(seen)}")
                    matrix = pi0_inclusion(h, gamma)
                    for va, vg in seen.items():
                        if (gf2.apply(matrix, va) if matrix else ()) != vg:
                            bad.append(f"{h}: inclusion on {va}")
    return bad


def criterion_7():
    bad = []
    checked = 0
    for n in range(3, 8):
        lt = LieType.of_so(n)
        for v in irreps_up_to_dim(n, 32):
            symbolic = v.branch()
            cands = _sub_candidates(n - 1, v)
            if not set(symbolic) <= set(cands):
                bad.append(f"{v} branches outside the dimension bound")
            for mu in cands:
                checked += 1
                if oracle_branch_multiplicity(n, v.weight, mu.weight) != symbolic.get(mu, 0):
                    bad.append(f"branch {v} -> {mu}")
            if _FS[oracle_fs_indicator(lt, v.weight)] != v.fs_type:
                bad.append(f"fs {v}")
    for p in range(-6, 7):
        if _FS[oracle_fs_indicator(LieType.of_so(2), (p,))] != Irrep(2, (p,)).fs_type:
            bad.append(f"fs SO(2) {p}")
    bad += _matrix_oracle_mismatches()
    return not bad, "; ".join(bad[:5]) or f"{checked} multiplicities, FS types and pi0 data agree"


def criterion_8():
    bad = []
    for n, g in SETTINGS:
        r = builtin_example("ex1", n=n, target=_g(g))
        if r.count != r.expected:
            bad.append(f"ex1 ({n},{g}) engine {r.count} vs classify {r.expected}")
    r2 = builtin_example("ex2", bound=5)
    want = {(0, 0)} | {(p, q) for p in (1, 3, 5) for q in (1, 3, 5)}
    labels = [r2.entries[o[0]][0] for o in r2.orbits]
    if r2.count != 10 or set(labels) != want:
        bad.append(f"ex2 gives {sorted(labels)}")
    c3 = builtin_example("ex3").count
    if c3 != 2:
        bad.append(f"ex3 gives {c3}")
    return not bad, "; ".join(bad) or "ex1 consistent on 6 settings, ex2 = 10 indices, ex3 = 2"


def _random_group(rng: random.Random) -> FiniteGroup:
    while True:
        degree = rng.choice((3, 4, 5))
        gens = [rng.sample(range(degree), degree) for _ in range(rng.choice((1, 2)))]
        g = FiniteGroup.from_permutations(gens, degree)
        if g.order <= 48:
            return g


def _random_subgroup(g: FiniteGroup, rng: random.Random) -> frozenset[int]:
    return g.closure(rng.sample(range(g.order), min(g.order, rng.choice((1, 1, 2)))))


def _double_coset_laws(trials: int = 60) -> list[str]:
    rng = random.Random(7)
    bad = []
    for _ in range(trials):
        g = _random_group(rng)
        a, b = _random_subgroup(g, rng), _random_subgroup(g, rng)
        parts = double_cosets(g, a, b)
        members = [x for p in parts for x in p.members]
        if sorted(members) != list(range(g.order)):
            bad.append("not a partition")
        for p in parts:
            if len(p.members) * len(a & {g.mul(g.mul(p.representative, y), g.inv(p.representative)) for y in b}) != len(a) * len(b):
                bad.append("double coset size formula fails")
        if len(double_cosets(g, b, a)) != len(parts):
            bad.append("left/right swap changes the count")
    return bad


def criterion_9():
    bad = _double_coset_laws()
    for n, g in SETTINGS + [(2, "SO:3"), (2, "O:2"), (2, "U:2")]:
        bound = 2 if n == 2 else None
        for h in enumerate_hom_classes(n, _g(g), bound):
            if delta_action(delta_action(h)) != h or restrict(delta_action(h)) != restrict(h):
                bad.append(f"delta on {h}")
        bundles = enumerate_bundles(n, _g(g), bound)
        swapped = sorted(b.swap() for b in bundles)
        if swapped != bundles:
            bad.append(f"swap symmetry ({n},{g})")
    for g, value in (("U:1", 3), ("U:2", -2), ("SO:2", 4), ("SO:3", 1), ("SU:2", 0), ("Sp:1", 0)):
        classes = equivariant_structures_on(_g(g), value, 25)
        if len(set(classes)) != 25:
            bad.append(f"S^2 family {g}: duplicates")
        inv = {clutching_class(b).value for b in classes}
        if len(inv) != 1:
            bad.append(f"S^2 family {g}: invariant not constant {sorted(inv)}")
        if g.startswith("U") and {chern_number(b).value for b in classes} != {value}:
            bad.append(f"S^2 family {g}: Chern number differs from {value}")
    return not bad, "; ".join(bad[:5]) or "partition laws, delta involution, swap symmetry and the S^2 families hold"


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 10)}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    passed, detail = CRITERIA[k]()
    RESULTS[k] = (passed, detail)
    assert passed, detail


def format_line(k: int, passed: bool, detail: str) -> str:
    return f"criterion {k}: {'PASS' if passed else 'FAIL'}  {detail}"


if __name__ == "__main__":
    for k, fn in CRITERIA.items():
        print(format_line(k, *fn()), flush=True)
