import numpy as np
import pytest

from matrix_oracle import check_commutes, component_sign, intertwiners, real_models_of, sign_elements

from equibundle import gf2
from equibundle.centralizer import centralizer, image_of, pi0, pi0_inclusion
from equibundle.hom_classes import (
    TargetGroup,
    ValidationError,
    enumerate_hom_classes,
    hom_from_weights,
    identity_class,
    restrict,
    trivial_class,
)


def G(text):
    return TargetGroup.parse(text)


def iota(n):
    return restrict(identity_class(n))


@pytest.mark.parametrize("n", [5, 7, 9])
def test_iota_odd(n):
    c = centralizer(iota(n))
    assert [b.kind for b in c.o_blocks] == ["O", "O"]
    assert pi0(c).order == 2


def test_iota_three_is_connected():
    # SO(2) in SO(3): the 2-plane is a complex pair, so only one O(1) block of odd dimension
    assert pi0(iota(3)).order == 1


def test_identity_so3_trivial():
    c = centralizer(identity_class(3))
    assert len(c.o_blocks) == 1 and c.det_constraint == (1,)
    assert pi0(c).order == 1


@pytest.mark.parametrize("k", [3, 4, 5])
def test_iota_even(k):
    assert pi0(iota(2 * k)).order == 2


def test_circle_into_unitary_blocks():
    h = hom_from_weights(2, G("U:6"), {(2,): 3, (0,): 2, (-1,): 1})
    c = centralizer(h)
    assert sorted(b.size for b in c.blocks) == [1, 2, 3]
    assert {b.kind for b in c.blocks} == {"U"}
    assert pi0(c).order == 1


@pytest.mark.parametrize("g", ["O:1", "O:2", "O:5", "SO:3", "SO:4", "U:3", "SU:3", "Sp:2"])
def test_trivial_hom_components(g):
    expected = 2 if g.startswith("O") else 1
    assert pi0(trivial_class(3, G(g))).order == expected


@pytest.mark.parametrize("g", ["U:4", "SU:4", "Sp:2"])
def test_connected_ambients(g):
    for h in enumerate_hom_classes(3, G(g)):
        assert pi0(h).order == 1


def test_inclusion_examples():
    for k in (3, 4):
        a = identity_class(2 * k)
        m = pi0_inclusion(a)
        (minus_i,) = pi0(a).basis
        assert gf2.apply(m, minus_i) == (1, 1)
    a = identity_class(5)
    assert pi0(a).order == 1
    sigma1 = hom_from_weights(4, G("SO:3"), {(1, 1): 1})
    assert pi0(sigma1).order == 1 and pi0(restrict(sigma1)).order == 1


def test_inclusion_rejects_wrong_gamma():
    with pytest.raises(ValidationError):
        pi0_inclusion(identity_class(4), trivial_class(3, G("SO:4")))


def test_image_of_identity_even():
    assert image_of(identity_class(6)) == [(1, 1)]


def _oracle_cases():
    out = []
    for n in (2, 3, 4):
        for fam in ("O", "SO"):
            for m in range(1, 5):
                out += enumerate_hom_classes(n, TargetGroup(fam, m), 2 if n == 2 else None)
    return out


def _embed(g, n):
    out = np.eye(n)
    out[: n - 1, : n - 1] = g
    return out


@pytest.mark.parametrize("h", _oracle_cases(), ids=str)
def test_matrix_oracle(h):
    n = h.source_n
    rho, xs = sign_elements(h)
    assert check_commutes(rho, xs, n)
    gamma = restrict(h)
    rho_g = lambda x: rho(_embed(x, n))  # noqa: E731
    ba = [intertwiners(model, rho, n) for _, model in real_models_of(n, h)]
    bg = [intertwiners(model, rho_g, n - 1) for _, model in real_models_of(n - 1, gamma)]
    # multiplicity spaces have the expected dimension
    assert [b.shape[0] for b in ba] == [c.mult for c in h.constituents if c.real_type]
    seen = {}
    for x in xs:
        va = tuple(0 if component_sign(x, b) > 0 else 1 for b in ba)
        seen[va] = tuple(0 if component_sign(x, b) > 0 else 1 for b in bg)
    assert set(seen) == set(pi0(h).elements())
    matrix = pi0_inclusion(h, gamma)
    for va, vg in seen.items():
        assert (gf2.apply(matrix, va) if matrix else ()) == vg


@pytest.mark.parametrize("h", [h for h in _oracle_cases() if h.target.family == "SO"], ids=str)
def test_det_constraint(h):
    # a sign pattern lies in SO(m) iff the constraint vanishes on it
    c = centralizer(h)
    real_dims = [b.real_dim for b in c.o_blocks]
    for v in gf2.span_elements([gf2.unit(len(real_dims), i) for i in range(len(real_dims))], len(real_dims)):
        det = (-1) ** sum(x * d for x, d in zip(v, real_dims))
        assert (det == 1) == pi0(c).contains(v)


def _two_step_matrix(alpha):
    gamma = restrict(alpha)
    gamma2 = restrict(gamma)
    ca, cg2 = centralizer(alpha), centralizer(gamma2)
    rows = []
    for gblk in cg2.o_blocks:
        nu = gamma2.constituents[gblk.constituent].irrep
        row = []
        for blk in ca.o_blocks:
            v = alpha.constituents[blk.constituent].irrep
            row.append(sum(b * mu.branch().get(nu, 0) for mu, b in v.branch().items()) % 2)
        rows.append(tuple(row))
    return rows


def _functoriality_cases():
    out = []
    for n in range(3, 7):
        for fam in ("O", "SO"):
            for m in range(1, 7):
                out += enumerate_hom_classes(n, TargetGroup(fam, m))
    return out


def test_inclusion_functoriality():
    for alpha in _functoriality_cases():
        gamma = restrict(alpha)
        first, second = pi0_inclusion(alpha), pi0_inclusion(gamma)
        for v in pi0(alpha).elements():
            mid = gf2.apply(first, v) if first else ()
            end = gf2.apply(second, mid) if second else ()
            direct = _two_step_matrix(alpha)
            assert end == (gf2.apply(direct, v) if direct else ()), str(alpha)
