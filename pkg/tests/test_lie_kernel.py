import pytest
from hypothesis import given
from hypothesis import strategies as st

from equibundle.characters import OracleInconclusive, oracle_branch_multiplicity, oracle_fs_indicator, oracle_inner_product
from equibundle.lie_kernel import (
    COMPLEX,
    REAL,
    InvalidWeight,
    Irrep,
    LieType,
    branch,
    canonical_weight,
    delta_flip,
    dominant_weights,
    frobenius_schur,
    irreps_up_to_dim,
    weyl_dimension,
)

B1, D2, D3 = LieType.of_so(3), LieType.of_so(4), LieType.of_so(6)


def test_lie_types():
    assert LieType.of_so(1).kind == "trivial"
    assert LieType.of_so(2).kind == "torus"
    assert (LieType.of_so(7).kind, LieType.of_so(7).rank) == ("B", 3)
    assert (LieType.of_so(8).kind, LieType.of_so(8).rank) == ("D", 4)


@pytest.mark.parametrize(
    "n, weight, dim",
    [(3, (1,), 3), (3, (2,), 5), (4, (1, 1), 3), (4, (1, 0), 4), (5, (1, 0), 5), (5, (1, 1), 10), (6, (1, 0, 0), 6),
     (6, (1, 1, 1), 10), (7, (1, 0, 0), 7), (7, (1, 1, 1), 35), (8, (1, 1, 1, 1), 35)],
)
def test_weyl_dimension(n, weight, dim):
    assert weyl_dimension(LieType.of_so(n), weight) == dim


def test_frobenius_schur_examples():
    for r in range(1, 5):
        assert frobenius_schur(LieType.of_so(2 * r + 1), (1,) + (0,) * (r - 1)) == REAL
    assert frobenius_schur(LieType.of_so(2), (3,)) == COMPLEX
    assert frobenius_schur(D3, (1, 1, 1)) == COMPLEX
    assert frobenius_schur(D2, (1, 1)) == REAL


def test_branch_examples():
    assert branch(B1, (1,)) == {(1,): 1, (0,): 1, (-1,): 1}
    assert branch(LieType.of_so(5), (1, 0)) == {(1, 0): 1, (0, 0): 1}
    assert branch(D2, (1, 1)) == {(1,): 1}
    assert branch(LieType.of_so(5), (1, 1)) == {(1, 1): 1, (1, -1): 1, (1, 0): 1}


def test_branch_rejects_torus():
    with pytest.raises(ValueError):
        branch(LieType.of_so(2), (1,))


def test_delta_flip_examples():
    assert delta_flip(D2, (1, 1)) == (1, -1)
    assert delta_flip(LieType.of_so(2), (5,)) == (-5,)
    for w in dominant_weights(LieType.of_so(7), 3):
        assert delta_flip(LieType.of_so(7), w) == w


def test_oracle_examples():
    assert oracle_inner_product(B1, (1,), (1,)) == 1
    assert oracle_inner_product(B1, (0,), (1,)) == 0
    assert oracle_branch_multiplicity(4, (1, 1), (1,)) == 1


def test_oracle_signals_insufficient_resolution(monkeypatch):
    import equibundle.characters as ch

    monkeypatch.setattr(ch, "_integrate", lambda lt, fn, deg: 0.5)
    with pytest.raises(OracleInconclusive):
        ch.oracle_inner_product(B1, (1,), (1,))


def test_invalid_weights():
    with pytest.raises(InvalidWeight):
        Irrep(3, (-1,))
    with pytest.raises(InvalidWeight):
        Irrep(5, (0, 1))
    with pytest.raises(InvalidWeight):
        Irrep(4, (1,))


def test_irreps_up_to_dim_is_complete():
    # brute force over a box of dominant weights
    for n in (3, 4, 5, 6, 7):
        lt = LieType.of_so(n)
        box = {w for w in dominant_weights(lt, 40) if weyl_dimension(lt, w) <= 40}
        assert {v.weight for v in irreps_up_to_dim(n, 40)} == box


weights_small = st.sampled_from([(n, v.weight) for n in range(3, 9) for v in irreps_up_to_dim(n, 200)])


@given(weights_small)
def test_dimension_conservation(nw):
    n, w = nw
    lt, sub = LieType.of_so(n), LieType.of_so(n - 1)
    total = sum(k * weyl_dimension(sub, mu) for mu, k in branch(lt, w).items())
    assert total == weyl_dimension(lt, w)


@given(weights_small)
def test_delta_flip_is_involution_preserving_dim_and_type(nw):
    n, w = nw
    lt = LieType.of_so(n)
    f = delta_flip(lt, w)
    assert delta_flip(lt, f) == w
    assert weyl_dimension(lt, f) == weyl_dimension(lt, w)
    assert frobenius_schur(lt, f) == frobenius_schur(lt, w)


@given(weights_small)
def test_canonicalization_idempotent(nw):
    n, w = nw
    lt = LieType.of_so(n)
    assert canonical_weight(lt, w) == w
    assert canonical_weight(lt, canonical_weight(lt, w)) == w


@given(st.sampled_from([(n, v.weight) for n in range(3, 7) for v in irreps_up_to_dim(n, 20)]))
def test_fs_matches_oracle(nw):
    n, w = nw
    lt = LieType.of_so(n)
    assert {1: REAL, 0: COMPLEX}[oracle_fs_indicator(lt, w)] == frobenius_schur(lt, w)


def test_irrep_dual_and_flip():
    v = Irrep(6, (1, 1, 1))
    assert v.dual() == Irrep(6, (1, 1, -1))
    assert v.flip() == v.dual()
    assert Irrep(2, (3,)).dual() == Irrep(2, (-3,))
