"""Numerical character oracle on the maximal torus.

Characters are evaluated with the Weyl character formula and integrated with
the Weyl integration formula on a shifted uniform grid.  Characters are
trigonometric polynomials, so a grid finer than the highest frequency makes
the trapezoid rule exact up to rounding.  The grid offsets keep every sample
(and its double) away from the walls where the Weyl denominator vanishes.

This module is an independent check on the symbolic rules in :mod:`lie_kernel`; it
never calls them except for the Lie type bookkeeping.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import factorial

import numpy as np

from .lie_kernel import LieType

__all__ = [
    "OracleInconclusive",
    "RESIDUAL_TOLERANCE",
    "character",
    "oracle_inner_product",
    "oracle_branch_multiplicity",
    "oracle_fs_indicator",
]

RESIDUAL_TOLERANCE = 0.01


class OracleInconclusive(RuntimeError):
    """Raised when a quadrature result is not within tolerance of an integer."""


@lru_cache(maxsize=None)
def _weyl_group(lt: LieType) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Elements as (permutation, signs, sign of the element)."""
    r = lt.rank
    out = []
    for perm in permutations(range(r)):
        inversions = sum(1 for i in range(r) for j in range(i + 1, r) if perm[i] > perm[j])
        for signs in product((1, -1), repeat=r):
            flips = signs.count(-1)
            if lt.kind == "D" and flips % 2:
                continue
            out.append((perm, signs, (-1) ** (inversions + flips)))
    return tuple(out)


def _rho(lt: LieType) -> np.ndarray:
    r = lt.rank
    if lt.kind == "B":
        return np.array([r - i - 0.5 for i in range(r)])
    return np.array([float(r - 1 - i) for i in range(r)])


def _alternant(lt: LieType, mu: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """sum_w sgn(w) exp(i <w mu, theta>) for theta of shape (..., r)."""
    total = np.zeros(theta.shape[:-1], dtype=complex)
    for perm, signs, sgn in _weyl_group(lt):
        w_mu = np.array([signs[k] * mu[perm[k]] for k in range(lt.rank)])
        total += sgn * np.exp(1j * theta @ w_mu)
    return total


def character(lt: LieType, weight, theta: np.ndarray) -> np.ndarray:
    """Character of the irrep ``weight`` at torus angles ``theta`` (shape (..., rank))."""
    theta = np.asarray(theta, dtype=float)
    if lt.kind == "trivial":
        return np.ones(theta.shape[:-1], dtype=complex)
    if lt.kind == "torus":
        return np.exp(1j * weight[0] * theta[..., 0])
    rho = _rho(lt)
    mu = np.asarray(weight, dtype=float) + rho
    return _alternant(lt, mu, theta) / _alternant(lt, rho, theta)


def _weyl_density(lt: LieType, theta: np.ndarray) -> np.ndarray:
    if lt.kind == "torus":
        return np.ones(theta.shape[:-1])
    return np.abs(_alternant(lt, _rho(lt), theta)) ** 2


def _order_w(lt: LieType) -> int:
    if lt.kind == "torus":
        return 1
    r = lt.rank
    return 2**r * factorial(r) if lt.kind == "B" else 2 ** (r - 1) * factorial(r)


def _grid(lt: LieType, points: int) -> np.ndarray:
    r = lt.rank
    offsets = [0.5 * (i + 1) / (r + 1) + 0.0123 for i in range(r)]
    axes = [2 * np.pi * (np.arange(points) + s) / points for s in offsets]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1).reshape(-1, r)


def _integrate(lt: LieType, values_fn, max_freq: int) -> complex:
    """Normalized Haar integral of a class function given on torus samples."""
    points = 2 * max_freq + 4 * lt.rank + 6
    theta = _grid(lt, points)
    vals = values_fn(theta) * _weyl_density(lt, theta)
    return vals.mean() / _order_w(lt)


def _nearest_integer(value: complex, what: str) -> int:
    k = int(round(value.real))
    residual = abs(value - k)
    if residual > RESIDUAL_TOLERANCE:
        raise OracleInconclusive(f"{what}: quadrature value {value:.6f} is {residual:.3g} from an integer")
    return k


def oracle_inner_product(lt: LieType, weight_a, weight_b) -> int:
    """<chi_a, chi_b> over SO(n) by quadrature."""
    if lt.kind == "trivial":
        return 1
    deg = (max(map(abs, weight_a), default=0) + max(map(abs, weight_b), default=0))
    value = _integrate(
        lt,
        lambda th: character(lt, weight_a, th) * np.conj(character(lt, weight_b, th)),
        deg + 1,
    )
    return _nearest_integer(value, f"<{weight_a},{weight_b}> on {lt}")


def _embed(sub: LieType, big: LieType, theta: np.ndarray) -> np.ndarray:
    """Torus of SO(n-1) inside the torus of SO(n)."""
    if big.rank == sub.rank:
        return theta
    zeros = np.zeros(theta.shape[:-1] + (1,))
    return np.concatenate([theta, zeros], axis=-1)


def oracle_branch_multiplicity(n: int, weight, sub_weight) -> int:
    """Multiplicity of the SO(n-1)-irrep ``sub_weight`` inside ``weight`` restricted from SO(n)."""
    big = LieType.of_so(n)
    sub = LieType.of_so(n - 1)
    if sub.kind == "trivial":
        return 1
    deg = max(map(abs, weight), default=0) + max(map(abs, sub_weight), default=0)
    value = _integrate(
        sub,
        lambda th: character(big, weight, _embed(sub, big, th))
        * np.conj(character(sub, sub_weight, th)),
        deg + 1,
    )
    return _nearest_integer(value, f"branch {weight} -> {sub_weight}")


def oracle_fs_indicator(lt: LieType, weight) -> int:
    """Frobenius-Schur indicator: integral of chi(g^2), one of 1, 0, -1."""
    if lt.kind == "trivial":
        return 1
    deg = 2 * max(map(abs, weight), default=0)
    value = _integrate(lt, lambda th: character(lt, weight, 2 * th), deg + 2)
    k = _nearest_integer(value, f"indicator of {weight} on {lt}")
    if k not in (-1, 0, 1):
        raise OracleInconclusive(f"indicator of {weight} on {lt} came out as {k}")
    return k
