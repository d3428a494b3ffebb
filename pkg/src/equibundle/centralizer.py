"""Centralizers of homomorphism images and their component groups.

By Schur's lemma the centralizer of rho(SO(n)) in G is a product of classical
groups, one per isotypic constituent, acting on the multiplicity spaces.
Only O(k)-blocks are disconnected, so pi_0 is an F_2-vector space with one
generator per O-block (the reflection in that block), cut down by a
determinant condition when G = SO(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import gf2
from .hom_classes import HomClass, TargetGroup, ValidationError, restrict
from .lie_kernel import COMPLEX, QUATERNIONIC, REAL

__all__ = ["Block", "CentralizerDescriptor", "Pi0Group", "centralizer", "pi0", "pi0_inclusion", "image_of"]

_BLOCK_KIND = {
    "orthogonal": {REAL: "O", COMPLEX: "U", QUATERNIONIC: "Sp"},
    "unitary": {REAL: "U", COMPLEX: "U", QUATERNIONIC: "U"},
    "symplectic": {REAL: "Sp", COMPLEX: "U", QUATERNIONIC: "O"},
}


def _ambient_kind(target: TargetGroup) -> str:
    if target.family in ("O", "SO"):
        return "orthogonal"
    if target.family in ("U", "SU"):
        return "unitary"
    return "symplectic"


@dataclass(frozen=True)
class Block:
    kind: str  # "O", "U" or "Sp"
    size: int
    constituent: int  # index into the HomClass constituents
    real_dim: int  # real dimension of one copy of the constituent


@dataclass(frozen=True)
class CentralizerDescriptor:
    ambient: TargetGroup
    blocks: tuple[Block, ...]
    # d_i for the i-th O-block when the ambient is SO: reflections in block i
    # have determinant (-1)^{d_i}.
    det_constraint: tuple[int, ...] | None

    @property
    def o_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.kind == "O")

    def o_block_of(self, constituent: int) -> int | None:
        """Position among the O-blocks of the block for a constituent index."""
        for pos, b in enumerate(self.o_blocks):
            if b.constituent == constituent:
                return pos
        return None

    def describe(self) -> str:
        parts = [f"{b.kind}({b.size})" for b in self.blocks]
        s = " x ".join(parts) or "1"
        if self.det_constraint is not None:
            s = f"S({s})"
        return s


@dataclass(frozen=True)
class Pi0Group:
    """Elementary abelian 2-group: {x in F_2^rank : d.x = 0} (no condition if d is None)."""

    ambient_rank: int
    det_constraint: tuple[int, ...] | None

    @property
    def basis(self) -> list[gf2.Vector]:
        if self.det_constraint is None:
            return [gf2.unit(self.ambient_rank, i) for i in range(self.ambient_rank)]
        return gf2.kernel_of_functional(self.det_constraint)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def order(self) -> int:
        return 2**self.rank

    def contains(self, v) -> bool:
        if len(v) != self.ambient_rank or any(x not in (0, 1) for x in v):
            return False
        return self.det_constraint is None or gf2.dot(self.det_constraint, v) == 0

    def elements(self) -> Iterator[gf2.Vector]:
        yield from gf2.span_elements(self.basis, self.ambient_rank)


def centralizer(h: HomClass) -> CentralizerDescriptor:
    """Block decomposition of the centralizer of the image of h."""
    kinds = _BLOCK_KIND[_ambient_kind(h.target)]
    blocks = []
    for idx, c in enumerate(h.constituents):
        fs = COMPLEX if c.pair else c.irrep.fs_type
        real_dim = c.irrep.dim_c * (2 if c.pair else 1)
        blocks.append(Block(kinds[fs], c.mult, idx, real_dim))
    constraint = None
    if h.target.family == "SO":
        constraint = tuple(b.real_dim % 2 for b in blocks if b.kind == "O")
    return CentralizerDescriptor(h.target, tuple(blocks), constraint)


def pi0(c: CentralizerDescriptor | HomClass) -> Pi0Group:
    if isinstance(c, HomClass):
        c = centralizer(c)
    return Pi0Group(len(c.o_blocks), c.det_constraint)


def pi0_inclusion(alpha: HomClass, gamma: HomClass | None = None) -> list[gf2.Vector]:
    """Matrix (rows: O-blocks of Z_gamma, columns: O-blocks of Z_alpha) of the inclusion on pi_0.

    The reflection in the block of an alpha-constituent V acts as -1 on one copy
    of V, hence as a product of b reflections in the block of each gamma-constituent
    mu occurring b times in V restricted to SO(n-1).
    """
    if gamma is None:
        gamma = restrict(alpha)
    elif gamma != restrict(alpha):
        raise ValidationError(f"{gamma} is not the restriction of {alpha}")
    ca, cg = centralizer(alpha), centralizer(gamma)
    cols = []
    for blk in ca.o_blocks:
        col = [0] * len(cg.o_blocks)
        v = alpha.constituents[blk.constituent].irrep
        branched = v.branch()
        for row, gblk in enumerate(cg.o_blocks):
            mu = gamma.constituents[gblk.constituent].irrep
            col[row] = branched.get(mu, 0) % 2
        cols.append(col)
    return [tuple(cols[j][i] for j in range(len(cols))) for i in range(len(cg.o_blocks))]


def image_of(alpha: HomClass, gamma: HomClass | None = None) -> list[gf2.Vector]:
    """Generators of the image of pi_0(Z_alpha) in the ambient F_2-space of pi_0(Z_gamma)."""
    matrix = pi0_inclusion(alpha, gamma)
    source = pi0(alpha)
    n = len(matrix)
    if n == 0:
        return []
    return gf2.rref([gf2.apply(matrix, v) for v in source.basis], n)
