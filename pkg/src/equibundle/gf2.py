"""Small linear algebra over F_2 on tuples of 0/1."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple((a + b) % 2 for a, b in zip(u, v))


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v)) % 2


def zero(n: int) -> Vector:
    return (0,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def rref(vectors: Iterable[Sequence[int]], n: int) -> list[Vector]:
    """Reduced row echelon basis; pivots are the leading (leftmost) ones."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(n):
        idx = next((i for i, r in enumerate(rows) if r[col]), None)
        if idx is None:
            continue
        piv = rows.pop(idx)
        rows = [add(r, piv) if r[col] else r for r in rows]
        rows = [list(r) for r in rows if any(r)]
        basis = [list(add(b, piv)) if b[col] else b for b in basis]
        basis.append(piv)
        pivots.append(col)
    return [tuple(b) for b in basis]


def reduce(v: Sequence[int], basis: Sequence[Vector]) -> Vector:
    """Lexicographically least element of v + span(basis) (basis in RREF)."""
    v = tuple(v)
    for b in basis:
        lead = b.index(1)
        if v[lead]:
            v = add(v, b)
    return v


def span_elements(basis: Sequence[Vector], n: int) -> list[Vector]:
    out = []
    for coeffs in product((0, 1), repeat=len(basis)):
        v = zero(n)
        for c, b in zip(coeffs, basis):
            if c:
                v = add(v, b)
        out.append(v)
    return out


def kernel_of_functional(d: Sequence[int]) -> list[Vector]:
    """Basis of {x : sum d_i x_i = 0}."""
    n = len(d)
    ones = [i for i in range(n) if d[i] % 2]
    basis = [unit(n, i) for i in range(n) if not d[i] % 2]
    if ones:
        first = ones[0]
        basis += [add(unit(n, first), unit(n, j)) for j in ones[1:]]
    return rref(basis, n)


def apply(matrix: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    """matrix is a list of rows."""
    return tuple(dot(row, v) for row in matrix)


def rank(vectors: Iterable[Sequence[int]], n: int) -> int:
    return len(rref(vectors, n))
