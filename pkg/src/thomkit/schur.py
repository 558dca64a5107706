"""Schur polynomials in the quotient classes and change of basis.

The classes ``c[i]`` play the role of complete symmetric functions, so
``s_lam = det(c[lam_i + j - i])``.  With this convention a Giambelli-Thom-Porteous
determinant specializes to a single rectangular Schur polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .algebra import Polynomial, det

MAX_WEIGHT = 16


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if largest is None:
        largest = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@lru_cache(maxsize=None)
def jacobi_trudi(lam: Partition) -> Polynomial:
    lam = Partition(lam)
    n = len(lam)
    if n == 0:
        return Polynomial.constant(1)
    matrix = [[Polynomial.var("c", lam[i] + j - i) for j in range(n)] for i in range(n)]
    return det(matrix)


def _shape(m) -> Partition:
    return Partition(sorted((v.index for v in m.slots()), reverse=True))


def to_schur(p: Polynomial, max_weight: int = MAX_WEIGHT) -> dict[Partition, Fraction]:
    """Coefficients of ``p`` in the Schur basis.

    Every Chern monomial ``c[mu_1]...c[mu_l]`` is ``s_mu`` plus Schur
    polynomials of lexicographically larger shape, so peeling off the
    lexicographically smallest monomial is a triangular solve.
    """
    stray = p.families - {"c"}
    if stray:
        raise ValueError(f"Schur expansion expects a polynomial in c, found {sorted(stray)}")
    degree = p.degree  # raises on inhomogeneous input
    if degree is not None and degree > max_weight:
        raise ValueError(f"degree {degree} exceeds the partition weight cap {max_weight}")
    remaining = p
    out: dict[Partition, Fraction] = {}
    while remaining:
        m, coeff = min(remaining, key=lambda mc: _shape(mc[0]))
        lam = _shape(m)
        out[lam] = coeff
        remaining = remaining - jacobi_trudi(lam) * coeff
    return dict(sorted(out.items(), reverse=True))


def from_schur(expansion: dict[Partition, Fraction]) -> Polynomial:
    total = Polynomial()
    for lam, coeff in expansion.items():
        total = total + jacobi_trudi(Partition(lam)) * coeff
    return total


class SchurVerdict(NamedTuple):
    positive: bool
    expansion: dict[Partition, Fraction]


def schur_positive(p: Polynomial) -> SchurVerdict:
    expansion = to_schur(p)
    return SchurVerdict(all(c >= 0 for c in expansion.values()), expansion)
