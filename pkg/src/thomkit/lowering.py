"""Lowering operators on polynomials in indexed classes, and the sharp substitution.

``lower(p, i)`` sums, over every ``i``-element set of factor slots of each
monomial (slots counted with multiplicity), the monomial with the chosen
indices decreased by one.  For families with ``x[0] = 1`` and ``x[<0] = 0``
the result is renormalized; in the ``d`` family indices just shift.

``twist_expand`` is the independent route to the same numbers: substitute the
twisted classes ``cs[i]`` (coefficients of ``(1 + c[1] t + ...) * xi``) into a
polynomial and collect the powers of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .algebra import (
    DEFAULT_CAP,
    Monomial,
    Polynomial,
    TruncatedSeries,
    Variable,
    normalize,
    twist_total_class,
)
from .algebra.polynomial import accumulate


def _single_family(p: Polynomial) -> str | None:
    fams = p.families
    if "y" in fams:
        raise ValueError("lowering is defined on indexed families only")
    if len(fams) > 1:
        raise ValueError(f"lowering needs a single variable family, got {sorted(fams)}")
    return next(iter(fams), None)


def lower_slots(indices: Sequence[int], i: int, family: str) -> Polynomial:
    """Lower a raw product ``family[u_1] * ... * family[u_r]`` by ``i``.

    ``indices`` may contain index-0 slots, which is how padding a monomial
    with unit factors is expressed.
    """
    if i < 0:
        raise ValueError("lowering degree must be nonnegative")
    r = len(indices)
    acc: dict[Monomial, Fraction] = {}
    for chosen in combinations(range(r), i):
        picked = set(chosen)
        m = normalize((Variable(family, u - 1 if k in picked else u), 1) for k, u in enumerate(indices))
        if m is not None:
            accumulate(acc, m, Fraction(1))
    return Polynomial(acc)


def lower(p: Polynomial, i: int) -> Polynomial:
    """The lowering operator of order ``i``, extended linearly."""
    if i < 0:
        raise ValueError("lowering degree must be nonnegative")
    family = _single_family(p)
    acc: dict[Monomial, Fraction] = {}
    for m, c in p:
        if m.factor_count < i:
            continue
        for lm, lc in lower_slots([v.index for v in m.slots()], i, family or "x"):
            accumulate(acc, lm, lc * c)
    return Polynomial(acc)


def shift_indices(p: Polynomial, s: int) -> Polynomial:
    """Rename every ``d[i]`` to ``d[i+s]``."""
    stray = p.families - {"d"}
    if stray:
        raise ValueError(f"index shifting applies to the d family only, found {sorted(stray)}")
    return p.map_variables(lambda v: Variable("d", v.index + s))


@dataclass(frozen=True)
class YExpansion:
    """Parts of a substituted polynomial by power of ``y``.

    ``parts[e]`` is the coefficient of ``y^e``, a polynomial in the ``c``
    classes of degree ``top_degree - e``.
    """

    top_degree: int
    parts: Mapping[int, Polynomial] = field(default_factory=dict)

    def part(self, e: int) -> Polynomial:
        return self.parts.get(e, Polynomial())

    def by_lowering_order(self, i: int) -> Polynomial:
        """The part that should match ``lower(p, i)``.

        That is the ``y^i`` coefficient, of degree ``top_degree - i``: for
        ``p = cs[1] = c[1] + y`` lowering once gives 1, the coefficient of ``y``.
        """
        return self.part(i)

    def reconstruct(self) -> Polynomial:
        y = Polynomial.var("y")
        total = Polynomial()
        for e, q in self.parts.items():
            total = total + q * y**e
        return total


def twist_expand(
    p: Polynomial,
    xi_num: TruncatedSeries,
    xi_den: TruncatedSeries,
    cap: int | None = None,
) -> YExpansion:
    """Substitute the twisted classes into ``p`` (written in ``cs``) and split by ``y``."""
    stray = p.families - {"cs"}
    if stray:
        raise ValueError(f"twist_expand expects a polynomial in cs, found {sorted(stray)}")
    top = p.degree or 0
    needed = max((v.index for m, _ in p for v, _ in m.factors), default=0)
    if cap is None:
        cap = max(DEFAULT_CAP, top)
    if needed > cap or needed > xi_num.cap or needed > xi_den.cap:
        raise ValueError(f"polynomial uses cs[{needed}], beyond the series cap")
    cap = min(cap, xi_num.cap, xi_den.cap)
    twisted = twist_total_class(
        TruncatedSeries.total_class("c", cap), xi_num.truncate(cap), xi_den.truncate(cap)
    )
    images = {Variable("cs", i): twisted[i] for i in range(1, cap + 1)}
    expanded = p.substitute(images)
    parts = expanded.collect(Variable("y"))
    for e, q in parts.items():
        if q and q.degree != top - e:
            raise AssertionError(f"y^{e} part is not of degree {top - e}")
    full = {e: parts.get(e, Polynomial()) for e in range(top + 1)}
    extra = set(parts) - set(full)
    if extra:
        raise AssertionError(f"unexpected y powers {sorted(extra)}")
    return YExpansion(top, full)


def unfolding_twist(cap: int = DEFAULT_CAP) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The twist ``(1 + y t) / 1`` of adding one target dimension."""
    y = Polynomial.var("y")
    return TruncatedSeries.from_coefficients([1, y], cap), TruncatedSeries.one(cap)


__all__ = [
    "YExpansion",
    "lower",
    "lower_slots",
    "shift_indices",
    "twist_expand",
    "unfolding_twist",
]
