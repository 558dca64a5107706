"""Thom series of contact singularities and Thom-Boardman classes.

A Thom series is a polynomial in the ``d`` family whose specialization
``d[i] -> c[i+k+1]`` gives the Thom polynomial for relative dimension
``k = m - n``.  Series are infinite; :func:`ts_terms` returns the finite part
whose ``d`` indices all have absolute value at most the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .algebra import Polynomial, Variable, det
from .algebra.polynomial import Monomial, accumulate, normalize

A3_POLICIES = ("second-sum-from-one", "literal")
DEFAULT_A3_POLICY = "second-sum-from-one"


class WindowError(ValueError):
    """A window outside the range where the catalog coefficients are anchored."""


@dataclass(frozen=True)
class AlgebraEntry:
    name: str
    delta: int
    gamma: int
    presentation: str
    defect: int | None = None
    k_eta: int = 1
    provisional: bool = False
    notes: str = ""

    def __post_init__(self) -> None:
        if self.delta < 1 or self.gamma < 0:
            raise ValueError(f"bad invariants for {self.name}: delta={self.delta}, gamma={self.gamma}")

    @property
    def factors(self) -> int:
        return self.delta - 1

    @property
    def d_degree(self) -> int:
        return self.gamma - self.delta + 1


@dataclass(frozen=True)
class ThomSeriesEntry:
    algebra: AlgebraEntry
    generator: Callable[[int, str], Polynomial] = field(repr=False)
    anchored_window: int | None = None
    policy: str | None = None


@dataclass(frozen=True)
class BoardmanSymbol:
    i: int
    j: int = 0

    def __post_init__(self) -> None:
        if self.i < 1 or not 0 <= self.j <= self.i:
            raise ValueError(f"Boardman symbol needs i >= j >= 0 and i >= 1, got ({self.i},{self.j})")


class _Builder:
    """Accumulates ``coeff * d[u1] d[u2] ...`` terms that fit in a window."""

    def __init__(self, window: int):
        self.window = window
        self.acc: dict[Monomial, Fraction] = {}

    def add(self, coeff: Fraction | int, *indices: int) -> None:
        if any(abs(u) > self.window for u in indices):
            return
        m = normalize((Variable("d", u), 1) for u in indices)
        accumulate(self.acc, m, Fraction(coeff))

    def build(self) -> Polynomial:
        return Polynomial(self.acc)


def _a0(window: int, policy: str) -> Polynomial:
    return Polynomial.constant(1)


def _a1(window: int, policy: str) -> Polynomial:
    return Polynomial.var("d", 0)


def _a2(window: int, policy: str) -> Polynomial:
    b = _Builder(window)
    b.add(1, 0, 0)
    for i in range(1, window + 1):
        b.add(2 ** (i - 1), -i, i)
    return b.build()


def _a3(window: int, policy: str) -> Polynomial:
    # Second sum starting at (0,0) gives d[0]^3 the coefficient 4/3; the
    # default starts it at i = j = 1.
    start = 1 if policy == "second-sum-from-one" else 0
    b = _Builder(window)
    for i in range(window + 1):
        b.add(2**i, -i, 0, i)
    for i in range(start, window + 1):
        for j in range(start, window + 1 - i):
            b.add(Fraction(2**i * 3**j, 3), -i, -j, i + j)
    for i in range(window + 1):
        for j in range(window + 1 - i):
            b.add(aij(i, j) / 2, -i - j, i, j)
    return b.build()


def _i22(window: int, policy: str) -> Polynomial:
    b = _Builder(window)
    for i in range(1, window + 1):
        b.add(Fraction(2**i, 4), -i, 1, i)
    for i in range(1, window + 1):
        b.add(-(2 ** (i - 1)), -i, 0, i + 1)
    for i in range(1, window + 1):
        for j in range(1, window + 1):
            b.add(Fraction(comb(i + j - 2, i - 1), 2), -i - j + 1, i, j)
    return b.build()


ALGEBRAS: dict[str, AlgebraEntry] = {
    "A0": AlgebraEntry("A0", 1, 0, "C", defect=0, notes="embedding"),
    "A1": AlgebraEntry("A1", 2, 1, "C[x]/(x^2)", defect=0, notes="fold, Whitney umbrella"),
    "A2": AlgebraEntry("A2", 3, 2, "C[x]/(x^3)", defect=0, notes="cusp"),
    "A3": AlgebraEntry(
        "A3",
        4,
        3,
        "C[x]/(x^4)",
        defect=0,
        notes="second sum taken over i, j >= 1 by default (policy 'second-sum-from-one')",
    ),
    "I22": AlgebraEntry(
        "I22",
        4,
        4,
        "C[x,y]/(xy, x^2+y^2)",
        defect=0,
        provisional=True,
        notes="series supported by computer evidence, not proven",
    ),
}

CATALOG: dict[str, ThomSeriesEntry] = {
    "A0": ThomSeriesEntry(ALGEBRAS["A0"], _a0),
    "A1": ThomSeriesEntry(ALGEBRAS["A1"], _a1),
    # Only the first five A2 coefficients are printed; 2^(i-1) beyond i = 4
    # is an extrapolation.
    "A2": ThomSeriesEntry(ALGEBRAS["A2"], _a2, anchored_window=4),
    "A3": ThomSeriesEntry(ALGEBRAS["A3"], _a3, policy=DEFAULT_A3_POLICY),
    "I22": ThomSeriesEntry(ALGEBRAS["I22"], _i22),
}


def get_entry(name: str) -> ThomSeriesEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}") from None


def ts_terms(name: str, window: int, *, strict: bool = False, policy: str | None = None) -> Polynomial:
    """Terms of the Thom series ``name`` with every ``d`` index in ``[-window, window]``.

    With ``strict`` set, windows past the anchored range raise
    :class:`WindowError`.  ``policy`` selects the summation range for A3.
    """
    entry = get_entry(name)
    if window < 1:
        raise ValueError("window must be a positive integer")
    if strict and entry.anchored_window is not None and window > entry.anchored_window:
        raise WindowError(
            f"{name} coefficients are anchored up to window {entry.anchored_window}; "
            f"window {window} extrapolates"
        )
    if policy is None:
        policy = entry.policy or DEFAULT_A3_POLICY
    if policy not in A3_POLICIES:
        raise ValueError(f"unknown summation policy {policy!r}")
    return entry.generator(window, policy)


@lru_cache(maxsize=None)
def _numerator_coefficient(n: int) -> int:
    # u(1-u)/(1-3u) = u + sum_{n>=2} (3^(n-1) - 3^(n-2)) u^n
    if n <= 0:
        return 0
    if n == 1:
        return 1
    return 3 ** (n - 1) - 3 ** (n - 2)


@lru_cache(maxsize=None)
def aij(i: int, j: int) -> Fraction:
    """Coefficient of ``u^i v^j`` in ``(u(1-u)/(1-3u) + v(1-v)/(1-3v)) / (1-u-v)``."""
    if i < 0 or j < 0:
        raise ValueError("aij indices are nonnegative")
    total = 0
    for n in range(1, i + 1):
        total += _numerator_coefficient(n) * comb(i - n + j, j)
    for n in range(1, j + 1):
        total += _numerator_coefficient(n) * comb(i + j - n, i)
    return Fraction(total)


def gtp_sigma_r(r: int) -> Polynomial:
    """Giambelli-Thom-Porteous series ``det(d[r-1+j-i])`` for corank ``r``."""
    if r < 1:
        raise ValueError("corank must be positive")
    matrix = [[Polynomial.var("d", r - 1 + j - i) for j in range(1, r + 1)] for i in range(1, r + 1)]
    return det(matrix)


def specialize(p: Polynomial, k: int) -> Polynomial:
    """Substitute ``d[i] -> c[i+k+1]``; ``c[0] = 1`` and ``c[<0] = 0`` apply."""
    stray = p.families - {"d"}
    if stray:
        raise ValueError(f"specialize expects a polynomial in d, found {sorted(stray)}")
    return p.map_variables(lambda v: Variable("c", v.index + k + 1))


def sufficient_window(name: str, k: int) -> int:
    """Smallest window whose specialization at ``k`` already equals the full series'.

    A term survives ``d[i] -> c[i+k+1]`` only if every index is at least
    ``-(k+1)``; with ``f`` factors and d-degree ``D`` the largest index is
    then at most ``D + (f-1)(k+1)``.
    """
    a = get_entry(name).algebra
    if a.factors == 0:
        return 1
    return max(1, k + 1, a.d_degree + (a.factors - 1) * (k + 1))


def thom_polynomial(name: str, k: int, window: int | None = None, **kwargs) -> Polynomial:
    if window is None:
        window = sufficient_window(name, k)
    return specialize(ts_terms(name, window, **kwargs), k)


def codim_contact(entry: AlgebraEntry | str, k: int, *, strict: bool = False) -> int:
    """Codimension ``k(delta - 1) + gamma`` of the contact orbit."""
    if isinstance(entry, str):
        entry = get_entry(entry).algebra
    if strict and entry.defect is not None and k < entry.defect:
        raise ValueError(f"no stable germ with algebra {entry.name} at relative dimension {k}")
    return k * (entry.delta - 1) + entry.gamma


def codim_sigma_ij(sym: BoardmanSymbol, k: int) -> int:
    i, j = sym.i, sym.j
    twice = j * ((i + k) * (2 * i - j + 1) - 2 * (i - j))
    if twice % 2:
        raise ValueError(f"codimension of Sigma^({i},{j}) at k={k} is not an integer")
    return (i + k) * i + twice // 2


def shape_sigma_ij(sym: BoardmanSymbol) -> tuple[int, int]:
    """``(degree, factors)`` of the Thom series of ``Sigma^(i,j)``."""
    i, j = sym.i, sym.j
    twice = j * (2 * i * i - i * j - 3 * i + 3 * j - 1)
    if twice % 2:
        raise ValueError(f"degree of Sigma^({i},{j}) series is not an integer")
    return i * (i - 1) + twice // 2, i * (j + 1) - comb(j, 2)


def catalog_document() -> dict:
    """Machine-readable summary of the catalog."""
    entries = []
    for name, entry in CATALOG.items():
        a = entry.algebra
        entries.append(
            {
                "name": name,
                "presentation": a.presentation,
                "delta": a.delta,
                "gamma": a.gamma,
                "defect": a.defect,
                "k_eta": a.k_eta,
                "factors": a.factors,
                "d_degree": a.d_degree,
                "anchored_window": entry.anchored_window,
                "summation_policy": entry.policy,
                "provisional": a.provisional,
                "notes": a.notes,
            }
        )
    return {"entries": entries, "a3_policies": list(A3_POLICIES)}
