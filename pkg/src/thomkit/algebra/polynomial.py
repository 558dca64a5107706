"""Sparse polynomials with exact rational coefficients over indexed variable families.

Every variable belongs to a *family* (``a``, ``b``, ``c``, ``cs``, ``d``, ``x``
or the index-free ``y``).  Families carry the conventions used for total
classes: ``c[0] = 1`` and ``c[i] = 0`` for ``i < 0``.  The ``d`` family is the
exception, its non-positive indices are genuine variables.

Terms are kept in the order they are first produced.  This makes output
reproducible for a given computation without imposing an order that the
callers did not ask for; :func:`graded_key` gives a canonical order when one
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    indexed: bool
    unit_at_zero: bool
    vanishes_below_zero: bool

    def grading(self, index: int) -> int:
        return index if self.indexed else 1


FAMILIES: dict[str, FamilySpec] = {
    "a": FamilySpec("a", True, True, True),
    "b": FamilySpec("b", True, True, True),
    "c": FamilySpec("c", True, True, True),
    "cs": FamilySpec("cs", True, True, True),
    "d": FamilySpec("d", True, False, False),
    "x": FamilySpec("x", True, True, True),
    "y": FamilySpec("y", False, False, False),
}


class Variable(NamedTuple):
    family: str
    index: int = 0

    @property
    def spec(self) -> FamilySpec:
        return FAMILIES[self.family]

    @property
    def degree(self) -> int:
        return self.spec.grading(self.index)


@dataclass(frozen=True)
class Monomial:
    """A normalized product of variables; ``factors`` is sorted by (family, index)."""

    factors: tuple[tuple[Variable, int], ...] = ()

    @property
    def degree(self) -> int:
        return sum(v.degree * e for v, e in self.factors)

    @property
    def factor_count(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def families(self) -> frozenset[str]:
        return frozenset(v.family for v, _ in self.factors)

    def exponent(self, var: Variable) -> int:
        for v, e in self.factors:
            if v == var:
                return e
        return 0

    def slots(self) -> list[Variable]:
        """Factors repeated by multiplicity, in canonical order."""
        return [v for v, e in self.factors for _ in range(e)]

    def without(self, family: str) -> Monomial:
        return Monomial(tuple(f for f in self.factors if f[0].family != family))

    def __mul__(self, other: Monomial) -> Monomial:
        merged = normalize(self.factors + other.factors)
        assert merged is not None  # both inputs already normalized
        return merged


ONE = Monomial()


def _check_variable(var: Variable, exponent: int) -> None:
    if var.family not in FAMILIES:
        raise ValueError(f"unknown variable family {var.family!r}")
    if not FAMILIES[var.family].indexed and var.index != 0:
        raise ValueError(f"family {var.family!r} takes no index")
    if not isinstance(exponent, int) or exponent <= 0:
        raise ValueError(f"exponent must be a positive integer, got {exponent!r}")


def normalize(factors: Iterable[tuple[Variable, int]]) -> Monomial | None:
    """Canonicalize a raw product of ``(variable, exponent)`` pairs.

    Unit-at-zero factors of index 0 are dropped.  Returns ``None`` when a
    factor of a vanishing family has negative index, i.e. the product is 0.
    """
    powers: dict[Variable, int] = {}
    for var, e in factors:
        var = Variable(*var)
        _check_variable(var, e)
        spec = FAMILIES[var.family]
        if spec.vanishes_below_zero and var.index < 0:
            return None
        if spec.unit_at_zero and var.index == 0:
            continue
        powers[var] = powers.get(var, 0) + e
    return Monomial(tuple(sorted(powers.items())))


def graded_key(m: Monomial) -> tuple:
    return (m.degree, m.factors)


class Polynomial:
    """Immutable sparse polynomial: a map from :class:`Monomial` to a nonzero rational."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            accumulate(acc, m, Fraction(c))
        self._terms = acc
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, acc: dict[Monomial, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = acc
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls({ONE: c})

    @classmethod
    def var(cls, family: str, index: int = 0) -> Polynomial:
        return cls.monomial([(Variable(family, index), 1)])

    @classmethod
    def monomial(cls, factors: Iterable[tuple[Variable, int]], coeff: Scalar = 1) -> Polynomial:
        m = normalize(factors)
        return cls() if m is None else cls({m: coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Iterable[tuple[Variable, int]], Scalar]]) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for factors, c in terms:
            m = normalize(factors)
            if m is not None:
                accumulate(acc, m, Fraction(c))
        return cls._wrap(acc)

    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(ONE)

    @property
    def families(self) -> frozenset[str]:
        out: set[str] = set()
        for m in self._terms:
            out |= m.families
        return frozenset(out)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of a homogeneous polynomial; ``None`` for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: graded_key(mc[0]))

    # arithmetic

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            accumulate(acc, m, c)
        return Polynomial._wrap(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if not m1.factors:
                    m = m2
                elif not m2.factors:
                    m = m1
                else:
                    m = m1 * m2
                accumulate(acc, m, c1 * c2)
        return Polynomial._wrap(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # structural maps

    def map_variables(self, fn: Callable[[Variable], Variable]) -> Polynomial:
        """Rename every variable through ``fn`` and renormalize."""
        return Polynomial.from_terms(
            ([(fn(v), e) for v, e in m.factors], c) for m, c in self._terms.items()
        )

    def substitute(self, images: Mapping[Variable, Polynomial]) -> Polynomial:
        """Replace the given variables by polynomials; other variables are kept."""
        powers: dict[tuple[Variable, int], Polynomial] = {}

        def power(v: Variable, e: int) -> Polynomial:
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            kept = [(v, e) for v, e in m.factors if v not in images]
            term = Polynomial.monomial(kept, c)
            for v, e in m.factors:
                if v in images:
                    term = term * power(v, e)
                    if not term:
                        break
            for tm, tc in term._terms.items():
                accumulate(acc, tm, tc)
        return Polynomial._wrap(acc)

    def collect(self, var: Variable) -> dict[int, Polynomial]:
        """Group terms by the exponent of ``var``; the keys' parts no longer contain it."""
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            e = m.exponent(var)
            rest = Monomial(tuple(f for f in m.factors if f[0] != var))
            accumulate(parts.setdefault(e, {}), rest, c)
        return {e: Polynomial._wrap(t) for e, t in sorted(parts.items())}

    def filter(self, keep: Callable[[Monomial], bool]) -> Polynomial:
        return Polynomial._wrap({m: c for m, c in self._terms.items() if keep(m)})

    def __repr__(self) -> str:
        from .text import format_poly

        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)


def accumulate(acc: dict[Monomial, Fraction], m: Monomial, c: Fraction) -> None:
    if not c:
        return
    total = acc.get(m, 0) + c
    if total:
        acc[m] = total
    else:
        del acc[m]


def _coerce(x: object) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


def rename_family(p: Polynomial, source: str, target: str) -> Polynomial:
    """Move every variable of family ``source`` to ``target``, keeping indices."""
    return p.map_variables(lambda v: Variable(target, v.index) if v.family == source else v)


def det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along rows, memoized on the used columns."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    memo: dict[int, Polynomial] = {}

    def minor(row: int, used: int) -> Polynomial:
        if row == n:
            return Polynomial.constant(1)
        if used in memo:
            return memo[used]
        total = Polynomial()
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                sub = minor(row + 1, used | 1 << col)
                if sub:
                    total = total + entry * sub * sign
            sign = -sign
        memo[used] = total
        return total

    return minor(0, 0)
