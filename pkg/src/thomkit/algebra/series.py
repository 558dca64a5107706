"""Truncated power series in a formal parameter ``t`` with polynomial coefficients.

Total Chern classes ``1 + c[1] t + c[2] t^2 + ...`` live here, together with
the quotient and twist constructions built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .polynomial import Polynomial, Scalar

DEFAULT_CAP = 12


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Polynomial | Scalar], cap: int = DEFAULT_CAP) -> TruncatedSeries:
        items = [c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs]
        items = items[: cap + 1] + [Polynomial()] * (cap + 1 - len(items))
        return cls(tuple(items))

    @classmethod
    def one(cls, cap: int = DEFAULT_CAP) -> TruncatedSeries:
        return cls.from_coefficients([1], cap)

    @classmethod
    def total_class(cls, family: str, cap: int = DEFAULT_CAP) -> TruncatedSeries:
        """``1 + f[1] t + ... + f[cap] t^cap`` for an indexed family ``f``."""
        return cls.from_coefficients([Polynomial.var(family, i) for i in range(cap + 1)], cap)

    @classmethod
    def from_graded(cls, p: Polynomial, cap: int = DEFAULT_CAP) -> TruncatedSeries:
        """Read ``p`` as a total class: its degree-``i`` part becomes the ``t^i`` coefficient."""
        by_degree: dict[int, dict] = {}
        for m, c in p:
            if m.degree < 0:
                raise ValueError("a graded total class cannot have negative-degree terms")
            by_degree.setdefault(m.degree, {})[m] = c
        coeffs = [Polynomial(by_degree.get(i, {})) for i in range(cap + 1)]
        if any(d > cap for d in by_degree):
            raise ValueError(f"total class has terms above the cap {cap}")
        return cls(tuple(coeffs))

    def __getitem__(self, i: int) -> Polynomial:
        return self.coeffs[i]

    def truncate(self, cap: int) -> TruncatedSeries:
        if cap > self.cap:
            raise ValueError(f"cannot extend a series truncated at {self.cap} to {cap}")
        return TruncatedSeries(self.coeffs[: cap + 1])

    def _check_cap(self, other: TruncatedSeries) -> None:
        if self.cap != other.cap:
            raise ValueError(f"series caps differ ({self.cap} vs {other.cap})")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_cap(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_cap(other)
        out = []
        for n in range(self.cap + 1):
            acc = Polynomial()
            for k in range(n + 1):
                if self.coeffs[k] and other.coeffs[n - k]:
                    acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return TruncatedSeries(tuple(out))

    def inverse(self) -> TruncatedSeries:
        if self.coeffs[0] != 1:
            raise ValueError("only series with constant term 1 are inverted")
        inv = [Polynomial.constant(1)]
        for n in range(1, self.cap + 1):
            acc = Polynomial()
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = acc - self.coeffs[k] * inv[n - k]
            inv.append(acc)
        return TruncatedSeries(tuple(inv))

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __str__(self) -> str:
        parts = [f"({c})*t^{i}" if i else f"({c})" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def series_mul(s: TruncatedSeries, r: TruncatedSeries) -> TruncatedSeries:
    return s * r


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.inverse()


def quotient_total_class(b: TruncatedSeries, a: TruncatedSeries) -> TruncatedSeries:
    """Quotient class ``b / a``; its ``t^i`` coefficient is ``c[i]`` in the a- and b-classes."""
    return b * a.inverse()


def twist_total_class(c: TruncatedSeries, xi_num: TruncatedSeries, xi_den: TruncatedSeries) -> TruncatedSeries:
    """Multiply the total class ``c`` by ``xi_num / xi_den``.

    The twist factor must be written in the ``y`` class alone.  The ``t^i``
    coefficient of the result is the twisted class ``cs[i]`` in terms of the
    ``c`` variables and ``y``.
    """
    for series in (xi_num, xi_den):
        for coeff in series.coeffs:
            stray = coeff.families - {"y"}
            if stray:
                raise ValueError(f"twist factor may only involve y, found {sorted(stray)}")
    return c * xi_num * xi_den.inverse()

