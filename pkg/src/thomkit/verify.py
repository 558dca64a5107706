"""Mechanical checks of the lowering, specialization and product identities.

Each check returns a :class:`CheckReport`.  Expected values come from
``data/golden.json``, where every entry carries a provenance kind
(``published``, ``trivial`` or ``derived``).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Callable

from .algebra import Polynomial, TruncatedSeries, Variable, format_poly, parse_poly, rename_family
from .catalog import (
    ALGEBRAS,
    CATALOG,
    DEFAULT_A3_POLICY,
    BoardmanSymbol,
    aij,
    codim_contact,
    codim_sigma_ij,
    gtp_sigma_r,
    shape_sigma_ij,
    specialize,
    thom_polynomial,
    ts_terms,
)
from .lowering import lower, twist_expand, unfolding_twist
from .schur import Partition, from_schur, jacobi_trudi, schur_positive, to_schur

DEFAULT_SEED = 1
DEFAULT_TRIALS = 200
DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_TERMS = 6
DEFAULT_MAX_COEFF = 9


@lru_cache(maxsize=None)
def golden() -> dict[str, Any]:
    text = resources.files("thomkit").joinpath("data/golden.json").read_text(encoding="utf-8")
    return json.loads(text)


@dataclass
class CheckReport:
    name: str
    passed: bool
    anchor: str
    provenance: str
    details: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        out = {
            "check": self.name,
            "status": self.status,
            "anchor": self.anchor,
            "provenance": self.provenance,
            "details": self.details,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def counterexample(expected: Polynomial, actual: Polynomial) -> str | None:
    """Smallest term of ``expected - actual`` in graded order, or ``None`` if equal."""
    diff = expected - actual
    if not diff:
        return None
    m, c = diff.sorted_terms()[0]
    return format_poly(Polynomial({m: c}))


def _compare(expected: Polynomial, actual: Polynomial) -> dict[str, Any]:
    out = {"expected": format_poly(expected), "actual": format_poly(actual)}
    witness = counterexample(expected, actual)
    if witness is not None:
        out["counterexample"] = witness
    return out


# random polynomials


def random_partition(rng: random.Random, n: int) -> list[int]:
    parts = []
    while n:
        p = rng.randint(1, n)
        parts.append(p)
        n -= p
    return sorted(parts, reverse=True)


def random_homogeneous(
    rng: random.Random,
    family: str,
    degree: int,
    max_terms: int = DEFAULT_MAX_TERMS,
    max_coeff: int = DEFAULT_MAX_COEFF,
) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = rng.choice([-1, 1]) * rng.randint(1, max_coeff)
        terms.append(([(Variable(family, u), 1) for u in random_partition(rng, degree)], coeff))
    return Polynomial.from_terms(terms)


# checks named in the verification contract


def check_flat_oracle(
    trials: int = DEFAULT_TRIALS,
    max_degree: int = DEFAULT_MAX_DEGREE,
    seed: int = DEFAULT_SEED,
    max_terms: int = DEFAULT_MAX_TERMS,
    max_coeff: int = DEFAULT_MAX_COEFF,
) -> CheckReport:
    """Compare the ``y`` parts of the sharp substitution with lowering, on random input."""
    rng = random.Random(seed)
    num, den = unfolding_twist()
    comparisons = 0
    for trial in range(trials):
        degree = rng.randint(1, max_degree)
        p = random_homogeneous(rng, "cs", degree, max_terms, max_coeff)
        if not p:
            continue
        expansion = twist_expand(p, num, den, cap=degree)
        q = rename_family(p, "cs", "c")
        for i in range(degree + 1):
            comparisons += 1
            via_twist = expansion.by_lowering_order(i)
            via_lower = lower(q, i)
            if via_twist != via_lower:
                details = {"trial": trial, "poly": format_poly(p), "order": i}
                details.update(_compare(via_twist, via_lower))
                return CheckReport("flat-oracle-random", False, "sharp substitution equals lowering",
                                   "derived", details, seed)
    return CheckReport(
        "flat-oracle-random",
        True,
        "sharp substitution equals lowering",
        "derived",
        {"trials": trials, "max_degree": max_degree, "max_terms": max_terms,
         "max_coeff": max_coeff, "comparisons": comparisons},
        seed,
    )


def check_tpflat_pair(
    p_sharp: Polynomial,
    q: Polynomial,
    gap: int,
    expected_k: int = 1,
    name: str = "tpflat-pair",
    provenance: str = "derived",
) -> CheckReport:
    """``lower(p_sharp, i)`` vanishes for ``gap < i <= gap + 3`` and equals ``expected_k * q`` at ``gap``."""
    dp, dq = p_sharp.degree or 0, q.degree or 0
    if dp - dq != gap:
        raise ValueError(f"degree gap is {dp - dq}, expected {gap}")
    anchor = "lowering by the codimension gap gives k_eta times the smaller Thom polynomial"
    details: dict[str, Any] = {"gap": gap, "k_eta": expected_k}
    for i in range(gap + 1, gap + 4):
        residue = lower(p_sharp, i)
        if residue:
            details.update({"order": i, "counterexample": counterexample(residue, Polynomial())})
            return CheckReport(name, False, anchor, provenance, details)
    cmp = _compare(q * expected_k, lower(p_sharp, gap))
    details.update(cmp)
    return CheckReport(name, "counterexample" not in cmp, anchor, provenance, details)


def check_product_masik() -> CheckReport:
    """Product rule with the factor ``x -> x^2``: the top ``y`` parts of the twisted sharp polynomial."""
    g = golden()["masik"]
    sharp = parse_poly(g["sharp"])
    num = TruncatedSeries.from_graded(parse_poly(g["twist_num"]))
    den = TruncatedSeries.from_graded(parse_poly(g["twist_den"]))
    expansion = twist_expand(sharp, num, den)
    results: dict[str, Any] = {}
    ok = True
    for e in g["vanishing"]:
        part = expansion.part(e)
        results[f"y^{e}"] = {"expected": "0", "actual": format_poly(part), "status": "pass" if not part else "fail"}
        ok &= not part
    for e, text in g["parts"].items():
        cmp = _compare(parse_poly(text), expansion.part(int(e)))
        cmp["status"] = "fail" if "counterexample" in cmp else "pass"
        results[f"y^{e}"] = cmp
        ok &= cmp["status"] == "pass"
    top = expansion.part(max(int(e) for e in g["parts"]))
    proportional = top == parse_poly(g["eta"]) * g["constant"]
    results["proportional_to_eta"] = {"constant": g["constant"], "status": "pass" if proportional else "fail"}
    ok &= proportional
    return CheckReport("product-masik", ok, g["anchor"], g["provenance"], {"parts": results})


# suites


def _lowering_example() -> CheckReport:
    g = golden()["lowering_example"]
    result = lower(parse_poly(g["poly"]), g["order"])
    text = format_poly(result)
    details = _compare(parse_poly(g["expected"]), result)
    details["byte_exact"] = text == g["expected"]
    ok = details["byte_exact"] and "counterexample" not in details
    return CheckReport("lowering-example", ok, g["anchor"], g["provenance"], details)


def _flat_fixture(key: str, name: str) -> CheckReport:
    g = golden()[key]
    p = parse_poly(g["poly"])
    expansion = twist_expand(p, *unfolding_twist())
    via_twist = expansion.by_lowering_order(2)
    via_lower = lower(rename_family(p, "cs", "c"), 2)
    details = _compare(parse_poly(g["lowered"]), via_twist)
    details["matches_lowering"] = via_twist == via_lower
    ok = details["matches_lowering"] and "counterexample" not in details
    return CheckReport(name, ok, g["anchor"], g["provenance"], details)


def _flat_suite(seed: int) -> list[CheckReport]:
    return [
        _lowering_example(),
        _flat_fixture("single_monomial", "flat-single-monomial"),
        _flat_fixture("a2_sharp", "flat-a2-sharp"),
        check_flat_oracle(seed=seed),
    ]


def _tpflat_suite(seed: int) -> list[CheckReport]:
    reports = [
        check_tpflat_pair(thom_polynomial("A2", 1), thom_polynomial("A2", 0), 2, 1,
                          "tpflat-a2-k1-k0", "published"),
        check_tpflat_pair(thom_polynomial("A2", 2), thom_polynomial("A2", 1), 2, 1, "tpflat-a2-k2-k1"),
        check_tpflat_pair(specialize(gtp_sigma_r(2), 1), specialize(gtp_sigma_r(2), 0), 2, 1,
                          "tpflat-sigma2-k1-k0"),
    ]
    for name, entry in CATALOG.items():
        for k in range(4):
            reports.append(
                check_tpflat_pair(
                    thom_polynomial(name, k + 1),
                    thom_polynomial(name, k),
                    entry.algebra.factors,
                    entry.algebra.k_eta,
                    f"tpflat-{name.lower()}-k{k + 1}-k{k}",
                )
            )
    for r in range(1, 4):
        for k in range(3):
            reports.append(
                check_tpflat_pair(specialize(gtp_sigma_r(r), k + 1), specialize(gtp_sigma_r(r), k), r, 1,
                                  f"tpflat-sigma{r}-k{k + 1}-k{k}")
            )
    return reports


def _shape_violations(p: Polynomial, factors: int, degree: int) -> list[str]:
    return [
        format_poly(Polynomial({m: c}))
        for m, c in p
        if m.factor_count != factors or m.degree != degree
    ]


def _shapes_suite(seed: int) -> list[CheckReport]:
    reports = []
    bad: dict[str, list[str]] = {}
    for name, entry in CATALOG.items():
        a = entry.algebra
        for w in range(1, 5):
            v = _shape_violations(ts_terms(name, w), a.factors, a.d_degree)
            if v:
                bad[f"{name}/W={w}"] = v
    reports.append(CheckReport("shape-thom-series", not bad,
                               "every term has delta-1 factors and degree gamma-delta+1",
                               "published", {"violations": bad}))

    bad = {}
    for r in range(1, 5):
        v = _shape_violations(gtp_sigma_r(r), r, r * (r - 1))
        if v:
            bad[f"r={r}"] = v
    reports.append(CheckReport("shape-sigma-r", not bad, "corank-r series has r factors and degree r(r-1)",
                               "published", {"violations": bad}))

    mismatches = []
    for r in range(1, 7):
        if shape_sigma_ij(BoardmanSymbol(r, 0)) != (r * (r - 1), r):
            mismatches.append(f"shape({r},0)")
        for k in range(4):
            if r <= 4 and codim_sigma_ij(BoardmanSymbol(r, 0), k) != r * (r + k):
                mismatches.append(f"codim({r},0,{k})")
    for i in range(1, 6):
        for j in range(i + 1):
            sym = BoardmanSymbol(i, j)
            degree, factors = shape_sigma_ij(sym)
            for k in range(5):
                if codim_sigma_ij(sym, k) != degree + factors * (k + 1):
                    mismatches.append(f"codim({i},{j},{k}) vs shape")
    g = golden()
    for row in g["codim_sigma_ij"]:
        if codim_sigma_ij(BoardmanSymbol(row["i"], row["j"]), row["k"]) != row["value"]:
            mismatches.append(f"codim({row['i']},{row['j']},{row['k']}) golden")
    for row in g["shape_sigma_ij"]:
        if shape_sigma_ij(BoardmanSymbol(row["i"], row["j"])) != (row["degree"], row["factors"]):
            mismatches.append(f"shape({row['i']},{row['j']}) golden")
    reports.append(CheckReport("shape-sigma-ij", not mismatches,
                               "second-order Boardman degree, factor count and codimension",
                               "derived", {"mismatches": mismatches}))

    mismatches = []
    for row in g["codim_contact"]:
        if codim_contact(row["algebra"], row["k"]) != row["value"]:
            mismatches.append(f"{row['algebra']} k={row['k']} golden")
    for name in CATALOG:
        for k in range(5):
            tp = thom_polynomial(name, k)
            if (tp.degree or 0) != codim_contact(name, k):
                mismatches.append(f"{name} k={k}: degree {tp.degree}")
    reports.append(CheckReport("codim-contact", not mismatches,
                               "contact codimension k(delta-1)+gamma equals the Thom polynomial degree",
                               "derived", {"mismatches": mismatches}))
    return reports


def _parse_expansion(raw: dict[str, str]) -> dict[Partition, Fraction]:
    return {Partition(int(x) for x in key.split(",")): Fraction(v) for key, v in raw.items()}


def _schur_suite(seed: int) -> list[CheckReport]:
    reports = []
    bad = []
    for row in golden()["schur"]:
        got = to_schur(parse_poly(row["poly"]))
        if got != _parse_expansion(row["expansion"]):
            bad.append({"poly": row["poly"], "actual": {str(k): str(v) for k, v in got.items()}})
    reports.append(CheckReport("schur-golden", not bad, "Schur expansions of small Thom polynomials",
                               "derived", {"mismatches": bad}))

    rng = random.Random(seed)
    failures = []
    for trial in range(100):
        degree = rng.randint(1, DEFAULT_MAX_DEGREE)
        p = random_homogeneous(rng, "c", degree)
        if from_schur(to_schur(p)) != p:
            failures.append({"trial": trial, "poly": format_poly(p)})
            break
    reports.append(CheckReport("schur-round-trip", not failures, "Schur basis change is exact",
                               "derived", {"trials": 100, "failures": failures}, seed))

    bad = []
    for r in range(1, 4):
        for k in range(3):
            got = to_schur(specialize(gtp_sigma_r(r), k))
            want = {Partition([k + r] * r): Fraction(1)}
            if got != want:
                bad.append(f"r={r} k={k}: {got}")
    reports.append(CheckReport("schur-gtp-rectangle", not bad,
                               "Porteous determinants are single rectangular Schur polynomials",
                               "derived", {"mismatches": bad}))

    negative = []
    for name in CATALOG:
        for k in range(4):
            for w in range(1, 5):
                verdict = schur_positive(specialize(ts_terms(name, w), k))
                if not verdict.positive:
                    negative.append(f"{name} k={k} W={w}")
    reports.append(CheckReport("schur-positivity", not negative,
                               "catalog Thom polynomials are Schur positive",
                               "published", {"negative": negative}))
    return reports


def _catalog_suite(seed: int) -> list[CheckReport]:
    reports = []
    g = golden()["a2_series"]
    mismatches = {}
    for key, got in (
        ("window_2", ts_terms("A2", 2)),
        ("window_4", ts_terms("A2", 4)),
        ("k0", specialize(ts_terms("A2", 4), 0)),
        ("k1", specialize(ts_terms("A2", 4), 1)),
    ):
        if format_poly(got) != g[key]:
            mismatches[key] = format_poly(got)
    for k in range(4):
        if thom_polynomial("A0", k) != 1:
            mismatches[f"A0 k={k}"] = format_poly(thom_polynomial("A0", k))
        if thom_polynomial("A1", k) != Polynomial.var("c", k + 1):
            mismatches[f"A1 k={k}"] = format_poly(thom_polynomial("A1", k))
    reports.append(CheckReport("catalog-golden", not mismatches, g["anchor"], g["provenance"],
                               {"mismatches": mismatches}))

    fractional = []
    for name in CATALOG:
        for k in range(4):
            for w in range(1, 5):
                if not specialize(ts_terms(name, w), k).has_integer_coefficients():
                    fractional.append(f"{name} k={k} W={w}")
    reports.append(CheckReport("catalog-integrality", not fractional,
                               "specialized Thom series have integer coefficients", "derived",
                               {"fractional": fractional}))

    vanishing = []
    for name, entry in CATALOG.items():
        gap = entry.algebra.factors
        for k in range(4):
            tp = thom_polynomial(name, k + 1)
            for i in range(gap + 1, gap + 4):
                if lower(tp, i):
                    vanishing.append(f"{name} k={k + 1} order={i}")
    reports.append(CheckReport("catalog-vanishing-above-gap", not vanishing,
                               "lowering past the codimension gap vanishes", "derived",
                               {"nonzero": vanishing}))

    reports.append(_a3_policy_report())

    problems = []
    for row in golden()["aij"]:
        if aij(row["i"], row["j"]) != Fraction(row["value"]):
            problems.append(f"aij({row['i']},{row['j']})")
    for i in range(9):
        for j in range(9):
            if aij(i, j) != aij(j, i):
                problems.append(f"asymmetric at ({i},{j})")
            if aij(i, j) < 0:
                problems.append(f"negative at ({i},{j})")
    reports.append(CheckReport("catalog-aij", not problems, "generating function of the A3 coefficients",
                               "derived", {"problems": problems}))
    return reports


def _a3_policy_report() -> CheckReport:
    g = golden()["a3_k0"]
    details: dict[str, Any] = {"policy": DEFAULT_A3_POLICY}
    k0 = thom_polynomial("A3", 0)
    details.update(_compare(parse_poly(g["expected"]), k0))
    ok = "counterexample" not in details
    per_k = {}
    for k in range(4):
        tp = thom_polynomial("A3", k)
        verdict = schur_positive(tp)
        per_k[str(k)] = {"integral": tp.has_integer_coefficients(), "schur_positive": verdict.positive}
        ok &= per_k[str(k)]["integral"] and verdict.positive
    details["specializations"] = per_k
    literal = ts_terms("A3", 2, policy="literal")
    details["literal_policy_integral"] = specialize(literal, 0).has_integer_coefficients()
    return CheckReport("catalog-a3-policy", ok, g["anchor"], g["provenance"], details)


def _masik_suite(seed: int) -> list[CheckReport]:
    return [check_product_masik()]


SUITES: dict[str, Callable[[int], list[CheckReport]]] = {
    "flat": _flat_suite,
    "tpflat": _tpflat_suite,
    "shapes": _shapes_suite,
    "schur": _schur_suite,
    "masik": _masik_suite,
    "catalog": _catalog_suite,
}


def run_suite(name: str = "all", seed: int = DEFAULT_SEED) -> list[CheckReport]:
    if name == "all":
        return [r for suite in SUITES.values() for r in suite(seed)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}") from None
    return suite(seed)


def catalog_metadata() -> dict[str, Any]:
    return {name: {"delta": a.delta, "gamma": a.gamma} for name, a in ALGEBRAS.items()}
