"""Text and JSON forms of polynomials.

Grammar::

    poly   := ['-'] term (('+' | '-') term)*
    term   := [rational] ('*'? factor)*
    factor := fam '[' int ']' ('^' nat)? | 'y' ('^' nat)?
    fam    := a | b | c | cs | d | x
    rational := int ['/' nat]

Example: ``d[0]^2 + d[-1]*d[1] + 2*d[-2]*d[2]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .polynomial import Polynomial, Variable, graded_key


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+)
      | (?P<fam>cs|[abcdx])\s*\[\s*(?P<idx>[-+]?\d+)\s*\]
      | (?P<y>y)
      | (?P<op>[-+*/^])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, Any]]:
    tokens: list[tuple[str, Any]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected input at column {pos}: {text[pos:pos + 10]!r}")
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num"))))
        elif m.group("fam") is not None:
            tokens.append(("var", Variable(m.group("fam"), int(m.group("idx")))))
        elif m.group("y") is not None:
            tokens.append(("var", Variable("y")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, Any] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, Any]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def accept_op(self, op: str) -> bool:
        if self.peek() == ("op", op):
            self.pos += 1
            return True
        return False

    def nat(self) -> int:
        kind, value = self.take()
        if kind != "num":
            raise ParseError(f"expected a number, got {value!r}")
        return value

    def poly(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial")
        terms = []
        sign = -1 if self.accept_op("-") else 1
        if sign == 1:
            self.accept_op("+")
        terms.append(self.term(sign))
        while self.peek() is not None:
            if self.accept_op("+"):
                sign = 1
            elif self.accept_op("-"):
                sign = -1
            else:
                raise ParseError(f"expected '+' or '-', got {self.peek()[1]!r}")
            terms.append(self.term(sign))
        return Polynomial.from_terms(terms)

    def term(self, sign: int) -> tuple[list[tuple[Variable, int]], Fraction]:
        coeff = Fraction(sign)
        factors: list[tuple[Variable, int]] = []
        seen = False
        if self.peek() and self.peek()[0] == "num":
            num = self.nat()
            if self.accept_op("/"):
                den = self.nat()
                if den == 0:
                    raise ParseError("zero denominator")
                coeff *= Fraction(num, den)
            else:
                coeff *= num
            seen = True
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.pos += 1
                tok = self.peek()
                if tok is None or tok[0] != "var":
                    raise ParseError("expected a variable after '*'")
            if tok is None or tok[0] != "var":
                break
            self.pos += 1
            exp = 1
            if self.accept_op("^"):
                exp = self.nat()
                if exp == 0:
                    raise ParseError("exponents must be positive")
            factors.append((tok[1], exp))
            seen = True
        if not seen:
            raise ParseError("empty term")
        return factors, coeff


def parse_poly(text: str) -> Polynomial:
    """Parse the text grammar into a :class:`Polynomial`."""
    parser = _Parser(text)
    try:
        return parser.poly()
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_variable(v: Variable, exp: int) -> str:
    base = "y" if v.family == "y" else f"{v.family}[{v.index}]"
    return base if exp == 1 else f"{base}^{exp}"


def format_poly(p: Polynomial, sort: bool = False) -> str:
    """Render ``p`` in the text grammar.

    Terms come out in generation order, stably grouped by degree; with
    ``sort=True`` they are fully ordered by degree and then monomial.
    """
    if sort:
        items = p.sorted_terms()
    else:
        items = sorted(p, key=lambda mc: mc[0].degree)
    if not items:
        return "0"
    out = []
    for n, (m, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        body = "*".join(format_variable(v, e) for v, e in m.factors)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if n == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def terms_to_json(p: Polynomial, sort: bool = False) -> list[dict[str, Any]]:
    """Machine-readable term list: ``[{"coeff": "num/den", "factors": [[fam, index, exp], ...]}]``."""
    items = p.sorted_terms() if sort else sorted(p, key=lambda mc: mc[0].degree)
    return [
        {
            "coeff": f"{c.numerator}/{c.denominator}",
            "factors": [[v.family, None if v.family == "y" else v.index, e] for v, e in m.factors],
        }
        for m, c in items
    ]


def poly_from_json(terms: list[dict[str, Any]]) -> Polynomial:
    try:
        return Polynomial.from_terms(
            (
                [(Variable(fam, 0 if idx is None else int(idx)), int(e)) for fam, idx, e in t["factors"]],
                Fraction(t["coeff"]),
            )
            for t in terms
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed term list: {exc}") from exc
