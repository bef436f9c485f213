"""Parser for linear combinations of generators.

Grammar (whitespace insensitive):

    expr     := term (('+' | '-') term)*
    term     := [rational '*'] gen
    rational := int ['/' posint]
    gen      := 'G(' ints ';' ints ')' | 'P(' ints ';' ints ')'
              | 'Z(' ints ')' | 'ZP(' ints ')'

All terms must share one weight and one space; violations raise the
dedicated errors from :mod:`doubleeis.elements` after parsing.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .elements import FormalElement, parse_genid


class ExpressionSyntaxError(ValueError):
    """A malformed expression, with the offending position attached."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<gen>(?:ZP|G|P|Z)\(\s*\d+(?:\s*,\s*\d+)*\s*(?:;\s*\d+(?:\s*,\s*\d+)*\s*)?\))
      | (?P<rational>\d+(?:\s*/\s*\d+)?)
      | (?P<op>[+\-*])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ExpressionSyntaxError(f"unexpected input {stripped[:10]!r}", at)
        if m.lastgroup == "gen":
            tokens.append(("gen", re.sub(r"\s+", "", m.group("gen")), m.start("gen")))
        elif m.lastgroup == "rational":
            try:
                value = Fraction(re.sub(r"\s+", "", m.group("rational")))
            except ZeroDivisionError:
                raise ExpressionSyntaxError("zero denominator", m.start("rational")) from None
            tokens.append(("rational", value, m.start("rational")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


def parse_expression(text: str) -> FormalElement:
    """Parse a rational linear combination of generators into an element."""
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionSyntaxError("empty expression", 0)
    terms = []
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        kind, value, at = tokens[i]
        if kind == "op" and value in "+-":
            if value == "-":
                sign = -1
            i += 1
        elif not first:
            raise ExpressionSyntaxError(f"expected '+' or '-' before {value!r}", at)
        first = False
        if i >= n:
            raise ExpressionSyntaxError("dangling sign", at)
        kind, value, at = tokens[i]
        coeff = Fraction(1)
        if kind == "rational":
            coeff = value
            i += 1
            if i >= n or tokens[i][0] != "op" or tokens[i][1] != "*":
                where = tokens[i][2] if i < n else at
                raise ExpressionSyntaxError("expected '*' after a coefficient", where)
            i += 1
            if i >= n:
                raise ExpressionSyntaxError("expected a generator after '*'", at)
            kind, value, at = tokens[i]
        if kind != "gen":
            raise ExpressionSyntaxError(f"expected a generator, found {value!r}", at)
        try:
            gen = parse_genid(value)
        except ValueError as exc:
            raise ExpressionSyntaxError(str(exc), at) from None
        terms.append((gen, sign * coeff))
        i += 1
    return FormalElement(terms)
