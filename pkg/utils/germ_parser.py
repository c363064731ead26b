# utils/germ_parser.py
"""Parser for germ expressions such as ``x^3 - y^6`` or ``x^3 + x*y^5``.

Grammar (whitespace-insensitive)::

    expr := [sign] term (('+' | '-') term)*
    term := [int ['*']] factor (['*'] factor)*
    factor := var ['^' int]

Variables are identifiers. They are ordered alphabetically; for two-variable
polynomials the first one is ``x`` (exponent ``i``) and the second ``y`` (``j``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from store.errors import GermParseError, UnsupportedGermError
from services.toric_service import Monomial, SupportPoly
from services.zeta_service import BrieskornGerm, BrieskornTerm

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


@dataclass(frozen=True)
class GermTerm:
    coeff: int
    powers: Tuple[Tuple[str, int], ...]

    def exponent(self, var: str) -> int:
        return dict(self.powers).get(var, 0)


@dataclass(frozen=True)
class GermExpr:
    """A signed sum of monomials with integer coefficients, like terms combined."""

    terms: Tuple[GermTerm, ...]

    @property
    def variables(self) -> List[str]:
        return sorted({v for t in self.terms for v, _ in t.powers})

    def render(self) -> str:
        out = ""
        for idx, t in enumerate(self.terms):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in t.powers)
            mag = abs(t.coeff)
            body = mono if mag == 1 else f"{mag}*{mono}"
            if idx == 0:
                out = body if t.coeff > 0 else f"-{body}"
            else:
                out += f" {'+' if t.coeff > 0 else '-'} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def is_brieskorn(self) -> bool:
        seen = set()
        for t in self.terms:
            if len(t.powers) != 1 or abs(t.coeff) != 1 or t.powers[0][0] in seen:
                return False
            seen.add(t.powers[0][0])
        return True

    def to_brieskorn(self) -> BrieskornGerm:
        """
        Raises:
            UnsupportedGermError: If a term has several variables, a coefficient
                other than ±1, or two terms share a variable.
        """
        if not self.is_brieskorn():
            raise UnsupportedGermError(
                f"{self} is not a Brieskorn germ: each term must be ±v^p in its own variable"
            )
        return BrieskornGerm(tuple(BrieskornTerm(t.powers[0][1], 1 if t.coeff > 0 else -1) for t in self.terms))

    def to_support(self) -> SupportPoly:
        """
        Raises:
            UnsupportedGermError: If more than two variables occur.
        """
        names = self.variables
        if len(names) > 2:
            raise UnsupportedGermError(f"{self} has {len(names)} variables; toric resolution needs at most two")
        first = names[0]
        second = names[1] if len(names) == 2 else None
        return SupportPoly(
            tuple(
                Monomial(t.exponent(first), t.exponent(second) if second else 0, t.coeff)
                for t in self.terms
            )
        )


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise GermParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup or "op"
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, message: str) -> GermParseError:
        tok = self.peek()
        return GermParseError(message, self.text, tok.pos if tok else len(self.text))

    def take(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind or (text is not None and tok.text != text):
            what = repr(text) if text else ("an integer" if kind == "int" else "a variable")
            found = "end of input" if tok is None else repr(tok.text)
            raise self.error(f"expected {what}, found {found}")
        self.i += 1
        return tok

    def accept(self, kind: str, text: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.kind == kind and tok.text == text:
            self.i += 1
            return True
        return False

    def exponent(self) -> int:
        tok = self.take("int")
        value = int(tok.text)
        if value < 1:
            raise GermParseError("exponents must be positive", self.text, tok.pos)
        return value

    def term(self, sign: int) -> Tuple[int, Dict[str, int]]:
        coeff = 1
        tok = self.peek()
        if tok is not None and tok.kind == "int":
            coeff = int(self.take("int").text)
            if coeff == 0:
                raise GermParseError("coefficient 0 is not allowed", self.text, tok.pos)
            self.accept("op", "*")
        powers: Dict[str, int] = {}
        while True:
            var = self.take("ident").text
            exp = self.exponent() if self.accept("op", "^") else 1
            powers[var] = powers.get(var, 0) + exp
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "*":
                self.i += 1
                continue
            if nxt is not None and nxt.kind == "ident":
                continue
            break
        return sign * coeff, powers

    def expr(self) -> GermExpr:
        if not self.tokens:
            raise GermParseError("empty expression", self.text, 0)
        sign = -1 if self.accept("op", "-") else 1
        if sign > 0:
            self.accept("op", "+")
        collected: Dict[Tuple[Tuple[str, int], ...], int] = {}

        def add(coeff: int, powers: Dict[str, int]) -> None:
            key = tuple(sorted(powers.items()))
            collected[key] = collected.get(key, 0) + coeff

        add(*self.term(sign))
        while self.peek() is not None:
            if self.accept("op", "+"):
                add(*self.term(1))
            elif self.accept("op", "-"):
                add(*self.term(-1))
            else:
                raise self.error(f"expected '+' or '-', found {self.peek().text!r}")

        names = sorted({v for key in collected for v, _ in key})
        terms = [GermTerm(c, key) for key, c in collected.items() if c]
        if not terms:
            raise GermParseError("expression cancels to zero", self.text, 0)
        terms.sort(key=lambda t: tuple(-t.exponent(v) for v in names))
        return GermExpr(tuple(terms))


def parse_germ(text: str) -> GermExpr:
    """Parse a germ expression.

    Raises:
        GermParseError: With the character position of the offending token.
    """
    return _Parser(text).expr()


def parse_weights(text: str) -> Tuple[int, int]:
    """Parse ``"m,k"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GermParseError("weights must look like 'm,k'", text, 0)
    return int(parts[0]), int(parts[1])
