"""Recursive-descent parser for the polynomial text format.

Grammar (whitespace ignored)::

    poly   := sign? term (("+" | "-") term)*
    term   := integer ("*" factor)* | factor ("*" factor)*
    factor := ident ("^" nat)?

Integers are reduced mod p and "-" is the additive inverse mod p.  The
leading sign is an extension that keeps printed output like ``-x`` legal.
"""

from __future__ import annotations

import re
from typing import List, Tuple

from .algebra import EXPONENT_LIMIT, PolyRing, Polynomial, terms_add

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^])"
)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col
        self.pos = pos


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        p = self.ring.p
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = {}
        acc = terms_add(acc, self.term(), p, sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            acc = terms_add(acc, self.term(), p, sign)
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return Polynomial(self.ring, acc)

    def term(self):
        n = self.ring.nvars
        exps = [0] * n
        coeff = 1
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            coeff = int(value)
        elif kind == "ident":
            self.factor(exps)
        else:
            raise self.error("expected a term")
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            self.factor(exps)
        return {tuple(exps): coeff % self.ring.p}

    def factor(self, exps):
        tok = self.take()
        if tok[0] != "ident":
            raise self.error("expected a variable", tok)
        try:
            idx = self.ring.variables.index(tok[1])
        except ValueError:
            raise self.error(f"unknown variable {tok[1]!r}", tok) from None
        power = 1
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            num = self.take()
            if num[0] != "int":
                raise self.error("malformed exponent", num)
            power = int(num[1])
        exps[idx] += power
        if exps[idx] >= EXPONENT_LIMIT:
            raise self.error("exponent exceeds 2^32 cap", tok)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def parse_ideal(text: str, ring: PolyRing) -> List[Polynomial]:
    """Parse a ';'- or newline-separated generator list; blanks are skipped."""
    parts = re.split(r"[;\n]", text)
    return [parse_polynomial(s, ring) for s in parts if s.strip()]
