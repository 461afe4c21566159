"""Parser for cyclotomic literals.

Grammar (zeta denotes the L-th root of unity for a declared order L):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := RATIONAL | 'zeta' ['^' INT] | 'i' | '(' expr ')' | '-' factor
    RATIONAL := INT ['/' POSINT]

'i' is sugar for zeta^(L/4) and requires 4 | L.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import CycloNumber, root_of_unity

_TOKEN = re.compile(r"\s*(?:(\d+)|(zeta)|(i)\b|(\^)|([+*/()-]))")


class CycloParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, order: int):
        self.text = text
        self.order = order
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                if text[i:].strip():
                    raise CycloParseError(f"unexpected character at {text[i:]!r}")
                break
            tokens.append(next(g for g in m.groups() if g is not None))
            i = m.end()
        return tokens

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise CycloParseError("unexpected end of input")
        self.pos += 1
        return tok

    def parse(self) -> CycloNumber:
        value = self._expr()
        if self._peek() is not None:
            raise CycloParseError(f"trailing input near {self.tokens[self.pos:]}")
        return value

    def _expr(self) -> CycloNumber:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._next()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> CycloNumber:
        value = self._factor()
        while self._peek() == "*":
            self._next()
            value = value * self._factor()
        return value

    def _factor(self) -> CycloNumber:
        tok = self._peek()
        if tok == "-":
            self._next()
            return -self._factor()
        if tok == "(":
            self._next()
            value = self._expr()
            if self._next() != ")":
                raise CycloParseError("expected ')'")
            return value
        if tok == "zeta":
            self._next()
            k = 1
            if self._peek() == "^":
                self._next()
                k = self._int(signed=True)
            return root_of_unity(self.order, k)
        if tok == "i":
            self._next()
            if self.order % 4:
                raise CycloParseError(f"'i' requires 4 | order, got order {self.order}")
            return root_of_unity(self.order, self.order // 4)
        return CycloNumber.from_rational(self._rational())

    def _int(self, signed: bool = False) -> int:
        neg = False
        if signed and self._peek() == "-":
            self._next()
            neg = True
        tok = self._next()
        if not tok.isdigit():
            raise CycloParseError(f"expected integer, got {tok!r}")
        return -int(tok) if neg else int(tok)

    def _rational(self) -> Fraction:
        num = self._int()
        if self._peek() == "/":
            self._next()
            den = self._int()
            if den <= 0:
                raise CycloParseError("denominator must be positive")
            return Fraction(num, den)
        return Fraction(num)


def parse_cyclo(text: str, order: int = 1) -> CycloNumber:
    """Parse a cyclotomic literal; 'zeta' means the primitive order-th root of unity."""
    if order < 1:
        raise CycloParseError("order must be >= 1")
    return _Parser(text, order).parse()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CycloParseError(f"bad rational literal {text!r}") from exc
