"""Parser for the polynomial input grammar.

    poly     := term (('+'|'-') term)*
    term     := [coef '*'] factor ('*' factor)*
    coef     := rational | 't'
    factor   := var ['^' nat]
    var      := 'x' | 'y' | 'z' | 'z1' | 'z2' | 'z3'
    rational := int ['/' nat]

Whitespace is insignificant.  Two small supersets are accepted so that
printed canonical forms always parse back: a unary '-' on the first term,
and coefficients of the shape ``3*t`` / ``-t`` / ``t^2`` (mixed
rational-and-t coefficients print as separate terms).  Constant terms are
rejected: inputs are germs with f(0) = 0.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError
from .poly import Coef, Poly

_VARS = {"x": 0, "y": 1, "z": 2, "z1": 0, "z2": 1, "z3": 2}


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "+-*/^":
            tokens.append(_Token("op", c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.k = 0
        self.n = n

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def _exponent(self) -> int:
        """Parse the nat after '^' (the '^' is already consumed)."""
        tok = self.peek()
        if tok.kind == "op" and tok.value == "-":
            raise ParseError("negative exponent", tok.pos)
        if tok.kind != "num":
            raise ParseError("expected an exponent", tok.pos)
        self.advance()
        return tok.value

    def _atom(self):
        """One '*'-separated atom: ('rat', Fraction) | ('t', power) |
        ('var', axis, power)."""
        tok = self.advance()
        if tok.kind == "num":
            value = Fraction(tok.value)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "/":
                self.advance()
                den = self.peek()
                if den.kind != "num":
                    raise ParseError("expected a denominator", den.pos)
                if den.value == 0:
                    raise ParseError("zero denominator", den.pos)
                self.advance()
                value = Fraction(tok.value, den.value)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "^":
                raise ParseError("'^' is not allowed after a number", nxt.pos)
            return ("rat", value)
        if tok.kind == "ident":
            power = 1
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "^":
                self.advance()
                power = self._exponent()
            if tok.value == "t":
                return ("t", power)
            axis = _VARS.get(tok.value)
            if axis is None:
                raise ParseError(f"unknown variable {tok.value!r}", tok.pos)
            if axis >= self.n:
                raise ParseError(
                    f"variable {tok.value!r} not allowed for n={self.n}", tok.pos)
            return ("var", axis, power)
        raise ParseError("expected a coefficient or a variable", tok.pos)

    def _term(self, sign: int):
        pos0 = self.peek().pos
        coef = Fraction(sign)
        tpow = 0
        exponent = [0] * self.n
        while True:
            atom = self._atom()
            if atom[0] == "rat":
                coef *= atom[1]
            elif atom[0] == "t":
                tpow += atom[1]
            else:
                exponent[atom[1]] += atom[2]
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "*":
                self.advance()
                continue
            break
        parts = ((tpow, coef),) if coef else ()
        return tuple(exponent), Coef(parts), pos0

    def parse(self) -> Poly:
        acc: dict[tuple[int, ...], Coef] = {}
        positions: dict[tuple[int, ...], int] = {}
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.value == "-":
            self.advance()
            sign = -1
        while True:
            exponent, coef, pos = self._term(sign)
            acc[exponent] = acc.get(exponent, Coef(())) + coef
            positions.setdefault(exponent, pos)
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind == "op" and tok.value in "+-":
                self.advance()
                sign = 1 if tok.value == "+" else -1
                continue
            raise ParseError("expected '+', '-', or end of input", tok.pos)
        zero_exp = tuple([0] * self.n)
        if zero_exp in acc and not acc[zero_exp].is_zero:
            raise ParseError("constant term not allowed in a germ (f(0) must be 0)",
                             positions[zero_exp])
        return Poly.make(self.n, {e: c for e, c in acc.items() if not c.is_zero})


def parse_poly(text: str, n: int) -> Poly:
    """Parse a polynomial germ in the input grammar.

    Raises ParseError (with position) on syntax errors, unknown or
    out-of-range variables, negative exponents, and constant terms.
    """
    if n not in (2, 3):
        raise DomainError(f"n must be 2 or 3, got {n}")
    if not text.strip():
        raise ParseError("empty input", 0)
    return _Parser(text, n).parse()
