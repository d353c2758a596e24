"""Polynomial expression parsing and canonical printing.

Grammar (whitespace insensitive except inside rational literals):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' factor) | factor)*     # juxtaposition multiplies
    factor   := '-' factor | power
    power    := atom ('^' integer)?
    atom     := rational | 'x' | 'y' | 'z' | '(' expr ')'
    rational := integer ('/' integer)?              # no spaces around '/'

'^' binds tighter than multiplication/juxtaposition, which bind tighter
than addition.  Exponents are nonnegative integer literals.  Errors carry
the byte offset of the offending token.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


_VARS = {"x": 0, "y": 1, "z": 2}


class _Token:
    __slots__ = ("kind", "value", "offset")

    def __init__(self, kind, value, offset):
        self.kind = kind
        self.value = value
        self.offset = offset


def _lex(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            den = 1
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[dstart:i])
                if den == 0:
                    raise ParseError("zero denominator", dstart)
            tokens.append(_Token("num", Fraction(num, den), start))
            continue
        if ch in _VARS:
            tokens.append(_Token("var", _VARS[ch], i))
            i += 1
            continue
        if ch.isalpha():
            raise ParseError(f"unknown variable {ch!r} (only x, y, z)", i)
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("eof", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", tok.offset)
        return self.next()

    def parse(self) -> MPoly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError("trailing input", tok.offset)
        return value

    def expr(self) -> MPoly:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MPoly:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.next()
                value = value * self.factor()
            elif tok.kind in ("num", "var", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> MPoly:
        if self.peek().kind == "-":
            self.next()
            return -self.factor()
        return self.power()

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek().kind == "^":
            self.next()
            tok = self.peek()
            if tok.kind != "num" or tok.value.denominator != 1:
                raise ParseError("expected a nonnegative integer exponent", tok.offset)
            self.next()
            return base ** int(tok.value)
        return base

    def atom(self) -> MPoly:
        tok = self.peek()
        if tok.kind == "num":
            self.next()
            return MPoly.constant(tok.value)
        if tok.kind == "var":
            self.next()
            return MPoly.variable(tok.value)
        if tok.kind == "(":
            self.next()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError("expected a number, variable or '('", tok.offset)


def parse_poly(text: str) -> MPoly:
    """Parse an expression in x, y, z with rational coefficients."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------


def _frac_str(c: Fraction) -> str:
    return str(c)


def _join_terms(parts: list[tuple[int, str]]) -> str:
    """Assemble (sign, body) pairs into '+/-' separated text."""
    if not parts:
        return "0"
    out = []
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append(("-" if sign < 0 else "+") + body)
    return "".join(out)


def _term_text(c: Fraction, mono: str) -> tuple[int, str]:
    sign = 1 if c >= 0 else -1
    mag = abs(c)
    if not mono:
        return sign, _frac_str(mag)
    if mag == 1:
        return sign, mono
    return sign, f"{_frac_str(mag)}*{mono}"


def format_mpoly(p: MPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            (v if k == 1 else f"{v}^{k}")
            for v, k in zip(("x", "y", "z"), e)
            if k
        )
        parts.append(_term_text(c, mono))
    return _join_terms(parts)


def format_upoly(f, var: str = "x") -> str:
    if f.is_zero:
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(_term_text(c, mono))
    return _join_terms(parts)


def format_nf_upoly(h, var: str = "x", gen_var: str = "y") -> str:
    """Print a polynomial whose coefficients live in a number field.

    Rational coefficients print as usual; a single-monomial coefficient is
    inlined (e.g. y^2*x), anything bigger is parenthesized.
    """
    if h.is_zero:
        return "0"
    parts = []
    for i in range(h.degree, -1, -1):
        c = h[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        nonzero = [(k, a) for k, a in enumerate(c.coeffs) if a]
        if len(nonzero) <= 1 and (not nonzero or nonzero[0][0] == 0):
            value = c.coeffs[0] if c.coeffs else Fraction(0)
            parts.append(_term_text(value, mono))
            continue
        if len(nonzero) == 1:
            k, a = nonzero[0]
            gen_mono = gen_var if k == 1 else f"{gen_var}^{k}"
            full = f"{gen_mono}*{mono}" if mono else gen_mono
            parts.append(_term_text(a, full))
            continue
        body = f"({format_upoly_coeffs(c.coeffs, gen_var)})"
        parts.append((1, f"{body}*{mono}" if mono else body))
    return _join_terms(parts)


def format_upoly_coeffs(coeffs, var: str) -> str:
    from .numberfield import QQ
    from .upoly import UPoly

    return format_upoly(UPoly(QQ, coeffs), var)
