"""Textual multivector expressions.

Grammar:
    expr  := term (('+' | '-') term)*
    term  := coeff ('*' blade)? | blade
    coeff := real | '(' real ',' real ')'      -- the pair is a + bi
    blade := 'e'index ('*' 'e'index)*          -- strictly increasing, 1-based

A leading '+' or '-' before the first term is accepted. Number literals
are lexed greedily, so ``2e3`` is the float 2000.0; products with blades
always need the explicit '*', as in ``2*e3``.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .algebra import BladeIndex, Multivector

_NUMBER = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_BLADE = re.compile(r"e(\d+)")
_PUNCT = {"+": "PLUS", "-": "MINUS", "*": "STAR", "(": "LPAREN", ")": "RPAREN", ",": "COMMA"}


class ParseError(ValueError):
    """Syntax or range error in a multivector expression, with position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Token(NamedTuple):
    kind: str
    value: object
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, i))
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            match = _NUMBER.match(text, i)
            if not match:
                raise ParseError("malformed number", i)
            tokens.append(_Token("NUMBER", float(match.group()), i))
            i = match.end()
            continue
        if ch == "e":
            match = _BLADE.match(text, i)
            if not match:
                raise ParseError("expected a blade index after 'e'", i)
            tokens.append(_Token("BLADE", int(match.group(1)), i))
            i = match.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], dim: int):
        self.tokens = tokens
        self.dim = dim
        self.i = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self, kind: str, what: str) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> dict[BladeIndex, complex]:
        acc: dict[BladeIndex, complex] = {}
        sign = self._leading_sign()
        self._term(acc, sign)
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind == "PLUS":
                sign = 1.0
            elif tok.kind == "MINUS":
                sign = -1.0
            else:
                raise ParseError("expected '+' or '-' between terms", tok.pos)
            self.i += 1
            self._term(acc, sign)
        return acc

    def _leading_sign(self) -> float:
        tok = self.peek()
        if tok.kind == "PLUS":
            self.i += 1
            return 1.0
        if tok.kind == "MINUS":
            self.i += 1
            return -1.0
        return 1.0

    def _term(self, acc: dict[BladeIndex, complex], sign: float) -> None:
        tok = self.peek()
        if tok.kind in ("NUMBER", "LPAREN"):
            coeff = self._coeff()
            mask = 0
            if self.peek().kind == "STAR":
                self.i += 1
                mask = self._blade()
        elif tok.kind == "BLADE":
            coeff = 1.0 + 0j
            mask = self._blade()
        else:
            raise ParseError("expected a term", tok.pos)
        acc[mask] = acc.get(mask, 0j) + sign * coeff

    def _coeff(self) -> complex:
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.i += 1
            return complex(tok.value)
        self.take("LPAREN", "'('")
        real = self._signed_real()
        self.take("COMMA", "','")
        imag = self._signed_real()
        self.take("RPAREN", "')'")
        return complex(real, imag)

    def _signed_real(self) -> float:
        sign = 1.0
        tok = self.peek()
        if tok.kind in ("PLUS", "MINUS"):
            sign = -1.0 if tok.kind == "MINUS" else 1.0
            self.i += 1
        number = self.take("NUMBER", "a number")
        return sign * float(number.value)

    def _blade(self) -> BladeIndex:
        mask = 0
        last = 0
        while True:
            tok = self.take("BLADE", "a blade factor")
            index = int(tok.value)
            if index < 1 or index > self.dim:
                raise ParseError(f"generator index e{index} out of range 1..{self.dim}", tok.pos)
            if index <= last:
                raise ParseError("blade indices must be strictly increasing", tok.pos)
            last = index
            mask |= 1 << (index - 1)
            if self.peek().kind == "STAR" and self.peek(1).kind == "BLADE":
                self.i += 1
                continue
            return mask


def parse_multivector(text: str, dim: int) -> Multivector:
    """Parse an expression into a multivector over C(R^dim)."""
    coeffs = _Parser(_tokenize(text), dim).parse()
    return Multivector(dim, coeffs)


def _blade_text(mask: BladeIndex) -> str:
    return "*".join(f"e{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def _real_text(x: float, sig_digits: int | None) -> str:
    if sig_digits is None:
        return repr(float(x))
    return f"{x:.{sig_digits}g}"


def format_multivector(
    m: Multivector, sig_digits: int | None = None, chop: float = 0.0
) -> str:
    """Render a multivector in the expression grammar.

    With the defaults the output round-trips exactly through
    ``parse_multivector``. ``sig_digits``/``chop`` give the trimmed display
    form used for command-line output.
    """
    pieces: list[tuple[str, str]] = []  # (connector sign, body)
    for mask in sorted(m.coeffs, key=lambda k: (k.bit_count(), k)):
        coeff = m.coeffs[mask]
        re_part, im_part = coeff.real, coeff.imag
        if chop:
            re_part = 0.0 if abs(re_part) < chop else re_part
            im_part = 0.0 if abs(im_part) < chop else im_part
            if re_part == 0.0 and im_part == 0.0:
                continue
        blade = _blade_text(mask)
        if im_part == 0.0:
            sign = "-" if re_part < 0 else "+"
            magnitude = abs(re_part)
            if blade and magnitude == 1.0:
                body = blade
            else:
                body = _real_text(magnitude, sig_digits)
                if blade:
                    body += f"*{blade}"
        else:
            sign = "+"
            body = f"({_real_text(re_part, sig_digits)},{_real_text(im_part, sig_digits)})"
            if blade:
                body += f"*{blade}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
