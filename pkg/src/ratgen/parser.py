"""Expression front end: text -> Polynomial -> canonical text.

Grammar (whitespace insignificant, multiplication always explicit):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | base ('^' nonneg-int)?
    base   := integer | identifier | '(' expr ')'

Exponentiation binds tighter than unary minus, so ``-x^2`` is ``-(x^2)``;
this is what the canonical formatter relies on when it folds minus signs
into term separators.  Identifiers start with a letter; ``t`` is the series
variable and is only meaningful to :func:`split_in_t`.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ExponentTooLarge, NegativeExponent, ParseError
from .poly import RESERVED_VARIABLE, Monomial, Polynomial

DEFAULT_MAX_EXPONENT = 1 << 16

_OPERATORS = "+-*^()"


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind = kind  # "int", "name", one of +-*^(), or "end"
        self.text = text
        self.pos = pos


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], i))
            i = j
        elif ch.isalpha() and ch.isascii():
            j = i
            while j < n and (src[j].isascii() and (src[j].isalnum() or src[j] == "_")):
                j += 1
            tokens.append(_Token("name", src[i:j], i))
            i = j
        elif ch in _OPERATORS:
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], max_exponent: int):
        self.tokens = tokens
        self.pos = 0
        self.max_exponent = max_exponent

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str) -> ParseError:
        tok = self.current
        got = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"expected {expected}, got {got}", tok.pos)

    def parse_expr(self) -> Polynomial:
        value = self.parse_term()
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Polynomial:
        value = self.parse_factor()
        while self.current.kind == "*":
            self.advance()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> Polynomial:
        if self.current.kind == "-":
            self.advance()
            return -self.parse_factor()
        value = self.parse_base()
        if self.current.kind == "^":
            self.advance()
            tok = self.current
            if tok.kind == "-":
                raise NegativeExponent("exponent must be nonnegative", tok.pos)
            if tok.kind != "int":
                raise self.fail("a nonnegative integer exponent")
            self.advance()
            exponent = int(tok.text)
            if exponent > self.max_exponent:
                raise ExponentTooLarge(
                    f"exponent {exponent} exceeds bound {self.max_exponent}",
                    tok.pos,
                )
            value = value**exponent
        return value

    def parse_base(self) -> Polynomial:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return Polynomial.constant(int(tok.text))
        if tok.kind == "name":
            self.advance()
            return Polynomial._raw({((tok.text, 1),): 1})
        if tok.kind == "(":
            self.advance()
            value = self.parse_expr()
            if self.current.kind != ")":
                raise self.fail("')'")
            self.advance()
            return value
        raise self.fail("an integer, identifier, or '('")


def parse_poly(src: str, max_exponent: int = DEFAULT_MAX_EXPONENT) -> Polynomial:
    """Parse an expression over the coefficient variables and t."""
    parser = _Parser(_tokenize(src), max_exponent)
    value = parser.parse_expr()
    if parser.current.kind != "end":
        raise parser.fail("'+', '-', '*', or end of input")
    return value


def split_in_t(p: Polynomial) -> tuple[Polynomial, ...]:
    """Decompose a polynomial-in-t into its t-coefficient polynomials.

    Returns A_0..A_m with m the degree in t; no returned entry mentions t.
    The zero polynomial yields the single-entry sequence (0,).
    """
    buckets: dict[int, dict[Monomial, int]] = {}
    for mono, coeff in p.items():
        t_exp = 0
        rest = mono
        for idx, (var, e) in enumerate(mono):
            if var == RESERVED_VARIABLE:
                t_exp = e
                rest = mono[:idx] + mono[idx + 1 :]
                break
        buckets.setdefault(t_exp, {})[rest] = coeff
    if not buckets:
        return (Polynomial.zero(),)
    top = max(buckets)
    return tuple(Polynomial(buckets.get(k, {})) for k in range(top + 1))


def join_in_t(seq: Sequence[Polynomial]) -> Polynomial:
    """Recombine t-coefficient polynomials as sum A_j * t^j."""
    terms: dict[Monomial, int] = {}
    for j, p in enumerate(seq):
        for mono, coeff in p.items():
            if j > 0:
                mono = tuple(sorted(mono + ((RESERVED_VARIABLE, j),)))
            terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(terms)


def format_poly(p: Polynomial) -> str:
    """Canonical text for a polynomial; parse_poly round-trips it exactly.

    Terms appear in descending graded-lex order with variables alphabetical,
    '*' is always explicit, '^' only for exponents >= 2, unit coefficients
    are elided except on the constant term, and minus signs are folded into
    the separators.
    """
    terms = p.sorted_terms()
    if not terms:
        return "0"
    chunks: list[str] = []
    for mono, coeff in terms:
        magnitude = abs(coeff)
        parts: list[str] = []
        if magnitude != 1 or not mono:
            parts.append(str(magnitude))
        for var, e in mono:
            parts.append(var if e == 1 else f"{var}^{e}")
        body = "*".join(parts)
        if not chunks:
            chunks.append(f"-{body}" if coeff < 0 else body)
        else:
            chunks.append(f"{' - ' if coeff < 0 else ' + '}{body}")
    return "".join(chunks)
