"""Recursive-descent parser for element expressions.

Grammar (whitespace insignificant between tokens):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := 'x' | 'y' | 'h' | scalar | '(' expr ')'
    scalar := ['-'] digits ['/' digits]

The parse is evaluated directly into scalar-weighted free words (product
order is significant; scalar atoms commute and are folded to the front of
each term) and the result is normalized through the rewriting oracle.

Error positions are 0-based character offsets.  Two canonical cases:
"x**2" raises ExprSyntaxError at position 2 (the second '*'), and "x+"
raises ExprSyntaxError at position 2 (an atom was expected at end of
input).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraParams, Element
from .capacity import check_search
from .errors import CapacityExceeded, DivisionByZero, ExprSyntaxError, LexError
from .rewrite import FreeWord, reduce_word

_DIGITS = set("0123456789")
_OPS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str  # "letter", "number", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "xyh":
            tokens.append(_Token("letter", ch, i))
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < len(text) and text[j] in _DIGITS:
                j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise LexError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """Each production returns a list of (coefficient, letters) pairs."""

    def __init__(self, tokens: list[_Token], algebra: AlgebraParams):
        self.tokens = tokens
        self.idx = 0
        self.field = algebra.field

    def _peek(self) -> _Token:
        return self.tokens[self.idx]

    def _advance(self) -> _Token:
        token = self.tokens[self.idx]
        self.idx += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in ops

    def parse(self):
        words = self.expr()
        token = self._peek()
        if token.kind != "end":
            raise ExprSyntaxError(f"unexpected input {token.text!r}", token.pos)
        return words

    def expr(self):
        words = self.term()
        while self._at_op("+", "-"):
            op = self._advance()
            rhs = self.term()
            if op.text == "-":
                rhs = [(-c, w) for c, w in rhs]
            words = words + rhs
        return words

    def term(self):
        words = self.factor()
        while self._at_op("*"):
            self._advance()
            words = self._product(words, self.factor())
        return words

    def factor(self):
        base = self.atom()
        if not self._at_op("^"):
            return base
        self._advance()
        token = self._peek()
        if token.kind != "number":
            raise ExprSyntaxError("expected a nonnegative integer exponent", token.pos)
        self._advance()
        exponent = int(token.text)
        if exponent > 2**31:
            raise CapacityExceeded(f"exponent {exponent} beyond 2^31")
        out = [(self.field.one, ())]
        for _ in range(exponent):
            out = self._product(out, base)
        return out

    def atom(self):
        token = self._peek()
        if token.kind == "letter":
            self._advance()
            return [(self.field.one, (token.text,))]
        if token.kind == "number":
            return [(self._scalar(), ())]
        if self._at_op("-") and self.tokens[self.idx + 1].kind == "number":
            return [(self._scalar(), ())]
        if self._at_op("("):
            self._advance()
            words = self.expr()
            closing = self._peek()
            if not self._at_op(")"):
                raise ExprSyntaxError("expected ')'", closing.pos)
            self._advance()
            return words
        raise ExprSyntaxError("expected 'x', 'y', 'h', a scalar or '('", token.pos)

    def _scalar(self):
        negative = False
        if self._at_op("-"):
            self._advance()
            negative = True
        numerator = int(self._advance().text)
        value = self.field.scalar(numerator)
        if self._at_op("/"):
            self._advance()
            token = self._peek()
            if token.kind != "number":
                raise ExprSyntaxError("expected digits after '/'", token.pos)
            self._advance()
            denominator = self.field.scalar(int(token.text))
            if denominator.is_zero():
                raise DivisionByZero("scalar with zero denominator")
            value = value / denominator
        return -value if negative else value

    def _product(self, left, right):
        check_search(len(left) * len(right), "expression expansion")
        return [(c1 * c2, w1 + w2) for c1, w1 in left for c2, w2 in right]


def parse_element_expr(text: str, algebra: AlgebraParams) -> Element:
    """Parse an element expression and normalize it through the oracle."""
    tokens = _tokenize(text)
    pairs = _Parser(tokens, algebra).parse()
    words = [FreeWord(c, letters) for c, letters in pairs]
    return reduce_word(words, algebra)
