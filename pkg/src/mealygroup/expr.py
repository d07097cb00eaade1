"""Parser for group-word expressions.

Grammar (whitespace is ignored)::

    word   := term+
    term   := atom suffix*
    suffix := '^' integer          power
            | '^' atom             conjugation, x^y = y^-1 x y
    atom   := name | '1' | '(' word ')' | '[' word ',' word ']'

``[x, y] = x^-1 y^-1 x y``.  Suffixes bind tighter than juxtaposition and are
applied left to right, so ``d^a^-1`` is ``(d^a)^-1``; write ``d^(a^-1)`` for
conjugation by ``a^-1``.  Generator names are matched longest-first.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .group import EMPTY, Word, commutator, conjugate, word_multiply, word_power

if TYPE_CHECKING:
    from .group import AutomatonGroup


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


class _Parser:
    def __init__(self, text: str, names: dict[str, Word]):
        self.text = text
        self.pos = 0
        self.names = sorted(names, key=len, reverse=True)
        self.table = names

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise WordSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def word(self) -> Word:
        out = EMPTY
        start = self.pos
        while self.peek() and self.peek() not in ",)]":
            out = word_multiply(out, self.term())
        if self.pos == start or self.text[start:self.pos].strip() == "":
            raise WordSyntaxError("expected a word", self.pos)
        return out

    def term(self) -> Word:
        w = self.atom()
        while self.peek() == "^":
            self.pos += 1
            ch = self.peek()
            if ch == "-" or ch == "+" or ch.isdigit():
                w = word_power(w, self.integer())
            else:
                w = conjugate(w, self.atom())
        return w

    def integer(self) -> int:
        start = self.pos
        if self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise WordSyntaxError("expected an integer exponent", self.pos)
        return int(self.text[start:self.pos])

    def atom(self) -> Word:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if ch == "[":
            self.pos += 1
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return commutator(x, y)
        if ch == "1":
            self.pos += 1
            return EMPTY
        for name in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return self.table[name]
        if not ch:
            raise WordSyntaxError("unexpected end of input", self.pos)
        if not ch.isascii():
            raise WordSyntaxError(f"non-ASCII character {ch!r}", self.pos)
        raise WordSyntaxError(f"unknown generator at {self.text[self.pos:self.pos + 8]!r}", self.pos)


def parse_word_expression(text: str, group: "AutomatonGroup") -> Word:
    """Expand an expression into a freely reduced word of ``group``."""
    names: dict[str, Word] = {name: (g,) for g, name in group.names.items()}
    ident = group.automaton.identity_state
    if ident is not None:
        names.setdefault(group.automaton.states[ident], EMPTY)
    p = _Parser(text, names)
    w = p.word()
    if p.peek():
        raise WordSyntaxError(f"unexpected {p.peek()!r}", p.pos)
    return w
