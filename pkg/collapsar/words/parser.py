#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Presentation text parser and serializer

Grammar (whitespace ignored, ``#`` starts a comment running to end of line)::

    presentation := '<' generators '|' relators '>'
    generators   := [ident (',' ident)*]
    relators     := [product (',' product)*]
    product      := factor+
    factor       := atom ['^' integer]
    atom         := letter | '[' product ',' product ']' | '(' product ')'
    letter       := generator name | upper-cased name (inverse)

Letters inside a relator may be written without separators (``abAB``);
the tokenizer takes the longest generator name that matches.
"""
import re
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import (
    EmptyRelatorError,
    PresentationSyntaxError,
    UnknownGeneratorError,
)
from .models import CyclicWord, Generator, Presentation, Word, code_generator, code_sign

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
INTEGER_RE = re.compile(r"[+-]?\d+")


def strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _letter_table(names: Sequence[str]) -> Dict[str, int]:
    """Symbol -> signed code, with upper-case inverse aliases when unambiguous"""
    table: Dict[str, int] = {}
    for index, name in enumerate(names):
        table[name] = index + 1
    for index, name in enumerate(names):
        alias = name.upper() if name != name.upper() else name.lower()
        if alias != name and alias not in table:
            table[alias] = -(index + 1)
    return table


class _RelatorParser:
    """Recursive-descent parser over the relator section"""

    def __init__(self, text: str, offset: int, names: Sequence[str]):
        self.text = text
        self.offset = offset
        self.pos = 0
        self.table = _letter_table(names)
        alternatives = sorted(self.table, key=lambda s: (-len(s), s))
        self.letter_re = re.compile("|".join(re.escape(s) for s in alternatives)) if alternatives else None

    def error(self, message: str) -> PresentationSyntaxError:
        return PresentationSyntaxError(message, self.offset + self.pos)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            raise self.error(f"expected '{char}'")
        self.pos += 1

    def parse_relators(self) -> List[Word]:
        relators: List[Word] = []
        if self.peek() == "":
            return relators
        while True:
            start = self.pos
            word = self.parse_product()
            if not word.codes:
                raise EmptyRelatorError(
                    f"empty relator at offset {self.offset + start}")
            relators.append(word)
            if self.peek() == ",":
                self.pos += 1
                continue
            if self.peek() == "":
                return relators
            raise self.error(f"unexpected '{self.peek()}'")

    def parse_product(self) -> Word:
        codes: List[int] = []
        while self.peek() not in ("", ",", "]", ")"):
            codes.extend(self.parse_factor().codes)
        return Word(tuple(codes))

    def parse_factor(self) -> Word:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_space()
            match = INTEGER_RE.match(self.text, self.pos)
            if not match:
                raise self.error("expected integer exponent after '^'")
            self.pos = match.end()
            return atom ** int(match.group())
        return atom

    def parse_atom(self) -> Word:
        char = self.peek()
        if char == "[":
            self.pos += 1
            left = self.parse_product()
            self.expect(",")
            right = self.parse_product()
            self.expect("]")
            if not left.codes or not right.codes:
                raise self.error("commutator arguments must be nonempty")
            return left + right + left.inverse() + right.inverse()
        if char == "(":
            self.pos += 1
            inner = self.parse_product()
            self.expect(")")
            return inner
        if char == "1":
            self.pos += 1
            return Word()
        match = self.letter_re.match(self.text, self.pos) if self.letter_re else None
        if match is None:
            ident = IDENT_RE.match(self.text, self.pos)
            symbol = ident.group()[0] if ident else char
            if ident:
                raise UnknownGeneratorError(symbol, self.offset + self.pos)
            raise self.error(f"unexpected '{char}'")
        self.pos = match.end()
        return Word((self.table[match.group()],))


def _split_presentation(text: str) -> Tuple[str, str, int]:
    body = strip_comments(text).strip()
    if not body.startswith("<") or not body.endswith(">"):
        raise PresentationSyntaxError("presentation must be enclosed in '<' and '>'")
    inner = body[1:-1]
    if inner.count("|") != 1:
        raise PresentationSyntaxError("presentation needs exactly one '|'")
    gens, rels = inner.split("|")
    return gens, rels, len(gens) + 2


def _parse_generators(section: str) -> List[str]:
    names = [name.strip() for name in section.split(",")]
    if names == [""]:
        return []
    for name in names:
        if not IDENT_RE.fullmatch(name):
            raise PresentationSyntaxError(f"invalid generator name '{name}'")
    if len(set(names)) != len(names):
        raise PresentationSyntaxError("duplicate generator names")
    return names


def parse_presentation(text: str) -> Presentation:
    """Parse '<gens | relators>' text into a Presentation"""
    gens_section, rels_section, offset = _split_presentation(text)
    names = _parse_generators(gens_section)
    parser = _RelatorParser(rels_section, offset, names)
    relators = parser.parse_relators()
    generators = tuple(Generator(i, name) for i, name in enumerate(names))
    return Presentation(generators, tuple(CyclicWord(w) for w in relators))


def parse_word(text: str, p: Presentation) -> Word:
    """Parse a single word over the generators of p; empty text is the identity"""
    parser = _RelatorParser(strip_comments(text), 0, p.names)
    if parser.peek() == "":
        return Word()
    word = parser.parse_product()
    if parser.peek() != "":
        raise parser.error(f"unexpected '{parser.peek()}'")
    return word


def _letter_symbol(code: int, names: Sequence[str], table: Dict[str, int]) -> str:
    name = names[code_generator(code)]
    if code_sign(code) > 0:
        return name
    for symbol, value in table.items():
        if value == code:
            return symbol
    return f"{name}^-1"


def format_word(w: Word, names: Sequence[str]) -> str:
    """Serialize a word; letters are space-separated when any name is longer than one character"""
    if not w.codes:
        return "1"
    table = _letter_table(names)
    symbols = [_letter_symbol(code, names, table) for code in w.codes]
    separator = " " if any(len(n) > 1 for n in names) else ""
    return separator.join(symbols)


def format_presentation(p: Presentation, relators: Optional[Sequence[Word]] = None) -> str:
    names = p.names
    words = relators if relators is not None else [r.representative for r in p.relators]
    return "<{} | {}>".format(", ".join(names), ", ".join(format_word(w, names) for w in words))
