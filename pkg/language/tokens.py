# language/tokens.py
import logging
import string
from dataclasses import dataclass
from enum import Enum

from core.errors import LexError

logger = logging.getLogger("URSA-Lexer")


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    NATURAL = "natural-literal"
    KEYWORD = "keyword"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    col: int

    def is_(self, lexeme: str) -> bool:
        return self.kind is not TokenKind.IDENTIFIER and self.lexeme == lexeme

    def __str__(self) -> str:
        return f"{self.kind.value} '{self.lexeme}' at {self.line}:{self.col}"


KEYWORDS = frozenset({
    "for", "if", "else", "assert", "print", "true", "false", "ite",
    # Reserved: recognised so the parser can reject them with a clear message
    "break", "continue", "while", "procedure", "call", "return", "minimize", "maximize",
})

# Longest lexemes first so that '&&=' wins over '&&' and '&'
OPERATORS = (
    "&&=", "||=", "^^=", "<<=", ">>=",
    "&&", "||", "^^", "<<", ">>", "<=", ">=", "==", "!=",
    "+=", "-=", "*=", "&=", "|=", "^=", "++", "--",
    "+", "-", "*", "<", ">", "=", "!", "~", "&", "|", "^",
)

PUNCTUATION = frozenset("()[]{};,")
DIGITS = frozenset(string.digits)
LETTERS = frozenset(string.ascii_letters)


def tokenize(source: str) -> list[Token]:
    """
    Splits source text into tokens, dropping whitespace and both comment styles.
    Every error carries the line/column where the offending text starts.
    """
    tokens: list[Token] = []
    pos, line, col = 0, 1, 1
    length = len(source)

    def advance(count: int):
        nonlocal pos, line, col
        for ch in source[pos:pos + count]:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos += count

    while pos < length:
        ch = source[pos]

        if ch in " \t\r\n\f\v":
            advance(1)
            continue

        # Comments
        if source.startswith("//", pos):
            end = source.find("\n", pos)
            advance((end if end != -1 else length) - pos)
            continue
        if source.startswith("/*", pos):
            end = source.find("*/", pos + 2)
            if end == -1:
                raise LexError("unterminated comment", line, col)
            advance(end + 2 - pos)
            continue

        if ch == "/" or ch == "%":
            raise LexError(f"'{ch}': division/modulo is not supported", line, col)

        if ch in DIGITS:
            end = pos
            while end < length and source[end] in DIGITS:
                end += 1
            tokens.append(Token(TokenKind.NATURAL, source[pos:end], line, col))
            advance(end - pos)
            continue

        if ch in LETTERS or ch == "_":
            end = pos
            while end < length and (source[end] in LETTERS or source[end] in DIGITS or source[end] == "_"):
                end += 1
            word = source[pos:end]
            if word in KEYWORDS:
                tokens.append(Token(TokenKind.KEYWORD, word, line, col))
            elif word[0] in "nb":
                tokens.append(Token(TokenKind.IDENTIFIER, word, line, col))
            else:
                raise LexError(
                    f"identifier '{word}' must start with 'n' (natural) or 'b' (boolean)", line, col)
            advance(end - pos)
            continue

        if ch in PUNCTUATION:
            tokens.append(Token(TokenKind.PUNCTUATION, ch, line, col))
            advance(1)
            continue

        for op in OPERATORS:
            if source.startswith(op, pos):
                tokens.append(Token(TokenKind.OPERATOR, op, line, col))
                advance(len(op))
                break
        else:
            raise LexError(f"unknown character '{ch}'", line, col)

    logger.debug(f"[Lexer] {len(tokens)} tokens from {line} lines")
    return tokens
