# interpreter/values.py
"""
Runtime values of the executor. Ground naturals are plain ints, ground booleans
plain bools; symbolic values wrap formula ids. Constructors fold all-constant
results back to ground values so ground code never touches the formula store.
"""
from dataclasses import dataclass

from symbolic.formula import FALSE, TRUE
from symbolic.words import Word, const_word, word_value


@dataclass(frozen=True, slots=True)
class SymWord:
    bits: Word


@dataclass(frozen=True, slots=True)
class SymBool:
    node: int


Value = int | bool | SymWord | SymBool


def make_word(bits: Word) -> int | SymWord:
    value = word_value(bits)
    return SymWord(bits) if value is None else value


def make_bool(node: int) -> bool | SymBool:
    if node == TRUE:
        return True
    if node == FALSE:
        return False
    return SymBool(node)


def is_bool(value: Value) -> bool:
    # bool is a subclass of int, so this check must come first everywhere
    return isinstance(value, (bool, SymBool))


def is_nat(value: Value) -> bool:
    return isinstance(value, SymWord) or (isinstance(value, int) and not isinstance(value, bool))


def is_ground(value: Value) -> bool:
    return isinstance(value, (int, bool))


def as_bits(value: int | SymWord, width: int) -> Word:
    return value.bits if isinstance(value, SymWord) else const_word(value, width)


def as_node(value: bool | SymBool) -> int:
    if isinstance(value, SymBool):
        return value.node
    return TRUE if value else FALSE


def render(value: int | bool) -> str:
    """Ground value in report syntax: true/false or a decimal."""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
