# symbolic/words.py
"""
Fixed-width unsigned words as tuples of formula ids, least significant bit
first. All arithmetic wraps modulo 2^width; shift amounts are ground ints.
"""
from collections.abc import Mapping

from symbolic.formula import FALSE, TRUE, FormulaStore

Word = tuple[int, ...]


def _same_width(a: Word, b: Word):
    if len(a) != len(b):
        raise ValueError(f"word width mismatch: {len(a)} vs {len(b)}")


def const_word(value: int, width: int) -> Word:
    value %= 1 << width
    return tuple(TRUE if (value >> i) & 1 else FALSE for i in range(width))


def word_value(bits: Word) -> int | None:
    """Decodes an all-constant word; None as soon as one bit is symbolic."""
    value = 0
    for i, bit in enumerate(bits):
        if bit == TRUE:
            value |= 1 << i
        elif bit != FALSE:
            return None
    return value


def word_eval(store: FormulaStore, bits: Word, assignment: Mapping[int, bool]) -> int:
    values = store.evaluate_many(bits, assignment)
    return sum(1 << i for i, bit in enumerate(values) if bit)


# --- ARITHMETIC ---
def _add(store: FormulaStore, a: Word, b: Word, carry: int) -> Word:
    out = []
    for ai, bi in zip(a, b):
        half = store.xor(ai, bi)
        out.append(store.xor(half, carry))
        carry = store.ite(half, carry, ai)
    return tuple(out)


def word_add(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    return _add(store, a, b, FALSE)


def word_sub(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    return _add(store, a, tuple(-bit for bit in b), TRUE)


def word_neg(store: FormulaStore, a: Word) -> Word:
    return word_sub(store, const_word(0, len(a)), a)


def word_mul(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    width = len(a)
    # A ground multiplier turns every partial product into a plain shift
    if word_value(a) is not None and word_value(b) is None:
        a, b = b, a
    result = const_word(0, width)
    for i, bi in enumerate(b):
        if bi == FALSE:
            continue
        partial = (FALSE,) * i + a[:width - i]
        if bi != TRUE:
            partial = tuple(store.and_(bi, bit) for bit in partial)
        result = _add(store, result, partial, FALSE)
    return result


# --- BITWISE ---
def word_and(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    return tuple(store.and_(x, y) for x, y in zip(a, b))


def word_or(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    return tuple(store.or_(x, y) for x, y in zip(a, b))


def word_xor(store: FormulaStore, a: Word, b: Word) -> Word:
    _same_width(a, b)
    return tuple(store.xor(x, y) for x, y in zip(a, b))


def word_not(a: Word) -> Word:
    return tuple(-bit for bit in a)


def word_shl(a: Word, amount: int) -> Word:
    width = len(a)
    if amount >= width:
        return const_word(0, width)
    return (FALSE,) * amount + a[:width - amount]


def word_shr(a: Word, amount: int) -> Word:
    width = len(a)
    if amount >= width:
        return const_word(0, width)
    return a[amount:] + (FALSE,) * amount


def word_ite(store: FormulaStore, c: int, a: Word, b: Word) -> Word:
    _same_width(a, b)
    if c == TRUE:
        return a
    if c == FALSE:
        return b
    return tuple(store.ite(c, x, y) for x, y in zip(a, b))


# --- COMPARISONS ---
def word_eq(store: FormulaStore, a: Word, b: Word) -> int:
    _same_width(a, b)
    return store.and_all(-store.xor(x, y) for x, y in zip(a, b))


def word_ult(store: FormulaStore, a: Word, b: Word) -> int:
    _same_width(a, b)
    lt = FALSE
    # The most significant differing bit decides, so it is folded in last
    for x, y in zip(a, b):
        lt = store.ite(store.xor(x, y), y, lt)
    return lt


def word_cmp(store: FormulaStore, op: str, a: Word, b: Word) -> int:
    if op == "==":
        return word_eq(store, a, b)
    if op == "!=":
        return -word_eq(store, a, b)
    if op == "<":
        return word_ult(store, a, b)
    if op == ">":
        return word_ult(store, b, a)
    if op == "<=":
        return -word_ult(store, b, a)
    if op == ">=":
        return -word_ult(store, a, b)
    raise ValueError(f"unknown comparison operator '{op}'")
