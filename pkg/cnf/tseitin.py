# cnf/tseitin.py
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from symbolic.formula import FALSE, TRUE, FormulaStore, NodeKind

logger = logging.getLogger("CNF-Encoder")

POSITIVE = 1
NEGATIVE = 2
BOTH = POSITIVE | NEGATIVE


@dataclass
class Cnf:
    num_vars: int
    clauses: list[list[int]]
    # display name of a source unknown -> CNF variable ids, one per bit (LSB first)
    name_map: dict[str, list[int]] = field(default_factory=dict)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def projection(self) -> list[int]:
        """All variables that belong to named unknowns, in name order."""
        return [v for ids in self.name_map.values() for v in ids]


def _conjuncts(store: FormulaStore, root: int) -> list[int]:
    """Splits the top-level AND spine of `root` into its conjuncts."""
    out, stack, seen = [], [root], set()
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        if f > 0 and store.kind(f) is NodeKind.AND:
            stack.extend(reversed(store.args(f)))
        else:
            out.append(f)
    return out


class _Encoder:
    def __init__(self, store: FormulaStore, polarity: bool):
        self.store = store
        self.polarity = polarity
        self.next_var = store.num_vars
        self.aux: dict[int, int] = {}
        self.clauses: list[list[int]] = []

    def literal(self, f: int) -> int:
        node = abs(f)
        if self.store.kind(node) is NodeKind.VAR:
            var = self.store.var_of(node)
        else:
            var = self.aux[node]
        return var if f > 0 else -var

    def _polarities(self, roots: Sequence[int]) -> dict[int, int]:
        """Which directions of each definition are needed; all of them without polarity mode."""
        needed: dict[int, int] = {}
        work = [(abs(f), POSITIVE if f > 0 else NEGATIVE) for f in roots]
        while work:
            node, pol = work.pop()
            kind = self.store.kind(node)
            if kind is NodeKind.VAR or kind is NodeKind.CONST:
                continue
            if not self.polarity:
                pol = BOTH
            old = needed.get(node, 0)
            if old | pol == old:
                continue
            needed[node] = old | pol
            new = pol & ~old
            flipped = ((new & POSITIVE) << 1) | ((new & NEGATIVE) >> 1)
            args = self.store.args(node)
            if kind is NodeKind.AND:
                work.extend((abs(a), new if a > 0 else flipped) for a in args)
            elif kind is NodeKind.XOR:
                work.extend((abs(a), BOTH) for a in args)
            else:
                c, a, b = args
                work.append((abs(c), BOTH))
                work.extend((abs(x), new if x > 0 else flipped) for x in (a, b))
        return needed

    def encode(self, roots: Sequence[int]):
        needed = self._polarities(roots)
        for node in self.store.reachable(roots):
            if node not in needed:
                continue
            self.next_var += 1
            self.aux[node] = x = self.next_var
            pol = needed[node]
            kind = self.store.kind(node)
            lits = [self.literal(a) for a in self.store.args(node)]
            if kind is NodeKind.AND:
                a, b = lits
                if pol & POSITIVE:
                    self.clauses += [[-x, a], [-x, b]]
                if pol & NEGATIVE:
                    self.clauses.append([x, -a, -b])
            elif kind is NodeKind.XOR:
                a, b = lits
                if pol & POSITIVE:
                    self.clauses += [[-x, a, b], [-x, -a, -b]]
                if pol & NEGATIVE:
                    self.clauses += [[x, -a, b], [x, a, -b]]
            else:
                c, a, b = lits
                # third clause of each direction is redundant but helps propagation
                if pol & POSITIVE:
                    self.clauses += [[-x, -c, a], [-x, c, b], [-x, a, b]]
                if pol & NEGATIVE:
                    self.clauses += [[x, -c, -a], [x, c, -b], [x, -a, -b]]


def tseitin(store: FormulaStore, root: int, names: Mapping[str, Sequence[int]] | None = None,
            polarity: bool = False) -> Cnf:
    """
    Equisatisfiable CNF for `root`. Source variables keep their ids; definition
    variables follow them. Top-level conjuncts become unit clauses, and a negated
    AND at top level becomes one plain clause without a definition.
    With `polarity` only the needed implication direction of each definition is
    emitted (Plaisted-Greenbaum).
    """
    name_map = {name: list(ids) for name, ids in (names or {}).items()}

    if root == TRUE:
        return Cnf(store.num_vars, [], name_map)
    if root == FALSE:
        return Cnf(store.num_vars, [[]], name_map)

    top_clauses: list[list[int]] = []
    defined_roots: list[int] = []
    for conjunct in _conjuncts(store, root):
        if conjunct < 0 and store.kind(conjunct) is NodeKind.AND:
            parts = [-a for a in store.args(conjunct)]
            top_clauses.append(parts)
            defined_roots.extend(parts)
        else:
            top_clauses.append([conjunct])
            defined_roots.append(conjunct)

    encoder = _Encoder(store, polarity)
    encoder.encode(defined_roots)
    clauses = [[encoder.literal(f) for f in clause] for clause in top_clauses] + encoder.clauses

    cnf = Cnf(encoder.next_var, clauses, name_map)
    logger.info(f"[Tseitin] {cnf.num_vars} variables ({len(encoder.aux)} auxiliary), "
                f"{cnf.num_clauses} clauses, polarity={'on' if polarity else 'off'}")
    return cnf
