# symbolic/formula.py
from collections.abc import Iterable, Mapping, Sequence
from enum import Enum

# Formula ids are signed ints: the sign is negation, abs(id) indexes the node table.
TRUE = 1
FALSE = -1


class NodeKind(str, Enum):
    CONST = "const"
    VAR = "var"
    AND = "and"
    XOR = "xor"
    ITE = "ite"


class FormulaStore:
    """
    Hash-consed arena of propositional formulas.

    Only AND, XOR and ITE nodes are stored; NOT is the sign of an id and OR is
    stored through De Morgan, so dual formulas share one node. Every constructor
    folds constants and normalises operand order/signs before the table lookup,
    which makes structurally equal formulas id-equal.
    """

    def __init__(self):
        # Slot 0 is unused so that node ids and table indices coincide
        self._nodes: list[tuple[NodeKind, tuple[int, ...]]] = [
            (NodeKind.CONST, ()),
            (NodeKind.CONST, ()),
        ]
        self._unique: dict[tuple[NodeKind, tuple[int, ...]], int] = {}
        self._var_nodes: list[int] = [0]

    # --- NODE TABLE ---
    def _intern(self, kind: NodeKind, args: tuple[int, ...]) -> int:
        key = (kind, args)
        node = self._unique.get(key)
        if node is None:
            node = len(self._nodes)
            self._nodes.append(key)
            self._unique[key] = node
        return node

    def new_var(self) -> int:
        """Issues the next variable id and returns its (positive) formula id."""
        var_id = len(self._var_nodes)
        node = len(self._nodes)
        self._nodes.append((NodeKind.VAR, (var_id,)))
        self._var_nodes.append(node)
        return node

    def var_node(self, var_id: int) -> int:
        return self._var_nodes[var_id]

    def var_of(self, f: int) -> int:
        kind, args = self._nodes[abs(f)]
        if kind is not NodeKind.VAR:
            raise ValueError(f"formula {f} is not a variable")
        return args[0]

    def kind(self, f: int) -> NodeKind:
        return self._nodes[abs(f)][0]

    def args(self, f: int) -> tuple[int, ...]:
        return self._nodes[abs(f)][1]

    @property
    def num_vars(self) -> int:
        return len(self._var_nodes) - 1

    @property
    def node_count(self) -> int:
        return len(self._nodes) - 2

    # --- CONSTRUCTORS ---
    @staticmethod
    def not_(a: int) -> int:
        return -a

    def and_(self, a: int, b: int) -> int:
        if a == FALSE or b == FALSE or a == -b:
            return FALSE
        if a == TRUE or a == b:
            return b
        if b == TRUE:
            return a
        if a > b:
            a, b = b, a
        return self._intern(NodeKind.AND, (a, b))

    def or_(self, a: int, b: int) -> int:
        return -self.and_(-a, -b)

    def xor(self, a: int, b: int) -> int:
        if a == FALSE:
            return b
        if b == FALSE:
            return a
        if a == TRUE:
            return -b
        if b == TRUE:
            return -a
        if a == b:
            return FALSE
        if a == -b:
            return TRUE
        negate = (a < 0) != (b < 0)
        a, b = abs(a), abs(b)
        if a > b:
            a, b = b, a
        node = self._intern(NodeKind.XOR, (a, b))
        return -node if negate else node

    def iff(self, a: int, b: int) -> int:
        return -self.xor(a, b)

    def ite(self, c: int, a: int, b: int) -> int:
        if c == TRUE:
            return a
        if c == FALSE:
            return b
        if a == b:
            return a
        if c < 0:
            c, a, b = -c, b, a
        if a == TRUE or a == c:
            return self.or_(c, b)
        if a == FALSE or a == -c:
            return self.and_(-c, b)
        if b == TRUE or b == -c:
            return self.or_(-c, a)
        if b == FALSE or b == c:
            return self.and_(c, a)
        if a == -b:
            return -self.xor(c, a)
        if a < 0:
            return -self._intern(NodeKind.ITE, (c, -a, -b))
        return self._intern(NodeKind.ITE, (c, a, b))

    def and_all(self, items: Iterable[int]) -> int:
        result = TRUE
        for f in items:
            result = self.and_(result, f)
            if result == FALSE:
                break
        return result

    # --- TRAVERSALS ---
    def evaluate_many(self, roots: Sequence[int], assignment: Mapping[int, bool]) -> list[bool]:
        """
        Evaluates several formulas under one variable assignment, sharing work
        across the DAG. Raises ValueError for a variable missing from `assignment`.
        """
        memo: dict[int, bool] = {1: True}
        for root in roots:
            stack = [abs(root)]
            while stack:
                node = stack[-1]
                if node in memo:
                    stack.pop()
                    continue
                kind, args = self._nodes[node]
                if kind is NodeKind.VAR:
                    if args[0] not in assignment:
                        raise ValueError(f"variable {args[0]} is unassigned")
                    memo[node] = bool(assignment[args[0]])
                    stack.pop()
                    continue
                pending = [abs(x) for x in args if abs(x) not in memo]
                if pending:
                    stack.extend(pending)
                    continue
                vals = [memo[abs(x)] != (x < 0) for x in args]
                if kind is NodeKind.AND:
                    memo[node] = vals[0] and vals[1]
                elif kind is NodeKind.XOR:
                    memo[node] = vals[0] != vals[1]
                else:
                    memo[node] = vals[1] if vals[0] else vals[2]
                stack.pop()
        return [memo[abs(root)] != (root < 0) for root in roots]

    def evaluate(self, f: int, assignment: Mapping[int, bool]) -> bool:
        return self.evaluate_many([f], assignment)[0]

    def reachable(self, roots: Iterable[int]) -> list[int]:
        """Positive node ids reachable from `roots`, children before parents."""
        order: list[int] = []
        seen: set[int] = {1}
        for root in roots:
            if abs(root) in seen:
                continue
            stack = [(abs(root), False)]
            while stack:
                node, expanded = stack.pop()
                if expanded:
                    order.append(node)
                    continue
                if node in seen:
                    continue
                seen.add(node)
                stack.append((node, True))
                if self._nodes[node][0] is not NodeKind.VAR:
                    stack.extend((abs(x), False) for x in reversed(self._nodes[node][1])
                                 if abs(x) not in seen)
        return order

    def variables_of(self, f: int) -> list[int]:
        return sorted(self._nodes[n][1][0] for n in self.reachable([f])
                      if self._nodes[n][0] is NodeKind.VAR)
