# interpreter/executor.py
import logging
import time
from dataclasses import dataclass, field

from core.errors import ExecutionError, GroundnessError, KindError
from core.settings import MAX_LOOP_ITERATIONS
from interpreter.environment import Environment, Unknown
from interpreter.values import (
    SymBool, SymWord, Value, as_bits, as_node, is_bool, is_ground, is_nat, make_bool, make_word,
)
from language.ast_nodes import (
    Assert, Assign, Binary, Block, BoolLit, CompoundAssign, Expr, For, If, Increment, Index,
    Ite, NatLit, Node, Print, Program, Stmt, Unary, Var,
)
from language.printer import expr_text
from symbolic.formula import TRUE, FormulaStore
from symbolic.words import (
    word_add, word_and, word_cmp, word_ite, word_mul, word_neg, word_not, word_or, word_shl,
    word_shr, word_sub, word_value, word_xor,
)

logger = logging.getLogger("Symbolic-Executor")

ARITHMETIC = {"+", "-", "*"}
BITWISE = {"&", "|", "^"}
SHIFTS = {"<<", ">>"}
LOGICAL = {"&&", "||", "^^"}
EQUALITY = {"==", "!="}
ORDERING = {"<", "<=", ">", ">="}


@dataclass
class ExecResult:
    assertion: int
    prints: list[tuple[str, int | bool]]
    registry: list[Unknown]
    stats: dict[str, int | float]
    env: Environment
    store: FormulaStore
    width: int

    def value(self, name: str, *indices: int) -> Value | None:
        """Final value of a variable or array cell, None if it was never defined."""
        return self.env.get(name, tuple(indices))

    @property
    def names(self) -> dict[str, tuple[int, ...]]:
        return self.env.names()


def ground_check(value: Value, node: Node | None = None, what: str = "value") -> int | bool:
    """
    Returns the ground content of `value`; constant-bit words decode to ints.
    Raises GroundnessError at the node's location for anything symbolic.
    """
    if is_ground(value):
        return value
    if isinstance(value, SymWord):
        decoded = word_value(value.bits)
        if decoded is not None:
            return decoded
    elif isinstance(value, SymBool):
        grounded = make_bool(value.node)
        if not isinstance(grounded, SymBool):
            return grounded
    line, col = (node.line, node.col) if node is not None else (None, None)
    raise GroundnessError(f"{what} must be ground (known at execution time)", line, col)


@dataclass
class SymbolicExecutor:
    width: int
    max_loop_iterations: int = MAX_LOOP_ITERATIONS
    store: FormulaStore = field(default_factory=FormulaStore)
    env: Environment = field(default_factory=Environment)

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        self.mask = (1 << self.width) - 1
        self.assertion = TRUE
        self.prints: list[tuple[str, int | bool]] = []
        self.loop_iterations = 0

    # --- ENTRY POINT ---
    def run(self, program: Program) -> ExecResult:
        started = time.perf_counter()
        for stmt in program.statements:
            self.exec_stmt(stmt)

        stats = {
            "loop_iterations": self.loop_iterations,
            "node_count": self.store.node_count,
            "num_vars": self.store.num_vars,
            "unknowns": len(self.env.registry),
            "exec_seconds": round(time.perf_counter() - started, 4),
        }
        logger.info(
            f"[Executor] width={self.width} unknowns={stats['unknowns']} vars={stats['num_vars']} "
            f"nodes={stats['node_count']} iterations={stats['loop_iterations']}")
        return ExecResult(self.assertion, self.prints, list(self.env.registry), stats,
                          self.env, self.store, self.width)

    # --- STATEMENTS ---
    def exec_stmt(self, stmt: Stmt):
        if isinstance(stmt, Assign):
            name, indices = self._locate(stmt.target)
            self._store(stmt.target, name, indices, self.eval(stmt.value))
        elif isinstance(stmt, CompoundAssign):
            self.compound_assign(stmt.target, stmt.op, stmt.value, stmt)
        elif isinstance(stmt, Increment):
            self.compound_assign(stmt.target, "+", NatLit(1, line=stmt.line, col=stmt.col), stmt)
        elif isinstance(stmt, Block):
            for inner in stmt.statements:
                self.exec_stmt(inner)
        elif isinstance(stmt, For):
            self._exec_for(stmt)
        elif isinstance(stmt, If):
            cond = self._condition(stmt.cond, "if condition")
            if cond:
                self.exec_stmt(stmt.then)
            elif stmt.other is not None:
                self.exec_stmt(stmt.other)
        elif isinstance(stmt, Assert):
            value = self.eval(stmt.expr)
            if not is_bool(value):
                raise KindError("assert needs a boolean expression", stmt.line, stmt.col)
            self.assertion = self.store.and_(self.assertion, as_node(value))
        elif isinstance(stmt, Print):
            value = ground_check(self.eval(stmt.expr), stmt,
                                 "printed value (symbolic values are reported with the model)")
            self.prints.append((expr_text(stmt.expr), value))
        else:
            raise ExecutionError(f"unsupported statement {type(stmt).__name__}", stmt.line, stmt.col)

    def _exec_for(self, stmt: For):
        if stmt.init is not None:
            self.exec_stmt(stmt.init)
        while True:
            value = self.eval(stmt.cond)
            if not is_bool(value):
                raise KindError("loop condition must be boolean", stmt.cond.line, stmt.cond.col)
            if not is_ground(value):
                raise GroundnessError("Loops must have known, ground bounds", stmt.line, stmt.col)
            if not value:
                return
            self.loop_iterations += 1
            if self.loop_iterations > self.max_loop_iterations:
                raise ExecutionError(
                    f"loop iteration limit of {self.max_loop_iterations} exceeded", stmt.line, stmt.col)
            self.exec_stmt(stmt.body)
            if stmt.step is not None:
                self.exec_stmt(stmt.step)

    def _condition(self, expr: Expr, what: str) -> bool:
        value = self.eval(expr)
        if not is_bool(value):
            raise KindError(f"{what} must be boolean", expr.line, expr.col)
        return ground_check(value, expr, what)

    def compound_assign(self, target: Var | Index, op: str, rhs: Expr, stmt: Stmt):
        """`x op= e` is `x = x op e`; an undefined x becomes an unknown first."""
        name, indices = self._locate(target)
        current = self._read(name, indices)
        result = self._binary(op, current, self.eval(rhs), stmt)
        self._store(target, name, indices, result)

    # --- LOCATIONS ---
    def _locate(self, target: Var | Index) -> tuple[str, tuple[int, ...]]:
        if isinstance(target, Var):
            return target.name, ()
        indices = []
        for index_expr in target.indices:
            index = self.eval(index_expr)
            if not is_nat(index):
                raise KindError("array index must be a natural", index_expr.line, index_expr.col)
            indices.append(ground_check(index, index_expr, "array index"))
        return target.name, tuple(indices)

    def _read(self, name: str, indices: tuple[int, ...]) -> Value:
        value = self.env.get(name, indices)
        if value is not None:
            return value

        # First read of an undefined location introduces fresh variables
        if name.startswith("n"):
            bits = tuple(self.store.new_var() for _ in range(self.width))
            value = SymWord(bits)
        else:
            bits = (self.store.new_var(),)
            value = SymBool(bits[0])
        unknown = Unknown(name, indices, tuple(self.store.var_of(b) for b in bits))
        self.env.register(unknown)
        self.env.set(name, indices, value)
        logger.debug(f"[Executor] fresh unknown {unknown.display} -> vars {unknown.var_ids}")
        return value

    def _store(self, target: Node, name: str, indices: tuple[int, ...], value: Value):
        if name.startswith("n") and not is_nat(value):
            raise KindError(f"cannot assign a boolean to natural '{name}'", target.line, target.col)
        if name.startswith("b") and not is_bool(value):
            raise KindError(f"cannot assign a natural to boolean '{name}'", target.line, target.col)
        self.env.set(name, indices, value)

    # --- EXPRESSIONS ---
    def eval(self, expr: Expr) -> Value:
        if isinstance(expr, NatLit):
            return expr.value & self.mask
        if isinstance(expr, BoolLit):
            return expr.value
        if isinstance(expr, (Var, Index)):
            return self._read(*self._locate(expr))
        if isinstance(expr, Unary):
            return self._unary(expr)
        if isinstance(expr, Binary):
            return self._binary(expr.op, self.eval(expr.left), self.eval(expr.right), expr)
        if isinstance(expr, Ite):
            return self._ite(expr)
        raise ExecutionError(f"unsupported expression {type(expr).__name__}", expr.line, expr.col)

    def _unary(self, expr: Unary) -> Value:
        value = self.eval(expr.operand)
        if expr.op == "!":
            if not is_bool(value):
                raise KindError("'!' needs a boolean operand", expr.line, expr.col)
            return (not value) if is_ground(value) else SymBool(-value.node)
        if not is_nat(value):
            raise KindError(f"'{expr.op}' needs a natural operand", expr.line, expr.col)
        if expr.op == "-":
            if is_ground(value):
                return -value & self.mask
            return make_word(word_neg(self.store, value.bits))
        if is_ground(value):
            return ~value & self.mask
        return SymWord(word_not(value.bits))

    def _binary(self, op: str, left: Value, right: Value, node: Node) -> Value:
        if op in LOGICAL or (op in BITWISE and is_bool(left) and is_bool(right)):
            return self._logical(op, left, right, node)

        if op in EQUALITY and is_bool(left) and is_bool(right):
            if is_ground(left) and is_ground(right):
                return (left == right) == (op == "==")
            diff = self.store.xor(as_node(left), as_node(right))
            return make_bool(-diff if op == "==" else diff)

        if not (is_nat(left) and is_nat(right)):
            raise KindError(f"'{op}' needs two naturals (or two booleans for logical operators)",
                            node.line, node.col)

        if op in SHIFTS:
            amount = ground_check(right, node, "shift amount")
            if is_ground(left):
                if amount >= self.width:
                    return 0
                return (left << amount if op == "<<" else left >> amount) & self.mask
            shifted = word_shl(left.bits, amount) if op == "<<" else word_shr(left.bits, amount)
            return make_word(shifted)

        if is_ground(left) and is_ground(right):
            return self._ground_nat(op, left, right)

        a, b = as_bits(left, self.width), as_bits(right, self.width)
        if op in EQUALITY or op in ORDERING:
            return make_bool(word_cmp(self.store, op, a, b))
        ops = {
            "+": word_add, "-": word_sub, "*": word_mul,
            "&": word_and, "|": word_or, "^": word_xor,
        }
        if op not in ops:
            raise ExecutionError(f"unknown operator '{op}'", node.line, node.col)
        return make_word(ops[op](self.store, a, b))

    def _ground_nat(self, op: str, a: int, b: int) -> int | bool:
        match op:
            case "+": return (a + b) & self.mask
            case "-": return (a - b) & self.mask
            case "*": return (a * b) & self.mask
            case "&": return a & b
            case "|": return a | b
            case "^": return a ^ b
            case "==": return a == b
            case "!=": return a != b
            case "<": return a < b
            case "<=": return a <= b
            case ">": return a > b
            case ">=": return a >= b
        raise ExecutionError(f"unknown operator '{op}'")

    def _logical(self, op: str, left: Value, right: Value, node: Node) -> Value:
        if not (is_bool(left) and is_bool(right)):
            raise KindError(f"'{op}' needs two booleans", node.line, node.col)
        if is_ground(left) and is_ground(right):
            if op in ("&&", "&"):
                return left and right
            if op in ("||", "|"):
                return left or right
            return left != right
        a, b = as_node(left), as_node(right)
        if op in ("&&", "&"):
            return make_bool(self.store.and_(a, b))
        if op in ("||", "|"):
            return make_bool(self.store.or_(a, b))
        return make_bool(self.store.xor(a, b))

    def _ite(self, expr: Ite) -> Value:
        cond = self.eval(expr.cond)
        if not is_bool(cond):
            raise KindError("ite condition must be boolean", expr.cond.line, expr.cond.col)
        # Both branches are evaluated so unknowns register the same way for any condition
        then, other = self.eval(expr.then), self.eval(expr.other)
        if is_ground(cond):
            chosen = then if cond else other
            if is_bool(then) != is_bool(other):
                raise KindError("ite branches must have the same kind", expr.line, expr.col)
            return chosen
        c = as_node(cond)
        if is_bool(then) and is_bool(other):
            return make_bool(self.store.ite(c, as_node(then), as_node(other)))
        if is_nat(then) and is_nat(other):
            bits = word_ite(self.store, c, as_bits(then, self.width), as_bits(other, self.width))
            return make_word(bits)
        raise KindError("ite branches must have the same kind", expr.line, expr.col)


def execute(program: Program, width: int, max_loop_iterations: int | None = None) -> ExecResult:
    """Symbolically executes `program` with `width`-bit naturals."""
    executor = SymbolicExecutor(width, max_loop_iterations or MAX_LOOP_ITERATIONS)
    return executor.run(program)
