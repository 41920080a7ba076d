# language/ast_nodes.py
from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class Node:
    # Source positions never take part in structural equality
    line: int = field(default=0, compare=False, kw_only=True)
    col: int = field(default=0, compare=False, kw_only=True)


# --- EXPRESSIONS ---
@dataclass(frozen=True, slots=True)
class Expr(Node):
    pass


@dataclass(frozen=True, slots=True)
class Var(Expr):
    name: str


@dataclass(frozen=True, slots=True)
class Index(Expr):
    name: str
    indices: tuple[Expr, ...]


@dataclass(frozen=True, slots=True)
class NatLit(Expr):
    value: int


@dataclass(frozen=True, slots=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True, slots=True)
class Unary(Expr):
    op: str
    operand: Expr


@dataclass(frozen=True, slots=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Ite(Expr):
    cond: Expr
    then: Expr
    other: Expr


LValue = Var | Index


# --- STATEMENTS ---
@dataclass(frozen=True, slots=True)
class Stmt(Node):
    pass


@dataclass(frozen=True, slots=True)
class Assign(Stmt):
    target: LValue
    value: Expr


@dataclass(frozen=True, slots=True)
class CompoundAssign(Stmt):
    target: LValue
    op: str  # binary operator without the trailing '=', e.g. '&&'
    value: Expr


@dataclass(frozen=True, slots=True)
class Increment(Stmt):
    """`x++`, only produced for a for-loop step."""
    target: LValue


@dataclass(frozen=True, slots=True)
class For(Stmt):
    init: Stmt | None
    cond: Expr
    step: Stmt | None
    body: Stmt


@dataclass(frozen=True, slots=True)
class If(Stmt):
    cond: Expr
    then: Stmt
    other: Stmt | None = None


@dataclass(frozen=True, slots=True)
class Assert(Stmt):
    expr: Expr


@dataclass(frozen=True, slots=True)
class Print(Stmt):
    expr: Expr


@dataclass(frozen=True, slots=True)
class Block(Stmt):
    statements: tuple[Stmt, ...]


@dataclass(frozen=True, slots=True)
class Program(Node):
    statements: tuple[Stmt, ...]
