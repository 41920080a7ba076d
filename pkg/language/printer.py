# language/printer.py
from language.ast_nodes import (
    Assert, Assign, Binary, Block, BoolLit, CompoundAssign, Expr, For, If, Increment, Index,
    Ite, NatLit, Print, Program, Stmt, Unary, Var,
)
from language.parser import BINARY_PRECEDENCE

INDENT = "  "
UNARY_PRECEDENCE = 12


def _precedence(expr: Expr) -> int:
    if isinstance(expr, Binary):
        return BINARY_PRECEDENCE[expr.op]
    if isinstance(expr, Unary):
        return UNARY_PRECEDENCE
    return UNARY_PRECEDENCE + 1


def expr_text(expr: Expr) -> str:
    """Renders an expression with the fewest parentheses that keep its grouping."""
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Index):
        return expr.name + "".join(f"[{expr_text(i)}]" for i in expr.indices)
    if isinstance(expr, NatLit):
        return str(expr.value)
    if isinstance(expr, BoolLit):
        return "true" if expr.value else "false"
    if isinstance(expr, Ite):
        return f"ite({expr_text(expr.cond)}, {expr_text(expr.then)}, {expr_text(expr.other)})"
    if isinstance(expr, Unary):
        inner = expr_text(expr.operand)
        if _precedence(expr.operand) < UNARY_PRECEDENCE:
            inner = f"({inner})"
        elif expr.op == "-" and inner.startswith("-"):
            # '--' would lex as a single operator
            inner = f"({inner})"
        return f"{expr.op}{inner}"
    if isinstance(expr, Binary):
        prec = BINARY_PRECEDENCE[expr.op]
        left = expr_text(expr.left)
        if _precedence(expr.left) < prec:
            left = f"({left})"
        right = expr_text(expr.right)
        if _precedence(expr.right) <= prec:
            right = f"({right})"
        return f"{left} {expr.op} {right}"
    raise TypeError(f"not an expression node: {type(expr).__name__}")


def _simple_text(stmt: Stmt) -> str:
    if isinstance(stmt, Assign):
        return f"{expr_text(stmt.target)} = {expr_text(stmt.value)}"
    if isinstance(stmt, CompoundAssign):
        return f"{expr_text(stmt.target)} {stmt.op}= {expr_text(stmt.value)}"
    if isinstance(stmt, Increment):
        return f"{expr_text(stmt.target)}++"
    raise TypeError(f"not a simple statement: {type(stmt).__name__}")


def _body_lines(header: str, body: Stmt, depth: int) -> list[str]:
    pad = INDENT * depth
    if isinstance(body, Block):
        lines = [f"{pad}{header} {{"]
        for inner in body.statements:
            lines.extend(_stmt_lines(inner, depth + 1))
        lines.append(f"{pad}}}")
        return lines
    return [f"{pad}{header}", *_stmt_lines(body, depth + 1)]


def _ends_with_open_if(stmt: Stmt) -> bool:
    """True when an `else` printed right after `stmt` would bind to an if inside it."""
    if isinstance(stmt, If):
        return stmt.other is None or _ends_with_open_if(stmt.other)
    if isinstance(stmt, For):
        return _ends_with_open_if(stmt.body)
    return False


def _stmt_lines(stmt: Stmt, depth: int) -> list[str]:
    pad = INDENT * depth
    if isinstance(stmt, (Assign, CompoundAssign, Increment)):
        return [f"{pad}{_simple_text(stmt)};"]
    if isinstance(stmt, Assert):
        return [f"{pad}assert({expr_text(stmt.expr)});"]
    if isinstance(stmt, Print):
        return [f"{pad}print {expr_text(stmt.expr)};"]
    if isinstance(stmt, Block):
        lines = [f"{pad}{{"]
        for inner in stmt.statements:
            lines.extend(_stmt_lines(inner, depth + 1))
        lines.append(f"{pad}}}")
        return lines
    if isinstance(stmt, For):
        init = _simple_text(stmt.init) if stmt.init else ""
        step = _simple_text(stmt.step) if stmt.step else ""
        return _body_lines(f"for ({init}; {expr_text(stmt.cond)}; {step})", stmt.body, depth)
    if isinstance(stmt, If):
        then = stmt.then
        if stmt.other is not None and _ends_with_open_if(then):
            # an unbraced inner if would capture our else
            then = Block((then,), line=then.line, col=then.col)
        lines = _body_lines(f"if ({expr_text(stmt.cond)})", then, depth)
        if stmt.other is not None:
            if isinstance(then, Block):
                lines.pop()
                lines.extend(_body_lines("} else", stmt.other, depth))
            else:
                lines.extend(_body_lines("else", stmt.other, depth))
        return lines
    raise TypeError(f"not a statement node: {type(stmt).__name__}")


def pretty_print(program: Program) -> str:
    lines: list[str] = []
    for stmt in program.statements:
        lines.extend(_stmt_lines(stmt, 0))
    return "\n".join(lines) + ("\n" if lines else "")
