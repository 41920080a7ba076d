# language/parser.py
import logging

from core.errors import ParseError, UnsupportedConstructError
from language.ast_nodes import (
    Assert, Assign, Binary, Block, BoolLit, CompoundAssign, Expr, For, If, Increment, Index,
    Ite, NatLit, Print, Program, Stmt, Unary, Var,
)
from language.tokens import Token, TokenKind, tokenize

logger = logging.getLogger("URSA-Parser")

# C precedence, larger binds tighter; '^^' sits between '&&' and '||'
BINARY_PRECEDENCE = {
    "||": 1,
    "^^": 2,
    "&&": 3,
    "|": 4,
    "^": 5,
    "&": 6,
    "==": 7, "!=": 7,
    "<": 8, "<=": 8, ">": 8, ">=": 8,
    "<<": 9, ">>": 9,
    "+": 10, "-": 10,
    "*": 11,
}
UNARY_OPERATORS = ("!", "-", "~")

COMPOUND_ASSIGN = {
    "+=": "+", "-=": "-", "*=": "*",
    "&=": "&", "|=": "|", "^=": "^", "<<=": "<<", ">>=": ">>",
    "&&=": "&&", "||=": "||", "^^=": "^^",
}

UNSUPPORTED = {
    "break": "'break' cannot be used",
    "continue": "'continue' cannot be used",
    "while": "'while' loops are an unsupported construct, use a for loop with ground bounds",
    "procedure": "procedures are an unsupported construct",
    "call": "procedure calls are an unsupported construct",
    "return": "'return' is an unsupported construct",
    "minimize": "'minimize' objectives are an unsupported construct",
    "maximize": "'maximize' objectives are an unsupported construct",
}

STATEMENT_START = ("identifier", "for", "if", "assert", "print", "{")


class Parser:
    """
    Recursive descent over the token list produced by `tokenize`.
    Expressions use precedence climbing with left-associative binary operators.
    """

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # --- TOKEN HELPERS ---
    def _peek(self, offset: int = 0) -> Token | None:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def _at(self, lexeme: str) -> bool:
        token = self._peek()
        return token is not None and token.is_(lexeme)

    def _location(self) -> tuple[int | None, int | None]:
        token = self._peek()
        if token is not None:
            return token.line, token.col
        if self.tokens:
            last = self.tokens[-1]
            return last.line, last.col + len(last.lexeme)
        return 1, 1

    def _error(self, message: str, expected: tuple[str, ...] = ()) -> ParseError:
        token = self._peek()
        found = f"'{token.lexeme}'" if token else "end of input"
        line, col = self._location()
        return ParseError(f"{message}, found {found}", line, col, expected)

    def _expect(self, lexeme: str) -> Token:
        if not self._at(lexeme):
            raise self._error("unexpected token", (f"'{lexeme}'",))
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    # --- PROGRAM / STATEMENTS ---
    def parse_program(self) -> Program:
        statements = []
        while self._peek() is not None:
            statements.append(self._statement())
        return Program(tuple(statements), line=1, col=1)

    def _statement(self) -> Stmt:
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of input", STATEMENT_START)

        if token.kind is TokenKind.KEYWORD:
            if token.lexeme in UNSUPPORTED:
                raise UnsupportedConstructError(UNSUPPORTED[token.lexeme], token.line, token.col)
            if token.lexeme == "for":
                return self._for()
            if token.lexeme == "if":
                return self._if()
            if token.lexeme == "assert":
                self.pos += 1
                self._expect("(")
                expr = self._expression()
                self._expect(")")
                self._expect(";")
                return Assert(expr, line=token.line, col=token.col)
            if token.lexeme == "print":
                self.pos += 1
                expr = self._expression()
                self._expect(";")
                return Print(expr, line=token.line, col=token.col)

        if token.is_("{"):
            self.pos += 1
            body = []
            while not self._at("}"):
                if self._peek() is None:
                    raise self._error("unterminated block", ("'}'",))
                body.append(self._statement())
            self.pos += 1
            return Block(tuple(body), line=token.line, col=token.col)

        if token.kind is TokenKind.IDENTIFIER:
            stmt = self._simple_statement(allow_increment=False)
            self._expect(";")
            return stmt

        raise self._error("expected a statement", STATEMENT_START)

    def _simple_statement(self, allow_increment: bool) -> Stmt:
        """Assignment, compound assignment, or (in a for step) `x++`."""
        start = self._peek()
        target = self._lvalue()
        token = self._peek()
        if token is None or token.kind is not TokenKind.OPERATOR:
            raise self._error("expected an assignment", ("'='", "compound assignment"))

        if token.lexeme == "=":
            self.pos += 1
            return Assign(target, self._expression(), line=start.line, col=start.col)
        if token.lexeme in COMPOUND_ASSIGN:
            self.pos += 1
            return CompoundAssign(target, COMPOUND_ASSIGN[token.lexeme], self._expression(),
                                  line=start.line, col=start.col)
        if token.lexeme == "++":
            if not allow_increment:
                raise ParseError("'++' is only allowed as a for-loop step", token.line, token.col)
            self.pos += 1
            return Increment(target, line=start.line, col=start.col)
        if token.lexeme == "--":
            raise UnsupportedConstructError("'--' is not supported, use '-= 1'", token.line, token.col)
        raise self._error("expected an assignment", ("'='", "compound assignment"))

    def _for(self) -> For:
        keyword = self.tokens[self.pos]
        self.pos += 1
        self._expect("(")
        init = None if self._at(";") else self._simple_statement(allow_increment=True)
        self._expect(";")
        if self._at(";"):
            raise self._error("a for loop needs a ground condition", ("expression",))
        cond = self._expression()
        self._expect(";")
        step = None if self._at(")") else self._simple_statement(allow_increment=True)
        self._expect(")")
        body = self._statement()
        return For(init, cond, step, body, line=keyword.line, col=keyword.col)

    def _if(self) -> If:
        keyword = self.tokens[self.pos]
        self.pos += 1
        self._expect("(")
        cond = self._expression()
        self._expect(")")
        then = self._statement()
        other = None
        if self._at("else"):
            self.pos += 1
            other = self._statement()
        return If(cond, then, other, line=keyword.line, col=keyword.col)

    def _lvalue(self) -> Var | Index:
        token = self._peek()
        if token is None or token.kind is not TokenKind.IDENTIFIER:
            raise self._error("expected a variable", ("identifier",))
        self.pos += 1
        indices = []
        while self._at("["):
            self.pos += 1
            indices.append(self._expression())
            self._expect("]")
        if indices:
            return Index(token.lexeme, tuple(indices), line=token.line, col=token.col)
        return Var(token.lexeme, line=token.line, col=token.col)

    # --- EXPRESSIONS ---
    def _expression(self, min_precedence: int = 1) -> Expr:
        left = self._unary()
        while True:
            token = self._peek()
            if token is None or token.kind is not TokenKind.OPERATOR:
                return left
            precedence = BINARY_PRECEDENCE.get(token.lexeme)
            if precedence is None or precedence < min_precedence:
                return left
            self.pos += 1
            right = self._expression(precedence + 1)
            left = Binary(token.lexeme, left, right, line=token.line, col=token.col)

    def _unary(self) -> Expr:
        token = self._peek()
        if token is not None and token.kind is TokenKind.OPERATOR:
            if token.lexeme in UNARY_OPERATORS:
                self.pos += 1
                return Unary(token.lexeme, self._unary(), line=token.line, col=token.col)
            if token.lexeme in ("++", "--"):
                raise UnsupportedConstructError(
                    f"'{token.lexeme}' is only allowed as a for-loop step", token.line, token.col)
        return self._primary()

    def _primary(self) -> Expr:
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of input", ("expression",))

        if token.kind is TokenKind.NATURAL:
            self.pos += 1
            return NatLit(int(token.lexeme), line=token.line, col=token.col)

        if token.kind is TokenKind.IDENTIFIER:
            nxt = self._peek(1)
            if nxt is not None and nxt.is_("("):
                raise UnsupportedConstructError(
                    f"call of '{token.lexeme}': 'ite' is the only call form", token.line, token.col)
            return self._lvalue()

        if token.kind is TokenKind.KEYWORD:
            if token.lexeme in ("true", "false"):
                self.pos += 1
                return BoolLit(token.lexeme == "true", line=token.line, col=token.col)
            if token.lexeme == "ite":
                self.pos += 1
                self._expect("(")
                cond = self._expression()
                self._expect(",")
                then = self._expression()
                self._expect(",")
                other = self._expression()
                self._expect(")")
                return Ite(cond, then, other, line=token.line, col=token.col)
            if token.lexeme in UNSUPPORTED:
                raise UnsupportedConstructError(UNSUPPORTED[token.lexeme], token.line, token.col)

        if token.is_("("):
            self.pos += 1
            expr = self._expression()
            self._expect(")")
            return expr

        raise self._error("expected an expression",
                          ("identifier", "natural-literal", "true", "false", "ite", "'('", "unary operator"))


def parse(tokens: list[Token]) -> Program:
    program = Parser(tokens).parse_program()
    logger.debug(f"[Parser] {len(program.statements)} top-level statements")
    return program


def parse_source(source: str) -> Program:
    """Convenience wrapper: tokenize then parse."""
    return parse(tokenize(source))
