# core/errors.py


class UrsaError(Exception):
    """
    Base class for every user-facing failure of the pipeline.
    Carries the stage that failed and, when known, the source position.
    """

    stage = "pipeline"

    def __init__(self, message: str, line: int | None = None, col: int | None = None, stage: str | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        if stage:
            self.stage = stage

    @property
    def location(self) -> str | None:
        if self.line is None:
            return None
        return f"{self.line}:{self.col}"

    def __str__(self) -> str:
        where = f" at {self.location}" if self.location else ""
        return f"{self.stage} error{where}: {self.message}"


class LexError(UrsaError):
    stage = "lexer"


class ParseError(UrsaError):
    stage = "parser"

    def __init__(self, message: str, line: int | None = None, col: int | None = None,
                 expected: tuple[str, ...] = ()):
        if expected:
            message = f"{message} (expected one of: {', '.join(expected)})"
        super().__init__(message, line, col)
        self.expected = expected


class UnsupportedConstructError(ParseError):
    pass


class ExecutionError(UrsaError):
    stage = "executor"


class GroundnessError(ExecutionError):
    pass


class KindError(ExecutionError):
    pass


class CnfFormatError(UrsaError):
    stage = "dimacs"


class SolverError(UrsaError):
    stage = "solver"


class ExternalSolverError(SolverError):
    stage = "external-solver"


class ModelVerificationError(SolverError):
    pass


class CorpusError(UrsaError):
    stage = "corpus"
