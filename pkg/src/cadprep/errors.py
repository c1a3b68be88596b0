"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Operands belong to different variable contexts."""


class OrderMismatchError(ValueError):
    """A polynomial was combined with a basis built under another order."""


class ParseError(ValueError):
    """Syntax error in polynomial or problem text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NotWellOrientedError(RuntimeError):
    """A projection polynomial vanished identically over a positive-dimensional cell."""

    def __init__(self, polynomial, cell_index):
        super().__init__(
            "projection not well-oriented: %s vanishes identically over cell %s"
            % (polynomial, tuple(cell_index))
        )
        self.polynomial = polynomial
        self.cell_index = tuple(cell_index)


class PrecisionExhaustedError(RuntimeError):
    """Sign determination stayed ambiguous after the refinement budget."""


class BudgetExceededError(RuntimeError):
    """A cooperative deadline expired inside a long-running computation."""
