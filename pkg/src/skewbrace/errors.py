class SkewBraceError(Exception):
    """Base class for errors raised by this package."""


class FormatError(SkewBraceError, ValueError):
    """Malformed input: a table of the wrong shape or a bad text file.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ''
        if line is not None:
            where = f'line {line}'
            if column is not None:
                where += f', column {column}'
            where += ': '
        super().__init__(where + message)


class PreconditionError(SkewBraceError, ValueError):
    """Well-formed input that does not satisfy an operation's precondition
    (e.g. a subset that is not an ideal, or a degenerate solution)."""
