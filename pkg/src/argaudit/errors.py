"""Exception hierarchy shared by every argaudit package.

Each error keeps the offending value on an attribute (line/column, movie id,
input point, cap) so the CLI can map it to an exit code and a one-line
diagnostic without parsing messages.
"""

from __future__ import annotations

from typing import Any


class ArgauditError(Exception):
    """Base class for every error raised by argaudit."""


class ParseError(ArgauditError):
    def __init__(self, message: str, *, line: int, column: int, source: str | None = None) -> None:
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source

    @classmethod
    def from_decode_error(cls, exc: UnicodeDecodeError, *, source: str | None = None) -> ParseError:
        """Locate the first undecodable byte of ``exc.object`` as a line and column."""
        data = exc.object
        line = data.count(b"\n", 0, exc.start) + 1
        column = exc.start - data.rfind(b"\n", 0, exc.start)
        return cls(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line=line, column=column, source=source)


class PolicySyntaxError(ParseError):
    """Malformed policy text (unterminated clause, bad identifier, unbalanced parens)."""


class ApxSyntaxError(ParseError):
    """Malformed APX argumentation-framework text."""


class UndeclaredArgumentError(ApxSyntaxError):
    """An ``att(a,b).`` line names an argument with no ``arg(...)`` declaration."""


class DataFormatError(ArgauditError):
    """Bad column count, type or range in a dataset file."""

    def __init__(self, message: str, *, row: int | None = None) -> None:
        super().__init__(f"row {row}: {message}" if row is not None else message)
        self.row = row


class DuplicateKeyError(DataFormatError):
    pass


class EmptyCatalogError(DataFormatError):
    pass


class UnknownInputError(ArgauditError):
    """An input point cannot be resolved against the catalog."""


class UnknownMovieError(UnknownInputError):
    def __init__(self, movie_id: int) -> None:
        super().__init__(f"movie_id {movie_id} is not in the catalog")
        self.movie_id = movie_id


class InsufficientCatalogError(ArgauditError):
    def __init__(self, size: int, required: int) -> None:
        super().__init__(f"catalog has {size} movies, at least {required} are required")
        self.size = size
        self.required = required


class EvaluationError(ArgauditError):
    """The system under audit failed on an input; the input is attached."""

    def __init__(self, point: Any, cause: BaseException) -> None:
        super().__init__(f"evaluation failed for {point}: {cause}")
        self.point = point


class ConfigError(ArgauditError):
    pass


class MissingBindingError(ConfigError):
    def __init__(self, atom: str) -> None:
        super().__init__(f"no [bindings] entry for body atom {atom}")
        self.atom = atom


class MissingDescriptorGroupError(ConfigError):
    def __init__(self, atom: str) -> None:
        super().__init__(f"no [descriptors] group for clause head {atom}")
        self.atom = atom


class UndeclaredDescriptorError(ConfigError):
    def __init__(self, atom: str) -> None:
        super().__init__(f"descriptor {atom} can be produced by the system but is not declared in [descriptors]")
        self.atom = atom


class SolverError(ArgauditError):
    pass


class TooLargeError(SolverError):
    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"brute force is capped at {cap} arguments, graph has {size}")
        self.size = size
        self.cap = cap


class ExtensionOverflowError(SolverError):
    def __init__(self, cap: int) -> None:
        super().__init__(f"more than {cap} extensions; raise ARGAUDIT_MAX_EXTENSIONS to enumerate them")
        self.cap = cap


class DialogueError(ArgauditError):
    """A dialogue operation was called outside its precondition."""
