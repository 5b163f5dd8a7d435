"""Exception hierarchy shared by all biotimelines modules."""

from __future__ import annotations


class BiotimelinesError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(BiotimelinesError):
    """A dump file line violates the column contract."""

    def __init__(self, file: str, line_no: int, reason: str):
        super().__init__(f"{file}:{line_no}: {reason}")
        self.file = file
        self.line_no = line_no
        self.reason = reason


class InvalidDate(BiotimelinesError):
    """A date literal is neither YYYY-MM-DD nor YYYY, or names no real day."""

    def __init__(self, text: str):
        super().__init__(f"invalid date literal: {text!r}")
        self.text = text


class DuplicateId(BiotimelinesError):
    """The same id is declared twice across entities and events."""

    def __init__(self, id: str):
        super().__init__(f"duplicate id: {id}")
        self.id = id


class DanglingReference(BiotimelinesError):
    """A fact or event references an id that is not loaded."""

    def __init__(self, id: str):
        super().__init__(f"dangling reference: {id}")
        self.id = id


class UnknownPerson(BiotimelinesError):
    """The requested id does not exist in the graph."""

    def __init__(self, id: str):
        super().__init__(f"unknown person: {id}")
        self.id = id


class NotAPerson(BiotimelinesError):
    """The requested id exists but is not a person entity."""

    def __init__(self, id: str):
        super().__init__(f"not a person: {id}")
        self.id = id


class PersonMismatch(BiotimelinesError):
    """A labeled document and its candidate relations disagree on the subject."""


class EmptyBenchmark(BiotimelinesError):
    """A feature schema cannot be built from zero labeled relations."""


class SchemaMismatch(BiotimelinesError):
    """Feature vector, schema, and model dimensions disagree."""


class DegenerateTrainingSet(BiotimelinesError):
    """Training requires at least one relevant and one non-relevant example."""
