"""Exception types shared across the toolkit."""

from __future__ import annotations


class CFGError(Exception):
    """Base class for all toolkit errors."""


class PositionMismatch(CFGError):
    """A rewrite position does not hold the rule's left-hand side."""


class UnknownRule(CFGError):
    """A rule was applied that is not part of the grammar."""


class TraceInvalid(CFGError):
    """A derivation trace failed to replay.

    ``step`` is the 0-based index of the offending step, or None when the
    replayed final form disagrees with the recorded end form.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class FormMismatch(CFGError):
    """Two traces cannot be composed because their forms do not line up."""


class InvalidOperand(CFGError):
    """A grammar operand failed validation."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class VariantExplosion(CFGError):
    """A rule has too many nullable occurrences to expand (limit 16)."""


class EmptyLanguage(CFGError):
    """The grammar generates no sentences, so the transform is undefined."""


class BoundTooLarge(CFGError):
    """A requested length bound exceeds the enumeration cap."""


class GrammarSyntaxError(CFGError):
    """Malformed grammar document."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(CFGError):
    """A parsed grammar failed validation."""

    def __init__(self, report):
        lines = "; ".join(v.message for v in report.violations)
        super().__init__(f"invalid grammar: {lines}")
        self.report = report
