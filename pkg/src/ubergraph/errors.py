"""Exception hierarchy shared by every ubergraph module.

Each class carries a ``code`` naming the error case; the CLI prints it
verbatim so diagnostics stay stable across releases.
"""

from __future__ import annotations


class UbergraphError(Exception):
    """Base class. ``line``/``column`` are set when the error is tied to UGT input."""

    code = "UbergraphError"

    def __init__(self, message: str, *, label: str | None = None,
                 line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.message = message
        self.label = label
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.message} (line {self.line}, column {self.column})"


# construction / validation
class InvalidLabel(UbergraphError):
    code = "InvalidLabel"


class UnknownMember(UbergraphError):
    code = "UnknownMember"


class EmptyEdge(UbergraphError):
    code = "EmptyEdge"


class DuplicateMember(UbergraphError):
    code = "DuplicateMember"


class DuplicateLabel(UbergraphError):
    code = "DuplicateLabel"


class DuplicateEdgeSet(UbergraphError):
    code = "DuplicateEdgeSet"


class FoundationViolation(UbergraphError):
    code = "FoundationViolation"

    def __init__(self, message: str, cycle: list[str], **kw):
        super().__init__(message, **kw)
        self.cycle = cycle


# queries
class UndefinedInCyclicMode(UbergraphError):
    code = "UndefinedInCyclicMode"


class NotAHypergraph(UbergraphError):
    code = "NotAHypergraph"


class UnknownId(UbergraphError):
    code = "UnknownId"


class UnknownEdge(UnknownId):
    code = "UnknownEdge"


class UnknownVertex(UnknownId):
    code = "UnknownVertex"


class NotMembershipClosed(UbergraphError):
    code = "NotMembershipClosed"

    def __init__(self, message: str, missing: list[str], **kw):
        super().__init__(message, **kw)
        self.missing = missing


class NotAVertex(UbergraphError):
    code = "NotAVertex"


class NotADag(UbergraphError):
    code = "NotADag"


# text format
class UgtSyntaxError(UbergraphError):
    code = "SyntaxError"


# spectral
class NotSymmetric(UbergraphError):
    code = "NotSymmetric"


class NoConvergence(UbergraphError):
    code = "NoConvergence"


class DegenerateDistribution(UbergraphError):
    code = "DegenerateDistribution"


class NegativeEigenvalue(UbergraphError):
    code = "NegativeEigenvalue"


# isomorphism
class TooLarge(UbergraphError):
    code = "TooLarge"
