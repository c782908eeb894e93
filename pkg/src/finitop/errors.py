"""Error taxonomy shared by every layer of the package.

Each error carries a stable ``code`` string plus a ``context`` dict of
machine-readable details (witness masks, offending names) so the service
layer can emit structured error documents and the CLI can map codes to
exit statuses.
"""

from __future__ import annotations


class FinitopError(Exception):
    """Base class for domain errors."""

    code = "error"

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_doc(self) -> dict:
        doc = {"code": self.code, "message": self.message}
        if self.context:
            doc["context"] = {k: v for k, v in self.context.items()}
        return doc


class WidthOverflow(FinitopError):
    """A subset or ground set does not fit the configured mask width."""

    code = "WidthOverflow"


class MissingEmptyOrFull(FinitopError):
    """A strict topology input lacks the empty or the full set."""

    code = "MissingEmptyOrFull"


class NotClosedUnderUnion(FinitopError):
    code = "NotClosedUnderUnion"

    def __init__(self, a: int, b: int):
        super().__init__("family is not closed under union", a=a, b=b)
        self.pair = (a, b)


class NotClosedUnderIntersection(FinitopError):
    code = "NotClosedUnderIntersection"

    def __init__(self, a: int, b: int):
        super().__init__("family is not closed under intersection", a=a, b=b)
        self.pair = (a, b)


class UnknownKind(FinitopError):
    """Requested set kind is not one of the implemented families."""

    code = "UnknownKind"


class UnknownClass(FinitopError):
    """Requested continuity class is not implemented."""

    code = "UnknownClass"


class UnknownTheoremId(FinitopError):
    code = "UnknownTheoremId"


class UnknownExample(FinitopError):
    code = "UnknownExample"


class WidthMismatch(FinitopError):
    """A map's spaces disagree with the widths its masks assume."""

    code = "WidthMismatch"


class SpaceMismatch(FinitopError):
    """Two maps that must share domain and codomain do not."""

    code = "SpaceMismatch"


class SizeUnsupported(FinitopError):
    """Exhaustive enumeration was asked for a ground set above its limit."""

    code = "SizeUnsupported"


class DocumentError(FinitopError):
    """A JSON space or map document is malformed."""

    code = "DocumentError"


class UnknownLabel(DocumentError):
    code = "UnknownLabel"
