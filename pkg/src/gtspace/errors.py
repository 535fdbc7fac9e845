"""Exception hierarchy shared by every gtspace module."""

from __future__ import annotations


class GtError(ValueError):
    """Base class; ``reason`` is a stable machine-readable tag."""

    reason = "GtError"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.reason)
        self.details = details

    def to_doc(self) -> dict:
        doc = {"error": self.reason, "message": str(self)}
        if self.details:
            doc["details"] = self.details
        return doc


class ParseError(GtError):
    reason = "ParseError"


class WidthMismatch(GtError):
    reason = "WidthMismatch"


class MissingEmpty(GtError):
    reason = "MissingEmpty"


class NotUnionClosed(GtError):
    reason = "NotUnionClosed"

    def __init__(self, message: str, pair: tuple[int, int], **details):
        super().__init__(message, **details)
        self.pair = pair


class NotStrong(GtError):
    reason = "NotStrong"


class NotSurjective(GtError):
    reason = "NotSurjective"

    def __init__(self, message: str, point: int, **details):
        super().__init__(message, **details)
        self.point = point


class OutOfRange(GtError):
    reason = "OutOfRange"


class NotInCarrier(GtError):
    reason = "NotInCarrier"


class BoundExceeded(GtError):
    reason = "BoundExceeded"


class ProvableImplication(GtError):
    reason = "ProvableImplication"
