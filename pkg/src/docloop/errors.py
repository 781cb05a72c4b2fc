"""Exception types shared across the package."""


class DocloopError(Exception):
    """Base class for all package errors."""


class DelimiterCollision(DocloopError):
    """An annotation value contains the reserved '::' delimiter."""


class FieldCountMismatch(DocloopError):
    """A serialized annotation does not have the field count its class requires."""


class SerialOverflow(DocloopError):
    """A serial number exceeds the digit budget of its document class."""


class UnknownClass(DocloopError):
    """A document class id is not one of the five supported classes."""


class SchemaError(DocloopError):
    """A template file does not match the expected JSON schema."""


class DegenerateAnchor(DocloopError):
    """A template's identified anchor box has zero width or height."""


class EmptyCrop(DocloopError):
    """A box has no area left after clamping to the image bounds."""


class PlacementOverflow(DocloopError):
    """A resized document does not fit on the A4 canvas at the requested position."""


class RangeError(DocloopError):
    """An index is outside its allowed range."""


class NoDocumentFound(DocloopError):
    """The detector produced no detection for an image."""


class AnchorNotFound(DocloopError):
    """No OCR span matched the template's identifying text."""


class BadImage(DocloopError):
    """An image payload could not be decoded."""


class NotFound(DocloopError):
    """A modification request id does not exist in the store."""
