"""Core domain types: boxes, document classes, annotations, detections, OCR spans.

All pixel coordinates use a top-left origin with x growing rightward and y
growing downward. Coordinates are kept as reals; rounding to integers happens
only when pixels are actually cropped.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from PIL import Image

from .errors import DelimiterCollision, FieldCountMismatch, UnknownClass

DELIMITER = "::"

# class_id -> (display name, annotation field count)
DOCUMENT_CLASSES: dict[str, tuple[str, int]] = {
    "adhaar_v1_p1": ("Adhaar Card", 4),
    "dl_v1_p1": ("Driving Licence", 7),
    "pan_v1": ("PAN Card", 4),
    "passport_v1_p1": ("Passport", 9),
    "votercard_v1": ("Voter Card", 5),
}

CLASS_IDS: tuple[str, ...] = tuple(sorted(DOCUMENT_CLASSES))


def class_index(class_id: str) -> int:
    """Alphabetical rank of a class id, used as the detection label index."""
    require_class(class_id)
    return CLASS_IDS.index(class_id)


def require_class(class_id: str) -> str:
    if class_id not in DOCUMENT_CLASSES:
        raise UnknownClass(f"unknown document class {class_id!r}")
    return class_id


def field_count(class_id: str) -> int:
    require_class(class_id)
    return DOCUMENT_CLASSES[class_id][1]


@dataclass(frozen=True)
class Box:
    """Axis-aligned pixel rectangle (x0, y0, x1, y1)."""

    x0: float
    y0: float
    x1: float
    y1: float

    def __post_init__(self) -> None:
        if self.x1 < self.x0 or self.y1 < self.y0:
            raise ValueError(f"box corners out of order: {self.as_tuple()}")

    def width(self) -> float:
        return self.x1 - self.x0

    def height(self) -> float:
        return self.y1 - self.y0

    def center(self) -> tuple[float, float]:
        return (self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0

    def contains_point(self, x: float, y: float) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def contains_box(self, other: "Box") -> bool:
        return (
            self.x0 <= other.x0
            and self.y0 <= other.y0
            and other.x1 <= self.x1
            and other.y1 <= self.y1
        )

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.x0, self.y0, self.x1, self.y1

    @classmethod
    def from_sequence(cls, seq) -> "Box":
        x0, y0, x1, y1 = seq
        return cls(float(x0), float(y0), float(x1), float(y1))


@dataclass(frozen=True)
class Annotation:
    """Ordered field values for one document, serialized with '::' between values."""

    class_id: str
    fields: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        require_class(self.class_id)
        expected = field_count(self.class_id)
        if len(self.fields) != expected:
            raise FieldCountMismatch(
                f"{self.class_id} annotation needs {expected} fields, got {len(self.fields)}"
            )

    def values(self) -> list[str]:
        return [value for _, value in self.fields]

    def codes(self) -> list[str]:
        return [code for code, _ in self.fields]


def serialize_annotation(ann: Annotation) -> str:
    """Join the annotation values with '::' in field order."""
    for code, value in ann.fields:
        if DELIMITER in value:
            raise DelimiterCollision(f"field {code} contains the '::' delimiter: {value!r}")
    return DELIMITER.join(value for _, value in ann.fields)


def parse_annotation(class_id: str, line: str, codes: list[str] | None = None) -> Annotation:
    """Inverse of serialize_annotation.

    ``codes`` supplies the region codes in field order; when omitted the fields
    get positional placeholder codes. A trailing newline is tolerated.
    """
    require_class(class_id)
    values = line.rstrip("\n").split(DELIMITER)
    expected = field_count(class_id)
    if len(values) != expected:
        raise FieldCountMismatch(
            f"{class_id} annotation needs {expected} fields, got {len(values)}"
        )
    if codes is None:
        codes = [f"FIELD_{i}" for i in range(expected)]
    elif len(codes) != expected:
        raise FieldCountMismatch(
            f"{class_id} field order has {len(codes)} codes, expected {expected}"
        )
    return Annotation(class_id, tuple(zip(codes, values)))


def scrub_value(value: str) -> str:
    """Make a value safe to serialize by breaking any embedded '::'."""
    while DELIMITER in value:
        value = value.replace(DELIMITER, ": :")
    return value


@dataclass(frozen=True)
class DetectionResult:
    class_id: str
    box: Box
    confidence: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")


@dataclass(frozen=True)
class OcrSpan:
    box: Box
    text: str
    score: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score {self.score} outside [0, 1]")


def image_content_hash(image: Image.Image) -> str:
    """Deterministic 256-bit digest of an image's pixel content."""
    digest = hashlib.sha256()
    digest.update(image.mode.encode("ascii"))
    digest.update(b"%dx%d" % image.size)
    digest.update(image.tobytes())
    return digest.hexdigest()


class ImageRef:
    """An in-memory raster plus the identity used by manifest-backed backends.

    The content hash is computed lazily so that callers resolving by
    manifest_id never pay for a full pixel decode. Either pixels or a
    precomputed hash must be supplied.
    """

    def __init__(
        self,
        pixels: Image.Image | None = None,
        content_hash: str | None = None,
        manifest_id: str | None = None,
    ):
        if pixels is None and content_hash is None:
            raise ValueError("ImageRef needs pixels or a precomputed content_hash")
        self.pixels = pixels
        self.manifest_id = manifest_id
        self._content_hash = content_hash

    @property
    def content_hash(self) -> str:
        if self._content_hash is None:
            self._content_hash = image_content_hash(self.pixels)
        return self._content_hash

    @classmethod
    def from_image(cls, image: Image.Image, manifest_id: str | None = None) -> "ImageRef":
        return cls(pixels=image, manifest_id=manifest_id)
