"""Identify -> anchor-find -> region-map -> crop-OCR -> serialize -> validate.

Backends are pluggable. The manifest-backed oracle backends answer from the
ground truth recorded at render time, so the whole pipeline runs and validates
without any trained model; real detector/OCR processes can be attached through
the line-delimited JSON subprocess adapters at the bottom of this module.
"""
from __future__ import annotations

import json
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from PIL import Image

from .errors import AnchorNotFound, EmptyCrop, NoDocumentFound
from .geometry import AnchorCorrespondence, clamp_to_image, map_region
from .model import (
    DELIMITER,
    Box,
    DetectionResult,
    ImageRef,
    OcrSpan,
    scrub_value,
)
from .render import RenderManifest
from .similarity import similarity
from .templates import TemplateRegistry


class DetectorBackend(Protocol):
    def detect(self, img: ImageRef) -> list[DetectionResult]: ...


class OcrBackend(Protocol):
    def read(self, img: ImageRef, crop: Box | None = None) -> list[OcrSpan]: ...


@dataclass
class ExtractionResult:
    class_id: str
    confidence: float
    anchor_box: Box
    fields: list[tuple[str, str]]
    serialized: str
    per_region_boxes: list[tuple[str, Box]]


class ManifestIndex:
    """Lookup of render manifests by id and by content hash."""

    def __init__(self, manifests: list[RenderManifest]):
        self.by_id: dict[str, RenderManifest] = {}
        self.by_hash: dict[str, RenderManifest] = {}
        for manifest in manifests:
            self.by_id[manifest.manifest_id] = manifest
            if manifest.content_hash:
                self.by_hash[manifest.content_hash] = manifest

    @classmethod
    def load(cls, path: str | Path) -> "ManifestIndex":
        manifests = []
        with Path(path).open(encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    manifests.append(RenderManifest.from_json_dict(json.loads(line)))
        return cls(manifests)

    @classmethod
    def for_dataset(cls, dataset_root: str | Path) -> "ManifestIndex":
        return cls.load(Path(dataset_root) / "data" / "manifests.jsonl")

    def __len__(self) -> int:
        return len(self.by_id)

    def manifests(self) -> list[RenderManifest]:
        return list(self.by_id.values())

    def resolve(self, img: ImageRef) -> RenderManifest | None:
        if img.manifest_id and img.manifest_id in self.by_id:
            return self.by_id[img.manifest_id]
        return self.by_hash.get(img.content_hash)


class OracleDetector:
    """Answers from the manifest index with confidence 1.0."""

    def __init__(self, index: ManifestIndex):
        self.index = index

    def detect(self, img: ImageRef) -> list[DetectionResult]:
        manifest = self.index.resolve(img)
        if manifest is None:
            return []
        return [DetectionResult(manifest.class_id, manifest.placement, 1.0)]


class OracleOcr:
    """Returns exactly the texts drawn at render time, in reading order.

    A span belongs to a crop when its box center lies inside the crop; boxes
    are always reported in full-image coordinates.
    """

    def __init__(self, index: ManifestIndex):
        self.index = index

    def read(self, img: ImageRef, crop: Box | None = None) -> list[OcrSpan]:
        manifest = self.index.resolve(img)
        if manifest is None:
            return []
        spans = [
            OcrSpan(entry.box, entry.text, 1.0)
            for entry in manifest.texts
            if crop is None or crop.contains_point(*entry.box.center())
        ]
        spans.sort(key=lambda span: (span.box.y0, span.box.x0))
        return spans


def identify(img: ImageRef, detector: DetectorBackend) -> DetectionResult:
    """The detection with maximum confidence; ties keep the earliest one."""
    detections = detector.detect(img)
    if not detections:
        raise NoDocumentFound("detector returned no detections")
    best = detections[0]
    for detection in detections[1:]:
        if detection.confidence > best.confidence:
            best = detection
    return best


def find_anchor(spans: list[OcrSpan], identifying_text: str, threshold: float = 0.8) -> Box:
    """Box of the span most similar to the identifying text, at or above the
    threshold; ties keep the earliest span in reading order."""
    best_box = None
    best_score = threshold
    for span in spans:
        score = similarity(identifying_text, span.text)
        if score >= threshold and (best_box is None or score > best_score):
            best_box = span.box
            best_score = score
    if best_box is None:
        raise AnchorNotFound(f"no OCR span matched {identifying_text!r} at {threshold}")
    return best_box


def extract(
    img: ImageRef,
    class_id: str | None,
    ocr: OcrBackend,
    registry: TemplateRegistry,
    detector: DetectorBackend | None = None,
    anchor_threshold: float = 0.8,
) -> ExtractionResult:
    """Run the full extraction for one image.

    With ``class_id`` of None the detector supplies the class (fused mode);
    otherwise the caller has already identified the document (staged mode).
    A region whose mapped crop falls outside the image contributes an empty
    string, never an error, so the field count always matches the template.
    """
    if class_id is None:
        if detector is None:
            raise ValueError("fused extraction needs a detector")
        detection = identify(img, detector)
        class_id = detection.class_id
        confidence = detection.confidence
    else:
        confidence = 1.0

    template = registry.for_class(class_id)
    spans = ocr.read(img)
    anchor_box = find_anchor(spans, template.identifying_text, anchor_threshold)
    corr = AnchorCorrespondence(template.identified_box, anchor_box)
    width, height = img.pixels.size if img.pixels is not None else (None, None)

    fields: list[tuple[str, str]] = []
    per_region_boxes: list[tuple[str, Box]] = []
    for code in template.field_order:
        region = template.region(code)
        mapped = map_region(corr, region.box)
        per_region_boxes.append((code, mapped))
        try:
            if width is not None:
                crop = clamp_to_image(mapped, width, height)
            else:
                crop = mapped
                if crop.width() <= 0 or crop.height() <= 0:
                    raise EmptyCrop(f"degenerate crop for {code}")
        except EmptyCrop:
            fields.append((code, ""))
            continue
        crop_spans = ocr.read(img, crop=crop)
        text = " ".join(span.text for span in crop_spans).strip()
        fields.append((code, scrub_value(text)))

    serialized = DELIMITER.join(value for _, value in fields)
    return ExtractionResult(
        class_id=class_id,
        confidence=confidence,
        anchor_box=anchor_box,
        fields=fields,
        serialized=serialized,
        per_region_boxes=per_region_boxes,
    )


def validate(extracted: str, ground_truth: str) -> float:
    """Similarity ratio between ground truth and extracted serializations."""
    return similarity(ground_truth, extracted)


def load_image_ref(path: str | Path, lazy: bool = True) -> ImageRef:
    """ImageRef for an image file; the file stem doubles as the manifest id."""
    path = Path(path)
    image = Image.open(path)
    if not lazy:
        image.load()
    ref = ImageRef(pixels=image, manifest_id=path.stem)
    ref.source_path = path
    return ref


class SubprocessDetector:
    """Adapter for an out-of-process detector.

    Protocol: one JSON request per line on stdin, one JSON response per line
    on stdout. Request {"image_path": str}; response {"detections":
    [{"class_id": str, "box": [x0, y0, x1, y1], "confidence": float}]}.
    """

    def __init__(self, command: list[str]):
        self.process = subprocess.Popen(
            command, stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True
        )

    def _roundtrip(self, request: dict) -> dict:
        self.process.stdin.write(json.dumps(request) + "\n")
        self.process.stdin.flush()
        line = self.process.stdout.readline()
        if not line:
            raise RuntimeError("detector subprocess closed its output")
        return json.loads(line)

    def detect(self, img: ImageRef) -> list[DetectionResult]:
        response = self._roundtrip({"image_path": str(_image_path(img))})
        return [
            DetectionResult(d["class_id"], Box.from_sequence(d["box"]), d["confidence"])
            for d in response.get("detections", [])
        ]

    def close(self) -> None:
        self.process.stdin.close()
        self.process.wait(timeout=10)


class SubprocessOcr:
    """Adapter for an out-of-process OCR engine.

    Request {"image_path": str, "crop": [x0, y0, x1, y1] | null}; response
    {"spans": [{"box": [...], "text": str, "score": float}]} with boxes in
    full-image coordinates.
    """

    def __init__(self, command: list[str]):
        self.process = subprocess.Popen(
            command, stdin=subprocess.PIPE, stdout=subprocess.PIPE, text=True
        )

    def _roundtrip(self, request: dict) -> dict:
        self.process.stdin.write(json.dumps(request) + "\n")
        self.process.stdin.flush()
        line = self.process.stdout.readline()
        if not line:
            raise RuntimeError("OCR subprocess closed its output")
        return json.loads(line)

    def read(self, img: ImageRef, crop: Box | None = None) -> list[OcrSpan]:
        request = {
            "image_path": str(_image_path(img)),
            "crop": list(crop.as_tuple()) if crop else None,
        }
        response = self._roundtrip(request)
        spans = [
            OcrSpan(Box.from_sequence(s["box"]), s["text"], s.get("score", 1.0))
            for s in response.get("spans", [])
        ]
        spans.sort(key=lambda span: (span.box.y0, span.box.x0))
        return spans

    def close(self) -> None:
        self.process.stdin.close()
        self.process.wait(timeout=10)


def _image_path(img: ImageRef) -> Path:
    path = getattr(img, "source_path", None)
    if path is None:
        raise ValueError("subprocess backends need images loaded from files")
    return Path(path)
