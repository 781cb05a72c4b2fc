"""Rasterize records onto base canvases and build the augmented dataset tree.

Every base image fans out into exactly 14 variants: the original, its
greyscale twin, and six A4 placements in both color and greyscale. Each
variant carries a RenderManifest recording precisely what text was drawn
where, which is what lets the manifest-backed detector and OCR answer without
any trained model.

Geometry convention: an A4 placement is a pure scale-and-translate, so every
manifest box transforms as box' = s * box + (dx, dy) with s = 600 / document
height.
"""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

from .errors import PlacementOverflow, RangeError
from .generate import DocumentRecord
from .model import Box, class_index, image_content_hash
from .templates import Template

# width, height of each class's base canvas, in pixels
CANVAS_SIZES: dict[str, tuple[int, int]] = {
    "adhaar_v1_p1": (2830, 1770),
    "dl_v1_p1": (804, 504),
    "pan_v1": (3200, 2019),
    "passport_v1_p1": (2783, 1847),
    "votercard_v1": (3200, 2015),
}

FONT_SIZES: dict[str, int] = {
    "adhaar_v1_p1": 48,
    "dl_v1_p1": 16,
    "pan_v1": 48,
    "passport_v1_p1": 40,
    "votercard_v1": 40,
}

# Decoration draw positions, chosen so no decoration's center falls inside a
# data region (otherwise region crops would pick up stray text).
DECORATION_LAYOUTS: dict[str, tuple[tuple[str, tuple[int, int]], ...]] = {
    "adhaar_v1_p1": (("NAME_HI", (911, 430)), ("GENDER_HI", (430, 802))),
    "dl_v1_p1": (("FILE_NUMBER", (63, 470)),),
    "pan_v1": (("SIGNATURE", (120, 1700)),),
    "passport_v1_p1": (
        ("FATHERS_NAME", (992, 1380)),
        ("MOTHERS_NAME", (992, 1460)),
        ("SPOUSE_NAME", (992, 1540)),
        ("ADDRESS", (992, 1620)),
    ),
    "votercard_v1": (
        ("NAME_HI", (1370, 745)),
        ("HUSBANDS_NAME_HI", (1370, 1018)),
        ("GENDER_HI", (1370, 1240)),
    ),
}

DECORATION_PREFIX = "DECOR_"

A4_SIZE = (2480, 3508)  # portrait at 300 dpi
A4_DOC_HEIGHT = 600
A4_POSITIONS: tuple[tuple[int, int], ...] = (
    (100, 100), (1500, 100), (100, 1000), (1500, 1000), (100, 2000), (1500, 2000),
)

VARIANT_KINDS = ("original", "greyscale", "a4", "a4_greyscale")

BACKGROUND_COLOR = (246, 244, 239)
INK_COLOR = (24, 24, 24)


@lru_cache(maxsize=8)
def _font(size: int) -> ImageFont.FreeTypeFont:
    return ImageFont.load_default(size=size)


@dataclass(frozen=True)
class TextEntry:
    code: str
    text: str
    box: Box


@dataclass
class RenderManifest:
    """Ground truth for one rendered variant."""

    manifest_id: str
    class_id: str
    placement: Box
    anchor_box: Box
    texts: tuple[TextEntry, ...]
    source_serial: int
    variant_kind: str = "original"
    warnings: tuple[str, ...] = ()
    content_hash: str = ""

    def field_text(self, code: str) -> str:
        for entry in self.texts:
            if entry.code == code:
                return entry.text
        raise KeyError(code)

    def to_json_dict(self) -> dict:
        return {
            "manifest_id": self.manifest_id,
            "content_hash": self.content_hash,
            "class_id": self.class_id,
            "variant_kind": self.variant_kind,
            "source_serial": self.source_serial,
            "placement": list(self.placement.as_tuple()),
            "anchor_box": list(self.anchor_box.as_tuple()),
            "texts": [
                {"code": t.code, "text": t.text, "box": list(t.box.as_tuple())}
                for t in self.texts
            ],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RenderManifest":
        return cls(
            manifest_id=data["manifest_id"],
            class_id=data["class_id"],
            placement=Box.from_sequence(data["placement"]),
            anchor_box=Box.from_sequence(data["anchor_box"]),
            texts=tuple(
                TextEntry(t["code"], t["text"], Box.from_sequence(t["box"]))
                for t in data["texts"]
            ),
            source_serial=data.get("source_serial", 0),
            variant_kind=data.get("variant_kind", "original"),
            warnings=tuple(data.get("warnings", ())),
            content_hash=data.get("content_hash", ""),
        )


@dataclass
class Variant:
    """One fan-out output.

    A4 variants defer canvas composition: they carry the resized document and
    its paste position, and the PNG writer streams the surrounding white
    directly to disk. ``compose_variant_image`` materializes the canvas when
    pixels are actually needed (JPEG mode, tests).
    """

    name: str
    kind: str
    manifest: RenderManifest
    image: Image.Image | None = None
    a4_parts: tuple[Image.Image, tuple[int, int]] | None = None


def _draw_text_at(
    draw: ImageDraw.ImageDraw, xy: tuple[float, float], text: str, font
) -> Box:
    draw.text(xy, text, font=font, fill=INK_COLOR)
    left, top, right, bottom = draw.textbbox(xy, text, font=font)
    return Box(float(left), float(top), float(right), float(bottom))


def _draw_text_into_box(image: Image.Image, text: str, box: Box) -> None:
    """Draw text stretched to fill the box exactly.

    Matches how the identifying header of a printed card fills the anchor box
    that was measured when the template was authored.
    """
    font = _font(64)
    left, top, right, bottom = font.getbbox(text)
    width, height = max(1, right - left), max(1, bottom - top)
    mask = Image.new("L", (width, height), 0)
    ImageDraw.Draw(mask).text((-left, -top), text, font=font, fill=255)
    mask = mask.resize((max(1, round(box.width())), max(1, round(box.height()))))
    image.paste(INK_COLOR, (round(box.x0), round(box.y0)), mask)


def render_base(
    record: DocumentRecord,
    template: Template,
    manifest_id: str | None = None,
    background: Image.Image | None = None,
) -> tuple[Image.Image, RenderManifest]:
    """Draw a record onto its class canvas and return the image plus manifest.

    Field values go at their region origins, the identifying text fills the
    template's identified box, and decorations land at fixed per-class spots.
    """
    class_id = record.class_id
    size = CANVAS_SIZES[class_id]
    if background is not None:
        image = background.convert("RGB").copy()
    else:
        image = Image.new("RGB", size, BACKGROUND_COLOR)
    draw = ImageDraw.Draw(image)
    font = _font(FONT_SIZES[class_id])

    texts: list[TextEntry] = []
    warnings: list[str] = []

    _draw_text_into_box(image, template.identifying_text, template.identified_box)
    anchor_box = template.identified_box
    texts.append(TextEntry(template.identifying_code, template.identifying_text, anchor_box))

    for region in template.data_regions:
        value = record.values.get(region.code)
        if value is None:
            continue
        drawn = _draw_text_at(draw, (region.box.x0, region.box.y0), value, font)
        if drawn.width() > region.box.width():
            warnings.append(
                f"text overflow: {region.code} drawn {drawn.width():.0f}px wide "
                f"in a {region.box.width():.0f}px region"
            )
        texts.append(TextEntry(region.code, value, drawn))

    for tag, position in DECORATION_LAYOUTS.get(class_id, ()):
        value = record.decorations.get(tag)
        if value is None:
            continue
        drawn = _draw_text_at(draw, position, value, font)
        texts.append(TextEntry(DECORATION_PREFIX + tag, value, drawn))

    width, height = image.size
    manifest = RenderManifest(
        manifest_id=manifest_id or f"{class_id}_{record.serial}",
        class_id=class_id,
        placement=Box(0.0, 0.0, float(width), float(height)),
        anchor_box=anchor_box,
        texts=tuple(texts),
        source_serial=record.serial,
        variant_kind="original",
        warnings=tuple(warnings),
    )
    return image, manifest


def to_greyscale(image: Image.Image) -> Image.Image:
    """Single-channel luma version; dimensions unchanged."""
    return image.convert("L")


def place_on_a4(
    image: Image.Image, position: tuple[int, int]
) -> tuple[Image.Image, Box, float]:
    """Paste the document, resized to 600 px tall, onto a fresh A4 canvas.

    Returns the canvas, the placement box, and the scale factor 600/h.
    """
    if position not in A4_POSITIONS:
        raise ValueError(f"position {position} not one of {A4_POSITIONS}")
    width, height = image.size
    scale = A4_DOC_HEIGHT / height
    resized_width = round(A4_DOC_HEIGHT * width / height)
    x, y = position
    if x + resized_width > A4_SIZE[0] or y + A4_DOC_HEIGHT > A4_SIZE[1]:
        raise PlacementOverflow(
            f"{resized_width}x{A4_DOC_HEIGHT} document at {position} exceeds A4 {A4_SIZE}"
        )
    canvas = Image.new("RGB", A4_SIZE, (255, 255, 255))
    resized = image.convert("RGB").resize((resized_width, A4_DOC_HEIGHT))
    canvas.paste(resized, (x, y))
    placement = Box(float(x), float(y), float(x + resized_width), float(y + A4_DOC_HEIGHT))
    return canvas, placement, scale


def _transform_box(box: Box, scale: float, dx: float, dy: float) -> Box:
    return Box(
        dx + scale * box.x0,
        dy + scale * box.y0,
        dx + scale * box.x1,
        dy + scale * box.y1,
    )


def _transformed_manifest(
    manifest: RenderManifest,
    manifest_id: str,
    kind: str,
    placement: Box,
    scale: float,
    dx: float,
    dy: float,
) -> RenderManifest:
    return dataclasses.replace(
        manifest,
        manifest_id=manifest_id,
        variant_kind=kind,
        placement=placement,
        anchor_box=_transform_box(manifest.anchor_box, scale, dx, dy),
        texts=tuple(
            TextEntry(t.code, t.text, _transform_box(t.box, scale, dx, dy))
            for t in manifest.texts
        ),
        content_hash="",
    )


def fanout(image: Image.Image, manifest: RenderManifest, stem: str) -> list[Variant]:
    """Produce the 14 named variants of one base render.

    The document is resized once and pasted at each A4 position, and the
    greyscale A4 twin is assembled from the greyscale document on a fresh
    white canvas. Both shortcuts must stay pixel-identical to transforming
    each finished canvas (greyscale conversion is pointwise and the luma
    weights sum to 1, so white stays 255).
    """
    base_manifest = dataclasses.replace(
        manifest, manifest_id=stem, variant_kind="original", content_hash=""
    )
    variants = [Variant(stem, "original", base_manifest, image=image)]
    variants.append(
        Variant(
            f"{stem}_greyscale",
            "greyscale",
            dataclasses.replace(
                base_manifest, manifest_id=f"{stem}_greyscale",
                variant_kind="greyscale", content_hash="",
            ),
            image=to_greyscale(image),
        )
    )

    width, height = image.size
    scale = A4_DOC_HEIGHT / height
    resized_width = round(A4_DOC_HEIGHT * width / height)
    if 1500 + resized_width > A4_SIZE[0] or 2000 + A4_DOC_HEIGHT > A4_SIZE[1]:
        raise PlacementOverflow(
            f"{resized_width}x{A4_DOC_HEIGHT} document exceeds A4 {A4_SIZE}"
        )
    resized = image.convert("RGB").resize((resized_width, A4_DOC_HEIGHT))
    resized_grey = resized.convert("L")

    for x, y in A4_POSITIONS:
        placement = Box(float(x), float(y), float(x + resized_width), float(y + A4_DOC_HEIGHT))
        name = f"{stem}_a4_{x}_{y}"
        a4_manifest = _transformed_manifest(
            manifest, name, "a4", placement, scale, float(x), float(y)
        )
        variants.append(Variant(name, "a4", a4_manifest, a4_parts=(resized, (x, y))))
        grey_name = f"{name}_greyscale"
        variants.append(
            Variant(
                grey_name,
                "a4_greyscale",
                dataclasses.replace(
                    a4_manifest, manifest_id=grey_name,
                    variant_kind="a4_greyscale", content_hash="",
                ),
                a4_parts=(resized_grey, (x, y)),
            )
        )
    return variants


def assign_split(index: int, total: int) -> str:
    """7:2:1 split by position: train, then validation, then test."""
    if not 1 <= index <= total:
        raise RangeError(f"index {index} outside 1..{total}")
    if 10 * index <= 7 * total:
        return "train"
    if 10 * index <= 9 * total:
        return "validation"
    return "test"


def label_line(class_id: str, placement: Box, image_size: tuple[int, int]) -> str:
    """One detector label: class index plus normalized center/size."""
    width, height = image_size
    cx = (placement.x0 + placement.x1) / 2.0 / width
    cy = (placement.y0 + placement.y1) / 2.0 / height
    w = placement.width() / width
    h = placement.height() / height
    return f"{class_index(class_id)} {cx:.6f} {cy:.6f} {w:.6f} {h:.6f}"


@dataclass
class DatasetBase:
    """One base render plus its position in the per-class batch."""

    annotation_text: str
    image: Image.Image
    manifest: RenderManifest
    index: int
    total: int


def save_image(image: Image.Image, path: Path, image_format: str = "png") -> str:
    """Write a variant image and return the content hash of its pixels.

    PNG is lossless, so the hash of the in-memory raster matches what a reader
    will compute after loading the file. JPEG decodes to different pixels, so
    in that mode the saved file is re-opened and the decoded pixels hashed.
    """
    if image_format == "png":
        image.save(path, format="PNG", compress_level=1, compress_type=3)
        return image_content_hash(image)
    image.save(path, format="JPEG", quality=95)
    with Image.open(path) as reloaded:
        reloaded.load()
        return image_content_hash(reloaded)


def compose_variant_image(variant: Variant) -> Image.Image:
    """Materialize a variant's pixels (composes deferred A4 canvases)."""
    if variant.image is not None:
        return variant.image
    document, position = variant.a4_parts
    background = 255 if document.mode == "L" else (255, 255, 255)
    canvas = Image.new(document.mode, A4_SIZE, background)
    canvas.paste(document, position)
    return canvas


def variant_size(variant: Variant) -> tuple[int, int]:
    return variant.image.size if variant.image is not None else A4_SIZE


def save_variant(variant: Variant, path: Path, image_format: str = "png") -> str:
    """Write one variant and return its content hash."""
    if variant.a4_parts is not None and image_format == "png":
        from .fastpng import write_a4_png

        document, position = variant.a4_parts
        return write_a4_png(path, document, position, A4_SIZE)
    return save_image(compose_variant_image(variant), path, image_format)


def emit_dataset(
    bases: list[DatasetBase],
    out_root: str | Path,
    image_format: str = "png",
) -> dict[str, int]:
    """Fan out every base, assign splits, and write the dataset tree:

        out_root/data/images/{train,validation,test}/<stem>.<ext>
        out_root/data/annotation/<split>/<stem>.txt
        out_root/data/labels/<split>/<stem>.txt
        out_root/data/manifests.jsonl
    """
    out_root = Path(out_root)
    data_root = out_root / "data"
    splits = ("train", "validation", "test")
    for area in ("images", "annotation", "labels"):
        for split in splits:
            (data_root / area / split).mkdir(parents=True, exist_ok=True)

    extension = "jpg" if image_format == "jpeg" else "png"
    counts = {split: 0 for split in splits}
    manifest_path = data_root / "manifests.jsonl"
    with manifest_path.open("w", encoding="utf-8") as manifest_file:
        for base in bases:
            split = assign_split(base.index, base.total)
            annotation_text = base.annotation_text
            for variant in fanout(base.image, base.manifest, base.manifest.manifest_id):
                image_path = data_root / "images" / split / f"{variant.name}.{extension}"
                content_hash = save_variant(variant, image_path, image_format)
                variant.manifest.content_hash = content_hash
                (data_root / "annotation" / split / f"{variant.name}.txt").write_text(
                    annotation_text, encoding="utf-8"
                )
                (data_root / "labels" / split / f"{variant.name}.txt").write_text(
                    label_line(
                        variant.manifest.class_id,
                        variant.manifest.placement,
                        variant_size(variant),
                    )
                    + "\n",
                    encoding="utf-8",
                )
                manifest_file.write(
                    json.dumps(variant.manifest.to_json_dict(), ensure_ascii=False) + "\n"
                )
                counts[split] += 1
    counts["total"] = sum(counts[s] for s in splits)
    return counts
