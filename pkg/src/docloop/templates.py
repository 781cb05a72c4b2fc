"""Loading and validation of the five document templates.

A template file is JSON with exactly these keys:

    code: str
    identifying_region: {code, isx, isy, iex, iey, osx, osy, oex, oey,
                         identifying_text}
    data_regions: [{code, osx, osy, oex, oey}, ...]
    field_order: [region code, ...]        (optional; defaults to region order)

(isx, isy, iex, iey) is the box an OCR pass reported for the identifying text
on the original template image; (osx, osy, oex, oey) is the slightly padded
outer box around it. Data regions carry only outer boxes. ``field_order``
binds annotation positions to region codes; a template may define more regions
than it annotates (the passport does).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DegenerateAnchor, SchemaError, UnknownClass
from .model import CLASS_IDS, Box, field_count

_IDENTIFYING_KEYS = {
    "code", "isx", "isy", "iex", "iey", "osx", "osy", "oex", "oey", "identifying_text",
}
_REGION_KEYS = {"code", "osx", "osy", "oex", "oey"}
_TOP_KEYS = {"code", "identifying_region", "data_regions", "field_order"}


@dataclass(frozen=True)
class DataRegion:
    code: str
    box: Box


@dataclass(frozen=True)
class Template:
    code: str
    identifying_code: str
    identifying_text: str
    identified_box: Box
    outer_box: Box
    data_regions: tuple[DataRegion, ...]
    field_order: tuple[str, ...]

    def region(self, code: str) -> DataRegion:
        for r in self.data_regions:
            if r.code == code:
                return r
        raise KeyError(code)

    def ordered_regions(self) -> list[DataRegion]:
        return [self.region(code) for code in self.field_order]


def _require_keys(obj: dict, expected: set[str], where: str, optional: set[str] = frozenset()) -> None:
    missing = (expected - optional) - obj.keys()
    if missing:
        raise SchemaError(f"{where}: missing keys {sorted(missing)}")
    extra = obj.keys() - expected
    if extra:
        raise SchemaError(f"{where}: unknown keys {sorted(extra)}")


def parse_template(data: dict, where: str = "template") -> Template:
    if not isinstance(data, dict):
        raise SchemaError(f"{where}: expected a JSON object")
    _require_keys(data, _TOP_KEYS, where, optional={"field_order"})

    ident = data["identifying_region"]
    if not isinstance(ident, dict):
        raise SchemaError(f"{where}: identifying_region must be an object")
    _require_keys(ident, _IDENTIFYING_KEYS, f"{where}.identifying_region")
    if ident["iex"] <= ident["isx"] or ident["iey"] <= ident["isy"]:
        raise DegenerateAnchor(
            f"{where}: identified box has no area "
            f"({ident['isx']},{ident['isy']},{ident['iex']},{ident['iey']})"
        )
    identified = Box(ident["isx"], ident["isy"], ident["iex"], ident["iey"])
    outer = Box(ident["osx"], ident["osy"], ident["oex"], ident["oey"])

    regions = []
    if not isinstance(data["data_regions"], list) or not data["data_regions"]:
        raise SchemaError(f"{where}: data_regions must be a non-empty list")
    for idx, raw in enumerate(data["data_regions"]):
        _require_keys(raw, _REGION_KEYS, f"{where}.data_regions[{idx}]")
        regions.append(
            DataRegion(raw["code"], Box(raw["osx"], raw["osy"], raw["oex"], raw["oey"]))
        )
    codes = [r.code for r in regions]
    if len(set(codes)) != len(codes):
        raise SchemaError(f"{where}: duplicate region codes")

    field_order = tuple(data.get("field_order", codes))
    unknown = set(field_order) - set(codes)
    if unknown:
        raise SchemaError(f"{where}: field_order names unknown regions {sorted(unknown)}")
    if len(set(field_order)) != len(field_order):
        raise SchemaError(f"{where}: field_order repeats a code")

    return Template(
        code=data["code"],
        identifying_code=ident["code"],
        identifying_text=ident["identifying_text"],
        identified_box=identified,
        outer_box=outer,
        data_regions=tuple(regions),
        field_order=field_order,
    )


def load_template(path: str | Path) -> Template:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc})") from exc
    return parse_template(data, where=str(path))


class TemplateRegistry:
    """All five templates, loaded once and then read-only."""

    def __init__(self, templates: dict[str, Template]):
        self._templates = dict(templates)

    @classmethod
    def from_directory(cls, directory: str | Path) -> "TemplateRegistry":
        directory = Path(directory)
        templates = {}
        for class_id in CLASS_IDS:
            templates[class_id] = load_template(directory / f"{class_id}_template.json")
        return cls(templates)

    @classmethod
    def bundled(cls) -> "TemplateRegistry":
        templates = {}
        root = resources.files(__package__) / "templates"
        for class_id in CLASS_IDS:
            raw = (root / f"{class_id}_template.json").read_text(encoding="utf-8")
            templates[class_id] = parse_template(
                json.loads(raw), where=f"{class_id}_template.json"
            )
        return cls(templates)

    def for_class(self, class_id: str) -> Template:
        if class_id not in self._templates:
            raise UnknownClass(f"no template for class {class_id!r}")
        return self._templates[class_id]

    def class_ids(self) -> list[str]:
        return sorted(self._templates)

    def self_check(self) -> None:
        """Verify field_order lengths match the per-class annotation counts."""
        for class_id, template in self._templates.items():
            expected = field_count(class_id)
            if len(template.field_order) != expected:
                raise SchemaError(
                    f"{class_id}: field_order has {len(template.field_order)} codes, "
                    f"annotations need {expected}"
                )


@lru_cache(maxsize=1)
def bundled_registry() -> TemplateRegistry:
    """The packaged five-template registry, loaded once and checked."""
    registry = TemplateRegistry.bundled()
    registry.self_check()
    return registry
