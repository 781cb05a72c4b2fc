"""Deterministic, seeded synthesis of document records and their annotations.

Serial-number strings follow the per-class grammars below: a right-to-left
walk over the serial's digits (integer division, so 13-digit values keep
their high digits intact) that renders each position as either the digit
itself or the letter alphabet[digit] with 'A' = 0.

Given the same (seed, max_count, serial) every value is reproduced exactly, in
any process: the per-record RNG is derived from a SHA-256 of those inputs, not
from Python's randomized string hashing.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from datetime import date
from pathlib import Path

from . import namebank
from .errors import RangeError, SerialOverflow
from .model import Annotation, require_class, serialize_annotation
from .templates import TemplateRegistry, bundled_registry

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"

# class_id -> (digit budget, glyph count, letter positions, space positions);
# positions count glyphs from the right, starting at 0.
_SERIAL_GRAMMAR: dict[str, tuple[int, int, frozenset[int], frozenset[int]]] = {
    "adhaar_v1_p1": (12, 12, frozenset(), frozenset({3, 7})),
    "dl_v1_p1": (13, 15, frozenset({13, 14}), frozenset({10})),
    "pan_v1": (4, 9, frozenset({0, 5, 6, 7, 8}), frozenset()),
    "passport_v1_p1": (7, 8, frozenset({7}), frozenset()),
    "votercard_v1": (7, 10, frozenset({7, 8, 9}), frozenset()),
}

# dl serials mimic licence numbers and start high; the rest count from 1.
SERIAL_STARTS: dict[str, int] = {
    "adhaar_v1_p1": 1,
    "dl_v1_p1": 1620240000001,
    "pan_v1": 1,
    "passport_v1_p1": 1,
    "votercard_v1": 1,
}

_DOB_RANGE = (date(1955, 1, 1).toordinal(), date(2023, 12, 31).toordinal())


@dataclass(frozen=True)
class GenSeed:
    """Seed plus batch size; the batch size drives the gender rule."""

    seed: int
    max_count: int

    def __post_init__(self) -> None:
        if self.max_count < 1:
            raise ValueError("max_count must be >= 1")


@dataclass
class DocumentRecord:
    class_id: str
    serial: int
    values: dict[str, str]
    annotation: Annotation
    decorations: dict[str, str]


def format_serial(class_id: str, serial: int) -> str:
    """Render a serial number in its class's glyph grammar."""
    require_class(class_id)
    budget, glyph_count, letter_at, space_after = _SERIAL_GRAMMAR[class_id]
    if serial < 1 or serial >= 10**budget:
        raise SerialOverflow(
            f"{class_id} serial {serial} outside 1..{10 ** budget - 1}"
        )
    value = ""
    temp = serial
    for i in range(glyph_count):
        digit = temp % 10
        glyph = ALPHABET[digit] if i in letter_at else str(digit)
        value = glyph + value
        temp //= 10
        if i in space_after:
            value = " " + value
    return value


def serial_budget(class_id: str) -> int:
    require_class(class_id)
    return _SERIAL_GRAMMAR[class_id][0]


def gender_for_serial(serial: int, max_count: int) -> str:
    """Male for the first 40% of serials and for the (80%, 90%] band."""
    if not 1 <= serial <= max_count:
        raise RangeError(f"serial {serial} outside 1..{max_count}")
    if 10 * serial <= 4 * max_count:
        return "Male"
    if 8 * max_count < 10 * serial <= 9 * max_count:
        return "Male"
    return "Female"


def _rng_for(seed: int, class_id: str, serial: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{class_id}:{serial}".encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _date(rng: random.Random, sep: str = "/") -> str:
    day = date.fromordinal(rng.randint(*_DOB_RANGE))
    return f"{day.day:02d}{sep}{day.month:02d}{sep}{day.year:04d}"


def _full_name(rng: random.Random, gender: str | None = None) -> str:
    if gender == "Male":
        first = rng.choice(namebank.MALE_FIRST_NAMES)
    elif gender == "Female":
        first = rng.choice(namebank.FEMALE_FIRST_NAMES)
    else:
        first = rng.choice(namebank.MALE_FIRST_NAMES + namebank.FEMALE_FIRST_NAMES)
    return f"{first} {rng.choice(namebank.LAST_NAMES)}"


def _hindi_name(rng: random.Random) -> str:
    return f"{rng.choice(namebank.HINDI_FIRST_NAMES)} {rng.choice(namebank.HINDI_LAST_NAMES)}"


def _dl_file_number(serial: int) -> str:
    value = ""
    temp = serial
    for i in range(12):
        digit = temp % 10
        value = (ALPHABET[digit] if i < 2 or i > 10 else str(digit)) + value
        temp //= 10
    return value


def generate_record(
    class_id: str,
    serial: int,
    gen: GenSeed,
    registry: TemplateRegistry | None = None,
) -> DocumentRecord:
    """Build one document's field values, annotation, and render decorations."""
    require_class(class_id)
    registry = registry or bundled_registry()
    rng = _rng_for(gen.seed, class_id, serial)
    values: dict[str, str] = {}
    decorations: dict[str, str] = {}

    if class_id == "adhaar_v1_p1":
        gender = gender_for_serial(serial, gen.max_count)
        values["NAME"] = _full_name(rng, gender)
        values["DATE_OF_BIRTH"] = _date(rng)
        values["GENDER"] = gender
        values["ADHAAR_NUMBER"] = format_serial(class_id, serial)
        decorations["NAME_HI"] = _hindi_name(rng)
        decorations["GENDER_HI"] = (
            namebank.HINDI_MALE if gender == "Male" else namebank.HINDI_FEMALE
        ) + " /"
    elif class_id == "dl_v1_p1":
        values["DRIVING_LICENCE_NUMBER"] = format_serial(class_id, serial)
        values["DATE_OF_ISSUE"] = _date(rng)
        values["VALADITY_TILL_DATE"] = _date(rng)
        values["DATE_OF_BIRTH"] = _date(rng)
        values["BLOOD_GROUP"] = rng.choice(namebank.BLOOD_GROUPS)
        values["NAME"] = _full_name(rng)
        values["FATHERS_NAME"] = _full_name(rng, "Male")
        decorations["FILE_NUMBER"] = _dl_file_number(serial)
    elif class_id == "pan_v1":
        values["NAME"] = _full_name(rng).upper()
        values["FATHERS_NAME"] = _full_name(rng, "Male").upper()
        values["PERMANENT_ACCOUNT_NUMBER"] = format_serial(class_id, serial)
        values["DATE_OF_BIRTH"] = _date(rng)
        decorations["SIGNATURE"] = values["NAME"].split(" ")[0].title()
    elif class_id == "passport_v1_p1":
        values["PASSPORT_NUMBER"] = format_serial(class_id, serial)
        values["SURNAME"] = rng.choice(namebank.LAST_NAMES).upper()
        values["GIVEN_NAME"] = rng.choice(
            namebank.MALE_FIRST_NAMES + namebank.FEMALE_FIRST_NAMES
        )
        values["DATE_OF_BIRTH"] = _date(rng)
        values["GENDER"] = rng.choice(["M", "F"])
        values["PLACE_OF_BIRTH"] = rng.choice(namebank.CITIES).upper()
        values["PLACE_OF_ISSUE"] = rng.choice(namebank.CITIES).upper()
        values["DATE_OF_ISSUE"] = _date(rng)
        values["DATE_OF_EXPIRY"] = _date(rng)
        values["COUNTRY_CODE"] = "IND"
        values["NATIONALITY"] = "INDIAN"
        decorations["FATHERS_NAME"] = _full_name(rng, "Male").upper()
        decorations["MOTHERS_NAME"] = _full_name(rng, "Female").upper()
        decorations["SPOUSE_NAME"] = _full_name(rng).upper()
        decorations["ADDRESS"] = (
            f"{rng.randint(1, 999)} {rng.choice(namebank.LAST_NAMES)} Street, "
            f"{rng.choice(namebank.CITIES).upper()}"
        )
    elif class_id == "votercard_v1":
        gender = gender_for_serial(serial, gen.max_count)
        values["NAME"] = _full_name(rng, gender)
        values["HUSBANDS_NAME"] = _full_name(rng, "Male")
        values["VOTERCARD_NUMBER"] = format_serial(class_id, serial)
        values["GENDER"] = gender
        values["DATE_OF_BIRTH"] = _date(rng, sep="-")
        decorations["NAME_HI"] = _hindi_name(rng)
        decorations["HUSBANDS_NAME_HI"] = _hindi_name(rng)
        decorations["GENDER_HI"] = (
            namebank.HINDI_MALE if gender == "Male" else namebank.HINDI_FEMALE
        ) + " /"

    template = registry.for_class(class_id)
    annotation = Annotation(
        class_id, tuple((code, values[code]) for code in template.field_order)
    )
    return DocumentRecord(
        class_id=class_id,
        serial=serial,
        values=values,
        annotation=annotation,
        decorations=decorations,
    )


def batch_serials(class_id: str, count: int) -> list[int]:
    require_class(class_id)
    if count < 1:
        raise RangeError(f"batch size must be >= 1, got {count}")
    start = SERIAL_STARTS[class_id]
    return [start + i for i in range(count)]


def generate_batch(
    class_id: str,
    count: int,
    gen: GenSeed,
    out_dir: str | Path,
    registry: TemplateRegistry | None = None,
):
    """Generate ``count`` records, render their base images, and write the
    per-record annotation files under ``out_dir``.

    Returns the list of rendered bases (record, image, manifest) ready for the
    augmentation fan-out. Files written:

        out_dir/images/<class_id>/<class_id>_<i>.png
        out_dir/metadata/<class_id>/<class_id>_<i>.txt
        out_dir/manifests_base.jsonl   (appended, one line per base)
    """
    import json

    from .render import render_base  # deferred: render imports this module

    registry = registry or bundled_registry()
    out_dir = Path(out_dir)
    images_dir = out_dir / "images" / class_id
    metadata_dir = out_dir / "metadata" / class_id
    images_dir.mkdir(parents=True, exist_ok=True)
    metadata_dir.mkdir(parents=True, exist_ok=True)

    template = registry.for_class(class_id)
    bases = []
    manifest_lines = []
    for index, serial in enumerate(batch_serials(class_id, count), start=1):
        record = generate_record(class_id, serial, gen, registry)
        stem = f"{class_id}_{index}"
        image, manifest = render_base(record, template, manifest_id=stem)
        image.save(images_dir / f"{stem}.png")
        (metadata_dir / f"{stem}.txt").write_text(
            serialize_annotation(record.annotation), encoding="utf-8"
        )
        manifest_lines.append(json.dumps(manifest.to_json_dict(), ensure_ascii=False))
        bases.append((record, image, manifest))
    with (out_dir / "manifests_base.jsonl").open("a", encoding="utf-8") as fh:
        fh.write("".join(line + "\n" for line in manifest_lines))
    return bases
