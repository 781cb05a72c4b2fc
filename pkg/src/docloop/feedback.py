"""Modification-request persistence, approve/reject triage, and dataset re-assembly.

Requests live as one JSON file each under the requests directory, so any
number of proposers can run concurrently: ids are claimed with an exclusive
create, and an approve/reject race on one id is settled by whoever manages the
atomic removal of the request file. Approved images land in the rejected-data
pipeline keyed by their suggested class, mirroring the dataset tree so that
re-assembly for the next training cycle is a tree merge.
"""
from __future__ import annotations

import base64
import binascii
import io
import json
import logging
import os
import shutil
import tempfile
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from PIL import Image

from .errors import BadImage, NotFound
from .model import Box, image_content_hash, require_class
from .render import fanout, label_line, save_image, save_variant, variant_size

logger = logging.getLogger(__name__)

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@dataclass
class ModificationRequest:
    req_id: int
    document_identified: str
    document_suggested: str
    image: str  # base64 payload as submitted

    def to_json_dict(self) -> dict:
        return {
            "req_id": self.req_id,
            "document_identified": self.document_identified,
            "document_suggested": self.document_suggested,
            "image": self.image,
        }


@dataclass
class RejectedDataEntry:
    class_id: str
    path: Path
    origin_req_id: int


class FeedbackStore:
    def __init__(self, requests_dir: str | Path, rejected_root: str | Path):
        self.requests_dir = Path(requests_dir)
        self.rejected_root = Path(rejected_root)
        self.requests_dir.mkdir(parents=True, exist_ok=True)
        (self.rejected_root / "images").mkdir(parents=True, exist_ok=True)

    def _request_path(self, req_id: int) -> Path:
        return self.requests_dir / f"request_{req_id}.txt"

    def propose(self, document_identified: str, document_suggested: str, image_b64: str) -> int:
        """Register a discrepancy report; returns the claimed request id."""
        require_class(document_suggested)
        try:
            base64.b64decode(image_b64, validate=True)
        except (binascii.Error, ValueError) as exc:
            raise BadImage(f"image payload is not valid base64: {exc}") from exc

        req_id = time.time_ns() // 1_000_000
        while True:
            path = self._request_path(req_id)
            try:
                fd = os.open(path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
            except FileExistsError:
                req_id += 1
                continue
            os.close(fd)
            break

        payload = json.dumps(
            ModificationRequest(
                req_id, document_identified, document_suggested, image_b64
            ).to_json_dict()
        )
        fd, tmp_name = tempfile.mkstemp(dir=self.requests_dir, suffix=".part")
        with os.fdopen(fd, "w", encoding="utf-8") as tmp:
            tmp.write(payload)
        os.replace(tmp_name, path)
        return req_id

    def list_requests(self) -> list[ModificationRequest]:
        """All parseable requests, ordered by id; corrupt files are skipped."""
        requests = []
        for path in self.requests_dir.glob("request_*.txt"):
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
                requests.append(
                    ModificationRequest(
                        req_id=int(data["req_id"]),
                        document_identified=data["document_identified"],
                        document_suggested=data["document_suggested"],
                        image=data["image"],
                    )
                )
            except (OSError, ValueError, KeyError) as exc:
                logger.warning("skipping unparseable request file %s: %s", path, exc)
        requests.sort(key=lambda r: r.req_id)
        return requests

    def reject(self, req_id: int) -> None:
        """Drop a request; no other state changes."""
        try:
            os.remove(self._request_path(req_id))
        except FileNotFoundError:
            raise NotFound(f"no modification request with id {req_id}") from None

    def approve(self, req_id: int) -> RejectedDataEntry:
        """Move a request's image into the rejected-data pipeline.

        The image bytes are fully on disk before the request file is removed;
        the removal is the commit point, so a concurrent reject and approve of
        the same id produce exactly one winner.
        """
        path = self._request_path(req_id)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise NotFound(f"no modification request with id {req_id}") from None

        suggested = require_class(data["document_suggested"])
        try:
            raw = base64.b64decode(data["image"], validate=True)
            with Image.open(io.BytesIO(raw)) as probe:
                probe.verify()
        except Exception as exc:
            raise BadImage(f"request {req_id} payload is not a decodable image: {exc}") from exc

        class_dir = self.rejected_root / "images" / suggested
        class_dir.mkdir(parents=True, exist_ok=True)
        final_path = class_dir / f"req_{req_id}.png"

        fd, tmp_name = tempfile.mkstemp(dir=class_dir, suffix=".part")
        try:
            with os.fdopen(fd, "wb") as tmp:
                if raw.startswith(_PNG_MAGIC):
                    tmp.write(raw)
                else:
                    with Image.open(io.BytesIO(raw)) as decoded:
                        decoded.load()
                        decoded.save(tmp, format="PNG")
            try:
                os.remove(path)
            except FileNotFoundError:
                raise NotFound(f"request {req_id} was settled by a concurrent caller") from None
            os.replace(tmp_name, final_path)
        except Exception:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

        ledger_line = json.dumps(
            {
                "req_id": req_id,
                "class_id": suggested,
                "path": str(final_path.relative_to(self.rejected_root)),
                "approved_at": datetime.now(timezone.utc).isoformat(),
            }
        )
        with (self.rejected_root / "ledger.jsonl").open("a", encoding="utf-8") as ledger:
            ledger.write(ledger_line + "\n")
        return RejectedDataEntry(suggested, final_path, req_id)

    def ledger_entries(self) -> list[RejectedDataEntry]:
        return read_ledger(self.rejected_root)


def read_ledger(rejected_root: str | Path) -> list[RejectedDataEntry]:
    """All approved entries recorded in the rejected pipeline's ledger."""
    rejected_root = Path(rejected_root)
    ledger_path = rejected_root / "ledger.jsonl"
    if not ledger_path.exists():
        return []
    entries = []
    with ledger_path.open(encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            data = json.loads(line)
            entries.append(
                RejectedDataEntry(
                    class_id=data["class_id"],
                    path=rejected_root / data["path"],
                    origin_req_id=int(data["req_id"]),
                )
            )
    return entries


def _copy_tree(src: Path, dst: Path) -> int:
    """Copy a directory tree; returns the number of files copied."""
    count = 0
    for path in sorted(src.rglob("*")):
        relative = path.relative_to(src)
        target = dst / relative
        if path.is_dir():
            target.mkdir(parents=True, exist_ok=True)
        else:
            target.parent.mkdir(parents=True, exist_ok=True)
            shutil.copyfile(path, target)
            count += 1
    return count


def assemble_dataset(
    base_dataset_root: str | Path,
    rejected_root: str | Path,
    out_root: str | Path,
    image_format: str = "png",
) -> dict[str, int]:
    """Merge the base dataset with the rejected-data pipeline for retraining.

    The base tree is copied wholesale; approved images whose content hash
    resolves against the base manifests get the full 14-variant fan-out into
    the train split, while unresolvable ones are labeled as full-frame
    documents and contribute the image plus its greyscale twin. Validation and
    test splits are never touched by rejected data. Rebuilding into the same
    out_root with unchanged inputs yields a byte-identical tree.
    """
    from .pipeline import ManifestIndex

    base_root = Path(base_dataset_root)
    rejected = Path(rejected_root)
    out_root = Path(out_root)
    if out_root.exists():
        shutil.rmtree(out_root)
    out_root.mkdir(parents=True)

    _copy_tree(base_root / "data", out_root / "data")
    base_train = base_root / "data" / "images" / "train"
    base_count = sum(1 for p in base_train.rglob("*") if p.is_file()) if base_train.exists() else 0

    entries = read_ledger(rejected)

    index_path = base_root / "data" / "manifests.jsonl"
    index = ManifestIndex.load(index_path) if index_path.exists() else ManifestIndex([])

    data_root = out_root / "data"
    train_images = data_root / "images" / "train"
    train_labels = data_root / "labels" / "train"
    train_images.mkdir(parents=True, exist_ok=True)
    train_labels.mkdir(parents=True, exist_ok=True)
    extension = "jpg" if image_format == "jpeg" else "png"

    variant_count = 0
    manifest_lines = []
    for entry in sorted(entries, key=lambda e: e.origin_req_id):
        with Image.open(entry.path) as loaded:
            loaded.load()
            image = loaded.copy()
        stem = f"req_{entry.origin_req_id}"
        manifest = index.by_hash.get(image_content_hash(image))
        if manifest is not None:
            for variant in fanout(image, manifest, stem):
                image_path = train_images / f"{variant.name}.{extension}"
                variant.manifest.content_hash = save_variant(
                    variant, image_path, image_format
                )
                (train_labels / f"{variant.name}.txt").write_text(
                    label_line(
                        variant.manifest.class_id,
                        variant.manifest.placement,
                        variant_size(variant),
                    )
                    + "\n",
                    encoding="utf-8",
                )
                manifest_lines.append(
                    json.dumps(variant.manifest.to_json_dict(), ensure_ascii=False)
                )
                variant_count += 1
        else:
            # No render manifest: treat the upload as a tight document crop.
            width, height = image.size
            full = Box(0.0, 0.0, float(width), float(height))
            for name, variant_image in (
                (stem, image.convert("RGB")),
                (f"{stem}_greyscale", image.convert("L")),
            ):
                image_path = train_images / f"{name}.{extension}"
                save_image(variant_image, image_path, image_format)
                (train_labels / f"{name}.txt").write_text(
                    label_line(entry.class_id, full, (width, height)) + "\n",
                    encoding="utf-8",
                )
                variant_count += 1

    if manifest_lines:
        with (data_root / "manifests.jsonl").open("a", encoding="utf-8") as fh:
            fh.write("".join(line + "\n" for line in manifest_lines))

    return {
        "base_count": base_count,
        "rejected_count": len(entries),
        "variant_count": variant_count,
    }
