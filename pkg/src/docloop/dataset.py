"""Dataset build orchestration: generate records, render, fan out, write.

Each (class, index) base is independent, so building parallelizes across
processes; workers write their own image/annotation/label files and return
manifest lines, which the parent orders deterministically before writing
manifests.jsonl. The output tree is byte-identical regardless of worker count.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .generate import GenSeed, batch_serials, generate_record
from .model import CLASS_IDS, serialize_annotation
from .render import (
    DatasetBase,
    RenderManifest,
    assign_split,
    emit_dataset,
    fanout,
    label_line,
    render_base,
    save_variant,
    variant_size,
)
from .templates import bundled_registry

_SPLITS = ("train", "validation", "test")


def _build_one_base(args: tuple) -> tuple[str, int, str, list[str]]:
    """Worker: render one base, write its 14 variants, return manifest lines."""
    class_id, serial, index, count, seed, out_root, image_format = args
    registry = bundled_registry()
    gen = GenSeed(seed=seed, max_count=count)
    record = generate_record(class_id, serial, gen, registry)
    stem = f"{class_id}_{index}"
    image, manifest = render_base(record, registry.for_class(class_id), manifest_id=stem)
    annotation_text = serialize_annotation(record.annotation)

    data_root = Path(out_root) / "data"
    split = assign_split(index, count)
    extension = "jpg" if image_format == "jpeg" else "png"
    lines = []
    for variant in fanout(image, manifest, stem):
        image_path = data_root / "images" / split / f"{variant.name}.{extension}"
        variant.manifest.content_hash = save_variant(variant, image_path, image_format)
        (data_root / "annotation" / split / f"{variant.name}.txt").write_text(
            annotation_text, encoding="utf-8"
        )
        (data_root / "labels" / split / f"{variant.name}.txt").write_text(
            label_line(class_id, variant.manifest.placement, variant_size(variant)) + "\n",
            encoding="utf-8",
        )
        lines.append(json.dumps(variant.manifest.to_json_dict(), ensure_ascii=False))
    return class_id, index, split, lines


def build_dataset(
    out_root: str | Path,
    count: int,
    seed: int,
    class_ids: tuple[str, ...] = CLASS_IDS,
    image_format: str = "png",
    workers: int | None = None,
) -> dict[str, int]:
    """Generate ``count`` documents per class and emit the full dataset tree.

    Returns per-split image counts plus the total.
    """
    out_root = Path(out_root)
    data_root = out_root / "data"
    for area in ("images", "annotation", "labels"):
        for split in _SPLITS:
            (data_root / area / split).mkdir(parents=True, exist_ok=True)

    jobs = []
    for class_id in class_ids:
        for index, serial in enumerate(batch_serials(class_id, count), start=1):
            jobs.append((class_id, serial, index, count, seed, str(out_root), image_format))

    if workers is None:
        workers = os.cpu_count() or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_build_one_base, jobs, chunksize=4))
    else:
        results = [_build_one_base(job) for job in jobs]

    results.sort(key=lambda item: (item[0], item[1]))
    counts = {split: 0 for split in _SPLITS}
    manifest_path = data_root / "manifests.jsonl"
    with manifest_path.open("w", encoding="utf-8") as fh:
        for _, _, split, lines in results:
            counts[split] += len(lines)
            fh.write("".join(line + "\n" for line in lines))
    counts["total"] = sum(counts[s] for s in _SPLITS)
    return counts


def load_bases_for_augment(in_dir: str | Path) -> list[DatasetBase]:
    """Rebuild DatasetBase items from a ``gen`` output directory."""
    from PIL import Image

    in_dir = Path(in_dir)
    manifest_file = in_dir / "manifests_base.jsonl"
    manifests = []
    with manifest_file.open(encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                manifests.append(RenderManifest.from_json_dict(json.loads(line)))

    per_class: dict[str, list[RenderManifest]] = {}
    for manifest in manifests:
        per_class.setdefault(manifest.class_id, []).append(manifest)

    bases = []
    for class_id, class_manifests in per_class.items():
        def _index(m: RenderManifest) -> int:
            return int(m.manifest_id.rsplit("_", 1)[1])

        class_manifests.sort(key=_index)
        total = len(class_manifests)
        for manifest in class_manifests:
            stem = manifest.manifest_id
            image = Image.open(in_dir / "images" / class_id / f"{stem}.png")
            image.load()
            annotation_text = (
                (in_dir / "metadata" / class_id / f"{stem}.txt").read_text(encoding="utf-8").rstrip("\n")
            )
            bases.append(
                DatasetBase(
                    annotation_text=annotation_text,
                    image=image,
                    manifest=manifest,
                    index=_index(manifest),
                    total=total,
                )
            )
    return bases


def augment_dataset(in_dir: str | Path, out_root: str | Path, image_format: str = "png") -> dict[str, int]:
    """Fan out previously generated base images into the dataset tree."""
    return emit_dataset(load_bases_for_augment(in_dir), out_root, image_format)
