"""Build a complete dataset tree: render, fan out 14 variants, split 7:2:1.

Each base document becomes the original, a greyscale twin, and six A4
placements in color and greyscale. Index positions 1..N split 7:2:1 into
train/validation/test. The manifests.jsonl written alongside records exactly
what text was drawn where; it is what powers the manifest-backed backends.
"""
import json
from pathlib import Path

from docloop import build_dataset

out = Path("demo_output/dataset")
counts = build_dataset(out, count=4, seed=42, workers=2)
print("images per split:", counts)

train = sorted(p.name for p in (out / "data" / "images" / "train").iterdir())
print("\nfirst base's variants:")
for name in train[:14]:
    print("  ", name)

with (out / "data" / "manifests.jsonl").open() as fh:
    manifest = json.loads(fh.readline())
print("\nfirst manifest entry:")
print("  id:       ", manifest["manifest_id"])
print("  class:    ", manifest["class_id"])
print("  kind:     ", manifest["variant_kind"])
print("  placement:", manifest["placement"])
print("  anchor:   ", manifest["anchor_box"])
print("  texts:    ", [(t["code"], t["text"]) for t in manifest["texts"][:4]], "...")

label = (out / "data" / "labels" / "train" / (manifest["manifest_id"] + ".txt")).read_text()
print("\ndetector label for it:", label.strip(), "(class cx cy w h, normalized)")
