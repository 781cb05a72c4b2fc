"""Walk one image through identify -> anchor -> region mapping -> OCR -> validate.

Needs the dataset from 02_build_dataset.py. The manifest-backed detector and
OCR stand in for the trained model and OCR engine: they answer with exactly
what was drawn, which makes a correct pipeline validate at ratio 1.0.
"""
from pathlib import Path

from docloop import bundled_registry, extract, identify, load_image_ref, validate
from docloop.pipeline import ManifestIndex, OracleDetector, OracleOcr

dataset = Path("demo_output/dataset")
index = ManifestIndex.for_dataset(dataset)
detector, ocr = OracleDetector(index), OracleOcr(index)
registry = bundled_registry()

image_path = next((dataset / "data" / "images" / "test").glob("*_a4_1500_1000.png"))
print("image:", image_path.name)

ref = load_image_ref(image_path)
detection = identify(ref, detector)
print(f"identified: {detection.class_id} (confidence {detection.confidence})")

result = extract(ref, detection.class_id, ocr, registry)
print(f"anchor found at: {tuple(round(v, 1) for v in result.anchor_box.as_tuple())}")
print("mapped regions and extracted fields:")
for (code, text), (_, box) in zip(result.fields, result.per_region_boxes):
    corners = tuple(round(v, 1) for v in box.as_tuple())
    print(f"  {code:<26} {corners}  ->  {text!r}")

truth = (dataset / "data" / "annotation" / "test" / f"{image_path.stem}.txt").read_text()
print("\nextracted:", result.serialized)
print("expected: ", truth)
print("validation ratio:", validate(result.serialized, truth))
