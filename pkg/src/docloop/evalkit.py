"""Metrics, the dataset evaluation harness, and the feedback-loop simulation.

The simulation substitutes a coverage stub for a trained detector: it answers
correctly on every (class, variant-kind) pair in its coverage set and guesses
uniformly at random otherwise. Feeding its misses through the real
modification-request store, approving them, and folding the approved pairs
back into the coverage set reproduces the structure of the human-feedback
retraining cycle: accuracy can only go up, and reaches 1.0 once every pair is
covered.
"""
from __future__ import annotations

import base64
import json
import random
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from PIL import Image

from .errors import AnchorNotFound, NoDocumentFound
from .feedback import FeedbackStore
from .model import CLASS_IDS, DetectionResult, ImageRef, image_content_hash
from .pipeline import (
    DetectorBackend,
    ManifestIndex,
    OcrBackend,
    extract,
    identify,
    validate,
)
from .templates import TemplateRegistry

# how many of the 14 fan-out variants each kind contributes
KIND_MULTIPLICITY = {"original": 1, "greyscale": 1, "a4": 6, "a4_greyscale": 6}


def precision(tp: int, fp: int) -> float:
    return tp / (tp + fp) if tp + fp else 0.0


def recall(tp: int, fn: int) -> float:
    return tp / (tp + fn) if tp + fn else 0.0


def f1(p: float, r: float) -> float:
    return 2.0 * p * r / (p + r) if p + r else 0.0


@dataclass
class ClassCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0


@dataclass
class ConfusionCounts:
    per_class: dict[str, ClassCounts] = field(default_factory=dict)
    total_images: int = 0

    def counts_for(self, class_id: str) -> ClassCounts:
        return self.per_class.setdefault(class_id, ClassCounts())

    def record(self, truth: str, predicted: str | None) -> None:
        self.total_images += 1
        if predicted == truth:
            self.counts_for(truth).tp += 1
        else:
            self.counts_for(truth).fn += 1
            if predicted is not None:
                self.counts_for(predicted).fp += 1

    def merge(self, other: "ConfusionCounts") -> "ConfusionCounts":
        merged = ConfusionCounts(total_images=self.total_images + other.total_images)
        for source in (self.per_class, other.per_class):
            for class_id, counts in source.items():
                target = merged.counts_for(class_id)
                target.tp += counts.tp
                target.fp += counts.fp
                target.fn += counts.fn
        return merged


@dataclass
class MetricsReport:
    accuracy: float
    per_class: dict[str, dict[str, float]]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    total_images: int
    mean_validation_ratio: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.macro_precision,
            "recall": self.macro_recall,
            "f1": self.macro_f1,
            "total_images": self.total_images,
            "mean_validation_ratio": self.mean_validation_ratio,
            "per_class": self.per_class,
        }


def metrics_from_counts(
    counts: ConfusionCounts, mean_validation_ratio: float | None = None
) -> MetricsReport:
    per_class = {}
    precisions, recalls, f1s = [], [], []
    total_tp = 0
    for class_id in sorted(counts.per_class):
        c = counts.per_class[class_id]
        p = precision(c.tp, c.fp)
        r = recall(c.tp, c.fn)
        score = f1(p, r)
        per_class[class_id] = {"tp": c.tp, "fp": c.fp, "fn": c.fn,
                               "precision": p, "recall": r, "f1": score}
        precisions.append(p)
        recalls.append(r)
        f1s.append(score)
        total_tp += c.tp
    n = len(per_class) or 1
    return MetricsReport(
        accuracy=total_tp / counts.total_images if counts.total_images else 0.0,
        per_class=per_class,
        macro_precision=sum(precisions) / n,
        macro_recall=sum(recalls) / n,
        macro_f1=sum(f1s) / n,
        total_images=counts.total_images,
        mean_validation_ratio=mean_validation_ratio,
    )


def evaluate(
    dataset_root: str | Path,
    split: str,
    detector: DetectorBackend,
    ocr: OcrBackend | None,
    registry: TemplateRegistry,
    index: ManifestIndex | None = None,
    with_extraction: bool = True,
) -> MetricsReport:
    """Identify every image in a split, and optionally extract+validate.

    Ground-truth classes come from the dataset manifests; ground-truth
    serializations from the annotation files.
    """
    from .pipeline import load_image_ref

    dataset_root = Path(dataset_root)
    if index is None:
        index = ManifestIndex.for_dataset(dataset_root)
    images_dir = dataset_root / "data" / "images" / split
    annotation_dir = dataset_root / "data" / "annotation" / split

    counts = ConfusionCounts()
    ratios = []
    for path in sorted(images_dir.iterdir()):
        if not path.is_file():
            continue
        ref = load_image_ref(path)
        truth = index.by_id[path.stem].class_id
        try:
            detection = identify(ref, detector)
            predicted = detection.class_id
        except NoDocumentFound:
            predicted = None
        counts.record(truth, predicted)

        if with_extraction and ocr is not None and predicted is not None:
            annotation_path = annotation_dir / f"{path.stem}.txt"
            if annotation_path.exists():
                truth_text = annotation_path.read_text(encoding="utf-8").rstrip("\n")
                try:
                    result = extract(ref, predicted, ocr, registry)
                    ratios.append(validate(result.serialized, truth_text))
                except AnchorNotFound:
                    ratios.append(0.0)

    mean_ratio = sum(ratios) / len(ratios) if ratios else None
    return metrics_from_counts(counts, mean_ratio)


class CoverageDetector:
    """Detector stub whose skill is exactly its (class, variant-kind) coverage.

    Covered images are answered correctly with confidence 1.0; everything else
    gets a seeded uniformly-random class, which is how an undertrained model's
    behavior enters the simulation.
    """

    def __init__(self, index: ManifestIndex, covered: set[tuple[str, str]], seed: int):
        self.index = index
        self.covered = set(covered)
        self.rng = random.Random(seed)

    def detect(self, img: ImageRef) -> list[DetectionResult]:
        manifest = self.index.resolve(img)
        if manifest is None:
            return []
        if (manifest.class_id, manifest.variant_kind) in self.covered:
            return [DetectionResult(manifest.class_id, manifest.placement, 1.0)]
        guess = self.rng.choice(CLASS_IDS)
        return [DetectionResult(guess, manifest.placement, 1.0)]


def expected_initial_accuracy(
    covered_kinds: tuple[str, ...] = ("original",), num_classes: int = len(CLASS_IDS)
) -> float:
    """Closed-form expected round-0 accuracy of the coverage stub.

    Covered variants are always right; the rest are right with probability
    1/num_classes under the uniform guess.
    """
    total = sum(KIND_MULTIPLICITY.values())
    covered = sum(KIND_MULTIPLICITY[k] for k in covered_kinds)
    return (covered + (total - covered) / num_classes) / total


def simulate_arl_loop(
    dataset_root: str | Path,
    rounds: int,
    seed: int,
    initial_kinds: tuple[str, ...] = ("original",),
    work_dir: str | Path | None = None,
) -> list[float]:
    """Run the feedback loop against the full variant grid of a dataset.

    Each round identifies every image; misses become modification requests
    suggesting the true class, all requests are approved, and the approved
    (class, kind) pairs extend the detector's coverage before the next round.
    Returns the per-round accuracies.
    """
    dataset_root = Path(dataset_root)
    index = ManifestIndex.for_dataset(dataset_root)
    if work_dir is None:
        work_dir = tempfile.mkdtemp(prefix="docloop_sim_")
    work_dir = Path(work_dir)

    covered = {(class_id, kind) for class_id in CLASS_IDS for kind in initial_kinds}
    detector = CoverageDetector(index, covered, seed)

    image_paths = {
        path.stem: path
        for split_dir in (dataset_root / "data" / "images").iterdir()
        for path in split_dir.iterdir()
        if path.is_file()
    }

    manifests = sorted(index.manifests(), key=lambda m: m.manifest_id)
    accuracies = []
    for round_number in range(rounds):
        store = FeedbackStore(
            work_dir / f"round_{round_number}" / "modification_requests",
            work_dir / f"round_{round_number}" / "rejected_pipeline",
        )
        correct = 0
        misses = []
        for manifest in manifests:
            ref = ImageRef(content_hash=manifest.content_hash, manifest_id=manifest.manifest_id)
            detection = identify(ref, detector)
            if detection.class_id == manifest.class_id:
                correct += 1
            else:
                misses.append((manifest, detection.class_id))
        accuracies.append(correct / len(manifests))

        # external agent 1: report every miss; external agent 2: approve all
        for manifest, predicted in misses:
            payload = base64.b64encode(
                image_paths[manifest.manifest_id].read_bytes()
            ).decode("ascii")
            req_id = store.propose(predicted, manifest.class_id, payload)
            store.approve(req_id)

        # retrain: the approved pipeline images extend the coverage set, each
        # resolved back to its render manifest by content hash
        for entry in store.ledger_entries():
            with Image.open(entry.path) as approved:
                approved.load()
                content_hash = image_content_hash(approved)
            source = index.by_hash.get(content_hash)
            if source is not None:
                detector.covered.add((source.class_id, source.variant_kind))
    return accuracies


@dataclass
class ComparisonReport:
    """Side-by-side of two runs, in the shape of the results table."""

    without_loop: MetricsReport
    with_loop: MetricsReport

    ROW_ORDER = ("Accuracy", "Precision", "Recall", "F1 score")

    def source_data(self) -> dict:
        def row_values(report: MetricsReport) -> dict[str, float]:
            return {
                "Accuracy": report.accuracy,
                "Precision": report.macro_precision,
                "Recall": report.macro_recall,
                "F1 score": report.macro_f1,
            }

        classes = sorted(set(self.without_loop.per_class) | set(self.with_loop.per_class))
        return {
            "rows": [
                {
                    "metric": name,
                    "without": row_values(self.without_loop)[name],
                    "with": row_values(self.with_loop)[name],
                }
                for name in self.ROW_ORDER
            ],
            "true_positives": {
                class_id: {
                    "without": self.without_loop.per_class.get(class_id, {}).get("tp", 0),
                    "with": self.with_loop.per_class.get(class_id, {}).get("tp", 0),
                }
                for class_id in classes
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.source_data(), indent=2)

    def render_text(self) -> str:
        data = self.source_data()
        lines = [f"{'Metric':<12} {'Without loop':>14} {'With loop':>12}"]
        for row in data["rows"]:
            lines.append(f"{row['metric']:<12} {row['without']:>14.4f} {row['with']:>12.4f}")
        lines.append("")
        lines.append(f"{'Class':<18} {'TP without':>12} {'TP with':>10}")
        for class_id, tps in data["true_positives"].items():
            lines.append(f"{class_id:<18} {tps['without']:>12} {tps['with']:>10}")
        return "\n".join(lines)


def report(metrics_without: MetricsReport, metrics_with: MetricsReport) -> ComparisonReport:
    return ComparisonReport(metrics_without, metrics_with)
