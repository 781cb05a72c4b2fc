"""docloop: synthetic ID-document generation, template-anchored field
extraction, and a human-feedback retraining loop, with manifest-backed oracle
backends so the whole pipeline runs and validates without trained models."""

from .errors import (
    AnchorNotFound,
    BadImage,
    DegenerateAnchor,
    DelimiterCollision,
    DocloopError,
    EmptyCrop,
    FieldCountMismatch,
    NoDocumentFound,
    NotFound,
    PlacementOverflow,
    RangeError,
    SchemaError,
    SerialOverflow,
    UnknownClass,
)
from .model import (
    CLASS_IDS,
    Annotation,
    Box,
    DetectionResult,
    ImageRef,
    OcrSpan,
    image_content_hash,
    parse_annotation,
    serialize_annotation,
)
from .generate import (
    DocumentRecord,
    GenSeed,
    format_serial,
    gender_for_serial,
    generate_batch,
    generate_record,
)
from .geometry import AnchorCorrespondence, clamp_to_image, map_region
from .similarity import check_similarity, similarity
from .templates import Template, TemplateRegistry, bundled_registry, load_template
from .render import (
    RenderManifest,
    assign_split,
    emit_dataset,
    fanout,
    place_on_a4,
    render_base,
    to_greyscale,
)
from .dataset import augment_dataset, build_dataset
from .pipeline import (
    ExtractionResult,
    ManifestIndex,
    OracleDetector,
    OracleOcr,
    extract,
    find_anchor,
    identify,
    load_image_ref,
    validate,
)
from .feedback import FeedbackStore, ModificationRequest, RejectedDataEntry, assemble_dataset
from .evalkit import (
    CoverageDetector,
    MetricsReport,
    evaluate,
    expected_initial_accuracy,
    f1,
    precision,
    recall,
    report,
    simulate_arl_loop,
)

__version__ = "0.1.0"
