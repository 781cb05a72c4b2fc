import pytest

from docloop import GenSeed, build_dataset, bundled_registry, generate_record
from docloop.pipeline import ManifestIndex, OracleDetector, OracleOcr


@pytest.fixture(scope="session")
def registry():
    return bundled_registry()


@pytest.fixture(scope="session")
def small_dataset(tmp_path_factory):
    """Two documents per class, fanned out: 140 images across the splits."""
    root = tmp_path_factory.mktemp("dataset_small")
    counts = build_dataset(root, count=2, seed=7, workers=1)
    assert counts["total"] == 140
    return root


@pytest.fixture(scope="session")
def small_index(small_dataset):
    return ManifestIndex.for_dataset(small_dataset)


@pytest.fixture(scope="session")
def oracle_backends(small_index):
    return OracleDetector(small_index), OracleOcr(small_index)


@pytest.fixture()
def sample_record(registry):
    return generate_record("adhaar_v1_p1", 1, GenSeed(seed=7, max_count=10), registry)
