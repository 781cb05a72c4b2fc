import random

import pytest
from PIL import Image

from docloop import (
    Annotation,
    Box,
    DelimiterCollision,
    FieldCountMismatch,
    ImageRef,
    image_content_hash,
    parse_annotation,
    serialize_annotation,
)
from docloop.model import DOCUMENT_CLASSES, class_index, scrub_value


def make_annotation(class_id, values):
    codes = [f"F{i}" for i in range(len(values))]
    return Annotation(class_id, tuple(zip(codes, values)))


class TestSerializeAnnotation:
    def test_adhaar_example(self):
        ann = make_annotation(
            "adhaar_v1_p1", ["Jeremiah Flores", "16/10/1977", "Male", "0000 0000 0001"]
        )
        assert serialize_annotation(ann) == "Jeremiah Flores::16/10/1977::Male::0000 0000 0001"

    def test_pan_example(self):
        ann = make_annotation(
            "pan_v1", ["Robert Anderson", "Drew Warren", "AAAA0000B", "16/03/1994"]
        )
        assert serialize_annotation(ann) == "Robert Anderson::Drew Warren::AAAA0000B::16/03/1994"

    def test_no_trailing_delimiter(self):
        ann = make_annotation("adhaar_v1_p1", ["a", "b", "c", "d"])
        assert not serialize_annotation(ann).endswith("::")

    def test_delimiter_collision_rejected(self):
        ann = make_annotation("adhaar_v1_p1", ["bad::value", "b", "c", "d"])
        with pytest.raises(DelimiterCollision):
            serialize_annotation(ann)


class TestParseAnnotation:
    def test_adhaar_line(self):
        ann = parse_annotation(
            "adhaar_v1_p1", "Jeremiah Flores::16/10/1977::Male::0000 0000 0001"
        )
        assert ann.values() == ["Jeremiah Flores", "16/10/1977", "Male", "0000 0000 0001"]

    def test_empty_line_rejected(self):
        with pytest.raises(FieldCountMismatch):
            parse_annotation("adhaar_v1_p1", "")

    def test_wrong_count_rejected(self):
        with pytest.raises(FieldCountMismatch):
            parse_annotation("dl_v1_p1", "only::three::fields")

    def test_trailing_newline_tolerated(self):
        ann = parse_annotation("adhaar_v1_p1", "a::b::c::d\n")
        assert ann.values() == ["a", "b", "c", "d"]

    def test_round_trip_seeded_annotations(self):
        # serializer is the oracle: parse(serialize(a)) must reproduce a
        rng = random.Random(20240915)
        alphabet = "abcdefghij ABCDELMN0123456789/-.+"
        for _ in range(100):
            class_id = rng.choice(sorted(DOCUMENT_CLASSES))
            count = DOCUMENT_CLASSES[class_id][1]
            values = [
                "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))
                for _ in range(count)
            ]
            codes = [f"F{i}" for i in range(count)]
            ann = Annotation(class_id, tuple(zip(codes, values)))
            line = serialize_annotation(ann)
            assert parse_annotation(class_id, line, codes) == ann


class TestBox:
    def test_rejects_reversed_x(self):
        with pytest.raises(ValueError):
            Box(10, 0, 5, 10)

    def test_rejects_reversed_y(self):
        with pytest.raises(ValueError):
            Box(0, 10, 5, 5)

    def test_width_height(self):
        box = Box(1, 2, 4, 8)
        assert box.width() == 3
        assert box.height() == 6
        assert box.center() == (2.5, 5.0)

    def test_degenerate_allowed(self):
        assert Box(3, 3, 3, 3).width() == 0


class TestContentHash:
    def test_equal_pixels_equal_hash(self):
        a = Image.new("RGB", (20, 10), (255, 0, 0))
        b = Image.new("RGB", (20, 10), (255, 0, 0))
        assert image_content_hash(a) == image_content_hash(b)

    def test_different_pixels_different_hash(self):
        a = Image.new("RGB", (20, 10), (255, 0, 0))
        b = Image.new("RGB", (20, 10), (254, 0, 0))
        assert image_content_hash(a) != image_content_hash(b)

    def test_mode_matters(self):
        a = Image.new("L", (4, 4), 255)
        b = Image.new("RGB", (4, 4), (255, 255, 255))
        assert image_content_hash(a) != image_content_hash(b)

    def test_imageref_lazy_hash(self):
        img = Image.new("RGB", (4, 4), (1, 2, 3))
        ref = ImageRef(pixels=img)
        assert ref.content_hash == image_content_hash(img)
        precomputed = ImageRef(content_hash="abc123", manifest_id="x")
        assert precomputed.content_hash == "abc123"
        with pytest.raises(ValueError):
            ImageRef()


def test_scrub_value_breaks_delimiter():
    assert "::" not in scrub_value("a::b::::c")


def test_class_index_is_alphabetical_rank():
    assert [class_index(c) for c in sorted(DOCUMENT_CLASSES)] == [0, 1, 2, 3, 4]
