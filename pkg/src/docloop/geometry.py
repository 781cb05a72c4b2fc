"""Anchor-based region mapping between template and input-image coordinates.

A template records where its identifying text sits (the anchor box). Once OCR
locates that same text in an input image, the two boxes fix an axis-aligned
scale-and-translate correspondence under the no-distortion assumption, and any
template data region can be mapped into input-image coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateAnchor, EmptyCrop
from .model import Box


@dataclass(frozen=True)
class AnchorCorrespondence:
    """Pairs a template's anchor box with the box found in an input image."""

    template_anchor: Box
    found_anchor: Box

    def __post_init__(self) -> None:
        if self.template_anchor.width() <= 0 or self.template_anchor.height() <= 0:
            raise DegenerateAnchor(
                f"template anchor has no area: {self.template_anchor.as_tuple()}"
            )

    def scale(self) -> tuple[float, float]:
        sx = self.found_anchor.width() / self.template_anchor.width()
        sy = self.found_anchor.height() / self.template_anchor.height()
        return sx, sy


def map_region(corr: AnchorCorrespondence, region: Box) -> Box:
    """Map a template region into input-image coordinates.

    Start coordinates are carried from the found anchor's start corner, end
    coordinates from its end corner, each offset by the scaled displacement of
    the region from the matching template-anchor corner. A collapsed found
    anchor (zero width or height from pathological OCR) yields scale 0 and a
    collapsed output rather than an error.
    """
    o = corr.template_anchor
    f = corr.found_anchor
    sx, sy = corr.scale()
    return Box(
        f.x0 + sx * (region.x0 - o.x0),
        f.y0 + sy * (region.y0 - o.y0),
        f.x1 + sx * (region.x1 - o.x1),
        f.y1 + sy * (region.y1 - o.y1),
    )


def map_region_from_anchor_start(corr: AnchorCorrespondence, region: Box) -> Box:
    """Alternative derivation anchoring all four coordinates at the found
    anchor's start corner. Algebraically equivalent to map_region for scale
    factors derived from the same anchor pair; kept as an independent form for
    the equivalence check in the test suite.
    """
    o = corr.template_anchor
    f = corr.found_anchor
    sx, sy = corr.scale()
    return Box(
        f.x0 + sx * (region.x0 - o.x0),
        f.y0 + sy * (region.y0 - o.y0),
        f.x0 + sx * (region.x1 - o.x0),
        f.y0 + sy * (region.y1 - o.y0),
    )


def clamp_to_image(box: Box, width: float, height: float) -> Box:
    """Clamp a box to [0, width] x [0, height]; reject boxes with no area left."""
    x0 = min(max(box.x0, 0.0), width)
    y0 = min(max(box.y0, 0.0), height)
    x1 = min(max(box.x1, 0.0), width)
    y1 = min(max(box.y1, 0.0), height)
    clamped = Box(x0, y0, x1, y1)
    if clamped.width() <= 0 or clamped.height() <= 0:
        raise EmptyCrop(f"box {box.as_tuple()} has no area inside {width}x{height}")
    return clamped
