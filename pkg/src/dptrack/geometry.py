"""Axis-aligned box geometry shared by the tracker and the evaluator.

Boxes live in pixel coordinates with the origin at the top-left corner of
the frame. Boxes are allowed to extend beyond the frame bounds; none of the
predicates clip, since partially off-frame boxes are exactly the exit/entry
events the tracker needs to see.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box: top-left corner (x, y), positive width and height."""

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "w", "h"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"non-finite bbox field {name!r}")
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"bbox sides must be positive, got w={self.w} h={self.h}")

    @property
    def centroid(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    @property
    def area(self) -> float:
        return self.w * self.h

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.w, self.h)


@dataclass(frozen=True)
class FrameGeometry:
    """Frame dimensions plus the width of the border band used by the
    edge predicate (default 30 px)."""

    width: int
    height: int
    edge_margin: float = 30.0

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("frame dimensions must be positive")
        if self.edge_margin < 0:
            raise ValueError("edge_margin must be non-negative")
        if 2 * self.edge_margin >= min(self.width, self.height):
            raise ValueError("edge bands may not overlap: 2*edge_margin must be "
                             f"< min(width, height) = {min(self.width, self.height)}")

    @property
    def center(self) -> tuple[float, float]:
        return (self.width / 2.0, self.height / 2.0)


def centroid_distance(box: BBox, frame: FrameGeometry) -> float:
    """Euclidean distance from the box centroid to the frame center."""
    cx, cy = box.centroid
    fx, fy = frame.center
    return math.hypot(cx - fx, cy - fy)


def is_at_edge(box: BBox, frame: FrameGeometry) -> bool:
    """True iff the box rectangle intersects the border band.

    The band is the strip of pixels closer than ``edge_margin`` to any frame
    border. The whole rectangle counts, not just its centroid, so a box that
    is partially off-frame always qualifies.
    """
    m = frame.edge_margin
    return (box.x < m
            or box.y < m
            or box.x + box.w > frame.width - m
            or box.y + box.h > frame.height - m)


def iou(a: BBox, b: BBox) -> float:
    """Intersection-over-union of two boxes; 0.0 when disjoint."""
    ix = min(a.x + a.w, b.x + b.w) - max(a.x, b.x)
    iy = min(a.y + a.h, b.y + b.h) - max(a.y, b.y)
    if ix <= 0 or iy <= 0:
        return 0.0
    inter = ix * iy
    return inter / (a.area + b.area - inter)
