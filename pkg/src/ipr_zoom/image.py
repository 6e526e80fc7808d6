"""Raster types shared by every kernel.

A *plane* is a 2D ``uint8`` array indexed ``[y, x]``. An :class:`Image` bundles
one (gray) or three (R, G, B) planes of identical shape.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class ShapeError(ValueError):
    """Dimension, plane-count or other contract violation on raster data."""


def as_plane(data) -> np.ndarray:
    """Validate ``data`` as a plane and return it as a read-only uint8 array.

    Integer input outside [0, 255] is rejected rather than wrapped.
    """
    arr = np.asarray(data)
    if arr.ndim != 2:
        raise ShapeError(f"plane must be 2D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"plane must be non-empty, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.dtype.kind not in "iub":
            raise ShapeError(f"plane samples must be integers, got {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ShapeError("plane samples must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    else:
        arr = arr.copy() if arr.flags.writeable else arr
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Image:
    planes: tuple[np.ndarray, ...]

    def __post_init__(self):
        planes = tuple(as_plane(p) for p in self.planes)
        if len(planes) not in (1, 3):
            raise ShapeError(f"image needs 1 or 3 planes, got {len(planes)}")
        if any(p.shape != planes[0].shape for p in planes[1:]):
            raise ShapeError("all planes must share width and height")
        object.__setattr__(self, "planes", planes)

    @classmethod
    def from_array(cls, arr) -> "Image":
        """Build from an ``(H, W)`` gray or ``(H, W, 3)`` RGB array."""
        arr = np.asarray(arr)
        if arr.ndim == 2:
            return cls((arr,))
        if arr.ndim == 3 and arr.shape[2] == 3:
            return cls(tuple(arr[..., c] for c in range(3)))
        raise ShapeError(f"cannot interpret array of shape {arr.shape} as an image")

    def to_array(self) -> np.ndarray:
        if self.is_gray:
            return self.planes[0].copy()
        return np.stack(self.planes, axis=-1)

    @property
    def width(self) -> int:
        return self.planes[0].shape[1]

    @property
    def height(self) -> int:
        return self.planes[0].shape[0]

    @property
    def is_gray(self) -> bool:
        return len(self.planes) == 1

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return len(self.planes) == len(other.planes) and all(
            a.shape == b.shape and np.array_equal(a, b)
            for a, b in zip(self.planes, other.planes)
        )

    __hash__ = None

    def __repr__(self):
        kind = "gray" if self.is_gray else "rgb"
        return f"Image({kind}, {self.width}x{self.height})"


def split_channels(img: Image) -> list[np.ndarray]:
    return list(img.planes)


def merge_channels(planes: Sequence[np.ndarray]) -> Image:
    return Image(tuple(planes))


def crop(img: Image, x0: int, y0: int, w: int, h: int) -> Image:
    """Copy the ``w`` x ``h`` window whose top-left corner is ``(x0, y0)``."""
    if w < 1 or h < 1 or x0 < 0 or y0 < 0 or x0 + w > img.width or y0 + h > img.height:
        raise ShapeError(
            f"crop window ({x0},{y0},{w},{h}) outside {img.width}x{img.height} image"
        )
    return Image(tuple(p[y0:y0 + h, x0:x0 + w].copy() for p in img.planes))
