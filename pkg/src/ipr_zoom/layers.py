"""Threshold decomposition route to the same zoom, kept as a brute-force oracle.

The plane is cut into 256 binary layers ``bit = level < value``, each layer is
enlarged 2x by looking up every 2x2 binary patch in a fixed 16-entry table of
3x3 expansions, and the enlarged layers are summed back. This materialises
256 full-size layers, so it is meant for desk-scale inputs (<= 256x256).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .image import ShapeError, as_plane

LEVELS = 256

# 2x2 pattern index = a<<3 | b<<2 | c<<1 | d, with a b / c d read row-major.
# Values are the 3x3 expansions, rows separated by "/".
_PATCH_ROWS = {
    0: "000/000/000",   # empty rectangle
    1: "000/000/001",   # single corner, bottom-right
    2: "000/000/100",   # single corner, bottom-left
    3: "000/000/111",   # horizontal line, bottom
    4: "001/000/000",   # single corner, top-right
    5: "001/001/001",   # vertical line, right
    6: "001/010/100",   # anti-diagonal
    7: "001/011/111",   # triangle, bottom-right
    8: "100/000/000",   # single corner, top-left
    9: "100/010/001",   # diagonal
    10: "100/100/100",  # vertical line, left
    11: "100/110/111",  # triangle, bottom-left
    12: "111/000/000",  # horizontal line, top
    13: "111/011/001",  # triangle, top-right
    14: "111/110/100",  # triangle, top-left
    15: "111/111/111",  # filled rectangle
}


@dataclass(frozen=True, eq=False)
class ThresholdLayer:
    bits: np.ndarray  # bool, shape (height, width)
    level: int

    def __post_init__(self):
        bits = np.asarray(self.bits)
        if bits.ndim != 2 or bits.shape[0] < 1 or bits.shape[1] < 1:
            raise ShapeError(f"layer must be a non-empty 2D array, got {bits.shape}")
        if bits.dtype != bool:
            if not np.isin(bits, (0, 1)).all():
                raise ShapeError("layer bits must be 0 or 1")
            bits = bits.astype(bool)
        if not 0 <= self.level < LEVELS:
            raise ValueError(f"level {self.level} outside [0, 255]")
        object.__setattr__(self, "bits", bits)

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ThresholdLayer):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.bits, other.bits)

    __hash__ = None


def patch_table() -> np.ndarray:
    """The 16 binary 3x3 expansions as a ``(16, 3, 3)`` bool array."""
    table = np.zeros((16, 3, 3), dtype=bool)
    for index, rows in _PATCH_ROWS.items():
        table[index] = [[ch == "1" for ch in row] for row in rows.split("/")]
    return table


_TABLE = patch_table()


def threshold_plane(src, t: int) -> ThresholdLayer:
    if not 0 <= t < LEVELS:
        raise ValueError(f"threshold level {t} outside [0, 255]")
    return ThresholdLayer(as_plane(src) > t, t)


def decompose(src) -> list[ThresholdLayer]:
    src = as_plane(src)
    return [ThresholdLayer(src > t, t) for t in range(LEVELS)]


def interpolate_layer(layer: ThresholdLayer) -> ThresholdLayer:
    """Enlarge a binary layer to ``(2h-1) x (2w-1)`` by 2x2 patch lookup."""
    bits = layer.bits
    h, w = bits.shape
    # A single row or column has no 2x2 patches; duplicating it gives patches
    # whose shared edge row/column depends on the original samples only.
    work = bits
    if h == 1:
        work = np.vstack([work, work])
    if w == 1:
        work = np.hstack([work, work])
    wh, ww = work.shape

    idx = (
        (work[:-1, :-1].astype(np.uint8) << 3)
        | (work[:-1, 1:].astype(np.uint8) << 2)
        | (work[1:, :-1].astype(np.uint8) << 1)
        | work[1:, 1:].astype(np.uint8)
    )
    patches = _TABLE[idx]  # (wh-1, ww-1, 3, 3)
    out = np.zeros((2 * wh - 1, 2 * ww - 1), dtype=bool)
    for dy in range(3):
        for dx in range(3):
            out[dy:dy + 2 * wh - 2:2, dx:dx + 2 * ww - 2:2] = patches[:, :, dy, dx]
    if __debug__:
        # neighbouring patches overlap on their border row/column; they must agree
        for dy in range(3):
            for dx in range(3):
                seen = out[dy:dy + 2 * wh - 2:2, dx:dx + 2 * ww - 2:2]
                assert np.array_equal(seen, patches[:, :, dy, dx]), "patch overlap disagreement"
    return ThresholdLayer(out[: 2 * h - 1, : 2 * w - 1].copy(), layer.level)


def aggregate(layers: Sequence[ThresholdLayer]) -> np.ndarray:
    """Sum one layer per level back into a uint8 plane."""
    if len(layers) != LEVELS:
        raise ValueError(f"expected {LEVELS} layers, got {len(layers)}")
    levels = sorted(layer.level for layer in layers)
    if levels != list(range(LEVELS)):
        raise ValueError("layers must cover levels 0..255 exactly once")
    shape = layers[0].bits.shape
    if any(layer.bits.shape != shape for layer in layers):
        raise ShapeError("all layers must share dimensions")
    total = np.zeros(shape, dtype=np.int32)
    for layer in layers:
        total += layer.bits
    if total.max() > 255:
        raise ValueError("layer sum exceeds 255; layers are not nested")
    return as_plane(total.astype(np.uint8))


def oracle_zoom(src) -> np.ndarray:
    """Decompose, enlarge every layer, aggregate."""
    return aggregate([interpolate_layer(layer) for layer in decompose(src)])
