"""Intelligent pixel replication: the closed-form 2x zoom.

For a source pixel ``p`` with right neighbour ``q``, lower neighbour ``r`` and
diagonal neighbour ``s`` the output lattice of size ``(2w-1) x (2h-1)`` gets::

    dst[2y,   2x]   = p
    dst[2y,   2x+1] = min(p, q)
    dst[2y+1, 2x]   = min(p, r)
    dst[2y+1, 2x+1] = max(min(p, s), min(q, r))

Only comparisons touch sample values, so the kernel stays in ``uint8``.
This equals thresholding the plane at every level, enlarging each binary
layer with the 16-pattern table and summing the layers (see ``layers``).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .counting import PLAIN, Arith
from .image import Image, as_plane, merge_channels, split_channels


def zoomed_shape(height: int, width: int, k: int = 1) -> tuple[int, int]:
    """Output ``(height, width)`` after ``k`` successive doublings."""
    if k < 0:
        raise ValueError(f"zoom exponent must be >= 0, got {k}")
    return ((height - 1) * 2**k + 1, (width - 1) * 2**k + 1)


def _fill_rows(src: np.ndarray, dst: np.ndarray, y0: int, y1: int, ar: Arith) -> None:
    # Writes the output rows owned by source rows [y0, y1): row 2y always,
    # row 2y+1 when y has a lower neighbour. Bands never share output rows.
    h = src.shape[0]
    rows = src[y0:y1]
    dst[2 * y0:2 * y1:2, ::2] = rows
    if src.shape[1] > 1:
        ar.minimum(rows[:, :-1], rows[:, 1:], out=dst[2 * y0:2 * y1:2, 1::2])
    yb = min(y1, h - 1)
    if yb <= y0:
        return
    top, bottom = src[y0:yb], src[y0 + 1:yb + 1]
    ar.minimum(top, bottom, out=dst[2 * y0 + 1:2 * yb:2, ::2])
    if src.shape[1] > 1:
        center = dst[2 * y0 + 1:2 * yb:2, 1::2]
        ar.minimum(top[:, :-1], bottom[:, 1:], out=center)
        anti = ar.minimum(top[:, 1:], bottom[:, :-1])
        ar.maximum(center, anti, out=center)


def zoom_plane_once(src, *, arith: Arith = PLAIN, workers: int = 1) -> np.ndarray:
    """Zoom one plane to ``(2h-1) x (2w-1)`` in a single pass.

    ``workers > 1`` splits the source rows into bands filled concurrently;
    the result is identical to the sequential fill.
    """
    src = as_plane(src)
    h, w = src.shape
    dst = np.empty(zoomed_shape(h, w), dtype=np.uint8)
    if workers <= 1 or h < 2 * workers:
        _fill_rows(src, dst, 0, h, arith)
    else:
        bounds = np.linspace(0, h, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_fill_rows, src, dst, int(a), int(b), arith)
                for a, b in zip(bounds[:-1], bounds[1:])
                if b > a
            ]
            for f in futures:
                f.result()
    dst.flags.writeable = False
    return dst


def zoom_image(src: Image, k: int = 1, **kwargs) -> Image:
    """Apply :func:`zoom_plane_once` ``k`` times to each channel independently."""
    if k < 0:
        raise ValueError(f"zoom exponent must be >= 0, got {k}")
    planes = split_channels(src)
    for _ in range(k):
        planes = [zoom_plane_once(p, **kwargs) for p in planes]
    return merge_channels(planes)
