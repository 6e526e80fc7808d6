"""Classical 2x zooms onto the same anchored ``(2w-1) x (2h-1)`` lattice.

All kernels keep source samples at even coordinates and use integer
arithmetic with round-half-away-from-zero, so results are bit-reproducible.
"""
from __future__ import annotations

import enum

import numpy as np

from . import core
from .counting import PLAIN, Arith
from .image import Image, as_plane, merge_channels, split_channels


class Method(enum.Enum):
    NEAREST_NEIGHBOR = "nn"
    BILINEAR = "bilinear"
    BICUBIC = "bicubic"
    INTELLIGENT_PIXEL_REPLICATION = "ipr"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Method.NEAREST_NEIGHBOR: "Nearest Neighbor",
    Method.BILINEAR: "Bilinear",
    Method.BICUBIC: "Bicubic",
    Method.INTELLIGENT_PIXEL_REPLICATION: "Intelligent Pixel Replication",
}


def zoom_nn(src, *, arith: Arith = PLAIN) -> np.ndarray:
    """Pixel replication: ``dst[y', x'] = src[y' // 2, x' // 2]``."""
    src = as_plane(src)
    out = np.repeat(np.repeat(src, 2, axis=0)[:-1], 2, axis=1)[:, :-1]
    out.flags.writeable = False
    return out


def zoom_bilinear(src, *, arith: Arith = PLAIN) -> np.ndarray:
    """Rounded 2-neighbour means on edges, rounded 4-neighbour mean at centres."""
    src = as_plane(src)
    ar = arith
    h, w = src.shape
    s = src.astype(np.int32)
    dst = np.empty(core.zoomed_shape(h, w), dtype=np.uint8)
    dst[::2, ::2] = src
    if w > 1:
        horiz = ar.add(s[:, :-1], s[:, 1:])
        dst[::2, 1::2] = ar.div_round_nonneg(horiz, 2)
    if h > 1:
        dst[1::2, ::2] = ar.div_round_nonneg(ar.add(s[:-1], s[1:]), 2)
    if h > 1 and w > 1:
        quad = ar.add(horiz[:-1], horiz[1:])
        dst[1::2, 1::2] = ar.div_round_nonneg(quad, 4)
    dst.flags.writeable = False
    return dst


def _half_taps(s: np.ndarray, axis: int, ar: Arith) -> np.ndarray:
    # 16x the Catmull-Rom value halfway between samples i and i+1 along axis:
    # 9*(s[i] + s[i+1]) - (s[i-1] + s[i+2]), indices clamped to the edge.
    s = np.moveaxis(s, axis, -1)
    n = s.shape[-1]
    i = np.arange(n - 1)
    inner = ar.add(s[..., i], s[..., i + 1])
    outer = ar.add(s[..., np.maximum(i - 1, 0)], s[..., np.minimum(i + 2, n - 1)])
    return np.moveaxis(ar.sub(ar.mul(inner, 9), outer), -1, axis)


def zoom_bicubic(src, *, arith: Arith = PLAIN) -> np.ndarray:
    """Separable Catmull-Rom cubic convolution at half-sample offsets.

    Weights ``(-1, 9, 9, -1) / 16`` per axis, clamp-to-edge borders; each
    interpolated sample is rounded half away from zero, then clamped to
    [0, 255].
    """
    src = as_plane(src)
    ar = arith
    h, w = src.shape
    s = src.astype(np.int32)
    dst = np.empty(core.zoomed_shape(h, w), dtype=np.uint8)
    dst[::2, ::2] = src
    if w > 1:
        dst[::2, 1::2] = ar.clamp(ar.div_round(_half_taps(s, 1, ar), 16), 0, 255)
    if h > 1:
        vert = _half_taps(s, 0, ar)
        dst[1::2, ::2] = ar.clamp(ar.div_round(vert, 16), 0, 255)
        if w > 1:
            both = _half_taps(vert, 1, ar)
            dst[1::2, 1::2] = ar.clamp(ar.div_round(both, 256), 0, 255)
    dst.flags.writeable = False
    return dst


def zoom_ipr(src, *, arith: Arith = PLAIN) -> np.ndarray:
    return core.zoom_plane_once(src, arith=arith)


KERNELS = {
    Method.NEAREST_NEIGHBOR: zoom_nn,
    Method.BILINEAR: zoom_bilinear,
    Method.BICUBIC: zoom_bicubic,
    Method.INTELLIGENT_PIXEL_REPLICATION: zoom_ipr,
}


def zoom_plane(method: Method, src, *, arith: Arith = PLAIN) -> np.ndarray:
    return KERNELS[Method(method)](src, arith=arith)


def zoom_image(method: Method, src: Image, k: int = 1) -> Image:
    """Zoom every channel of ``src`` by ``2**k`` with ``method``."""
    if k < 0:
        raise ValueError(f"zoom exponent must be >= 0, got {k}")
    kernel = KERNELS[Method(method)]
    planes = split_channels(src)
    for _ in range(k):
        planes = [kernel(p) for p in planes]
    return merge_channels(planes)
