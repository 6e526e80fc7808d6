"""Reconstruction quality, per-pixel operation counts and wall-clock timing."""
from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .baselines import KERNELS, Method
from .counting import CountingArith, OpCounters
from .core import zoom_plane_once
from .image import Image, ShapeError, as_plane

__all__ = [
    "OpCounters",
    "QualityScore",
    "TimingSample",
    "PAPER_OPS_PER_PIXEL",
    "mse",
    "psnr",
    "psnr_from_mse",
    "count_ops",
    "time_zoom",
]

# (additions, multiplications) per pixel as published for a straightforward
# implementation of each method; comparisons were not reported.
PAPER_OPS_PER_PIXEL = {
    Method.NEAREST_NEIGHBOR: (2, 0),
    Method.BILINEAR: (16, 18),
    Method.BICUBIC: (22, 29),
    Method.INTELLIGENT_PIXEL_REPLICATION: (0, 0),
}


@dataclass(frozen=True)
class QualityScore:
    mse: float
    psnr_db: float  # math.inf when mse == 0


@dataclass(frozen=True)
class TimingSample:
    total_ns: int
    output_pixels: int

    @property
    def ns_per_pixel(self) -> float:
        return self.total_ns / self.output_pixels


def _as_image(x) -> Image:
    return x if isinstance(x, Image) else Image((as_plane(x),))


def mse(a, b) -> float:
    """Mean squared sample difference over every plane and pixel.

    Accepts :class:`Image` objects or bare planes. Summation is exact in
    int64 before the single division.
    """
    a, b = _as_image(a), _as_image(b)
    if len(a.planes) != len(b.planes) or (a.width, a.height) != (b.width, b.height):
        raise ShapeError(f"cannot compare {a!r} with {b!r}")
    total = 0
    count = 0
    for pa, pb in zip(a.planes, b.planes):
        d = pa.astype(np.int64) - pb.astype(np.int64)
        total += int(np.dot(d.ravel(), d.ravel()))
        count += d.size
    return total / count


def psnr_from_mse(value: float) -> float:
    # 10*log10(peak^2 / mse), i.e. 20*log10(peak / rmse)
    if value == 0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / value)


def psnr(a, b) -> QualityScore:
    m = mse(a, b)
    return QualityScore(m, psnr_from_mse(m))


def _planes(src) -> list[np.ndarray]:
    return list(src.planes) if isinstance(src, Image) else [as_plane(src)]


def count_ops(method: Method, src, k: int = 1) -> OpCounters:
    """Run ``k`` passes of ``method`` through the tallying arithmetic path.

    ``src`` is a plane or an :class:`Image` (channels are summed). Only
    operations on sample values are counted; copied anchor samples are
    excluded from ``interpolated_pixels``.
    """
    kernel = KERNELS[Method(method)]
    total = OpCounters()
    for plane in _planes(src):
        ar = CountingArith()
        out = plane
        for _ in range(k):
            out = kernel(out, arith=ar)
        ar.counters.interpolated_pixels = out.size - plane.size
        total += ar.counters
    return total


def time_zoom(
    method: Method, src, repetitions: int = 5, k: int = 1, *, parallel: int = 1
) -> TimingSample:
    """Median wall time of ``repetitions`` zooms of ``src``, after one warm-up run.

    ``src`` is a plane or an :class:`Image`; for images every channel is
    zoomed inside the timed region and ``output_pixels`` counts spatial
    pixels. ``parallel`` > 1 times the row-banded IPR kernel with that many
    threads (other methods ignore it).
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    planes = _planes(src)
    method = Method(method)
    if method is Method.INTELLIGENT_PIXEL_REPLICATION and parallel > 1:
        def kernel(p):
            return zoom_plane_once(p, workers=parallel)
    else:
        kernel = KERNELS[method]

    def run():
        outs = planes
        for _ in range(k):
            outs = [kernel(p) for p in outs]
        return outs[0]

    out = run()
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        run()
        samples.append(time.perf_counter_ns() - t0)
    return TimingSample(int(statistics.median(samples)), out.size)
