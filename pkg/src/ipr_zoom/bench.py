"""Zoom-quality experiment: decimate ground truth, zoom back, score, count, time."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Iterable

from . import pnm
from .baselines import Method, zoom_image
from .image import Image, ShapeError, crop
from .metrics import PAPER_OPS_PER_PIXEL, count_ops, psnr, time_zoom

CSV_COLUMNS = (
    "image", "method", "in_w", "in_h", "out_w", "out_h", "mse", "psnr_db",
    "adds_pp", "muls_pp", "cmps_pp", "ns_per_pixel",
)
PNM_SUFFIXES = {".pgm", ".ppm", ".pnm"}


class BenchError(Exception):
    pass


@dataclass(frozen=True)
class BenchRow:
    image_name: str
    method: Method
    in_dims: tuple[int, int]   # (width, height)
    out_dims: tuple[int, int]
    mse: float
    psnr_db: float
    adds_pp: float
    muls_pp: float
    cmps_pp: float
    ns_per_pixel: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)
    k: int = 1
    repetitions: int = 1
    corpus: str = ""
    timestamp: str = ""

    def mean_psnr(self) -> dict[Method, float]:
        """Mean PSNR in dB per method, over rows with finite PSNR."""
        out = {}
        for m in Method:
            vals = [r.psnr_db for r in self.rows if r.method is m and math.isfinite(r.psnr_db)]
            if vals:
                out[m] = sum(vals) / len(vals)
        return out


def bundled_corpus() -> Path:
    return Path(str(resources.files("ipr_zoom") / "data" / "corpus"))


def decimate(ground_truth: Image, k: int = 1) -> tuple[Image, Image]:
    """Return ``(low, reference)`` for a ``2**k`` zoom experiment.

    ``reference`` is the largest top-left crop of size ``(n-1)*2**k + 1`` per
    axis; ``low`` keeps every ``2**k``-th sample of it, so zooming ``low``
    by ``2**k`` lands exactly on the reference grid.
    """
    if k < 1:
        raise ValueError("decimation needs k >= 1")
    step = 2**k
    if ground_truth.width < step + 1 or ground_truth.height < step + 1:
        raise ShapeError(
            f"ground truth {ground_truth.width}x{ground_truth.height} too small for factor {step}"
        )
    lw = (ground_truth.width - 1) // step + 1
    lh = (ground_truth.height - 1) // step + 1
    reference = crop(ground_truth, 0, 0, (lw - 1) * step + 1, (lh - 1) * step + 1)
    low = Image(tuple(p[::step, ::step] for p in reference.planes))
    return low, reference


def corpus_files(corpus_dir) -> list[Path]:
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise BenchError(f"corpus directory {corpus_dir} does not exist")
    files = sorted(
        (p for p in corpus_dir.iterdir() if p.suffix.lower() in PNM_SUFFIXES and p.is_file()),
        key=lambda p: p.name,
    )
    if not files:
        raise BenchError(f"no PNM files in {corpus_dir}")
    return files


def bench_image(name: str, gt: Image, methods: Iterable[Method], k: int, repetitions: int):
    low, reference = decimate(gt, k)
    rows = []
    for method in methods:
        zoomed = zoom_image(method, low, k)
        score = psnr(zoomed, reference)
        adds, muls, cmps = count_ops(method, low, k).per_pixel()
        timing = time_zoom(method, low, repetitions, k)
        rows.append(BenchRow(
            name, method, (low.width, low.height), (zoomed.width, zoomed.height),
            score.mse, score.psnr_db, adds, muls, cmps, timing.ns_per_pixel,
        ))
    return rows


def run_corpus(corpus_dir, methods=None, k: int = 1, repetitions: int = 5) -> BenchReport:
    """Benchmark every PNM file in ``corpus_dir``.

    A file that fails to load or decimate is recorded in ``report.errors``
    and skipped. Rows come out sorted by image name, then method.
    """
    methods = [m for m in Method if methods is None or m in set(methods)]
    report = BenchReport(
        k=k, repetitions=repetitions, corpus=str(corpus_dir),
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
    for path in corpus_files(corpus_dir):
        try:
            gt = pnm.load(path)
            report.rows.extend(bench_image(path.name, gt, methods, k, repetitions))
        except (OSError, ValueError) as exc:
            report.errors.append((path.name, str(exc)))
    return report


def _fmt(x: float, digits: int) -> str:
    return "inf" if math.isinf(x) else f"{x:.{digits}f}"


def _row_fields(r: BenchRow) -> list[str]:
    return [
        r.image_name, r.method.value,
        str(r.in_dims[0]), str(r.in_dims[1]), str(r.out_dims[0]), str(r.out_dims[1]),
        _fmt(r.mse, 6), _fmt(r.psnr_db, 4),
        _fmt(r.adds_pp, 4), _fmt(r.muls_pp, 4), _fmt(r.cmps_pp, 4),
        _fmt(r.ns_per_pixel, 3),
    ]


def emit_csv(report: BenchReport) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow(_row_fields(r))
    return buf.getvalue().encode("utf-8")


def parse_csv(data: bytes) -> list[BenchRow]:
    reader = csv.DictReader(io.StringIO(data.decode("utf-8")))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [
        BenchRow(
            d["image"], Method(d["method"]),
            (int(d["in_w"]), int(d["in_h"])), (int(d["out_w"]), int(d["out_h"])),
            float(d["mse"]), float(d["psnr_db"]),
            float(d["adds_pp"]), float(d["muls_pp"]), float(d["cmps_pp"]),
            float(d["ns_per_pixel"]),
        )
        for d in reader
    ]


def emit_markdown(report: BenchReport) -> bytes:
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
    lines += ["| " + " | ".join(_row_fields(r)) + " |" for r in report.rows]

    means = report.mean_psnr()
    if means:
        lines += ["", "Mean PSNR (dB) by method:", ""]
        lines += [f"- {m.label}: {v:.2f}" for m, v in means.items()]

    measured = {}
    for m in Method:
        rows = [r for r in report.rows if r.method is m]
        if rows:
            n = len(rows)
            measured[m] = tuple(sum(getattr(r, a) for r in rows) / n
                                for a in ("adds_pp", "muls_pp", "cmps_pp"))
    lines += [
        "", "Operations per interpolated pixel, measured on sample values vs published reference:",
        "", "| method | adds (measured) | muls (measured) | cmps (measured) "
        "| adds (reference) | muls (reference) |", "|---|---|---|---|---|---|",
    ]
    for m in Method:
        ref_add, ref_mul = PAPER_OPS_PER_PIXEL[m]
        if m in measured:
            a, mu, c = measured[m]
            lines.append(f"| {m.label} | {a:.2f} | {mu:.2f} | {c:.2f} | {ref_add} | {ref_mul} |")
        else:
            lines.append(f"| {m.label} | - | - | - | {ref_add} | {ref_mul} |")
    lines += [
        "",
        "Measured counts include only arithmetic on sample values; index arithmetic "
        "is not counted. Divisions count as multiplications, subtractions as additions, "
        "and rounding/clamping tests as comparisons. Reference figures ignore comparisons.",
    ]
    if report.errors:
        lines += ["", "Skipped files:", ""]
        lines += [f"- {name}: {msg}" for name, msg in report.errors]
    lines += [
        "",
        f"corpus: {report.corpus}; factor: {2**report.k}; repetitions: {report.repetitions}; "
        f"generated: {report.timestamp}",
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_report(report: BenchReport, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        return emit_csv(report)
    if fmt in ("md", "markdown"):
        return emit_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")


__all__ = [
    "BenchError", "BenchReport", "BenchRow", "CSV_COLUMNS", "bundled_corpus",
    "decimate", "emit_csv", "emit_markdown", "emit_report", "parse_csv", "run_corpus",
]
