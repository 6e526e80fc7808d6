"""Command-line entry point: ``ipr-zoom {zoom,decompose,compare,bench}``.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 shape or
contract violation.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import bench, layers, pnm
from .baselines import Method, zoom_image
from .image import Image, ShapeError
from .metrics import psnr

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CONTRACT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def factor_exponent(text: str) -> int:
    """Parse a zoom factor ``2**k`` (k >= 1) and return ``k``."""
    try:
        factor = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"factor must be an integer, got {text!r}") from None
    if factor < 2 or factor & (factor - 1):
        raise argparse.ArgumentTypeError(f"factor must be a power of two >= 2, got {factor}")
    return factor.bit_length() - 1


def _level(text: str) -> int:
    value = int(text)
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(f"level must be in 0..255, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ipr-zoom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    z = sub.add_parser("zoom", help="zoom a PNM image by a power of two")
    z.add_argument("--method", choices=[m.value for m in Method], default="ipr")
    z.add_argument("--factor", type=factor_exponent, default=1, metavar="2^k",
                   help="zoom factor, a power of two >= 2 (default 2)")
    z.add_argument("--ascii", action="store_true", help="write P2/P3 instead of P5/P6")
    z.add_argument("input", type=Path)
    z.add_argument("output", type=Path)

    d = sub.add_parser("decompose", help="write one threshold layer as a 0/255 P5 image")
    d.add_argument("--level", type=_level, required=True)
    d.add_argument("--interpolated", action="store_true",
                   help="enlarge the binary layer 2x before writing")
    d.add_argument("input", type=Path)
    d.add_argument("output", type=Path)

    c = sub.add_parser("compare", help="print MSE and PSNR between two images")
    c.add_argument("reference", type=Path)
    c.add_argument("test", type=Path)

    b = sub.add_parser("bench", help="run the decimate/zoom/score benchmark over a corpus")
    b.add_argument("--corpus", type=Path, default=None,
                   help="directory of PNM images (default: bundled corpus)")
    b.add_argument("--factor", type=factor_exponent, default=1, metavar="2^k")
    b.add_argument("--reps", type=_positive, default=5)
    b.add_argument("--format", choices=["csv", "md"], default="csv")
    b.add_argument("--out", type=Path, default=None)
    return parser


def cmd_zoom(args) -> int:
    img = pnm.load(args.input)
    out = zoom_image(Method(args.method), img, args.factor)
    pnm.save(out, args.output, pnm.PnmFormat.for_image(out, ascii=args.ascii))
    return EXIT_OK


def cmd_decompose(args) -> int:
    img = pnm.load(args.input)
    if not img.is_gray:
        raise ShapeError("decompose expects a grayscale image")
    layer = layers.threshold_plane(img.planes[0], args.level)
    if args.interpolated:
        layer = layers.interpolate_layer(layer)
    out = Image((np.where(layer.bits, 255, 0).astype(np.uint8),))
    pnm.save(out, args.output, pnm.PnmFormat.P5)
    return EXIT_OK


def cmd_compare(args) -> int:
    score = psnr(pnm.load(args.reference), pnm.load(args.test))
    db = "inf" if math.isinf(score.psnr_db) else f"{score.psnr_db:.4f}"
    print(f"mse={score.mse:.6f} psnr_db={db}")
    return EXIT_OK


def cmd_bench(args) -> int:
    corpus = args.corpus if args.corpus is not None else bench.bundled_corpus()
    report = bench.run_corpus(corpus, k=args.factor, repetitions=args.reps)
    for name, msg in report.errors:
        print(f"warning: skipped {name}: {msg}", file=sys.stderr)
    data = bench.emit_report(report, args.format)
    if args.out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        args.out.write_bytes(data)
    return EXIT_OK


COMMANDS = {
    "zoom": cmd_zoom,
    "decompose": cmd_decompose,
    "compare": cmd_compare,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (pnm.PnmError, OSError, bench.BenchError) as exc:
        print(f"ipr-zoom: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ShapeError, ValueError) as exc:
        print(f"ipr-zoom: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
