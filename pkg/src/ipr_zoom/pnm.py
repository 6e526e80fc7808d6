"""Bit-exact netpbm codec for 8-bit P2/P3/P5/P6 streams."""
from __future__ import annotations

import enum
from pathlib import Path

import numpy as np

from .image import Image, ShapeError

_WHITESPACE = b" \t\n\r\v\f"


class PnmError(ValueError):
    """Malformed netpbm stream. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PnmFormat(enum.Enum):
    P2 = "P2"
    P3 = "P3"
    P5 = "P5"
    P6 = "P6"

    @property
    def channels(self) -> int:
        return 1 if self in (PnmFormat.P2, PnmFormat.P5) else 3

    @property
    def binary(self) -> bool:
        return self in (PnmFormat.P5, PnmFormat.P6)

    @classmethod
    def for_image(cls, img: Image, ascii: bool = False) -> "PnmFormat":
        if img.is_gray:
            return cls.P2 if ascii else cls.P5
        return cls.P3 if ascii else cls.P6


class _Cursor:
    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def skip_space(self, comments: bool):
        data, n = self.data, len(self.data)
        while self.pos < n:
            ch = data[self.pos]
            if ch in _WHITESPACE:
                self.pos += 1
            elif comments and ch == 0x23:  # '#'
                while self.pos < n and data[self.pos] not in b"\r\n":
                    self.pos += 1
            else:
                break

    def integer(self, what: str, comments: bool) -> int:
        self.skip_space(comments)
        start = self.pos
        data, n = self.data, len(self.data)
        while self.pos < n and 0x30 <= data[self.pos] <= 0x39:
            self.pos += 1
        if self.pos == start:
            if start >= n:
                raise PnmError(f"truncated stream: expected {what}", start)
            raise PnmError(f"expected {what}, found byte {data[start]!r}", start)
        if self.pos < n and data[self.pos] not in _WHITESPACE and data[self.pos] != 0x23:
            raise PnmError(f"malformed {what}", self.pos)
        return int(data[start:self.pos])


def read_pnm(data: bytes) -> Image:
    """Decode a P2/P3/P5/P6 stream.

    Samples are returned exactly as stored; a maxval below 255 does not
    rescale them. Bytes after the raster are ignored.
    """
    data = bytes(data)
    magic = data[:2]
    try:
        fmt = PnmFormat(magic.decode("ascii"))
    except (UnicodeDecodeError, ValueError):
        raise PnmError(f"unsupported magic number {magic!r}", 0) from None
    cur = _Cursor(data, 2)
    if cur.pos < len(data) and data[cur.pos] not in _WHITESPACE and data[cur.pos] != 0x23:
        raise PnmError(f"unsupported magic number {data[:3]!r}", 0)

    width = cur.integer("width", comments=True)
    height = cur.integer("height", comments=True)
    if width < 1 or height < 1:
        raise PnmError(f"image dimensions must be positive, got {width}x{height}", cur.pos)
    maxval_at = cur.pos
    maxval = cur.integer("maxval", comments=True)
    if not 1 <= maxval <= 255:
        raise PnmError(f"maxval {maxval} outside [1, 255]", maxval_at)

    count = width * height * fmt.channels
    if fmt.binary:
        if cur.pos >= len(data):
            raise PnmError("truncated stream: missing raster", cur.pos)
        if data[cur.pos] not in _WHITESPACE:
            raise PnmError("expected single whitespace before raster", cur.pos)
        start = cur.pos + 1  # exactly one whitespace byte separates header and raster
        raw = data[start:start + count]
        if len(raw) < count:
            raise PnmError(
                f"truncated raster: {len(raw)} of {count} samples present", start + len(raw)
            )
        samples = np.frombuffer(raw, dtype=np.uint8)
        if maxval < 255 and samples.max(initial=0) > maxval:
            bad = int(np.argmax(samples > maxval))
            raise PnmError(f"sample {samples[bad]} exceeds maxval {maxval}", start + bad)
    else:
        samples = np.empty(count, dtype=np.uint8)
        cur.skip_space(comments=True)  # still header territory
        for i in range(count):
            cur.skip_space(comments=False)
            at = cur.pos
            if at >= len(data):
                raise PnmError(f"truncated raster: {i} of {count} samples present", at)
            value = cur.integer("sample", comments=False)
            if value > maxval:
                raise PnmError(f"sample {value} exceeds maxval {maxval}", at)
            samples[i] = value

    arr = samples.reshape(height, width, fmt.channels)
    if fmt.channels == 1:
        return Image.from_array(arr[..., 0])
    return Image.from_array(arr)


def write_pnm(img: Image, fmt: PnmFormat) -> bytes:
    """Canonical emission: ``magic\\n<w> <h>\\n255\\n`` then the raster.

    ASCII formats put one image row per line with single spaces.
    """
    fmt = PnmFormat(fmt)
    if fmt.channels != len(img.planes):
        raise ShapeError(
            f"{fmt.value} needs {fmt.channels} plane(s), image has {len(img.planes)}"
        )
    header = f"{fmt.value}\n{img.width} {img.height}\n255\n".encode("ascii")
    arr = img.to_array().reshape(img.height, img.width * fmt.channels)
    if fmt.binary:
        return header + np.ascontiguousarray(arr, dtype=np.uint8).tobytes()
    rows = (" ".join(map(str, row.tolist())) for row in arr)
    return header + "".join(r + "\n" for r in rows).encode("ascii")


def load(path) -> Image:
    return read_pnm(Path(path).read_bytes())


def save(img: Image, path, fmt: PnmFormat | None = None) -> None:
    Path(path).write_bytes(write_pnm(img, fmt or PnmFormat.for_image(img)))
