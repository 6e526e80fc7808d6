"""Regenerate the bundled benchmark corpus under src/ipr_zoom/data/corpus.

Development-only: needs scikit-image and Pillow, which the package itself
does not import. Every image is a centre crop of at most 256x256 (no
resampling), written as binary PGM/PPM.
"""
import sys
from pathlib import Path

import numpy as np
import skimage.data
from PIL import Image as PILImage, ImageDraw, ImageFont

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from ipr_zoom import pnm  # noqa: E402
from ipr_zoom.image import Image  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "ipr_zoom" / "data" / "corpus"
SIZE = 256

SOURCES = {
    "astronaut": "scikit-image astronaut (NASA), public domain",
    "brick": "scikit-image brick (CC0Textures Bricks25), CC0",
    "camera": "scikit-image camera (Lav Varshney), CC0",
    "chelsea": "scikit-image chelsea (Stefan van der Walt), CC0",
    "coffee": "scikit-image coffee (Rachel Michetti), CC0",
    "text": "scikit-image text, public domain",
    "display": "rendered by tools/make_corpus.py (calculator-style digits), CC0",
}


def centre_crop(arr, size=SIZE):
    h, w = arr.shape[:2]
    th, tw = min(h, size), min(w, size)
    y0, x0 = (h - th) // 2, (w - tw) // 2
    return np.ascontiguousarray(arr[y0:y0 + th, x0:x0 + tw])


def display_image():
    img = PILImage.new("L", (SIZE, SIZE), 210)
    draw = ImageDraw.Draw(img)
    font = ImageFont.load_default(size=34)
    draw.rectangle((12, 14, 244, 74), fill=120, outline=40, width=3)
    draw.text((24, 22), "3.14159265", fill=20, font=font)
    keys = ["7 8 9 /", "4 5 6 x", "1 2 3 -", "0 . = +"]
    for row, label in enumerate(keys):
        for col, ch in enumerate(label.split()):
            x0, y0 = 16 + col * 58, 90 + row * 40
            draw.rounded_rectangle((x0, y0, x0 + 50, y0 + 34), 6, fill=60 + 30 * (col == 3))
            draw.text((x0 + 16, y0 + 2), ch, fill=245, font=font)
    return np.asarray(img)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    arrays = {name: getattr(skimage.data, name)() for name in SOURCES if name != "display"}
    arrays["display"] = display_image()
    for name, arr in arrays.items():
        arr = centre_crop(arr[..., :3] if arr.ndim == 3 else arr).astype(np.uint8)
        img = Image.from_array(arr)
        suffix = ".pgm" if img.is_gray else ".ppm"
        pnm.save(img, OUT / f"{name}{suffix}")
        print(f"{name}{suffix}: {img.width}x{img.height}")
    lines = [f"{n}: {s}" for n, s in sorted(SOURCES.items())]
    (OUT / "SOURCES.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
