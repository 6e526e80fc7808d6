"""Exit criteria for the build, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""
import itertools
import time
from pathlib import Path

import numpy as np
import pytest

from ipr_zoom import pnm
from ipr_zoom.baselines import Method
from ipr_zoom.bench import bundled_corpus, decimate, run_corpus
from ipr_zoom.core import zoom_plane_once
from ipr_zoom.image import Image
from ipr_zoom.layers import aggregate, decompose, interpolate_layer, oracle_zoom, patch_table, threshold_plane
from ipr_zoom.metrics import PAPER_OPS_PER_PIXEL, count_ops, psnr, psnr_from_mse, time_zoom
from ipr_zoom.pnm import PnmFormat, read_pnm, write_pnm

from conftest import ACCEPTANCE_RESULTS

pytestmark = pytest.mark.acceptance

IPR = Method.INTELLIGENT_PIXEL_REPLICATION
SEED = 1234


def record(number, title, ok, detail=""):
    ACCEPTANCE_RESULTS.append((number, title, bool(ok), detail))
    assert ok, f"criterion {number} ({title}) failed: {detail}"


def random_planes(count, max_side, seed=SEED):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        h, w = rng.integers(1, max_side + 1, size=2)
        yield rng.integers(0, 256, (h, w), dtype=np.uint8)


def structured_planes():
    y, x = np.mgrid[0:24, 0:31]
    yield (x * 255 // 30).astype(np.uint8)                 # horizontal ramp
    yield (y * 255 // 23).astype(np.uint8)                 # vertical ramp
    yield ((x + y) * 255 // 53).astype(np.uint8)           # diagonal ramp
    yield (((x + y) % 2) * 255).astype(np.uint8)           # 1-pixel checkerboard
    yield ((((x // 4) + (y // 4)) % 2) * 200 + 20).astype(np.uint8)  # 4-pixel checkerboard
    yield np.zeros((17, 9), np.uint8)
    yield np.full((9, 17), 255, np.uint8)
    yield np.full((1, 1), 128, np.uint8)
    yield (np.arange(64, dtype=np.uint8) * 4).reshape(1, 64)        # 1-row ramp
    yield (((x - 15) ** 2 + (y - 12) ** 2 < 80) * 180 + 40).astype(np.uint8)  # disc


def test_01_oracle_equivalence():
    t0 = time.perf_counter()
    cases = list(random_planes(100, 64)) + list(structured_planes())
    mismatches = sum(not np.array_equal(zoom_plane_once(p), oracle_zoom(p)) for p in cases)
    elapsed = time.perf_counter() - t0
    record(1, "closed form == 256-layer oracle", mismatches == 0 and elapsed < 30,
           f"{len(cases)} planes, {mismatches} mismatches, {elapsed:.1f}s (limit 30s)")


def test_02_reconstruction_identity():
    t0 = time.perf_counter()
    cases = list(random_planes(100, 64, seed=SEED + 1))
    bad = sum(not np.array_equal(aggregate(decompose(p)), p) for p in cases)
    elapsed = time.perf_counter() - t0
    record(2, "aggregate(decompose(src)) == src", bad == 0 and elapsed < 10,
           f"{len(cases)} planes, {bad} failures, {elapsed:.1f}s (limit 10s)")


def test_03_patch_table_consistency():
    table = patch_table()
    bad = 0
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        expected = [[a, a & b, b], [a & c, (a & d) | (b & c), b & d], [c, c & d, d]]
        bad += table[a << 3 | b << 2 | c << 1 | d].astype(int).tolist() != expected
    record(3, "16-entry patch table matches binary rules", bad == 0, f"{16 - bad}/16 entries match")


def test_04_anchor_and_no_new_values():
    bad = 0
    cases = list(random_planes(100, 64, seed=SEED + 2))
    for p in cases:
        out = zoom_plane_once(p)
        bad += not (np.array_equal(out[::2, ::2], p) and np.isin(out, p).all())
    record(4, "anchors preserved, no new values", bad == 0, f"{len(cases)} planes, {bad} failures")


D4 = {
    "fliplr": np.fliplr, "flipud": np.flipud, "transpose": np.transpose,
    "rot90": lambda a: np.rot90(a, 1), "rot180": lambda a: np.rot90(a, 2),
    "rot270": lambda a: np.rot90(a, 3), "antitranspose": lambda a: np.rot90(a, 2).T,
}


def test_05_property_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 3)
    failures = []
    for i in range(12):
        a = rng.integers(0, 256, (32, 32), dtype=np.uint8)
        bump = rng.integers(0, 256, (32, 32), dtype=np.uint8)
        b = np.maximum(a, bump)
        za = zoom_plane_once(a)
        if not (za <= zoom_plane_once(b)).all():
            failures.append(f"monotonicity #{i}")
        lut = np.sort(rng.integers(0, 256, 256)).astype(np.uint8)
        if not np.array_equal(zoom_plane_once(lut[a]), lut[za]):
            failures.append(f"LUT commutation #{i}")
        for name, g in D4.items():
            if not np.array_equal(zoom_plane_once(g(a)), g(za)):
                failures.append(f"D4 {name} #{i}")
        for t in range(256):
            if not np.array_equal(threshold_plane(za, t).bits,
                                  interpolate_layer(threshold_plane(a, t)).bits):
                failures.append(f"threshold commutation t={t} #{i}")
                break
    elapsed = time.perf_counter() - t0
    record(5, "monotonicity, LUT, D4, threshold commutation", not failures and elapsed < 60,
           f"12 planes 32x32, {len(failures)} failures {failures[:3]}, {elapsed:.1f}s (limit 60s)")


@pytest.fixture(scope="module")
def corpus_report():
    t0 = time.perf_counter()
    report = run_corpus(bundled_corpus(), k=1, repetitions=3)
    return report, time.perf_counter() - t0


def test_06_table2_operation_counts(corpus_report):
    report, _ = corpus_report
    ipr_rows = [r for r in report.rows if r.method is IPR]
    files = sorted(p.name for p in bundled_corpus().iterdir() if p.suffix in (".pgm", ".ppm"))
    ok = len(ipr_rows) == len(files) and all(r.adds_pp == 0 and r.muls_pp == 0 for r in ipr_rows)
    # also check directly, independent of the report plumbing
    for name in files:
        low, _ = decimate(pnm.load(bundled_corpus() / name))
        c = count_ops(IPR, low)
        ok &= c.additions == 0 and c.multiplications == 0
    measured = []
    for m in Method:
        rows = [r for r in report.rows if r.method is m]
        adds = sum(r.adds_pp for r in rows) / len(rows)
        muls = sum(r.muls_pp for r in rows) / len(rows)
        cmps = sum(r.cmps_pp for r in rows) / len(rows)
        ref = PAPER_OPS_PER_PIXEL[m]
        measured.append(f"{m.value} {adds:.2f}/{muls:.2f}/{cmps:.2f} (ref {ref[0]}/{ref[1]})")
    record(6, "IPR uses 0 additions, 0 multiplications", ok,
           f"{len(ipr_rows)} corpus images; add/mul/cmp per pixel: " + "; ".join(measured))


def test_07_table1_psnr_ordering(corpus_report):
    report, elapsed = corpus_report
    means = report.mean_psnr()
    nn, bl, bc, ipr = (means[m] for m in (Method.NEAREST_NEIGHBOR, Method.BILINEAR,
                                           Method.BICUBIC, IPR))
    gap = bc - ipr
    ok = nn < bl < ipr and 0 <= gap <= 3 and elapsed < 120
    record(7, "mean PSNR NN < bilinear < IPR, IPR within 3 dB below bicubic", ok,
           f"NN {nn:.2f}, bilinear {bl:.2f}, IPR {ipr:.2f}, bicubic {bc:.2f} dB; "
           f"bicubic-IPR gap {gap:.2f} dB; {len(report.rows)} rows in {elapsed:.1f}s")


def test_08_psnr_spot_checks():
    a = np.arange(12, dtype=np.uint8).reshape(3, 4)
    same = psnr(a, a).psnr_db
    p1, p256 = psnr_from_mse(1.0), psnr_from_mse(256.0)
    ok = same == float("inf") and abs(p1 - 48.13) <= 0.01 and abs(p256 - 24.05) <= 0.01
    record(8, "PSNR formula spot checks", ok,
           f"identical -> {same}, mse 1 -> {p1:.4f} dB, mse 256 -> {p256:.4f} dB")


@pytest.mark.timing
def test_09_performance_ordering():
    rng = np.random.default_rng(SEED + 4)
    src = rng.integers(0, 256, (512, 512), dtype=np.uint8)
    ns = {m: time_zoom(m, src, 9).ns_per_pixel for m in Method}
    nn, bl, bc, ipr = (ns[m] for m in (Method.NEAREST_NEIGHBOR, Method.BILINEAR, Method.BICUBIC, IPR))
    small = time_zoom(IPR, rng.integers(0, 256, (256, 256), dtype=np.uint8), 9).total_ns
    large = time_zoom(IPR, rng.integers(0, 256, (1024, 1024), dtype=np.uint8), 9).total_ns
    ratio = large / small
    expected = ((2047 * 2047) / (511 * 511))  # output-pixel ratio, ~16
    ok = ipr < bl < bc and ipr <= 3 * nn and expected / 2 <= ratio <= expected * 2
    record(9, "IPR < bilinear < bicubic, IPR <= 3x NN, linear scaling", ok,
           f"ns/px at 512^2: ipr {ipr:.2f}, nn {nn:.2f}, bilinear {bl:.2f}, bicubic {bc:.2f}; "
           f"1024^2/256^2 time ratio {ratio:.1f} (band {expected / 2:.1f}..{expected * 2:.1f})")


GOLDEN = Path(__file__).parent / "golden"


def test_10_codec_golden_files():
    gray = Image.from_array(np.array([[0, 1, 2], [253, 254, 255]], np.uint8))
    rgb = Image.from_array(np.array([[[255, 0, 0], [0, 255, 0]], [[0, 0, 255], [7, 8, 9]]], np.uint8))
    cases = [(gray, PnmFormat.P2, "gray3x2_p2.pgm"), (gray, PnmFormat.P5, "gray3x2_p5.pgm"),
             (rgb, PnmFormat.P3, "rgb2x2_p3.ppm"), (rgb, PnmFormat.P6, "rgb2x2_p6.ppm")]
    golden_ok = sum(write_pnm(img, fmt) == (GOLDEN / name).read_bytes() for img, fmt, name in cases)
    rng = np.random.default_rng(SEED + 5)
    trips = 0
    for i in range(40):
        shape = tuple(rng.integers(1, 20, 2)) + ((3,) if i % 2 else ())
        img = Image.from_array(rng.integers(0, 256, shape, dtype=np.uint8))
        fmts = (PnmFormat.P3, PnmFormat.P6) if i % 2 else (PnmFormat.P2, PnmFormat.P5)
        trips += all(read_pnm(write_pnm(img, f)) == img for f in fmts)
    record(10, "codec golden files and round trip", golden_ok == 4 and trips == 40,
           f"{golden_ok}/4 golden files byte-exact, {trips}/40 random round trips")
