"""Intelligent pixel replication zoom with threshold-decomposition oracle,
interpolation baselines and a PSNR / op-count benchmark."""
from .baselines import Method, zoom_bicubic, zoom_bilinear, zoom_nn
from .core import zoom_image, zoom_plane_once, zoomed_shape
from .image import Image, ShapeError, crop, merge_channels, split_channels
from .layers import aggregate, decompose, interpolate_layer, oracle_zoom, patch_table, threshold_plane
from .metrics import count_ops, mse, psnr, time_zoom
from .pnm import PnmError, PnmFormat, read_pnm, write_pnm

__version__ = "0.1.0"
