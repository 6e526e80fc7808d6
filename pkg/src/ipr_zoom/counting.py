"""Elementwise arithmetic on sample arrays, optionally tallied.

Kernels route every operation on sample *values* through an :class:`Arith`.
The plain instance is a thin layer over numpy; :class:`CountingArith` runs the
identical operations and also counts one operation per produced element.
Index arithmetic (slicing, gathers) never goes through here and is therefore
never counted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class OpCounters:
    additions: int = 0
    multiplications: int = 0
    comparisons: int = 0
    interpolated_pixels: int = 0

    def __iadd__(self, other: "OpCounters"):
        self.additions += other.additions
        self.multiplications += other.multiplications
        self.comparisons += other.comparisons
        self.interpolated_pixels += other.interpolated_pixels
        return self

    def per_pixel(self) -> tuple[float, float, float]:
        """(additions, multiplications, comparisons) per interpolated pixel."""
        n = self.interpolated_pixels
        if n == 0:
            return (0.0, 0.0, 0.0)
        return (self.additions / n, self.multiplications / n, self.comparisons / n)


class Arith:
    """Uncounted sample arithmetic. Subtraction and negation count as additions,
    integer division as a multiplication, and min/max/sign tests as comparisons."""

    def _tally(self, kind: str, result) -> None:
        pass

    def add(self, a, b):
        r = np.add(a, b)
        self._tally("additions", r)
        return r

    def sub(self, a, b):
        r = np.subtract(a, b)
        self._tally("additions", r)
        return r

    def mul(self, a, b):
        r = np.multiply(a, b)
        self._tally("multiplications", r)
        return r

    def minimum(self, a, b, out=None):
        r = np.minimum(a, b, out=out)
        self._tally("comparisons", r)
        return r

    def maximum(self, a, b, out=None):
        r = np.maximum(a, b, out=out)
        self._tally("comparisons", r)
        return r

    def div_round(self, n, d: int):
        """Integer ``n / d`` rounded half away from zero (``d`` > 0)."""
        n = np.asarray(n)
        half = d // 2
        negative = n < 0
        self._tally("comparisons", negative)
        mag = np.abs(n) + half
        self._tally("additions", mag)
        q = mag // d
        self._tally("multiplications", q)
        return np.where(negative, -q, q)

    def div_round_nonneg(self, n, d: int):
        """As :meth:`div_round` for operands known to be non-negative."""
        r = np.add(n, d // 2)
        self._tally("additions", r)
        q = r // d
        self._tally("multiplications", q)
        return q

    def clamp(self, a, lo: int, hi: int):
        r = np.clip(a, lo, hi)
        self._tally("comparisons", r)
        self._tally("comparisons", r)
        return r


class CountingArith(Arith):
    def __init__(self):
        self.counters = OpCounters()

    def _tally(self, kind, result):
        setattr(self.counters, kind, getattr(self.counters, kind) + np.size(result))


PLAIN = Arith()
