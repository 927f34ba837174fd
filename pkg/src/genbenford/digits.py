"""First significant digits and digit histograms.

Integers take an exact decimal path (no floating point), so arbitrarily
large values such as the 100th Bell number keep their true leading digit.
Positive reals go through log10 with a guard for values that land a
floating-point hair below an exact power of ten.
"""
from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "DigitHistogram",
    "first_digit_int",
    "first_digit_real",
    "histogram",
    "histogram_from_percentages",
]

# log10(d) for d = 1..9: the significand of x has first digit d exactly when
# frac(log10 x) lies in [log10 d, log10 (d+1)).
_DIGIT_BOUNDS = [math.log10(d) for d in range(1, 10)]

# Fractions within this distance of a boundary are rounded up onto it.  In
# particular frac >= 1 - eps is treated as an exact power of ten (digit 1):
# log10 of 10**k may evaluate to k - 4e-16*k in floating point.
_BOUNDARY_EPS = 1e-12


def _digit_from_log10_fraction(frac: float) -> int:
    if frac >= 1.0 - _BOUNDARY_EPS:
        return 1
    return bisect_right(_DIGIT_BOUNDS, frac + _BOUNDARY_EPS)


def _digits_from_log10_fractions(frac: np.ndarray) -> np.ndarray:
    """Vectorized twin of :func:`_digit_from_log10_fraction`."""
    d = np.searchsorted(_DIGIT_BOUNDS, frac + _BOUNDARY_EPS, side="right")
    return np.where(frac >= 1.0 - _BOUNDARY_EPS, 1, d)


def first_digit_int(n) -> int:
    """Leading decimal digit of a positive integer, computed exactly."""
    if not isinstance(n, Integral):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    return int(str(int(n))[0])


def first_digit_real(x: float) -> int:
    """Leading decimal digit of a positive real.

    Computed as floor(10**frac(log10 x)) via boundary comparison in log
    space; values within 1e-12 of an exact power of ten report digit 1.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"expected a finite positive real, got {x}")
    return _digit_from_log10_fraction(math.log10(x) % 1.0)


@dataclass(frozen=True)
class DigitHistogram:
    """Observed counts of first digits 1..9 for a dataset."""

    counts: tuple
    sample_size: int

    def __post_init__(self):
        if len(self.counts) != 9:
            raise ValueError(f"expected 9 counts, got {len(self.counts)}")
        counts = tuple(int(c) for c in self.counts)
        for c in counts:
            if c < 0:
                raise ValueError(f"negative count {c}")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "sample_size", int(self.sample_size))
        if sum(counts) != self.sample_size:
            raise ValueError(
                f"counts sum to {sum(counts)}, not sample_size={self.sample_size}"
            )

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "DigitHistogram":
        counts = tuple(int(c) for c in counts)
        return cls(counts, sum(counts))

    def frequencies(self) -> np.ndarray:
        if self.sample_size == 0:
            return np.zeros(9)
        return np.asarray(self.counts, dtype=float) / self.sample_size

    def percentages(self) -> np.ndarray:
        return 100.0 * self.frequencies()

    # -- serialization ------------------------------------------------------

    def to_csv(self) -> str:
        """One CSV row holding the 9 counts."""
        return ",".join(str(c) for c in self.counts)

    @classmethod
    def from_csv(cls, line: str) -> "DigitHistogram":
        fields = [f.strip() for f in line.strip().split(",") if f.strip() != ""]
        if len(fields) != 9:
            raise ValueError(f"expected 9 comma-separated counts, got {len(fields)}")
        return cls.from_counts([int(f) for f in fields])

    def to_json_dict(self) -> dict:
        return {"counts": list(self.counts), "n": self.sample_size}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "DigitHistogram":
        h = cls.from_counts(obj["counts"])
        if "n" in obj and int(obj["n"]) != h.sample_size:
            raise ValueError(f"counts sum to {h.sample_size}, not n={obj['n']}")
        return h

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "DigitHistogram":
        return cls.from_json_dict(json.loads(text))


def histogram(digits: Iterable[int]) -> DigitHistogram:
    """Tally a stream of first digits 1..9 into a histogram."""
    counts = [0] * 9
    for d in digits:
        di = int(d)
        if di != d or not 1 <= di <= 9:
            raise ValueError(f"digit out of range 1..9: {d!r}")
        counts[di - 1] += 1
    return DigitHistogram.from_counts(counts)


def histogram_from_percentages(pct: Sequence[float], n: int) -> DigitHistogram:
    """Rebuild integer counts from published per-digit percentages.

    Rounds n*pct/100 per digit, then reconciles the total to exactly n by
    largest-remainder adjustment (ties broken toward the lower digit).
    Inputs that would need to move more than one count per digit are
    rejected as inconsistent.
    """
    if len(pct) != 9:
        raise ValueError(f"expected 9 percentages, got {len(pct)}")
    if any(p < 0 for p in pct):
        raise ValueError("percentages must be non-negative")
    n = int(n)
    if n < 1:
        raise ValueError(f"sample size must be >= 1, got {n}")

    raw = [n * float(p) / 100.0 for p in pct]
    base = [math.floor(r + 0.5) for r in raw]
    deficit = n - sum(base)
    if abs(deficit) > 9:
        raise ValueError(
            f"percentages are inconsistent with n={n}: "
            f"rounded counts are off by {-deficit}"
        )
    counts = list(base)
    if deficit > 0:
        order = sorted(range(9), key=lambda i: (base[i] - raw[i], i))
        for i in order[:deficit]:
            counts[i] += 1
    elif deficit < 0:
        order = sorted(range(9), key=lambda i: (raw[i] - base[i], i))
        for i in order[:-deficit]:
            counts[i] -= 1
            if counts[i] < 0:
                raise ValueError("percentages are inconsistent with n")
    return DigitHistogram.from_counts(counts)
