"""Planar-strip grating model.

The grating is a periodic comb of perfectly reflecting strips: reflectivity
one on strips of width ``cover_ratio * period`` centered at odd multiples of
half a period, zero on the open gaps.  Expanded as a cosine series,

    G(x) = c0 + sum_n c_n * cos(2*pi*x*n / period)

with ``c0 = cover_ratio`` and ``c_n = 2*(-1)**n * sin(cover_ratio*pi*n)/(pi*n)``.

Reflection picks up a pi phase jump, so ``r_0 = -c0`` and ``r_n = -c_n/2``;
transmission follows as ``t_0 = 1 + r_0`` and ``t_n = r_n`` for ``n >= 1``.
Both families are even in the order index, which the lookup helpers apply
structurally.  Everything here is a pure function of its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

__all__ = [
    "Channel",
    "CHANNELS",
    "DEFAULT_TRUNCATION",
    "SPECTRUM_TRUNCATION",
    "GratingSpec",
    "FourierCoefficients",
    "AmplitudeTable",
    "sin_pi",
    "sinc_pi",
    "fourier_coefficient",
    "grid_function",
    "reflection_amplitude",
    "transmission_amplitude",
    "channel_amplitude",
    "normalization_defect",
]

Channel = Literal["transmitted", "reflected"]
CHANNELS: tuple[Channel, ...] = ("transmitted", "reflected")

# Series truncations used for the reference figures: 50 terms reconstruct
# the grid profile well, 30 suffice for the order-spectrum tables.
DEFAULT_TRUNCATION = 50
SPECTRUM_TRUNCATION = 30


def sin_pi(u):
    """sin(pi*u), exact at integers.

    The argument is reduced to [0, 1/2] before multiplying by pi, so integer
    ``u`` returns exactly 0.0 and values near integers keep full precision
    instead of inheriting the rounding error of ``pi*u``.  Accepts scalars
    or arrays.
    """
    arr = np.asarray(u, dtype=float)
    red = np.mod(arr, 2.0)
    sign = np.where(red >= 1.0, -1.0, 1.0)
    red = np.where(red >= 1.0, red - 1.0, red)
    red = np.where(red > 0.5, 1.0 - red, red)
    out = sign * np.sin(np.pi * red)
    if arr.ndim == 0:
        return float(out)
    return out


def sinc_pi(u: float) -> float:
    """sin(pi*u)/(pi*u) with the limit value 1 at u = 0."""
    if u == 0.0:
        return 1.0
    return sin_pi(u) / (math.pi * u)


def _check_cover_ratio(cover_ratio: float) -> None:
    if not (0.0 <= cover_ratio <= 1.0):
        raise ValueError(f"cover ratio must lie in [0, 1], got {cover_ratio!r}")


def _check_truncation(truncation: int) -> None:
    if not (isinstance(truncation, (int, np.integer)) and truncation >= 1):
        raise ValueError(f"truncation order must be an integer >= 1, got {truncation!r}")


@dataclass(frozen=True)
class GratingSpec:
    """Strip grating: covering ratio, period, and series truncation order.

    ``cover_ratio = 0`` is no grating at all, ``cover_ratio = 1`` a full
    mirror; both degenerate cases are accepted.
    """

    cover_ratio: float
    period: float = 1.0
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self) -> None:
        _check_cover_ratio(self.cover_ratio)
        if not (math.isfinite(self.period) and self.period > 0.0):
            raise ValueError(f"period must be positive, got {self.period!r}")
        _check_truncation(self.truncation)


def fourier_coefficient(n: int, cover_ratio: float) -> float:
    """Cosine-series coefficient ``c_n`` of the strip profile.

    ``c_0 = cover_ratio``; for ``n >= 1``,
    ``c_n = 2*(-1)**n * sin(cover_ratio*pi*n)/(pi*n)``.
    """
    _check_cover_ratio(cover_ratio)
    if not (isinstance(n, (int, np.integer)) and n >= 0):
        raise ValueError(f"coefficient index must be a non-negative integer, got {n!r}")
    if n == 0:
        return float(cover_ratio)
    sign = -1.0 if n % 2 else 1.0
    return 2.0 * sign * sin_pi(cover_ratio * n) / (math.pi * n)


@dataclass(frozen=True, eq=False)
class FourierCoefficients:
    """Mean value ``c0`` and harmonics ``c_1..c_N`` of the strip profile.

    The summed squared harmonics stay below ``2*(c0 - c0**2)`` for any
    truncation, with equality in the untruncated limit.
    """

    c0: float
    c: np.ndarray

    @classmethod
    def build(cls, cover_ratio: float, truncation: int = DEFAULT_TRUNCATION) -> "FourierCoefficients":
        _check_cover_ratio(cover_ratio)
        _check_truncation(truncation)
        n = np.arange(1, truncation + 1)
        signs = np.where(n % 2 == 1, -1.0, 1.0)
        harmonics = 2.0 * signs * sin_pi(cover_ratio * n) / (math.pi * n)
        harmonics.flags.writeable = False
        return cls(c0=float(cover_ratio), c=harmonics)

    @property
    def truncation(self) -> int:
        return len(self.c)

    def partial_power(self) -> float:
        """Sum of the squared harmonics."""
        return float(np.sum(self.c**2))


def grid_function(x, spec: GratingSpec):
    """Truncated series value of the strip profile at position ``x``.

    Converges (as the truncation grows) to 1 on the strips and 0 on the
    gaps, with the usual overshoot of a truncated discontinuous series
    near the strip edges.  Accepts scalar or array ``x``.
    """
    coeffs = FourierCoefficients.build(spec.cover_ratio, spec.truncation)
    arr = np.asarray(x, dtype=float)
    n = np.arange(1, spec.truncation + 1)
    angles = (2.0 * math.pi / spec.period) * np.multiply.outer(arr, n)
    values = coeffs.c0 + np.cos(angles) @ coeffs.c
    if arr.ndim == 0:
        return float(values)
    return values


def reflection_amplitude(n: int, cover_ratio: float) -> float:
    """Reflection amplitude ``r_n``; even in ``n``.

    ``r_0 = -cover_ratio`` (the pi phase jump on reflection makes it
    negative); ``r_n = (-1)**(n+1) * sin(cover_ratio*pi*n)/(pi*n)``.
    """
    _check_cover_ratio(cover_ratio)
    m = abs(int(n))
    if m == 0:
        return -float(cover_ratio)
    sign = 1.0 if m % 2 else -1.0  # (-1)**(m+1)
    return sign * sin_pi(cover_ratio * m) / (math.pi * m)


def transmission_amplitude(n: int, cover_ratio: float) -> float:
    """Transmission amplitude ``t_n``: ``t_0 = 1 - cover_ratio``, else ``r_n``."""
    _check_cover_ratio(cover_ratio)
    m = abs(int(n))
    if m == 0:
        return 1.0 - float(cover_ratio)
    return reflection_amplitude(m, cover_ratio)


def channel_amplitude(n: int, cover_ratio: float, channel: Channel) -> float:
    """Amplitude of order ``n`` in the requested channel."""
    if channel == "transmitted":
        return transmission_amplitude(n, cover_ratio)
    if channel == "reflected":
        return reflection_amplitude(n, cover_ratio)
    raise ValueError(f"channel must be one of {CHANNELS}, got {channel!r}")


@dataclass(frozen=True, eq=False)
class AmplitudeTable:
    """Amplitudes r_0..r_N and t_0..t_N with symmetric (even) lookup.

    Only non-negative orders are stored; ``reflection(-n) == reflection(n)``
    holds by construction of the lookup.
    """

    cover_ratio: float
    r: np.ndarray
    t: np.ndarray

    @classmethod
    def build(cls, cover_ratio: float, truncation: int = DEFAULT_TRUNCATION) -> "AmplitudeTable":
        _check_cover_ratio(cover_ratio)
        _check_truncation(truncation)
        n = np.arange(1, truncation + 1)
        signs = np.where(n % 2 == 1, 1.0, -1.0)  # (-1)**(n+1)
        harmonics = signs * sin_pi(cover_ratio * n) / (math.pi * n)
        r = np.concatenate(([-cover_ratio], harmonics))
        t = np.concatenate(([1.0 - cover_ratio], harmonics))
        r.flags.writeable = False
        t.flags.writeable = False
        return cls(cover_ratio=float(cover_ratio), r=r, t=t)

    @property
    def truncation(self) -> int:
        return len(self.r) - 1

    def _index(self, n: int) -> int:
        m = abs(int(n))
        if m > self.truncation:
            raise ValueError(f"order {n} beyond truncation {self.truncation}")
        return m

    def reflection(self, n: int) -> float:
        return float(self.r[self._index(n)])

    def transmission(self, n: int) -> float:
        return float(self.t[self._index(n)])

    def amplitudes(self, channel: Channel) -> np.ndarray:
        if channel == "transmitted":
            return self.t
        if channel == "reflected":
            return self.r
        raise ValueError(f"channel must be one of {CHANNELS}, got {channel!r}")


def normalization_defect(cover_ratio: float, truncation: int) -> float:
    """Power unaccounted for by the truncated amplitude table.

    Returns ``1 - (r_0**2 + t_0**2 + sum_{n=1..N} 2*(r_n**2 + t_n**2))``.
    Non-negative, and bounded by the series tail ``4/(pi**2 * N)``; exactly
    zero for the degenerate gratings ``cover_ratio`` 0 and 1.
    """
    table = AmplitudeTable.build(cover_ratio, truncation)
    head = table.r[0] ** 2 + table.t[0] ** 2
    tail = 2.0 * float(np.sum(table.r[1:] ** 2 + table.t[1:] ** 2))
    return 1.0 - (head + tail)
