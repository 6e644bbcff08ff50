"""Visibility, distinguishability, and the duality bound.

Fringe visibility is measured by scanning the slit phase (equivalently,
translating the grating) and collecting one channel's total power.  The
finite strip/gap widths average the fringe over a window, so

    V_t(a) = sin(pi*a) / (pi*(1-a))        transmitted
    V_r(a) = sin(pi*a) / (pi*a)            reflected

with the limit value 1 at the singular endpoints (a=1 transmitted, a=0
reflected).  Which-path distinguishability is half the trace-norm distance
between the two detector responses, which for this balanced setup reduces
to the zeroth/first-order amplitude difference:

    D_t(a) = |t_0**2 - t_1**2| = (1-a)**2 - (sin(pi*a)/pi)**2
    D_r(a) = |r_0**2 - r_1**2| =     a**2 - (sin(pi*a)/pi)**2

Both visibilities also come out of direct fringe-intensity integrals over
the open gaps (or strips), implemented here with a fixed composite Simpson
rule as an independent numerical oracle for the closed forms.  The
reflected-channel closed forms follow from the transmitted ones by the
substitution a <-> 1-a (equal roles of strip and gap) and are not printed
anywhere else; treat them as derived.

For every covering ratio, V**2 + D**2 <= 1, with equality only at the
degenerate endpoints.  Transmitted and reflected photons are disjoint
subensembles; each channel is normalized on its own and the two are never
combined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .grating import (
    CHANNELS,
    Channel,
    channel_amplitude,
    sin_pi,
    sinc_pi,
)

__all__ = [
    "VisibilityResult",
    "ComplementarityRecord",
    "visibility_closed",
    "visibility_quadrature",
    "distinguishability_closed",
    "distinguishability_from_amplitudes",
    "complementarity_sweep",
]

MIN_QUADRATURE_POINTS = 16


def _check_cover_ratio(cover_ratio: float) -> None:
    if not (0.0 <= cover_ratio <= 1.0):
        raise ValueError(f"cover ratio must lie in [0, 1], got {cover_ratio!r}")


def _check_channel(channel: Channel) -> None:
    if channel not in CHANNELS:
        raise ValueError(f"channel must be one of {CHANNELS}, got {channel!r}")


@dataclass(frozen=True)
class VisibilityResult:
    """Channel power at the two grating positions and the fringe contrast.

    ``i_max`` is the total with the sampling windows on the fringe maxima
    of their channel, ``i_min`` with them on the minima;
    ``visibility = (i_max - i_min)/(i_max + i_min)`` whenever the
    denominator is positive, and the analytic limit 1 at the degenerate
    endpoint where both integrals vanish.
    """

    i_max: float
    i_min: float
    visibility: float


@dataclass(frozen=True)
class ComplementarityRecord:
    """(cover_ratio, V, D, V**2 + D**2) for one channel."""

    cover_ratio: float
    channel: Channel
    visibility: float
    distinguishability: float
    duality: float


def visibility_closed(cover_ratio: float, channel: Channel = "transmitted") -> VisibilityResult:
    """Closed-form visibility for one channel.

    The contrast is evaluated as ``sinc`` of the window width (gap width
    ``1-a`` transmitted, strip width ``a`` reflected), which carries the
    exact limit value 1 at the singular endpoint and stays fully accurate
    next to it.
    """
    _check_cover_ratio(cover_ratio)
    _check_channel(channel)
    s = sin_pi(cover_ratio)
    if channel == "transmitted":
        width = 1.0 - cover_ratio
    else:
        width = float(cover_ratio)
    i_max = (math.pi * width + s) / (2.0 * math.pi)
    i_min = max(0.0, (math.pi * width - s) / (2.0 * math.pi))
    return VisibilityResult(i_max=i_max, i_min=i_min, visibility=sinc_pi(width))


def _simpson(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, subintervals: int) -> float:
    """Composite Simpson rule with a fixed even number of subintervals."""
    x = lo + (hi - lo) * np.arange(subintervals + 1) / subintervals
    y = f(x)
    weights = np.ones(subintervals + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float((hi - lo) / (3.0 * subintervals) * np.dot(weights, y))


def visibility_quadrature(
    cover_ratio: float, channel: Channel = "transmitted", points: int = 4096
) -> VisibilityResult:
    """Visibility from direct fringe-intensity integrals (numerical oracle).

    Integrates ``cos(pi*x)**2`` and ``sin(pi*x)**2`` over the sampling
    window (one period normalized to 1) with a composite Simpson rule of
    ``points`` subintervals: deterministic, no adaptivity.  At the
    degenerate endpoint (zero-width window) both integrals vanish and the
    visibility takes its analytic limit 1, matching the closed form.
    """
    _check_cover_ratio(cover_ratio)
    _check_channel(channel)
    if not (isinstance(points, (int, np.integer)) and points >= MIN_QUADRATURE_POINTS):
        raise ValueError(f"points must be an integer >= {MIN_QUADRATURE_POINTS}, got {points!r}")
    subintervals = int(points) + (int(points) % 2)
    width = 1.0 - cover_ratio if channel == "transmitted" else float(cover_ratio)
    if width == 0.0:
        return VisibilityResult(i_max=0.0, i_min=0.0, visibility=1.0)
    half = 0.5 * width
    i_max = _simpson(lambda x: np.cos(np.pi * x) ** 2, -half, half, subintervals)
    i_min = _simpson(lambda x: np.sin(np.pi * x) ** 2, -half, half, subintervals)
    return VisibilityResult(i_max=i_max, i_min=i_min, visibility=(i_max - i_min) / (i_max + i_min))


def distinguishability_closed(cover_ratio: float, channel: Channel = "transmitted") -> float:
    """Closed-form path distinguishability for one channel.

    The absolute value mirrors the trace-norm definition; for covering
    ratios in [0, 1] the enclosed expression is already non-negative, so
    it only ever absorbs floating-point dust at the endpoints.
    """
    _check_cover_ratio(cover_ratio)
    _check_channel(channel)
    leak = sin_pi(cover_ratio) / math.pi
    if channel == "transmitted":
        base = (1.0 - cover_ratio) ** 2
    else:
        base = float(cover_ratio) ** 2
    return abs(base - leak * leak)


def distinguishability_from_amplitudes(
    cover_ratio: float, channel: Channel = "transmitted"
) -> float:
    """Distinguishability via the trace-norm sum over both slits.

    Uses the zeroth- and first-order amplitude lookups directly: detector
    one sees ``u_0`` from its own slit and ``u_1`` from the other, and
    symmetrically for detector two.  Must agree with the closed form to
    machine precision.
    """
    _check_cover_ratio(cover_ratio)
    _check_channel(channel)
    u0 = channel_amplitude(0, cover_ratio, channel)
    u1 = channel_amplitude(1, cover_ratio, channel)
    return 0.5 * (abs(u0 * u0 - u1 * u1) + abs(u1 * u1 - u0 * u0))


def complementarity_sweep(
    cover_ratios: Iterable[float] | Sequence[float], channel: Channel = "transmitted"
) -> list[ComplementarityRecord]:
    """Evaluate (V, D, V**2 + D**2) for each covering ratio, input order kept."""
    _check_channel(channel)
    records = []
    for a in cover_ratios:
        a = float(a)
        v = visibility_closed(a, channel).visibility
        d = distinguishability_closed(a, channel)
        records.append(
            ComplementarityRecord(
                cover_ratio=a,
                channel=channel,
                visibility=v,
                distinguishability=d,
                duality=v * v + d * d,
            )
        )
    return records
