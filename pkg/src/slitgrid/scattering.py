"""Interference at the grating plane and diffraction-order spectra.

With one slit open the grating scatters an incident plane wave into integer
orders with probabilities ``|r_n|**2`` / ``|t_n|**2``.  With both slits open
the incident waves arrive offset by plus/minus half an order, so the
outgoing directions carry half-odd-integer labels ``m = n + 1/2`` and the
adjacent-order amplitudes of the two slits overlap:

    P(m) = |u_n + exp(i*delta_phi) * u_{n+1}|**2 / 2

with ``u`` the reflection or transmission amplitudes and ``delta_phi`` the
relative phase between the slits.  At ``delta_phi = 0`` (strips on the
fringe minima) adjacent orders interfere destructively because their signs
alternate, which is what makes the grating nearly invisible in the
two-slit configuration.

Conventions: slit one carries the +1/2 offset, slit two the -1/2 offset,
detector one collects the ``m = +1/2`` bin and detector two the
``m = -1/2`` bin.  Both slits are illuminated equally (amplitude
``1/sqrt(2)`` each).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import SetupGeometry, derive_grating_geometry
from .grating import (
    CHANNELS,
    AmplitudeTable,
    Channel,
    GratingSpec,
    sin_pi,
)

__all__ = [
    "TwoSlitConfig",
    "OrderSpectrum",
    "DetectorSignal",
    "FieldSample",
    "interference_intensity",
    "single_slit_spectrum",
    "two_slit_spectrum",
    "detector_signal",
    "single_slit_detector_signal",
    "single_slit_power_limit",
    "two_slit_power_limit",
    "synthesize_field",
    "sample_field",
]


@dataclass(frozen=True)
class TwoSlitConfig:
    """Both slits open, equal illumination, relative phase ``delta_phi``.

    ``delta_phi = 0`` puts the grating strips on the interference minima
    (the intended operating point); the phase is reduced to [0, 2*pi).
    """

    spec: GratingSpec
    delta_phi: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta_phi):
            raise ValueError(f"delta_phi must be finite, got {self.delta_phi!r}")
        object.__setattr__(self, "delta_phi", self.delta_phi % math.tau)


@dataclass(frozen=True, eq=False)
class OrderSpectrum:
    """Probabilities per outgoing order for one channel.

    Orders are integers (single slit) or half-odd integers (two slits),
    stored ascending as floats.
    """

    channel: Channel
    orders: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        if self.orders.shape != self.probabilities.shape:
            raise ValueError("orders and probabilities must have matching shapes")
        if np.any(self.probabilities < 0.0):
            raise ValueError("probabilities must be non-negative")

    @property
    def two_slit(self) -> bool:
        """True when the spectrum is indexed by half-odd-integer orders."""
        return bool(np.all(np.mod(self.orders, 1.0) == 0.5))

    def probability(self, order: float) -> float:
        """Probability at one order (exact index match)."""
        hits = np.nonzero(self.orders == order)[0]
        if hits.size == 0:
            raise KeyError(f"order {order!r} not present in spectrum")
        return float(self.probabilities[hits[0]])

    def total(self) -> float:
        """Summed probability over all tabulated orders."""
        return float(np.sum(self.probabilities))


@dataclass(frozen=True)
class DetectorSignal:
    """Power reaching each slit-image detector plus everything else.

    ``p_loss`` is the power in all other diffraction orders; the three
    parts sum to the channel's tabulated total exactly.
    """

    p_d1: float
    p_d2: float
    p_loss: float

    @property
    def total(self) -> float:
        return self.p_d1 + self.p_d2 + self.p_loss


@dataclass(frozen=True)
class FieldSample:
    """Complex field amplitude at one point of the grating's far side."""

    x: float
    z: float
    value: complex


def interference_intensity(x, delta_phi: float = 0.0, period: float = 1.0):
    """Two-slit fringe intensity ``cos(pi*x/period + delta_phi)**2``.

    Evaluated through the double-angle form so the zeros at half-period
    offsets come out exactly 0.0 (and the maxima exactly 1.0).  Accepts
    scalar or array ``x``.
    """
    if not (math.isfinite(period) and period > 0.0):
        raise ValueError(f"period must be positive, got {period!r}")
    arr = np.asarray(x, dtype=float) / period
    values = 0.5 * (1.0 + np.cos(2.0 * (np.pi * arr + delta_phi)))
    if np.ndim(x) == 0:
        return float(values)
    return values


def _mirrored(amps: np.ndarray) -> np.ndarray:
    """[u_N .. u_1, u_0, u_1 .. u_N] from the stored non-negative half."""
    return np.concatenate((amps[:0:-1], amps))


def single_slit_spectrum(spec: GratingSpec, channel: Channel) -> OrderSpectrum:
    """Stage with one slit open: ``P(n) = u_n**2`` for ``n`` in [-N, N]."""
    table = AmplitudeTable.build(spec.cover_ratio, spec.truncation)
    amps = _mirrored(table.amplitudes(channel))
    orders = np.arange(-spec.truncation, spec.truncation + 1, dtype=float)
    return OrderSpectrum(channel=channel, orders=orders, probabilities=amps**2)


def two_slit_spectrum(config: TwoSlitConfig, channel: Channel) -> OrderSpectrum:
    """Stage with both slits open: half-order bins ``m = n + 1/2``.

    ``P(m) = |u_n + exp(i*delta_phi)*u_{n+1}|**2 / 2`` expanded for the
    real amplitudes; covers every ``m`` whose two contributing orders are
    inside the truncated table, i.e. ``n`` in [-N, N-1].
    """
    spec = config.spec
    table = AmplitudeTable.build(spec.cover_ratio, spec.truncation)
    full = _mirrored(table.amplitudes(channel))
    lower, upper = full[:-1], full[1:]
    cos_phi = math.cos(config.delta_phi)
    # grouping the product keeps P(m) == P(-m) exact, not just up to rounding;
    # the clamp absorbs the last-ulp negatives of fully destructive bins
    probs = np.maximum(0.5 * (lower**2 + upper**2 + 2.0 * cos_phi * (lower * upper)), 0.0)
    orders = np.arange(-spec.truncation, spec.truncation, dtype=float) + 0.5
    return OrderSpectrum(channel=channel, orders=orders, probabilities=probs)


def detector_signal(spectrum: OrderSpectrum) -> DetectorSignal:
    """Bin a two-slit spectrum onto the two slit-image detectors.

    Detector one is the ``m = +1/2`` bin, detector two the ``m = -1/2``
    bin; every other order counts as loss.  Rejects integer-indexed
    (single-slit) spectra.
    """
    if not spectrum.two_slit:
        raise ValueError("detector binning needs a two-slit (half-odd-integer) spectrum")
    p_d1 = spectrum.probability(0.5)
    p_d2 = spectrum.probability(-0.5)
    p_loss = max(0.0, spectrum.total() - p_d1 - p_d2)
    return DetectorSignal(p_d1=p_d1, p_d2=p_d2, p_loss=p_loss)


def single_slit_detector_signal(spec: GratingSpec) -> DetectorSignal:
    """Transmitted-channel detector split with only slit one open.

    The zeroth order goes to the slit's own detector; the first order
    points at the other detector (one side only), everything else is loss.
    """
    table = AmplitudeTable.build(spec.cover_ratio, spec.truncation)
    probs = _mirrored(table.t) ** 2
    p_d1 = float(table.t[0] ** 2)
    p_d2 = float(table.t[1] ** 2)
    p_loss = max(0.0, float(np.sum(probs)) - p_d1 - p_d2)
    return DetectorSignal(p_d1=p_d1, p_d2=p_d2, p_loss=p_loss)


def single_slit_power_limit(cover_ratio: float, channel: Channel) -> float:
    """Untruncated channel total with one slit open: the geometric split.

    Transmitted power tends to the open fraction ``1 - cover_ratio``,
    reflected power to the covered fraction ``cover_ratio``.
    """
    if channel == "transmitted":
        return 1.0 - cover_ratio
    if channel == "reflected":
        return float(cover_ratio)
    raise ValueError(f"channel must be one of {CHANNELS}, got {channel!r}")


def two_slit_power_limit(cover_ratio: float, channel: Channel, delta_phi: float = 0.0) -> float:
    """Untruncated channel total with both slits open.

    Summing ``|u_n + e^{i*phi} u_{n+1}|**2 / 2`` over all orders gives
    ``1 - a + cos(phi)*sin(pi*a)/pi`` transmitted and
    ``a - cos(phi)*sin(pi*a)/pi`` reflected; the two always add to one.
    These equal the fringe intensity integrated over the open gaps
    (respectively the strips), which is how the visibility module checks
    them independently.
    """
    cross = math.cos(delta_phi) * sin_pi(cover_ratio) / math.pi
    if channel == "transmitted":
        return 1.0 - cover_ratio + cross
    if channel == "reflected":
        return float(cover_ratio) - cross
    raise ValueError(f"channel must be one of {CHANNELS}, got {channel!r}")


def synthesize_field(
    x: float,
    z: float,
    config: GratingSpec | TwoSlitConfig,
    side: Channel,
    setup: SetupGeometry,
) -> complex:
    """Scattered field at ``(x, z)`` as a sum of outgoing plane waves.

    Pass a :class:`GratingSpec` for single-slit (normal-incidence)
    illumination or a :class:`TwoSlitConfig` for both slits.  Transmitted
    waves run toward +z, reflected waves toward -z; evanescent orders are
    dropped.  The order spacing comes from the setup geometry (the spec's
    own period is not used here).

    At ``z = 0`` the single-slit transmitted field reproduces
    ``1 - grid_function(x)`` up to the propagation cutoff.
    """
    if side not in CHANNELS:
        raise ValueError(f"side must be one of {CHANNELS}, got {side!r}")
    spec = config.spec if isinstance(config, TwoSlitConfig) else config
    geom = derive_grating_geometry(setup)
    table = AmplitudeTable.build(spec.cover_ratio, spec.truncation)
    full = _mirrored(table.amplitudes(side))

    if isinstance(config, TwoSlitConfig):
        # half-order bins: transverse (2n+1)*k_perp, amplitude mixing the
        # adjacent orders of the two slits
        n = np.arange(-spec.truncation, spec.truncation)
        k_x = (2.0 * n + 1.0) * geom.k_perp
        phase_2 = np.exp(1j * config.delta_phi)
        amps = (full[:-1] + phase_2 * full[1:]) / math.sqrt(2.0)
    else:
        n = np.arange(-spec.truncation, spec.truncation + 1)
        k_x = 2.0 * n * geom.k_perp
        amps = full.astype(complex)

    propagating = np.abs(k_x) < setup.k
    k_x = k_x[propagating]
    amps = amps[propagating]
    k_z = np.sqrt(setup.k * setup.k - k_x * k_x)
    z_sign = 1.0 if side == "transmitted" else -1.0
    phases = np.exp(1j * (z_sign * k_z * z + k_x * x))
    return complex(np.sum(amps * phases))


def sample_field(
    x: float,
    z: float,
    config: GratingSpec | TwoSlitConfig,
    side: Channel,
    setup: SetupGeometry,
) -> FieldSample:
    """:func:`synthesize_field` wrapped into a positioned record."""
    return FieldSample(x=float(x), z=float(z), value=synthesize_field(x, z, config, side, setup))
