"""Interferometer geometry and diffraction-order wavevectors.

The setup is treated in two dimensions: a double slit with spacing ``2*s``
illuminated coherently, and a periodic strip grating at distance ``g``
downstream.  In the small-angle regime the fringe spacing at the grating
plane fixes the grating period, so the transverse wavenumber ``k_perp``
and the period always multiply to pi.

All lengths are in one consistent unit chosen by the caller; nothing here
converts units.  Every function is pure and every value immutable, so
results can be shared freely across threads.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

__all__ = [
    "DEFAULT_PARAXIAL_BOUND",
    "ParaxialWarning",
    "SetupGeometry",
    "GratingGeometry",
    "OrderWaveVector",
    "derive_grating_geometry",
    "order_wavevector",
    "max_propagating_order",
]

DEFAULT_PARAXIAL_BOUND = 0.1


class ParaxialWarning(UserWarning):
    """Geometry is outside the small-angle regime the closed forms assume."""


@dataclass(frozen=True)
class SetupGeometry:
    """Physical layout of the experiment.

    Parameters
    ----------
    k : float
        Wavenumber of the light (radians per length), > 0.
    s : float
        Slit half-separation; the slit spacing is ``2*s``.
    g : float
        Distance from the double slit to the grating plane.
    paraxial_bound : float, optional
        Largest ``s/g`` accepted without a diagnostic warning.  The
        amplitude algebra downstream does not depend on this bound; it
        only flags setups where plane-wave, small-angle formulas start
        to lose meaning.
    """

    k: float
    s: float
    g: float
    paraxial_bound: float = DEFAULT_PARAXIAL_BOUND

    def __post_init__(self) -> None:
        for name in ("k", "s", "g"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.paraxial_bound) and self.paraxial_bound > 0.0):
            raise ValueError(f"paraxial_bound must be positive, got {self.paraxial_bound!r}")

    @property
    def slit_ratio(self) -> float:
        """The small-angle parameter ``s/g``."""
        return self.s / self.g

    @property
    def paraxial_ok(self) -> bool:
        return self.slit_ratio <= self.paraxial_bound


@dataclass(frozen=True)
class GratingGeometry:
    """Grating-plane quantities derived from the setup.

    ``k_perp`` is the transverse wavenumber each slit contributes at the
    grating plane and ``period`` the matched grating period; their product
    is pi up to floating rounding.
    """

    k_perp: float
    period: float


@dataclass(frozen=True)
class OrderWaveVector:
    """Outgoing plane-wave direction for one diffraction order.

    ``k_x**2 + k_z**2 == k**2`` whenever the order propagates; evanescent
    orders (``|k_x| >= k``) are marked with ``propagating=False`` and carry
    ``k_z = 0.0``.
    """

    order: int
    k_x: float
    k_z: float
    propagating: bool


def derive_grating_geometry(setup: SetupGeometry) -> GratingGeometry:
    """Compute ``k_perp = k*s/g`` and the matched period ``pi*g/(k*s)``.

    Emits a :class:`ParaxialWarning` (non-fatal) when ``s/g`` exceeds the
    configured bound; that also covers the breakdown case ``k_perp >= k``
    (possible only for ``s >= g``), where the tilted incident waves would
    stop propagating.
    """
    if not setup.paraxial_ok:
        warnings.warn(
            f"s/g = {setup.slit_ratio:.4g} exceeds the paraxial bound "
            f"{setup.paraxial_bound:.4g}; small-angle formulas degrade",
            ParaxialWarning,
            stacklevel=2,
        )
    k_perp = setup.k * setup.s / setup.g
    period = math.pi * setup.g / (setup.k * setup.s)
    return GratingGeometry(k_perp=k_perp, period=period)


def order_wavevector(n: int, setup: SetupGeometry) -> OrderWaveVector:
    """Wavevector components of diffraction order ``n``.

    The transverse component is ``2*n*k_perp`` (the grating shifts the
    incident wave in steps of twice ``k_perp``); the longitudinal
    component follows from ``|k|`` being fixed.
    """
    geom = derive_grating_geometry(setup)
    k_x = 2.0 * n * geom.k_perp
    if abs(k_x) < setup.k:
        k_z = math.sqrt(setup.k * setup.k - k_x * k_x)
        return OrderWaveVector(order=n, k_x=k_x, k_z=k_z, propagating=True)
    return OrderWaveVector(order=n, k_x=k_x, k_z=0.0, propagating=False)


def max_propagating_order(setup: SetupGeometry) -> int:
    """Largest ``n >= 0`` with ``2*n*k_perp`` strictly below ``k``.

    Field synthesis sums orders up to this cutoff; the coefficient-space
    probability calculations ignore it on purpose.
    """
    geom = derive_grating_geometry(setup)
    n_max = int(math.floor(setup.k / (2.0 * geom.k_perp)))
    while n_max > 0 and not (2.0 * n_max * geom.k_perp < setup.k):
        n_max -= 1
    return n_max
