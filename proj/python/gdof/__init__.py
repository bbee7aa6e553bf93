# SPDX-License-Identifier: Apache-2.0
"""Exact GDoF regions of the two-user MIMO interference channel.

Rational quantities cross the boundary as :class:`fractions.Fraction`; inputs
may also be given as ``int`` or as strings such as ``"2/3"`` or ``"0.75"``.
"""

from ._gdof import (
    AntennaProfile,
    BoundKind,
    ChannelInstance,
    ChannelProfile,
    DofSplit,
    ExponentProfile,
    GdofBound,
    GdofError,
    GdofRegion,
    Regime,
    SlopeEstimate,
    StreamClass,
    SweepPoint,
    alpha_star,
    classify_regime,
    contains,
    corollary_D,
    covariances,
    curve_1121,
    dof_sum_bound,
    estimate_mac_gdof,
    estimate_tin_gdof,
    f,
    g,
    gdof_region,
    make_grid,
    reciprocal,
    regions_equal,
    sample_instance,
    siso_w_curve,
    split_solver,
    stream_decomposition,
    sweep_alpha,
    symmetric_gdof,
    theorem_bounds,
    zf_only_region,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
