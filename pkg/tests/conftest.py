"""Shared fixtures: the finite-difference clamped spectra are expensive, so
they are solved once per session and reused by the eig2d, avp and acceptance
tests."""

from __future__ import annotations

import numpy as np
import pytest

from bilap.core import DomainSpec
from bilap.eig2d import Grid2D, assemble_clamped_bilaplacian, richardson_extrapolate, smallest_eigs

FD_GRIDS = (32, 64, 128)
FD_MODES = 50


@pytest.fixture(scope="session")
def unit_square() -> DomainSpec:
    return DomainSpec.square(1.0)


@pytest.fixture(scope="session")
def clamped_fd(unit_square) -> dict[int, np.ndarray]:
    """First FD_MODES clamped eigenvalues on each refinement grid."""
    out = {}
    for n in FD_GRIDS:
        op = assemble_clamped_bilaplacian(Grid2D(n, n, unit_square))
        values, _ = smallest_eigs(op, FD_MODES)
        out[n] = values
    return out


@pytest.fixture(scope="session")
def clamped_richardson(clamped_fd) -> tuple[np.ndarray, np.ndarray]:
    """(limits, bands): Richardson-extrapolated clamped eigenvalues with the
    adversarial tolerance band 3|fine - mid| per mode."""
    limits = np.empty(FD_MODES)
    bands = np.empty(FD_MODES)
    for j in range(FD_MODES):
        limits[j], bands[j] = richardson_extrapolate(
            *(clamped_fd[n][j] for n in FD_GRIDS))
    return limits, bands


@pytest.fixture(scope="session")
def clamped_64_200(unit_square) -> np.ndarray:
    """200 clamped modes on the 64x64 grid (heat-trace truncation)."""
    op = assemble_clamped_bilaplacian(Grid2D(64, 64, unit_square))
    values, _ = smallest_eigs(op, 200)
    return values


@pytest.fixture(scope="session")
def mollified_profiles(unit_square):
    from bilap.avp import mollified_indicator_profile
    return {
        0.1: mollified_indicator_profile(unit_square, 0.1, 96),
        0.05: mollified_indicator_profile(unit_square, 0.05, 96),
    }
