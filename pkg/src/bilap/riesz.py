"""Riesz means, counting functions, and the explicit 1D two-sided bounds.

R_sigma(z) = sum_j (z - omega_j)_+^sigma is a finite sum once the spectrum is
known past z; for sigma = 1 it equals the integral of the counting function,
and on the interval it is sandwiched by explicit polynomials in z^(1/4) whose
coefficients follow from the half-integer/integer lattice sums below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .core import Spectrum, kahan_sum
from .spectra1d import _check_pair

__all__ = [
    "RieszMeanPoint",
    "InsufficientSpectrumError",
    "riesz_mean",
    "counting",
    "integrated_counting",
    "theorem_bounds_1d",
    "lemma_onedim_bounds",
    "constant_c",
    "second_term_fit",
    "default_fit_grid",
]

_KAHAN_THRESHOLD = 10_000


class InsufficientSpectrumError(RuntimeError):
    """Spectrum does not cover the requested threshold and cannot extend."""


@dataclass(frozen=True)
class RieszMeanPoint:
    z: float
    sigma: float
    value: float
    truncation_count: int


def _ensure_cover(spec: Spectrum, z: float) -> Spectrum:
    """Return a spectrum whose last eigenvalue reaches z (extend if possible)."""
    if len(spec.values) and spec.values[-1] >= z:
        return spec
    if spec.extend is None:
        raise InsufficientSpectrumError(
            f"spectrum ends at {spec.values[-1] if spec.values else 'empty'} < z={z} "
            "and is not extendable")
    count = max(len(spec.values), 8)
    for _ in range(64):
        count *= 2
        grown = spec.extend(count)
        if grown.values[-1] >= z:
            return grown
    raise InsufficientSpectrumError(f"could not extend spectrum past z={z}")


def _positive_part_sum(values: Sequence[float], z: float, sigma: float) -> tuple[float, int]:
    """Ascending-order sum of (z - omega)_+^sigma; Kahan beyond 1e4 terms."""
    terms = []
    for v in values:
        if v >= z:
            break
        diff = z - v
        terms.append(diff if sigma == 1.0 else diff ** sigma)
    if len(terms) > _KAHAN_THRESHOLD:
        return kahan_sum(terms), len(terms)
    return sum(terms), len(terms)


def riesz_mean(spec: Spectrum, z: float, sigma: float = 1.0) -> RieszMeanPoint:
    """Exact finite Riesz mean R_sigma(z) over the spectrum.

    For sigma = 1 the result is cross-checked against the step-function
    integral of the counting function evaluated in the same specified
    ascending order; the two must agree exactly.
    """
    if z < 0.0:
        raise ValueError("z must be >= 0")
    if not (sigma > 0.0):
        raise ValueError("sigma must be positive")
    spec = _ensure_cover(spec, z)
    value, count = _positive_part_sum(spec.values, z, sigma)
    if sigma == 1.0:
        integral = integrated_counting(spec, z)
        if value != integral:
            raise AssertionError(
                f"R_1({z}) = {value!r} disagrees with the counting integral {integral!r}")
    return RieszMeanPoint(z=z, sigma=sigma, value=value, truncation_count=count)


def counting(spec: Spectrum, z: float) -> int:
    """N(z): number of eigenvalues strictly below z."""
    if z < 0.0:
        raise ValueError("z must be >= 0")
    spec = _ensure_cover(spec, z)
    n = 0
    for v in spec.values:
        if v >= z:
            break
        n += 1
    return n


def integrated_counting(spec: Spectrum, z: float) -> float:
    """Integral of N(t) over [0, z], in its closed step-function form.

    The integral telescopes to sum_j (z - omega_j)_+, evaluated here in the
    specified ascending eigenvalue order so that R_1 comparisons are
    bitwise reproducible.
    """
    spec = _ensure_cover(spec, z)
    value, _ = _positive_part_sum(spec.values, z, 1.0)
    return value


# ----------------------------------------------------------------------------
# Explicit interval bounds
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def constant_c(term_tol: float = 1e-16) -> float:
    """The exponentially convergent defect-series constant, about 2.51272.

    Terms fall like e^(-pi n) n^3, so truncation once a term drops below
    ``term_tol`` leaves a tail smaller than the term itself.
    """
    total = 0.0
    for n in range(1, 400):
        half = n + 0.5
        e1 = math.exp(-math.pi * n)
        term = (4.0 * (math.pi * e1 * half ** 3 + math.pi ** 3 * e1 ** 3 * half)
                + 6.0 * math.pi ** 2 * e1 ** 2 * half ** 2
                + math.pi ** 4 * e1 ** 4)
        total += term
        if term < term_tol:
            break
    return total


def theorem_bounds_1d(pair: tuple[int, int], z: float) -> tuple[float, float]:
    """Two-sided polynomial envelope for R_1 of the (i,j) interval problem.

    The envelopes share the leading term (4/(5 pi)) z^(5/4); the z-coefficient
    is (i+j-3)/2 and the lower-order coefficients come from the lattice-sum
    lemma plus (for the root-based spectra) the series constant c.
    """
    pair = _check_pair(pair)
    if not (z > 0.0):
        raise ValueError("z must be positive")
    lead = 4.0 / (5.0 * math.pi) * z ** 1.25
    z34, z12, z14 = z ** 0.75, z ** 0.5, z ** 0.25
    c = constant_c()
    linear = (pair[0] + pair[1] - 3) / 2.0 * z

    if pair in ((0, 2), (1, 3)):
        lower = lead + linear - math.pi / 3.0 * z34
        upper = lead + linear + math.pi / 6.0 * z34 + math.pi ** 2 / 12.0 * z12
        return lower, upper

    lower = (lead + linear - 11.0 * math.pi / 6.0 * z34
             - 1.5 * math.pi ** 2 * z12 - 127.0 * math.pi ** 3 / 240.0 * z14 - c)
    upper = (lead + linear + math.pi / 6.0 * z34 + 1.5 * math.pi ** 2 * z12
             + math.pi ** 3 / 30.0 * z14 + math.pi ** 4 / 8.0 + c)
    return lower, upper


def lemma_onedim_bounds(
    R: float, variant: Literal["integers", "half_integers"]
) -> tuple[float, float, float]:
    """(lhs, mid, rhs) for the lattice-sum envelopes; lhs <= mid <= rhs.

    ``mid`` is the brute-force sum minus its main term:
      integers:      sum (R^4 - n^4)_+        - (4/5) R^5 + (1/2) R^4
      half_integers: sum (R^4 - (n+1/2)^4)_+  - (4/5) R^5 + R^4
    """
    if R < 0.0:
        raise ValueError("R must be >= 0")
    if variant == "integers":
        total = 0.0
        n = 1
        while n < R:
            total += R ** 4 - n ** 4
            n += 1
        mid = total - 0.8 * R ** 5 + 0.5 * R ** 4
        lhs = -R ** 3 / 3.0
        rhs = R ** 3 / 6.0 + R ** 2 / 12.0
    elif variant == "half_integers":
        total = 0.0
        n = 1
        while n + 0.5 < R:
            total += R ** 4 - (n + 0.5) ** 4
            n += 1
        mid = total - 0.8 * R ** 5 + R ** 4
        lhs = -11.0 / 6.0 * R ** 3 - 1.5 * R ** 2 - 127.0 / 240.0 * R
        rhs = R ** 3 / 6.0 + 1.5 * R ** 2 + R / 30.0 + 0.125
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return lhs, mid, rhs


def default_fit_grid(z_max: float = 1e9, n_points: int = 32) -> list[float]:
    """Log-spaced thresholds for the second-term regression."""
    return list(np.logspace(4.0, math.log10(z_max), n_points))


def second_term_fit(pair: tuple[int, int], z_grid: Sequence[float] | None = None) -> float:
    """Least-squares slope of R_1(z) - (4/(5 pi)) z^(5/4) against z.

    A z^(3/4) regressor absorbs the next-order oscillation so the linear
    coefficient converges to (i+j-3)/2 well before z reaches 1e9.
    """
    from .spectra1d import spectrum_1d

    pair = _check_pair(pair)
    if z_grid is None:
        z_grid = default_fit_grid()
    z = np.asarray(sorted(z_grid), dtype=float)
    if len(z) < 8:
        raise ValueError("fit grid needs at least 8 points")
    if z[-1] < 1e6:
        raise ValueError("fit grid must reach at least 1e6")

    spec = spectrum_1d(pair, 8)
    y = np.array([riesz_mean(spec, zi, 1.0).value for zi in z])
    y -= 4.0 / (5.0 * math.pi) * z ** 1.25
    design = np.column_stack([z, z ** 0.75])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(coef[0])
