"""Fourier coefficients of functions on the circle, interleaved into
one-sided coefficient sequences.

Convention: c_n = (1/2pi) Integral_0^{2pi} f(theta) exp(-i n theta) dtheta.
The defining approximation is the N-point equispaced trapezoid rule, which
for smooth periodic functions converges spectrally; an FFT would compute the
same sums but is not needed at the sizes used here.

Coefficients are indexed by all integers, while graded coefficient sequences
are one-sided, so the two-sided index is folded by

    0 -> 1, 1 -> 2, -1 -> 3, 2 -> 4, -2 -> 5, ...

The image of n is at most 2|n| + 1, so polynomial decay rates transfer both
ways across the identification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .dual import SeminormTrace, seminorm_partial_sums
from .errors import AliasingError, LadderSpecError

__all__ = [
    "SMOOTH",
    "SQUARE_INTEGRABLE_ONLY",
    "TorusFunctionSampler",
    "ParsevalResult",
    "interleave",
    "deinterleave",
    "fourier_coeff",
    "coeffs_to_sequence",
    "parseval_check",
    "rapid_decay_report",
    "const_sampler",
    "cosine_sampler",
    "expcos_sampler",
    "sawtooth_sampler",
    "SAMPLERS",
]

SMOOTH = "smooth"
SQUARE_INTEGRABLE_ONLY = "square-integrable-only"


@dataclass(frozen=True)
class TorusFunctionSampler:
    """Pointwise rule theta -> f(theta) on [0, 2pi) with a declared
    regularity tag.

    The tag selects which diagnostics are meaningful: rapid decay of the
    coefficient sequence is only expected (and only asserted by callers) for
    samplers declared smooth.
    """

    rule: Callable[[float], complex]
    smoothness: str = SMOOTH
    name: str = ""

    def __post_init__(self):
        if self.smoothness not in (SMOOTH, SQUARE_INTEGRABLE_ONLY):
            raise LadderSpecError(
                f"smoothness must be {SMOOTH!r} or {SQUARE_INTEGRABLE_ONLY!r}, "
                f"got {self.smoothness!r}")


def interleave(n: int) -> int:
    """Two-sided index to one-sided: 0 -> 1, m -> 2m, -m -> 2m + 1."""
    n = int(n)
    if n == 0:
        return 1
    return 2 * n if n > 0 else 2 * (-n) + 1


def deinterleave(m: int) -> int:
    """Inverse of interleave."""
    m = int(m)
    if m < 1:
        raise LadderSpecError(f"one-sided indices start at 1, got {m}")
    if m == 1:
        return 0
    return m // 2 if m % 2 == 0 else -(m // 2)


def _grid(n_points: int) -> np.ndarray:
    if n_points < 8 or n_points % 2 != 0:
        raise LadderSpecError(
            f"grid size must be an even integer >= 8, got {n_points}")
    return 2.0 * np.pi * np.arange(n_points) / n_points


def _samples(f: TorusFunctionSampler, n_points: int) -> np.ndarray:
    return np.array([complex(f.rule(float(t))) for t in _grid(n_points)])


def _mode_phases(n: int, grid: int) -> np.ndarray:
    """exp(-i n theta_j) for the equispaced grid, with the phase n*j reduced
    mod grid in exact integer arithmetic.

    Keeping arguments inside [0, 2pi) avoids the precision loss of large
    phase angles, which matters because high-order seminorm weights amplify
    any noise floor in the computed coefficients.
    """
    residues = (n * np.arange(grid, dtype=np.int64)) % grid
    return np.exp((-2j * np.pi / grid) * residues)


def fourier_coeff(f: TorusFunctionSampler, n: int, grid: int) -> complex:
    """Trapezoid approximation of c_n on an equispaced grid of ``grid``
    points; requires grid > 2|n| so the mode is resolved."""
    n = int(n)
    _grid(grid)  # validates the grid size
    if grid <= 2 * abs(n):
        raise AliasingError(
            f"mode {n} aliases on a grid of {grid} points (need grid > {2 * abs(n)})")
    sam = _samples(f, grid)
    return complex(np.dot(sam, _mode_phases(n, grid)) / grid)


def coeffs_to_sequence(f: TorusFunctionSampler, grid: int) -> np.ndarray:
    """Coefficients c_n for |n| <= grid/2 - 1 arranged by the interleaving
    into a one-sided vector of length grid - 1, ready for ladder-vector and
    seminorm use."""
    sam = _samples(f, grid)
    half = grid // 2 - 1
    out = np.zeros(grid - 1, dtype=np.complex128)
    for n in range(-half, half + 1):
        c = complex(np.dot(sam, _mode_phases(n, grid)) / grid)
        out[interleave(n) - 1] = c
    return out


class ParsevalResult(NamedTuple):
    lhs: float
    rhs: float
    gap: float


def parseval_check(f: TorusFunctionSampler, grid: int) -> ParsevalResult:
    """Coefficient energy sum_{|n| < grid/2} |c_n|^2 against the grid mean of
    |f|^2 (the trapezoid value of (1/2pi) Integral |f|^2).

    For smooth f both sides converge spectrally to the same number; the gap
    is exactly the energy in the unresolved Nyquist mode, so it vanishes fast
    for smooth functions and stays visible for rough ones.
    """
    seq = coeffs_to_sequence(f, grid)
    lhs = math.fsum(float(t) for t in np.abs(seq) ** 2)
    sam = _samples(f, grid)
    rhs = math.fsum(float(t) for t in np.abs(sam) ** 2) / grid
    return ParsevalResult(lhs, rhs, abs(lhs - rhs))


def rapid_decay_report(f: TorusFunctionSampler, k_list: Sequence[int],
                       grid: int) -> dict[int, SeminormTrace]:
    """Seminorm partial-sum traces of the interleaved coefficients, per k.

    For a smooth sampler every trace stabilizes (the realization lands in the
    rapidly decreasing sequences); for a sampler declared square-integrable
    only, the report is still produced but stabilization is not implied, and
    growing partial sums are the expected divergence witness.
    """
    seq = coeffs_to_sequence(f, grid)
    return {int(k): seminorm_partial_sums(seq, int(k), seq.size) for k in k_list}


def const_sampler() -> TorusFunctionSampler:
    return TorusFunctionSampler(lambda t: 1.0 + 0j, SMOOTH, "const")


def cosine_sampler() -> TorusFunctionSampler:
    return TorusFunctionSampler(lambda t: complex(math.cos(t)), SMOOTH, "cosine")


def expcos_sampler() -> TorusFunctionSampler:
    """exp(cos theta): entire, with coefficients decaying like 1/(2^n n!)."""
    return TorusFunctionSampler(lambda t: complex(math.exp(math.cos(t))), SMOOTH,
                                "expcos")


def sawtooth_sampler() -> TorusFunctionSampler:
    """f(theta) = theta: square integrable with a jump, |c_n| ~ 1/n, so the
    weighted seminorm sums diverge."""
    return TorusFunctionSampler(lambda t: complex(t), SQUARE_INTEGRABLE_ONLY,
                                "sawtooth")


SAMPLERS: dict[str, Callable[[], TorusFunctionSampler]] = {
    "const": const_sampler,
    "cosine": cosine_sampler,
    "expcos": expcos_sampler,
    "sawtooth": sawtooth_sampler,
}
