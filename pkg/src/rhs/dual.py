"""Dual functionals on the ladder union, and rapid-decrease seminorms.

Every level of the ladder is finite-dimensional, so a linear functional on
the union is just a coefficient rule i -> f_i with no growth restriction at
all: pairing against a ladder vector is always a finite sum, and the
restriction to any level has a finite operator norm.  The seminorm family
``sqrt(sum_n n^(4k) |x_n|^2)`` measures how fast a coefficient sequence
decays; finiteness for every k is the rapid-decrease condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import LadderSpecError
from .ladder import LadderSpec, LadderVector

__all__ = [
    "DualFunctional",
    "SeminormTrace",
    "STABILIZATION_EPS",
    "STABILIZATION_WINDOW",
    "pair",
    "restrict_functional",
    "riesz_functional",
    "ones_functional",
    "coordinate_functional",
    "factorial_functional",
    "seminorm",
    "seminorm_partial_sums",
]

# shared stabilization criterion: increments below this over the trailing
# window of steps count as "stabilized"
STABILIZATION_EPS = 1e-12
STABILIZATION_WINDOW = 10


@dataclass(frozen=True)
class DualFunctional:
    """Coefficient rule i -> f_i, total on the positive integers.

    No summability or growth constraint is imposed: the rule may grow
    factorially and still pairs with every ladder vector through a finite sum.
    """

    rule: Callable[[int], complex]
    label: str = ""

    def __call__(self, i: int) -> complex:
        if i < 1:
            raise LadderSpecError(f"coefficient indices start at 1, got {i}")
        return complex(self.rule(i))


def pair(f: DualFunctional, x: LadderVector) -> complex:
    """Bilinear pairing <f, x> = sum_{i <= alpha_level(x)} f_i x_i.

    Zero coefficients of x contribute nothing, so the sum is evaluated over
    the nonzero support and the value is independent of the presentation
    level.
    """
    n = x.support()
    if n == 0:
        return 0j
    fv = np.array([f(i) for i in range(1, n + 1)], dtype=np.complex128)
    return complex(np.dot(fv, x.coeffs[:n]))


def restrict_functional(f: DualFunctional, n: int,
                        ladder: Optional[LadderSpec] = None) -> tuple[np.ndarray, float]:
    """Restriction of f to level n: its coefficients on that level together
    with the operator norm sqrt(sum_{i <= alpha_n} |f_i|^2).

    The norm is finite for every rule, which is exactly level-wise
    continuity.
    """
    if ladder is None:
        ladder = LadderSpec.identity()
    d = ladder.dim(n)
    vec = np.array([f(i) for i in range(1, d + 1)], dtype=np.complex128)
    opnorm = math.sqrt(math.fsum(float(t) for t in np.abs(vec) ** 2))
    return vec, opnorm


def riesz_functional(y: LadderVector) -> DualFunctional:
    """Functional induced by y through the inner product.

    pair(riesz_functional(y), x) == inner_product(x, y) for every x over the
    same ladder; the zero vector induces the zero functional.
    """
    s = y.support()
    conj = np.conj(y.coeffs[:s]).copy()
    conj.flags.writeable = False

    def rule(i: int, _c: np.ndarray = conj, _s: int = s) -> complex:
        return complex(_c[i - 1]) if i <= _s else 0j

    return DualFunctional(rule, label="riesz")


def ones_functional() -> DualFunctional:
    return DualFunctional(lambda i: 1.0 + 0j, label="ones")


def coordinate_functional(j: int) -> DualFunctional:
    """The j-th coordinate functional delta_j."""
    if j < 1:
        raise LadderSpecError(f"coordinate indices start at 1, got {j}")
    return DualFunctional(lambda i, _j=j: 1.0 + 0j if i == _j else 0j,
                          label=f"delta_{j}")


def factorial_functional() -> DualFunctional:
    """f_i = i!, a deliberately fast-growing rule; pairings stay finite."""
    return DualFunctional(lambda i: complex(math.factorial(i)), label="factorial")


def seminorm(coeffs: Sequence[complex], k: int) -> float:
    """Weighted norm sqrt(sum_n n^(4k) |x_n|^2) over a finite vector.

    k = 0 gives the plain l2 norm.  Terms are accumulated with exact
    summation, so the family is monotone in k without floating slack.
    """
    k = int(k)
    if k < 0:
        raise LadderSpecError(f"seminorm index must be >= 0, got {k}")
    arr = np.asarray(coeffs, dtype=np.complex128).ravel()
    return math.sqrt(math.fsum(
        float(n ** (4 * k)) * float(a)
        for n, a in enumerate(np.abs(arr) ** 2, start=1)))


class SeminormTrace(NamedTuple):
    """Running partial values of a weighted seminorm plus the stabilization
    verdict for the whole trace."""

    values: np.ndarray
    stabilized: bool


def seminorm_partial_sums(coeffs: Union[Callable[[int], complex], Sequence[complex]],
                          k: int, n_max: int) -> SeminormTrace:
    """Partial values sqrt(sum_{n <= N} n^(4k) |x_n|^2) for N = 1..n_max.

    ``coeffs`` is either a total rule i -> x_i or a finite sequence.  The
    output is nondecreasing.  ``stabilized`` is True when every increment
    over the trailing window of 10 steps stays below 1e-12; a sequence whose
    weighted sums diverge (square-summable but not rapidly decreasing) never
    stabilizes, and the verdict reports that instead of inferring convergence.
    """
    k = int(k)
    if k < 0:
        raise LadderSpecError(f"seminorm index must be >= 0, got {k}")
    n_max = int(n_max)
    if n_max < 1:
        raise LadderSpecError(f"n_max must be >= 1, got {n_max}")
    if callable(coeffs):
        rule = coeffs
    else:
        seq = np.asarray(coeffs, dtype=np.complex128).ravel()
        if n_max > seq.size:
            raise LadderSpecError(
                f"n_max={n_max} exceeds the {seq.size}-term sequence")
        rule = lambda i, _s=seq: complex(_s[i - 1])  # noqa: E731
    values = np.empty(n_max, dtype=np.float64)
    acc = 0.0
    for n in range(1, n_max + 1):
        acc += float(n ** (4 * k)) * abs(complex(rule(n))) ** 2
        values[n - 1] = math.sqrt(acc)
    if n_max == 1:
        return SeminormTrace(values, True)
    inc = np.diff(values)
    w = min(STABILIZATION_WINDOW, inc.size)
    stabilized = bool(np.all(inc[inc.size - w:] < STABILIZATION_EPS))
    return SeminormTrace(values, stabilized)
