"""Polynomial levels under a Gaussian weight, handled exactly.

Degree-n polynomial spaces embed into L2(R) by P(xi) -> exp(-xi^2/4) P(xi),
so the inherited inner product is

    <P, Q> = Integral P(xi) Q(xi) exp(-xi^2/2) dxi.

Monomial moments of the weight are (m-1)!! sqrt(2pi) for even m and zero for
odd m, which keeps every inner product inside the exact scalar domain
q * sqrt(2pi) with rational q.  Gram-Schmidt over the monomials therefore
runs in exact rational arithmetic; the resulting monic orthogonal
polynomials are the probabilists' Hermite family, and normalization factors
stay symbolic as sqrt(rational) * (2pi)^(-1/4) until a float is requested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence, Union

import numpy as np

from .errors import DiagnosticError, LadderSpecError

__all__ = [
    "ExactPolynomial",
    "GaussianWeightedPoly",
    "SqrtTwoPiScalar",
    "OrthonormalPolynomial",
    "double_factorial",
    "gaussian_moment",
    "embed_poly",
    "inner_product_weighted",
    "gram_matrix",
    "orthonormal_basis",
    "orthonormal_inner_exact",
    "window_quadrature",
    "quadrature_nodes_weights",
    "density_diagnostic",
    "DENSITY_TARGETS",
    "QUAD_POINTS",
    "QUAD_WINDOW",
]

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class ExactPolynomial:
    """Rational-coefficient polynomial in one variable, monomial basis.

    coeffs[m] multiplies xi^m; trailing zeros are stripped so the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RationalLike]) -> "ExactPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, m: int, c: RationalLike = 1) -> "ExactPolynomial":
        if m < 0:
            raise LadderSpecError(f"monomial degree must be >= 0, got {m}")
        return cls.from_coeffs([0] * m + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial.from_coeffs(
            [self.coeff(m) + other.coeff(m) for m in range(n)])

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial.from_coeffs(
            [self.coeff(m) - other.coeff(m) for m in range(n)])

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["ExactPolynomial", RationalLike]) -> "ExactPolynomial":
        if isinstance(other, ExactPolynomial):
            if self.is_zero() or other.is_zero():
                return ExactPolynomial.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return ExactPolynomial.from_coeffs(out)
        return ExactPolynomial.from_coeffs([c * Fraction(other) for c in self.coeffs])

    def __rmul__(self, other: RationalLike) -> "ExactPolynomial":
        return self.__mul__(other)

    def coeff(self, m: int) -> Fraction:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        """Horner evaluation; exact for Fraction arguments, float otherwise."""
        r = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            r = r * x + c
        return r


@dataclass(frozen=True)
class GaussianWeightedPoly:
    """The square-integrable function xi -> exp(-xi^2/4) P(xi)."""

    poly: ExactPolynomial

    def __call__(self, xi: float) -> float:
        return float(self.poly(float(xi))) * math.exp(-xi * xi / 4.0)


def embed_poly(poly: ExactPolynomial) -> GaussianWeightedPoly:
    """Embedding of a polynomial into L2(R); linear and injective (a nonzero
    polynomial times a strictly positive weight is a nonzero function)."""
    return GaussianWeightedPoly(poly)


@dataclass(frozen=True)
class SqrtTwoPiScalar:
    """Exact scalar q * sqrt(2pi) with rational q.

    Closed under addition and rational scaling; ratios of two values are
    rational.  Conversion to float happens only at output boundaries.
    """

    q: Fraction

    def __add__(self, other: "SqrtTwoPiScalar") -> "SqrtTwoPiScalar":
        return SqrtTwoPiScalar(self.q + other.q)

    def __sub__(self, other: "SqrtTwoPiScalar") -> "SqrtTwoPiScalar":
        return SqrtTwoPiScalar(self.q - other.q)

    def __neg__(self) -> "SqrtTwoPiScalar":
        return SqrtTwoPiScalar(-self.q)

    def __mul__(self, other: RationalLike) -> "SqrtTwoPiScalar":
        return SqrtTwoPiScalar(self.q * Fraction(other))

    __rmul__ = __mul__

    def ratio(self, other: "SqrtTwoPiScalar") -> Fraction:
        """self / other as an exact rational (the sqrt(2pi) factors cancel)."""
        if other.q == 0:
            raise ZeroDivisionError("ratio against the zero scalar")
        return self.q / other.q

    def is_zero(self) -> bool:
        return self.q == 0

    def to_float(self) -> float:
        return float(self.q) * math.sqrt(2.0 * math.pi)

    def __repr__(self) -> str:
        return f"({self.q})*sqrt(2pi)"


def double_factorial(m: int) -> int:
    """m!! with the empty product (= 1) for m <= 0."""
    r = 1
    while m > 1:
        r *= m
        m -= 2
    return r


def gaussian_moment(m: int) -> SqrtTwoPiScalar:
    """Integral xi^m exp(-xi^2/2) dxi, exactly.

    Zero for odd m by symmetry; (m-1)!! sqrt(2pi) for even m, which follows
    from integrating by parts: moment(m) = (m-1) * moment(m-2).
    """
    if m < 0:
        raise LadderSpecError(f"moment order must be >= 0, got {m}")
    if m % 2 == 1:
        return SqrtTwoPiScalar(Fraction(0))
    return SqrtTwoPiScalar(Fraction(double_factorial(m - 1)))


def inner_product_weighted(p: ExactPolynomial, q: ExactPolynomial) -> SqrtTwoPiScalar:
    """Exact Integral P(xi) Q(xi) exp(-xi^2/2) dxi by moment expansion.

    Symmetric and positive definite: <P, P> > 0 for P != 0 since the even
    moment coefficients are positive.
    """
    prod = p * q
    total = Fraction(0)
    for m, c in enumerate(prod.coeffs):
        if c and m % 2 == 0:
            total += c * double_factorial(m - 1)
    return SqrtTwoPiScalar(total)


def gram_matrix(n: int) -> list[list[SqrtTwoPiScalar]]:
    """Moment matrix of the monomials 1, xi, ..., xi^n: entry (a, b) is
    gaussian_moment(a + b).  Symmetric positive definite."""
    if n < 0:
        raise LadderSpecError(f"degree bound must be >= 0, got {n}")
    return [[gaussian_moment(a + b) for b in range(n + 1)] for a in range(n + 1)]


@dataclass(frozen=True)
class OrthonormalPolynomial:
    """Unit vector of the weighted polynomial ladder.

    Represents poly * sqrt(sqrt_arg) * (2pi)^(-1/4).  The squared
    normalization is rational, so inner products of two such elements resolve
    exactly (see orthonormal_inner_exact).
    """

    poly: ExactPolynomial
    sqrt_arg: Fraction

    @cached_property
    def norm_factor(self) -> float:
        return math.sqrt(float(self.sqrt_arg)) * (2.0 * math.pi) ** -0.25

    @cached_property
    def float_coeffs(self) -> np.ndarray:
        """Monomial coefficients of the normalized polynomial, as floats."""
        return self.norm_factor * np.array([float(c) for c in self.poly.coeffs])

    def weighted_value(self, xi) -> float:
        """Evaluate the embedded unit function exp(-xi^2/4) * normalized poly."""
        xi = np.asarray(xi, dtype=np.float64)
        acc = np.zeros_like(xi)
        for c in self.float_coeffs[::-1]:
            acc = acc * xi + c
        return acc * np.exp(-xi * xi / 4.0)


def orthonormal_basis(n: int) -> list[OrthonormalPolynomial]:
    """Classical Gram-Schmidt over the monomials, exact over the rationals.

    The polynomial parts come out monic with integer coefficients (the
    probabilists' Hermite family); the degree-j part has squared weighted
    norm j! * sqrt(2pi), so sqrt_arg = 1/j!.
    """
    if n < 0:
        raise LadderSpecError(f"degree bound must be >= 0, got {n}")
    basis: list[ExactPolynomial] = []
    norms_q: list[Fraction] = []
    for j in range(n + 1):
        mono = ExactPolynomial.monomial(j)
        v = mono
        for a in range(j):
            c = inner_product_weighted(mono, basis[a]).q / norms_q[a]
            if c:
                v = v - basis[a] * c
        nq = inner_product_weighted(v, v).q
        if nq <= 0:
            raise LadderSpecError(f"Gram matrix not positive definite at degree {j}")
        basis.append(v)
        norms_q.append(nq)
    return [OrthonormalPolynomial(v, Fraction(1) / nq)
            for v, nq in zip(basis, norms_q)]


def orthonormal_inner_exact(a: OrthonormalPolynomial,
                            b: OrthonormalPolynomial) -> Fraction:
    """Exact inner product of two orthonormal elements.

    <a, b> = q * sqrt(s_a * s_b) where q sqrt(2pi) is the polynomial inner
    product and the (2pi) powers cancel.  The value is rational whenever
    q = 0 or s_a * s_b is a perfect rational square, which covers every pair
    produced by orthonormal_basis.
    """
    q = inner_product_weighted(a.poly, b.poly).q
    if q == 0:
        return Fraction(0)
    s = a.sqrt_arg * b.sqrt_arg
    rn, rd = math.isqrt(s.numerator), math.isqrt(s.denominator)
    if rn * rn != s.numerator or rd * rd != s.denominator:
        raise LadderSpecError("normalization square root does not resolve rationally")
    return q * Fraction(rn, rd)


# ---------------------------------------------------------------------------
# floating quadrature on the fixed window

QUAD_POINTS = 400
QUAD_WINDOW = 12.0


def quadrature_nodes_weights() -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite trapezoid rule with 400 equispaced
    points on [-12, 12]."""
    xs = np.linspace(-QUAD_WINDOW, QUAD_WINDOW, QUAD_POINTS)
    h = xs[1] - xs[0]
    ws = np.full(QUAD_POINTS, h)
    ws[0] *= 0.5
    ws[-1] *= 0.5
    return xs, ws


def window_quadrature(fn: Callable[[float], float]) -> float:
    """Composite trapezoid rule, 400 equispaced points on [-12, 12].

    For integrands polynomial * exp(-xi^2/2) of degree <= 16 the rule's own
    truncation and aliasing errors are below 1e-14; what remains in float64
    is term-evaluation noise proportional to the integrand's magnitude.
    """
    xs, ws = quadrature_nodes_weights()
    return math.fsum(float(fn(float(x))) * float(w) for x, w in zip(xs, ws))


def density_diagnostic(target: Callable[[float], float], n_max: int) -> np.ndarray:
    """Best-approximation L2 errors of ``target`` against the embedded
    orthonormal basis, for n = 0..n_max.

    err_n = sqrt(||target||^2 - sum_{a <= n} <target, b_a>^2), all integrals
    taken with the window quadrature.  Nonincreasing in n by construction.
    Raises DiagnosticError when the target's square integral is not finite on
    the window.
    """
    if n_max < 0:
        raise LadderSpecError(f"n_max must be >= 0, got {n_max}")
    xs, ws = quadrature_nodes_weights()
    tv = np.array([float(target(float(x))) for x in xs])
    norm_sq = math.fsum(float(t * t * w) for t, w in zip(tv, ws))
    if not math.isfinite(norm_sq):
        raise DiagnosticError("target has no finite square integral on the window")
    errors = np.empty(n_max + 1, dtype=np.float64)
    acc = 0.0
    for a, el in enumerate(orthonormal_basis(n_max)):
        bv = el.weighted_value(xs)
        c = math.fsum(float(t * b * w) for t, b, w in zip(tv, bv, ws))
        acc += c * c
        errors[a] = math.sqrt(max(norm_sq - acc, 0.0))
    return errors


DENSITY_TARGETS: dict[str, Callable[[float], float]] = {
    # the embedding weight itself: first basis direction, error 0 at n = 0
    "weight": lambda xi: math.exp(-xi * xi / 4.0),
    # second basis direction
    "xweight": lambda xi: xi * math.exp(-xi * xi / 4.0),
    # a target outside every finite level: errors decay but never vanish
    "gaussian": lambda xi: math.exp(-xi * xi / 2.0),
}
