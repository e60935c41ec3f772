"""Graded coefficient vectors over a strictly increasing ladder of levels.

A ladder assigns to each level i = 1, 2, ... a dimension alpha_i with
alpha_1 < alpha_2 < ...; level i is the coordinate subspace spanned by the
first alpha_i basis vectors of the ambient sequence space.  Vectors at lower
levels include isometrically into higher ones by zero padding, every vector
embeds into the square-summable completion, and any family of matrices on
the levels that is compatible with the inclusions induces a single map on
the union of all levels.

Square-summable elements outside the union are represented by an explicit
coefficient prefix together with a certified upper bound on the squared tail,
so density of the union is a checkable statement about tail norms rather
than a limit claim.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import InitVar, dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import (
    CoconeViolationError,
    InsufficientDataError,
    LadderMismatchError,
    LadderSpecError,
    LevelOrderError,
)

__all__ = [
    "LadderSpec",
    "LadderVector",
    "L2Vector",
    "LevelMapFamily",
    "LadderContext",
    "CompletionContext",
    "phi_vector",
    "basis_vector",
    "canonical_level",
    "canonicalize",
    "include",
    "inner_product",
    "norm",
    "project",
    "tail_norm",
    "embed_to_l2",
    "l2_norm",
    "l2_inner_product",
    "induce_map",
    "finite_l2",
    "geometric_l2",
    "power_law_l2",
    "n_for_tail_below",
    "ladder_over_basis",
    "completion_of_ladder",
]


class LadderSpec:
    """Dimension sequence alpha_1 < alpha_2 < ... of the ladder levels.

    Built either from an explicit finite list or from a rule ``i -> alpha_i``.
    Rule-based ladders are unbounded; their dimensions are validated pairwise
    as they are evaluated, so an ill-formed rule surfaces on first use of the
    offending level.  Instances are immutable and safe to share.
    """

    __slots__ = ("_dims", "_rule", "_name")

    def __init__(self, *, dims: Optional[Sequence[int]] = None,
                 rule: Optional[Callable[[int], int]] = None,
                 name: Optional[str] = None):
        if (dims is None) == (rule is None):
            raise LadderSpecError("give either an explicit dims list or a rule, not both")
        if dims is not None:
            tup = tuple(int(d) for d in dims)
            if not tup:
                raise LadderSpecError("dims must be nonempty")
            if tup[0] < 1:
                raise LadderSpecError("level dimensions must be >= 1")
            for a, b in zip(tup, tup[1:]):
                if b <= a:
                    raise LadderSpecError(
                        f"dims must be strictly increasing, got {a} followed by {b}")
            self._dims: Optional[tuple[int, ...]] = tup
            self._name = name if name is not None else f"explicit{tup}"
        else:
            self._dims = None
            self._name = name if name is not None else f"rule@{id(rule):x}"
        self._rule = rule

    @classmethod
    def identity(cls) -> "LadderSpec":
        """alpha_i = i, the default ladder."""
        return cls(rule=lambda i: i, name="identity")

    @classmethod
    def even(cls) -> "LadderSpec":
        """alpha_i = 2i."""
        return cls(rule=lambda i: 2 * i, name="even")

    @classmethod
    def explicit(cls, dims: Sequence[int]) -> "LadderSpec":
        return cls(dims=dims)

    @classmethod
    def from_rule(cls, rule: Callable[[int], int], name: str) -> "LadderSpec":
        return cls(rule=rule, name=name)

    @property
    def name(self) -> str:
        return self._name

    @property
    def level_count(self) -> Optional[int]:
        """Number of levels, or None for an unbounded rule ladder."""
        return len(self._dims) if self._dims is not None else None

    def dim(self, level: int) -> int:
        """Dimension alpha_level; validates strict increase locally."""
        level = int(level)
        if level < 1:
            raise LadderSpecError(f"levels start at 1, got {level}")
        if self._dims is not None:
            if level > len(self._dims):
                raise LadderSpecError(
                    f"ladder {self._name} has only {len(self._dims)} levels, asked for {level}")
            return self._dims[level - 1]
        assert self._rule is not None
        d = int(self._rule(level))
        prev = int(self._rule(level - 1)) if level > 1 else 0
        if d < 1 or d <= prev:
            raise LadderSpecError(
                f"rule ladder {self._name} is not strictly increasing at level {level}")
        return d

    def level_for(self, n: int) -> int:
        """Smallest level whose dimension is at least n."""
        n = max(int(n), 1)
        if self._dims is not None:
            idx = bisect_left(self._dims, n)
            if idx == len(self._dims):
                raise LadderSpecError(
                    f"ladder {self._name} has no level of dimension >= {n}")
            return idx + 1
        # strict increase of integers forces dim(n) >= n, so [1, n] brackets
        lo, hi = 1, n
        while lo < hi:
            mid = (lo + hi) // 2
            if self.dim(mid) >= n:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LadderSpec):
            return NotImplemented
        if self._dims is not None and other._dims is not None:
            return self._dims == other._dims
        return self._name == other._name

    def __hash__(self) -> int:
        return hash(self._dims if self._dims is not None else self._name)

    def __repr__(self) -> str:
        return f"LadderSpec({self._name})"


@dataclass(frozen=True, eq=False)
class LadderVector:
    """Finite coefficient vector living at a declared level of a ladder.

    ``coeffs`` always has length exactly alpha_level.  The canonical level of
    a vector is the smallest level whose dimension covers its nonzero
    support; two vectors are equal when their canonical forms carry identical
    coefficients.  Instances are immutable.
    """

    ladder: LadderSpec
    level: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        expected = self.ladder.dim(self.level)
        if arr.ndim != 1 or arr.shape[0] != expected:
            raise LadderSpecError(
                f"level {self.level} requires exactly {expected} coefficients, "
                f"got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def support(self) -> int:
        """Index of the last nonzero coefficient (0 for the zero vector)."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) + 1 if nz.size else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LadderVector):
            return NotImplemented
        if self.ladder != other.ladder:
            return False
        n = max(self.support(), other.support())
        return bool(np.array_equal(self.coeffs[:n], other.coeffs[:n]))

    __hash__ = None  # type: ignore[assignment]

    def _promote_pair(self, other: "LadderVector") -> tuple[np.ndarray, np.ndarray, int]:
        if self.ladder != other.ladder:
            raise LadderMismatchError("vectors live over different ladders")
        j = max(self.level, other.level)
        return include(self, j).coeffs, include(other, j).coeffs, j

    def __add__(self, other: "LadderVector") -> "LadderVector":
        a, b, j = self._promote_pair(other)
        return LadderVector(self.ladder, j, a + b)

    def __sub__(self, other: "LadderVector") -> "LadderVector":
        a, b, j = self._promote_pair(other)
        return LadderVector(self.ladder, j, a - b)

    def __mul__(self, scalar: complex) -> "LadderVector":
        return LadderVector(self.ladder, self.level, self.coeffs * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "LadderVector":
        return LadderVector(self.ladder, self.level, -self.coeffs)


def phi_vector(ladder: LadderSpec, coeffs: Sequence[complex],
               level: Optional[int] = None) -> LadderVector:
    """Wrap coefficients as a ladder vector.

    Without an explicit level the vector is placed at the smallest level that
    can hold it, padded with zeros up to that level's dimension.  With an
    explicit level the coefficient count must match the level dimension
    exactly.
    """
    arr = np.asarray(coeffs, dtype=np.complex128).ravel()
    if level is not None:
        return LadderVector(ladder, int(level), arr)
    lvl = ladder.level_for(max(arr.size, 1))
    padded = np.zeros(ladder.dim(lvl), dtype=np.complex128)
    padded[:arr.size] = arr
    return LadderVector(ladder, lvl, padded)


def basis_vector(ladder: LadderSpec, i: int) -> LadderVector:
    """The i-th coordinate vector, at the smallest level containing it."""
    if i < 1:
        raise LadderSpecError(f"basis indices start at 1, got {i}")
    lvl = ladder.level_for(i)
    out = np.zeros(ladder.dim(lvl), dtype=np.complex128)
    out[i - 1] = 1.0
    return LadderVector(ladder, lvl, out)


def canonical_level(x: LadderVector) -> int:
    """Smallest level i such that every coefficient beyond alpha_i is zero.

    Only exact zeros are trimmed, so equality of vectors stays decidable.
    """
    return x.ladder.level_for(max(x.support(), 1))


def canonicalize(x: LadderVector) -> LadderVector:
    lvl = canonical_level(x)
    return LadderVector(x.ladder, lvl, x.coeffs[:x.ladder.dim(lvl)])


def include(x: LadderVector, j: int) -> LadderVector:
    """Inclusion of x into level j >= level(x) by zero padding.

    Padding preserves coefficients verbatim, so inclusions compose exactly
    and preserve inner products.
    """
    j = int(j)
    if j < x.level:
        raise LevelOrderError(
            f"cannot include level {x.level} into lower level {j}")
    if j == x.level:
        return x
    out = np.zeros(x.ladder.dim(j), dtype=np.complex128)
    out[:x.coeffs.size] = x.coeffs
    return LadderVector(x.ladder, j, out)


def inner_product(x: LadderVector, y: LadderVector) -> complex:
    """Hermitian inner product <x, y> = sum_i x_i conj(y_i).

    Linear in the first argument.  Evaluated over the common nonzero support,
    so the value does not depend on the levels at which the arguments are
    presented; inclusion is therefore an exact isometry.
    """
    if x.ladder != y.ladder:
        raise LadderMismatchError("inner product requires a common ladder")
    n = min(x.support(), y.support())
    if n == 0:
        return 0j
    return complex(np.vdot(y.coeffs[:n], x.coeffs[:n]))


def norm(x: LadderVector) -> float:
    """Euclidean norm, accumulated with exact summation."""
    return math.sqrt(math.fsum(float(t) for t in np.abs(x.coeffs) ** 2))


# ---------------------------------------------------------------------------
# square-summable elements with certified tails


@dataclass(frozen=True)
class L2Vector:
    """Square-summable coefficient family: explicit prefix plus a certified
    upper bound on the squared tail.

    ``tail_bound(n)`` must bound sum_{i>n} |x_i|^2 and be nonincreasing in n.
    When ``certified_to`` is None the bound is valid for every n (closed-form
    tails); otherwise only for n <= certified_to.  An optional ``extender``
    rule produces coefficient i for indices beyond the prefix.
    """

    prefix: np.ndarray
    tail_bound: Callable[[int], float]
    extender: Optional[Callable[[int], complex]] = None
    certified_to: Optional[int] = None
    label: str = ""

    def __post_init__(self):
        arr = np.asarray(self.prefix, dtype=np.complex128).ravel().copy()
        arr.flags.writeable = False
        object.__setattr__(self, "prefix", arr)
        b0 = float(self.tail_bound(0))
        if not (math.isfinite(b0) and b0 >= 0.0):
            raise LadderSpecError(
                "tail_bound(0) must be a finite nonnegative square-summability witness")

    def coefficient(self, i: int) -> complex:
        if i < 1:
            raise LadderSpecError(f"coefficient indices start at 1, got {i}")
        if i <= self.prefix.size:
            return complex(self.prefix[i - 1])
        if self.extender is not None:
            return complex(self.extender(i))
        raise InsufficientDataError(
            f"only {self.prefix.size} coefficients available and no extender")

    def validate_tail(self, up_to: int = 32, slack: float = 1e-12) -> None:
        """Spot check the certified-bound invariants over n = 0..up_to.

        Verifies that the bound is nonincreasing and, when an extender is
        present, that partial tail energies never exceed the bound at the
        range start (up to floating slack).
        """
        hi = up_to if self.certified_to is None else min(up_to, self.certified_to)
        prev = float(self.tail_bound(0))
        for n in range(1, hi + 1):
            cur = float(self.tail_bound(n))
            if cur > prev * (1.0 + slack) + slack:
                raise LadderSpecError(f"tail bound increases at n={n}")
            prev = cur
        if self.extender is not None:
            for start in (0, 1, hi // 2, hi):
                stop = start + 16
                energy = math.fsum(
                    abs(self.coefficient(i)) ** 2 for i in range(start + 1, stop + 1))
                if energy > float(self.tail_bound(start)) * (1.0 + slack) + slack:
                    raise LadderSpecError(
                        f"coefficients over ({start}, {stop}] exceed tail bound")


def finite_l2(coeffs: Sequence[complex], label: str = "finite") -> L2Vector:
    """Finitely supported element; the tail bound is the exact remaining
    energy of the given coefficients and zero beyond them."""
    arr = np.asarray(coeffs, dtype=np.complex128).ravel()
    sq = np.abs(arr) ** 2
    suffix = [0.0] * (arr.size + 1)
    for i in range(arr.size - 1, -1, -1):
        suffix[i] = suffix[i + 1] + float(sq[i])

    def tail(n: int, _suffix=tuple(suffix), _size=arr.size) -> float:
        return _suffix[min(max(int(n), 0), _size)]

    return L2Vector(arr, tail, extender=lambda i: 0j, certified_to=None, label=label)


def geometric_l2(r: float, prefix_len: int = 64) -> L2Vector:
    """x_i = r^(i-1) for 0 < r < 1, with the exact closed-form tail
    sum_{i>n} r^(2(i-1)) = r^(2n) / (1 - r^2)."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise LadderSpecError(
            f"geometric ratio must lie in (0, 1) for square summability, got {r}")
    pref = r ** np.arange(prefix_len, dtype=np.float64)

    def tail(n: int, _r=r) -> float:
        return _r ** (2 * int(n)) / (1.0 - _r * _r)

    return L2Vector(pref, tail, extender=lambda i, _r=r: complex(_r ** (i - 1)),
                    certified_to=None, label=f"geometric(r={r})")


def power_law_l2(p: float, prefix_len: int = 64) -> L2Vector:
    """x_i = i^(-p) for p > 1/2, with the integral tail bound
    sum_{i>n} i^(-2p) <= n^(1-2p) / (2p - 1) for n >= 1."""
    p = float(p)
    if not p > 0.5:
        raise LadderSpecError(
            f"power-law exponent must exceed 1/2 for square summability, got {p}")
    c = 2.0 * p - 1.0
    pref = np.arange(1, prefix_len + 1, dtype=np.float64) ** (-p)

    def tail(n: int, _c=c) -> float:
        n = int(n)
        if n == 0:
            return 1.0 + 1.0 / _c
        return float(n) ** (-_c) / _c

    return L2Vector(pref, tail, extender=lambda i, _p=p: complex(float(i) ** (-_p)),
                    certified_to=None, label=f"power(p={p})")


def project(x: L2Vector, n: int, ladder: Optional[LadderSpec] = None) -> LadderVector:
    """Truncation P_n x: the first n coefficients, placed at the smallest
    ladder level of dimension >= n (entries between n and the level dimension
    are zero)."""
    n = int(n)
    if n < 1:
        raise LadderSpecError(f"projection order must be >= 1, got {n}")
    if ladder is None:
        ladder = LadderSpec.identity()
    if n <= x.prefix.size:
        head = np.array(x.prefix[:n])
    elif x.extender is not None:
        head = np.array([x.coefficient(i) for i in range(1, n + 1)])
    else:
        raise InsufficientDataError(
            f"projection order {n} exceeds the {x.prefix.size}-term prefix "
            "and no extender is available")
    lvl = ladder.level_for(n)
    padded = np.zeros(ladder.dim(lvl), dtype=np.complex128)
    padded[:n] = head
    return LadderVector(ladder, lvl, padded)


def tail_norm(x: L2Vector, n: int) -> float:
    """Certified upper bound on ||x - P_n x||; exact for closed-form tails."""
    n = int(n)
    if n < 0:
        raise LadderSpecError(f"tail index must be >= 0, got {n}")
    if x.certified_to is not None and n > x.certified_to:
        raise InsufficientDataError(
            f"tail bound certified only up to n={x.certified_to}, asked for {n}")
    return math.sqrt(max(float(x.tail_bound(n)), 0.0))


def embed_to_l2(x: LadderVector) -> L2Vector:
    """Isometric embedding of a ladder vector into the completion.

    The image carries the exact finite tail of the coefficients, hence zero
    bound beyond the support; nonzero input maps to positive norm.
    """
    return finite_l2(x.coeffs, label=f"embedded(level={x.level})")


def l2_norm(x: L2Vector) -> float:
    """Certified norm: prefix energy plus the tail bound at the prefix end."""
    head = math.fsum(float(t) for t in np.abs(x.prefix) ** 2)
    return math.sqrt(head + max(float(x.tail_bound(x.prefix.size)), 0.0))


def l2_inner_product(a: L2Vector, b: L2Vector) -> complex:
    """Inner product <a, b> = sum_i a_i conj(b_i) truncated at the available
    coefficient data (exact whenever both tails vanish beyond the prefixes)."""
    n = max(a.prefix.size, b.prefix.size)
    av = np.array([a.coefficient(i) for i in range(1, n + 1)])
    bv = np.array([b.coefficient(i) for i in range(1, n + 1)])
    return complex(np.vdot(bv, av))


def n_for_tail_below(x: L2Vector, eps: float) -> int:
    """Smallest certified n with tail_norm(x, n) <= eps.

    Works directly on the tail bound by doubling then bisection, so no
    coefficient data is materialized.
    """
    if eps <= 0.0:
        raise LadderSpecError("tolerance must be positive")
    target = eps * eps
    if float(x.tail_bound(0)) <= target:
        return 0
    hi = 1
    limit = x.certified_to
    for _ in range(200):
        if limit is not None and hi >= limit:
            hi = limit
            break
        if float(x.tail_bound(hi)) <= target:
            break
        hi *= 2
    else:
        raise InsufficientDataError("tail bound does not fall below tolerance")
    if float(x.tail_bound(hi)) > target:
        raise InsufficientDataError(
            f"tail bound stays above tolerance through certified range (n={hi})")
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if float(x.tail_bound(mid)) <= target:
            hi = mid
        else:
            lo = mid
    return hi


# ---------------------------------------------------------------------------
# compatible map families and the induced map on the union


@dataclass(frozen=True)
class LevelMapFamily:
    """Matrices M_i of shape (target_dim, alpha_i), one per level i = 1..L,
    where M_{i+1} restricted to its first alpha_i columns equals M_i.

    The restriction property means the family acts consistently on every
    presentation of a vector, so it factors through the union of levels; see
    induce_map.  Construction validates the property unless ``validate`` is
    False (``unchecked`` is the fault-injection hook used by diagnostics).
    """

    ladder: LadderSpec
    maps: tuple[np.ndarray, ...]
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool):
        if not self.maps:
            raise LadderSpecError("a level-map family needs at least one level")
        frozen = []
        m = None
        for i, raw in enumerate(self.maps, start=1):
            arr = np.asarray(raw, dtype=np.complex128)
            if arr.ndim != 2:
                raise LadderSpecError(f"map at level {i} is not a matrix")
            if m is None:
                m = arr.shape[0]
            if arr.shape != (m, self.ladder.dim(i)):
                raise LadderSpecError(
                    f"map at level {i} must have shape ({m}, {self.ladder.dim(i)}), "
                    f"got {arr.shape}")
            arr = arr.copy()
            arr.flags.writeable = False
            frozen.append(arr)
        object.__setattr__(self, "maps", tuple(frozen))
        if validate:
            self.check_compatibility()

    @classmethod
    def unchecked(cls, ladder: LadderSpec,
                  maps: Sequence[np.ndarray]) -> "LevelMapFamily":
        return cls(ladder, tuple(maps), validate=False)

    @classmethod
    def from_top(cls, ladder: LadderSpec, top: np.ndarray,
                 levels: int) -> "LevelMapFamily":
        """Family obtained by restricting one matrix on the highest level;
        compatible by construction."""
        top = np.asarray(top, dtype=np.complex128)
        maps = tuple(top[:, :ladder.dim(i)] for i in range(1, levels + 1))
        return cls(ladder, maps)

    @property
    def target_dim(self) -> int:
        return self.maps[0].shape[0]

    @property
    def level_count(self) -> int:
        return len(self.maps)

    def check_compatibility(self) -> None:
        """Raise CoconeViolationError at the first level whose map disagrees
        with the column restriction of its successor's."""
        for i in range(1, len(self.maps)):
            prev, cur = self.maps[i - 1], self.maps[i]
            if not np.array_equal(cur[:, :prev.shape[1]], prev):
                raise CoconeViolationError(
                    i + 1,
                    f"map at level {i + 1} disagrees with level {i} on the "
                    f"first {prev.shape[1]} columns")

    def restriction_defect(self) -> float:
        """Largest entrywise violation of the restriction property (0 for a
        compatible family); used by diagnostics to report injected faults."""
        worst = 0.0
        for i in range(1, len(self.maps)):
            prev, cur = self.maps[i - 1], self.maps[i]
            diff = np.abs(cur[:, :prev.shape[1]] - prev)
            if diff.size:
                worst = max(worst, float(diff.max()))
        return worst


def induce_map(family: LevelMapFamily, x: LadderVector) -> np.ndarray:
    """Apply the map induced on the union of levels by a compatible family.

    Always evaluated at the canonical level of x, so the result is
    bit-identical no matter at which level x is presented.
    """
    if family.ladder != x.ladder:
        raise LadderMismatchError("family and vector live over different ladders")
    lvl = canonical_level(x)
    if lvl > family.level_count:
        raise InsufficientDataError(
            f"family covers levels 1..{family.level_count}, vector needs level {lvl}")
    return family.maps[lvl - 1] @ x.coeffs[:x.ladder.dim(lvl)]


# ---------------------------------------------------------------------------
# the two directions: basis ladder and completion


@dataclass(frozen=True)
class LadderContext:
    """Working context over one ladder: vector construction, inclusions, and
    the bridge to the square-summable completion."""

    spec: LadderSpec

    def vector(self, coeffs: Sequence[complex],
               level: Optional[int] = None) -> LadderVector:
        return phi_vector(self.spec, coeffs, level)

    def basis(self, i: int) -> LadderVector:
        return basis_vector(self.spec, i)

    def include(self, x: LadderVector, j: int) -> LadderVector:
        return include(x, j)

    def embed(self, x: LadderVector) -> L2Vector:
        return embed_to_l2(x)

    def project(self, h: L2Vector, n: int) -> LadderVector:
        return project(h, n, self.spec)

    def completion(self) -> "CompletionContext":
        return CompletionContext(self.spec)


@dataclass(frozen=True)
class CompletionContext:
    """The square-summable coefficient space over the union basis.

    Inner products of embedded ladder vectors agree exactly with the graded
    inner product, and tail norms witness that the union is dense.
    """

    spec: LadderSpec

    def from_ladder(self, x: LadderVector) -> L2Vector:
        return embed_to_l2(x)

    def inner_product(self, a: L2Vector, b: L2Vector) -> complex:
        return l2_inner_product(a, b)

    def norm(self, a: L2Vector) -> float:
        return l2_norm(a)

    def project(self, h: L2Vector, n: int) -> LadderVector:
        return project(h, n, self.spec)

    def tail_norm(self, h: L2Vector, n: int) -> float:
        return tail_norm(h, n)


def ladder_over_basis(dims: Union[LadderSpec, Sequence[int]]) -> LadderContext:
    """Ladder of coordinate subspaces spanned by the first alpha_i basis
    vectors; raises LadderSpecError unless the dimensions strictly increase."""
    spec = dims if isinstance(dims, LadderSpec) else LadderSpec.explicit(dims)
    return LadderContext(spec)


def completion_of_ladder(ctx: LadderContext) -> CompletionContext:
    """The completion of a ladder context, realized canonically as the
    square-summable coefficient space over the same dimension sequence."""
    return ctx.completion()
