"""Graded coefficient ladders with duals and spectral realizations.

The core objects are strictly increasing ladders of finite-dimensional
coordinate spaces inside a square-summable sequence space: vectors at a
level include isometrically into higher levels, project down by truncation,
embed into the completion with certified tail bounds, and pair with
unrestricted dual coefficient rules through finite sums.  Two concrete
realizations connect the abstract ladder to classical analysis: Gaussian
weighted polynomials in L2(R) with exact rational arithmetic, and Fourier
coefficients of functions on the circle with rapid-decay diagnostics.
"""

from .dual import (
    STABILIZATION_EPS,
    STABILIZATION_WINDOW,
    DualFunctional,
    SeminormTrace,
    coordinate_functional,
    factorial_functional,
    ones_functional,
    pair,
    restrict_functional,
    riesz_functional,
    seminorm,
    seminorm_partial_sums,
)
from .errors import (
    AliasingError,
    CoconeViolationError,
    DiagnosticError,
    InsufficientDataError,
    LadderMismatchError,
    LadderSpecError,
    LevelOrderError,
    RiggedSpaceError,
)
from .fourier import (
    SAMPLERS,
    ParsevalResult,
    TorusFunctionSampler,
    coeffs_to_sequence,
    const_sampler,
    cosine_sampler,
    deinterleave,
    expcos_sampler,
    fourier_coeff,
    interleave,
    parseval_check,
    rapid_decay_report,
    sawtooth_sampler,
)
from .hermite import (
    DENSITY_TARGETS,
    ExactPolynomial,
    GaussianWeightedPoly,
    OrthonormalPolynomial,
    SqrtTwoPiScalar,
    density_diagnostic,
    double_factorial,
    embed_poly,
    gaussian_moment,
    gram_matrix,
    inner_product_weighted,
    orthonormal_basis,
    orthonormal_inner_exact,
    window_quadrature,
)
from .ladder import (
    CompletionContext,
    L2Vector,
    LadderContext,
    LadderSpec,
    LadderVector,
    LevelMapFamily,
    basis_vector,
    canonical_level,
    canonicalize,
    completion_of_ladder,
    embed_to_l2,
    finite_l2,
    geometric_l2,
    include,
    induce_map,
    inner_product,
    l2_inner_product,
    l2_norm,
    ladder_over_basis,
    n_for_tail_below,
    norm,
    phi_vector,
    power_law_l2,
    project,
    tail_norm,
)

__version__ = "0.1.0"
