"""Walk through the graded ladder: inclusions, projections, completion.

Run with: python demos/ladder_completion_demo.py
"""

import numpy as np

from rhs import (
    LadderSpec,
    LevelMapFamily,
    completion_of_ladder,
    geometric_l2,
    include,
    induce_map,
    inner_product,
    l2_norm,
    ladder_over_basis,
    n_for_tail_below,
    norm,
    phi_vector,
    power_law_l2,
    project,
    tail_norm,
)

# A ladder is a strictly increasing dimension sequence; level i is the span
# of the first alpha_i coordinates.  The default ladder has alpha_i = i.
identity = LadderSpec.identity()
even = LadderSpec.even()

x = phi_vector(identity, [1.0, 2.0])
print("x lives at level", x.level, "with coefficients", x.coeffs.real)

# Inclusion into a higher level pads with zeros and is an exact isometry.
x5 = include(x, 5)
print("included into level 5:", x5.coeffs.real)
print("norm before and after:", norm(x), norm(x5))

y = phi_vector(identity, [3.0, 4.0])
print("<x, y> =", inner_product(x, y).real,
      "  (same at any level:", inner_product(x5, include(y, 7)).real, ")")

# On the even ladder alpha_i = 2i, three coefficients need level 2.
p = phi_vector(even, [1.0, 2.0, 3.0])
print("\neven ladder: 3 coefficients land at level", p.level,
      "of dimension", even.dim(p.level))

# The completion is the square-summable coefficient space.  Elements outside
# the union of levels carry certified tail bounds; the geometric family has
# the exact closed-form tail r^(2n) / (1 - r^2).
g = geometric_l2(0.5)
print("\ngeometric family x_i = (1/2)^(i-1):")
print("  certified norm:", l2_norm(g))
for n in (1, 2, 5, 10):
    print(f"  ||x - P_{n} x|| = {tail_norm(g, n):.12e}")
print("  (these never vanish: the element is outside every level)")

# Truncations land back in the ladder; tails witness density of the union.
p3 = project(g, 3)
print("  P_3 x =", p3.coeffs.real, "at level", p3.level)
for eps in (1e-3, 1e-6):
    print(f"  tail below {eps:.0e} from n = {n_for_tail_below(g, eps)}")

slow = power_law_l2(1.0)
print("power family x_i = 1/i needs n =", n_for_tail_below(slow, 1e-3),
      "for the same 1e-3 tail")

# Pythagoras with the certified tail, exact for closed-form tails:
n = 4
lhs = norm(project(g, n)) ** 2 + tail_norm(g, n) ** 2
print("\nPythagoras check at n = 4:", lhs, "vs", l2_norm(g) ** 2)

# A compatible family of matrices (each map the column restriction of the
# next) induces a single map on the whole union.
fam = LevelMapFamily(identity, tuple(np.ones((1, i)) for i in range(1, 6)))
z = phi_vector(identity, [1.0, 2.0, 3.0])
print("\ncoordinate-sum family: induced value of (1,2,3) =",
      induce_map(fam, z).real)
print("same value from a padded presentation:",
      induce_map(fam, include(z, 5)).real)

# The two directions of the construction: a ladder over the standard basis,
# and its completion, agreeing on embedded vectors.
ctx = ladder_over_basis(identity)
comp = completion_of_ladder(ctx)
a, b = ctx.vector([1.0, 2.0]), ctx.vector([3.0, 4.0])
print("\ncompletion inner product of embeddings:",
      comp.inner_product(comp.from_ladder(a), comp.from_ladder(b)).real,
      "= graded inner product:", inner_product(a, b).real)
