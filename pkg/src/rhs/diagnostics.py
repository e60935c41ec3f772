"""Randomized invariant suites over the ladder and dual machinery.

Each property runs a number of seeded cases and reports the failure count
plus the worst residual seen, so a report shows both the verdict and the
numerical margin.  Cases are drawn from numpy's PCG64 generator; identical
seeds reproduce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dual import (
    DualFunctional,
    pair,
    restrict_functional,
    riesz_functional,
    seminorm,
)
from .errors import CoconeViolationError, LadderSpecError
from .ladder import (
    LadderSpec,
    LadderVector,
    LevelMapFamily,
    embed_to_l2,
    include,
    induce_map,
    inner_product,
    l2_norm,
    norm,
    project,
    tail_norm,
)

__all__ = ["PropertyResult", "run_axiom_suite", "random_vector", "random_family"]

REL_TOL = 1e-12
MAX_LEVEL = 8


@dataclass(frozen=True)
class PropertyResult:
    name: str
    cases: int
    failures: int
    max_residual: float


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _max_level(spec: LadderSpec, cap: int = MAX_LEVEL) -> int:
    return cap if spec.level_count is None else min(cap, spec.level_count)


def _rel(diff: float, scale: float) -> float:
    return diff / max(1.0, scale)


def random_vector(spec: LadderSpec, rng: np.random.Generator,
                  max_level: int = MAX_LEVEL) -> LadderVector:
    lvl = int(rng.integers(1, _max_level(spec, max_level) + 1))
    d = spec.dim(lvl)
    data = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return LadderVector(spec, lvl, data)


def random_functional(spec: LadderSpec, rng: np.random.Generator) -> DualFunctional:
    d = spec.dim(_max_level(spec)) + 8
    head = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    head.flags.writeable = False

    def rule(i: int, _h=head) -> complex:
        # beyond the sampled head, continue with deterministic polynomial growth
        return complex(_h[i - 1]) if i <= _h.size else complex(i * i)

    return DualFunctional(rule, label="random")


def random_family(spec: LadderSpec, rng: np.random.Generator,
                  max_target: int = 5, max_levels: int = MAX_LEVEL) -> LevelMapFamily:
    levels = int(rng.integers(2, _max_level(spec, max_levels) + 1))
    m = int(rng.integers(1, max_target + 1))
    top = rng.standard_normal((m, spec.dim(levels))) \
        + 1j * rng.standard_normal((m, spec.dim(levels)))
    return LevelMapFamily.from_top(spec, top, levels)


def corrupt_family(family: LevelMapFamily,
                   rng: np.random.Generator) -> tuple[LevelMapFamily, int]:
    """Perturb one early column of one higher-level map, breaking the
    restriction property at a known level."""
    target = int(rng.integers(2, family.level_count + 1))
    maps = [np.array(mp) for mp in family.maps]
    row = int(rng.integers(0, family.target_dim))
    col = int(rng.integers(0, maps[target - 2].shape[1]))
    maps[target - 1][row, col] += 1.0
    return LevelMapFamily.unchecked(family.ladder, maps), target


def run_axiom_suite(spec: LadderSpec, seed: int = 42, cases: int = 1000,
                    inject_cocone_fault: bool = False) -> list[PropertyResult]:
    """Run every ladder and dual-pairing property; list order is fixed so
    reports are stable.

    With ``inject_cocone_fault`` a deliberately corrupted map family is added
    as a final property whose measured restriction defect is reported as a
    failure, demonstrating the failure pathway of the report.
    """
    rng = _rng(seed)
    results: list[PropertyResult] = []
    small = max(1, cases // 10)

    top = _max_level(spec, MAX_LEVEL + 2)
    if top < 3:
        raise LadderSpecError("axiom suites need a ladder with at least 3 levels")

    # composition of inclusions is coefficient-exact
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng, max_level=top - 2)
        j = int(rng.integers(x.level + 1, top))
        k = int(rng.integers(j + 1, top + 1))
        a = include(include(x, j), k)
        b = include(x, k)
        if not np.array_equal(a.coeffs, b.coeffs):
            fails += 1
            worst = max(worst, float(np.abs(a.coeffs - b.coeffs).max()))
    results.append(PropertyResult("include_composition", cases, fails, worst))

    # inclusions preserve inner products
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        y = random_vector(spec, rng)
        j = int(rng.integers(max(x.level, y.level), top + 1))
        base = inner_product(x, y)
        lifted = inner_product(include(x, j), include(y, j))
        r = _rel(abs(lifted - base), abs(base))
        worst = max(worst, r)
        if r > REL_TOL:
            fails += 1
    results.append(PropertyResult("inclusion_isometry", cases, fails, worst))

    # the graded inner product is independent of the evaluation level
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        y = random_vector(spec, rng)
        j0 = max(x.level, y.level)
        vals = {inner_product(include(x, j), include(y, j))
                for j in (j0, min(j0 + 1, top), top)}
        if len(vals) != 1:
            fails += 1
            worst = max(worst, _rel(max(abs(a - b) for a in vals for b in vals), 1.0))
    results.append(PropertyResult("inner_product_well_defined", cases, fails, worst))

    # projection algebra: P_n P_m = P_min(n, m), idempotence, contraction
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        h = embed_to_l2(x)
        size = h.prefix.size
        mm = int(rng.integers(1, size + 1))
        nn = int(rng.integers(1, size + 1))
        once = project(h, mm, spec)
        twice = project(embed_to_l2(once), nn, spec)
        direct = project(h, min(mm, nn), spec)
        ok = twice == direct
        again = project(embed_to_l2(once), mm, spec)
        ok = ok and again == once
        if not norm(once) <= l2_norm(h):
            ok = False
        if not ok:
            fails += 1
            worst = max(worst, 1.0)
    results.append(PropertyResult("projection_algebra", cases, fails, worst))

    # norm splits exactly into head energy plus certified tail
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        h = embed_to_l2(x)
        nn = int(rng.integers(1, h.prefix.size + 1))
        head = norm(project(h, nn, spec))
        tail = tail_norm(h, nn)
        total = l2_norm(h)
        r = _rel(abs(head * head + tail * tail - total * total), total * total)
        worst = max(worst, r)
        if r > REL_TOL:
            fails += 1
    results.append(PropertyResult("pythagoras", cases, fails, worst))

    # nonzero vectors embed to positive norm
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        if x.support() == 0:
            continue
        if not l2_norm(embed_to_l2(x)) > 0.0:
            fails += 1
            worst = max(worst, 1.0)
    results.append(PropertyResult("embedding_injectivity", cases, fails, worst))

    # induced maps ignore the presentation level, bit-exactly
    fails, worst = 0, 0.0
    for _ in range(small):
        fam = random_family(spec, rng)
        for _ in range(10):
            x = random_vector(spec, rng, max_level=fam.level_count)
            j = int(rng.integers(x.level, fam.level_count + 1))
            a = induce_map(fam, include(x, j))
            b = induce_map(fam, x)
            if not np.array_equal(a, b):
                fails += 1
                worst = max(worst, float(np.abs(a - b).max()))
    results.append(PropertyResult("induced_map_presentation_invariance",
                                  small * 10, fails, worst))

    # raw matrix evaluation commutes with inclusion up to float regrouping
    fails, worst = 0, 0.0
    for _ in range(small):
        fam = random_family(spec, rng)
        for _ in range(10):
            x = random_vector(spec, rng, max_level=fam.level_count)
            j = int(rng.integers(x.level, fam.level_count + 1))
            hi = fam.maps[j - 1] @ include(x, j).coeffs
            lo = fam.maps[x.level - 1] @ x.coeffs
            scale = float(np.abs(lo).max()) if lo.size else 0.0
            r = _rel(float(np.abs(hi - lo).max()), scale)
            worst = max(worst, r)
            if r > REL_TOL:
                fails += 1
    results.append(PropertyResult("diagram_commutation", small * 10, fails, worst))

    # incompatible families are rejected, naming the offending level
    fails, worst = 0, 0.0
    for _ in range(small):
        fam = random_family(spec, rng)
        bad, level = corrupt_family(fam, rng)
        try:
            bad.check_compatibility()
        except CoconeViolationError as err:
            if err.level != level:
                fails += 1
                worst = max(worst, 1.0)
        else:
            fails += 1
            worst = max(worst, 1.0)
    results.append(PropertyResult("cocone_rejection", small, fails, worst))

    # pairing is linear
    fails, worst = 0, 0.0
    for _ in range(cases):
        f = random_functional(spec, rng)
        x = random_vector(spec, rng)
        y = random_vector(spec, rng)
        a = complex(rng.standard_normal() + 1j * rng.standard_normal())
        b = complex(rng.standard_normal() + 1j * rng.standard_normal())
        lhs = pair(f, a * x + b * y)
        rhs = a * pair(f, x) + b * pair(f, y)
        r = _rel(abs(lhs - rhs), abs(lhs))
        worst = max(worst, r)
        if r > REL_TOL:
            fails += 1
    results.append(PropertyResult("pairing_linearity", cases, fails, worst))

    # pairing ignores the presentation level
    fails, worst = 0, 0.0
    for _ in range(cases):
        f = random_functional(spec, rng)
        x = random_vector(spec, rng)
        j = int(rng.integers(x.level, top + 1))
        if pair(f, include(x, j)) != pair(f, x):
            fails += 1
            worst = max(worst, 1.0)
    results.append(PropertyResult("pairing_level_consistency", cases, fails, worst))

    # |<f, x>| <= ||f restricted to level(x)|| * ||x||
    fails, worst = 0, 0.0
    for _ in range(cases):
        f = random_functional(spec, rng)
        x = random_vector(spec, rng)
        _, opnorm = restrict_functional(f, x.level, spec)
        bound = opnorm * norm(x)
        val = abs(pair(f, x))
        excess = _rel(val - bound, bound)
        worst = max(worst, max(excess, 0.0))
        if val > bound * (1.0 + REL_TOL):
            fails += 1
    results.append(PropertyResult("restriction_bound", cases, fails, worst))

    # pairing against a riesz functional reproduces the inner product
    fails, worst = 0, 0.0
    for _ in range(cases):
        x = random_vector(spec, rng)
        y = random_vector(spec, rng)
        lhs = pair(riesz_functional(y), x)
        rhs = inner_product(x, y)
        r = _rel(abs(lhs - rhs), abs(rhs))
        worst = max(worst, r)
        if r > REL_TOL:
            fails += 1
    results.append(PropertyResult("riesz_compatibility", cases, fails, worst))

    # weighted seminorms: k = 0 is the l2 norm and the family is monotone in k
    fails, worst = 0, 0.0
    for _ in range(cases):
        d = int(rng.integers(1, spec.dim(_max_level(spec)) + 1))
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        q0 = seminorm(v, 0)
        ref = float(np.linalg.norm(v))
        r = _rel(abs(q0 - ref), ref)
        worst = max(worst, r)
        ok = r <= REL_TOL
        qs = [seminorm(v, k) for k in range(4)]
        ok = ok and all(qs[k] <= qs[k + 1] for k in range(3))
        if not ok:
            fails += 1
    results.append(PropertyResult("seminorm_q0_and_ordering", cases, fails, worst))

    if inject_cocone_fault:
        fam = random_family(spec, rng)
        bad, _ = corrupt_family(fam, rng)
        defect = bad.restriction_defect()
        results.append(PropertyResult("injected_cocone_fault", 1, 1, defect))

    return results
