"""Seeded randomized verification of the structural theorems.

Each suite is a list of named residual checks; a trial draws a fresh
instance from a stream derived from (seed, property index, trial index)
and reports the observed residual against the property's documented
tolerance. Reports are deterministic given (suite, seed, dim, trials).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .algebra import (
    embed_vector,
    gamma,
    max_coeff_diff,
    mul,
    star,
)
from .expectation import (
    expect_subspace,
    expect_unit,
    generated_subalgebra,
    left_regular,
    norm,
    span_containment_residual,
    span_intersect,
    supercommutant,
    support_space,
)
from .sampling import (
    Rng,
    random_in_span,
    random_multivector,
    random_orthogonal,
    random_stabilization_instance,
    random_subspace,
    rng_from,
)
from .subspaces import (
    Subspace,
    from_spanning,
    intersect,
    orthocomplement,
    project_subspace,
    projector,
    subspace_contains,
    sum_subspaces,
)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passes: int
    failures: int
    max_residual: float
    tolerance: float


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    dim: int
    trials: int
    properties: tuple[PropertyResult, ...]

    @property
    def ok(self) -> bool:
        return all(p.failures == 0 for p in self.properties)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "dim": self.dim,
            "trials": self.trials,
            "properties": [asdict(p) for p in self.properties],
        }


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    tolerance: float
    trial: Callable[[Rng, int], float]


def _mutual_span_residual(a, b) -> float:
    if len(a) != len(b):
        return 1.0
    return max(span_containment_residual(a, b), span_containment_residual(b, a))


# --- duality ------------------------------------------------------------------


def _twisted_duality(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    return _mutual_span_residual(
        supercommutant(z), generated_subalgebra(orthocomplement(z))
    )


def _supercommutant_dimension(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    return float(abs(len(supercommutant(z)) - 2 ** (dim - z.dim)))


def _easy_inclusion(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    if z.dim == 0:
        return 0.0
    a = random_in_span(rng, generated_subalgebra(orthocomplement(z)))
    worst = 0.0
    for row in z.basis:
        zv = embed_vector(row)
        worst = max(worst, max_coeff_diff(mul(zv, a), mul(gamma(a), zv)))
    return worst


# --- conditional expectations ---------------------------------------------------


def _conditional_expectation(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    target = generated_subalgebra(orthocomplement(z))
    ell = random_in_span(rng, target)
    r = random_in_span(rng, target)
    c = random_multivector(rng, dim)
    lhs = expect_subspace(z, mul(mul(ell, c), r))
    rhs = mul(mul(ell, expect_subspace(z, c)), r)
    return max_coeff_diff(lhs, rhs)


def _contractivity(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    c = random_multivector(rng, dim)
    return max(0.0, norm(expect_subspace(z, c)) - norm(c))


def _projector_commutation(rng: Rng, dim: int) -> float:
    if dim < 2:
        return 0.0
    u, w = random_subspace(rng, dim, 2).basis
    c = random_multivector(rng, dim)
    return max_coeff_diff(
        expect_unit(u, expect_unit(w, c)), expect_unit(w, expect_unit(u, c))
    )


def _basis_independence(rng: Rng, dim: int) -> float:
    k = int(rng.integers(1, dim + 1))
    z = random_subspace(rng, dim, k)
    rotated = Subspace(dim, random_orthogonal(rng, k) @ z.basis)
    c = random_multivector(rng, dim)
    return max_coeff_diff(expect_subspace(z, c), expect_subspace(rotated, c))


def _idempotence(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    image = expect_subspace(z, random_multivector(rng, dim))
    return max_coeff_diff(expect_subspace(z, image), image)


def _fixed_points(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    a = random_in_span(rng, supercommutant(z))
    return max_coeff_diff(expect_subspace(z, a), a)


def _star_preservation(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    c = random_multivector(rng, dim)
    return max_coeff_diff(
        expect_subspace(z, star(c)), star(expect_subspace(z, c))
    )


def _positivity_preservation(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    c = random_multivector(rng, dim)
    rep = left_regular(expect_subspace(z, mul(star(c), c)))
    hermitian_dev = float(np.abs(rep - rep.conj().T).max())
    eigs = np.linalg.eigvalsh((rep + rep.conj().T) / 2)
    return max(hermitian_dev, max(0.0, -float(eigs[0])))


# --- intersection and the subspace lattice --------------------------------------


def _random_family(rng: Rng, dim: int) -> list[Subspace]:
    count = int(rng.integers(2, 4))
    if rng.random() < 0.5:
        # plant a shared core so intersections are nontrivial
        core = random_subspace(rng, dim)
        family = []
        for _ in range(count):
            extra = rng.standard_normal((int(rng.integers(0, dim + 1)), dim))
            stacked = np.vstack([core.basis, extra])
            family.append(from_spanning(stacked, dim_ambient=dim))
        return family
    return [random_subspace(rng, dim) for _ in range(count)]


def _intersection_theorem(rng: Rng, dim: int) -> float:
    family = _random_family(rng, dim)
    lhs = span_intersect([generated_subalgebra(z) for z in family])
    rhs = generated_subalgebra(intersect(family))
    return _mutual_span_residual(lhs, rhs)


def _hilbert_identity(rng: Rng, dim: int) -> float:
    family = _random_family(rng, dim)
    lhs = sum_subspaces([orthocomplement(z) for z in family])
    rhs = orthocomplement(intersect(family))
    return float(np.abs(projector(lhs) - projector(rhs)).max())


def _complement_involution(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    again = orthocomplement(orthocomplement(z))
    return float(np.abs(projector(again) - projector(z)).max())


def _dimension_sum(rng: Rng, dim: int) -> float:
    z = random_subspace(rng, dim)
    return float(abs(z.dim + orthocomplement(z).dim - dim))


def _gram_schmidt_contract(rng: Rng, dim: int) -> float:
    count = int(rng.integers(1, dim + 3))
    vectors = rng.standard_normal((count, dim))
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    if count >= 2 and rng.random() < 0.5:
        vectors[-1] = vectors[0]  # force a dependent input
    z = from_spanning(vectors)
    orth_dev = 0.0
    if z.dim:
        orth_dev = float(np.abs(z.basis @ z.basis.T - np.eye(z.dim)).max())
    coverage = vectors - vectors @ projector(z)
    return max(orth_dev, float(np.linalg.norm(coverage, axis=1).max()))


# --- net stabilization -----------------------------------------------------------


def _net_stabilization(rng: Rng, dim: int) -> float:
    c, chain = random_stabilization_instance(rng, dim)
    top = chain[-1]
    threshold = project_subspace(top, support_space(c))
    reference = expect_subspace(threshold, c)
    worst = 0.0
    for step in chain:
        if subspace_contains(step, threshold):
            worst = max(worst, max_coeff_diff(expect_subspace(step, c), reference))
    return worst


# --- the C* property --------------------------------------------------------------


def _cstar_identity(rng: Rng, dim: int) -> float:
    c = random_multivector(rng, dim)
    squared = norm(c) ** 2
    return abs(norm(mul(star(c), c)) - squared) / squared


def _star_isometry(rng: Rng, dim: int) -> float:
    c = random_multivector(rng, dim)
    return abs(norm(star(c)) - norm(c))


def _submultiplicativity(rng: Rng, dim: int) -> float:
    c = random_multivector(rng, dim)
    d = random_multivector(rng, dim)
    return max(0.0, norm(mul(c, d)) - norm(c) * norm(d))


def _representation_star(rng: Rng, dim: int) -> float:
    c = random_multivector(rng, dim)
    rep = left_regular(c)
    return float(np.abs(left_regular(star(c)) - rep.conj().T).max())


def _positivity_of_squares(rng: Rng, dim: int) -> float:
    c = random_multivector(rng, dim)
    rep = left_regular(mul(star(c), c))
    eigs = np.linalg.eigvalsh((rep + rep.conj().T) / 2)
    return max(0.0, -float(eigs[0]))


_SUITE_CHECKS: dict[str, list[PropertyCheck]] = {
    "duality": [
        PropertyCheck("twisted_duality", 1e-8, _twisted_duality),
        PropertyCheck("supercommutant_dimension", 0.0, _supercommutant_dimension),
        PropertyCheck("easy_inclusion", 1e-8, _easy_inclusion),
    ],
    "expectation": [
        PropertyCheck("conditional_expectation", 1e-8, _conditional_expectation),
        PropertyCheck("contractivity", 1e-8, _contractivity),
        PropertyCheck("projector_commutation", 1e-8, _projector_commutation),
        PropertyCheck("basis_independence", 1e-8, _basis_independence),
        PropertyCheck("idempotence", 1e-8, _idempotence),
        PropertyCheck("fixed_points", 1e-8, _fixed_points),
        PropertyCheck("star_preservation", 1e-8, _star_preservation),
        PropertyCheck("positivity_preservation", 1e-8, _positivity_preservation),
    ],
    "intersection": [
        PropertyCheck("intersection_theorem", 1e-8, _intersection_theorem),
        PropertyCheck("hilbert_identity", 1e-8, _hilbert_identity),
        PropertyCheck("complement_involution", 1e-8, _complement_involution),
        PropertyCheck("dimension_sum", 0.0, _dimension_sum),
        PropertyCheck("gram_schmidt_contract", 1e-9, _gram_schmidt_contract),
    ],
    "stabilization": [
        PropertyCheck("net_stabilization", 1e-8, _net_stabilization),
    ],
    "cstar": [
        PropertyCheck("cstar_identity", 1e-7, _cstar_identity),
        PropertyCheck("star_isometry", 1e-8, _star_isometry),
        PropertyCheck("submultiplicativity", 1e-8, _submultiplicativity),
        PropertyCheck("representation_star", 1e-8, _representation_star),
        PropertyCheck("positivity_of_squares", 1e-8, _positivity_of_squares),
    ],
}

SUITE_NAMES = (*_SUITE_CHECKS, "all")


def suite_checks(suite: str) -> list[PropertyCheck]:
    if suite == "all":
        return [check for checks in _SUITE_CHECKS.values() for check in checks]
    try:
        return list(_SUITE_CHECKS[suite])
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}") from None


def run_suite(suite: str, dim: int, trials: int, seed: int) -> VerificationReport:
    """Run every check of a suite for the given number of seeded trials."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for prop_index, check in enumerate(suite_checks(suite)):
        passes = failures = 0
        max_residual = 0.0
        for trial in range(trials):
            rng = rng_from(seed, prop_index, trial)
            residual = float(check.trial(rng, dim))
            max_residual = max(max_residual, residual)
            if residual <= check.tolerance:
                passes += 1
            else:
                failures += 1
        results.append(
            PropertyResult(check.name, passes, failures, max_residual, check.tolerance)
        )
    return VerificationReport(suite, seed, dim, trials, tuple(results))


def render_text(report: VerificationReport) -> str:
    lines = [
        f"suite={report.suite} dim={report.dim} trials={report.trials} "
        f"seed={report.seed}"
    ]
    for prop in report.properties:
        status = "PASS" if prop.failures == 0 else "FAIL"
        lines.append(
            f"  {prop.name:<26} {prop.passes:>4}/{prop.passes + prop.failures:<4} "
            f"max_residual={prop.max_residual:.3e} tolerance={prop.tolerance:.1e} "
            f"{status}"
        )
    lines.append(f"overall: {'PASS' if report.ok else 'FAIL'}")
    return "\n".join(lines)
