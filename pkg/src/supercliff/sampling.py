"""Seeded random instances for the verification suites.

Subspaces come from orthonormalized Gaussian matrices and multivectors
from independent complex Gaussian coefficients normalized in coefficient
norm, so every residual tolerance applies to unit-scale inputs. Streams
are derived deterministically from integer keys.
"""

from __future__ import annotations

import numpy as np

from .algebra import Multivector, from_coeff_array
from .expectation import SubalgebraBasis, generated_subalgebra
from .subspaces import Subspace, from_spanning, orthocomplement, project_subspace

Rng = np.random.Generator


def rng_from(*key: int) -> Rng:
    return np.random.default_rng(np.random.SeedSequence(list(key)))


def random_multivector(rng: Rng, dim: int, normalize: bool = True) -> Multivector:
    size = 1 << dim
    coeffs = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    if normalize:
        coeffs /= np.linalg.norm(coeffs)
    return from_coeff_array(dim, coeffs)


def random_unit(rng: Rng, dim: int) -> np.ndarray:
    while True:
        v = rng.standard_normal(dim)
        nrm = np.linalg.norm(v)
        if nrm > 1e-6:
            break
    v /= nrm
    # one explicit renormalization pins the norm to machine precision
    return v / np.linalg.norm(v)


def random_subspace(rng: Rng, dim: int, k: int | None = None) -> Subspace:
    if k is None:
        k = int(rng.integers(0, dim + 1))
    if k == 0:
        return Subspace.zero(dim)
    return from_spanning(rng.standard_normal((k, dim)), dim_ambient=dim)


def random_orthogonal(rng: Rng, k: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((k, k)))
    return q * np.sign(np.diag(r))


def random_in_span(rng: Rng, basis: SubalgebraBasis, normalize: bool = True) -> Multivector:
    if len(basis) == 0:
        return Multivector.zero(basis.dim_ambient)
    weights = rng.standard_normal(len(basis)) + 1j * rng.standard_normal(len(basis))
    coeffs = weights @ basis.coeff_matrix
    if normalize:
        coeffs /= np.linalg.norm(coeffs)
    return from_coeff_array(basis.dim_ambient, coeffs)


def random_generated_element(rng: Rng, support: Subspace) -> Multivector:
    """A normalized random element of the subalgebra generated by a subspace."""
    return random_in_span(rng, generated_subalgebra(support))


def random_stabilization_instance(
    rng: Rng, dim: int
) -> tuple[Multivector, list[Subspace]]:
    """A multivector of limited support plus an ascending chain whose flag
    passes through the stabilization threshold inside the chain's top."""
    z = random_subspace(rng, dim)
    support = random_subspace(rng, dim)
    c = random_generated_element(rng, support)
    if z.dim == 0:
        return c, [z]
    threshold = project_subspace(z, support)
    # complement of the threshold inside Z; prefixes give a flag through it
    inside = project_subspace(z, orthocomplement(threshold))
    ordered = np.vstack([threshold.basis, inside.basis])
    chain = [from_spanning(ordered[:i], dim_ambient=dim) for i in range(1, len(ordered) + 1)]
    return c, chain
