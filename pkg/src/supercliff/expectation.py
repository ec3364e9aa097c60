"""Projectors, conditional expectations, supercommutants and the C* norm.

The single-direction projector along a unit vector u is
E_u(c) = (c + u gamma(c) u) / 2, which kills the u C(u-perp) component of
the decomposition C(V) = C(u-perp) + u C(u-perp). Conditional expectations
onto C(Z-perp) are products of these projectors over an orthonormal basis
of Z. The supercommutant of C(Z) is the solution space of the linear
system z a = gamma(a) z over the blade-coefficient space, and the C* norm
is the operator norm of left multiplication with blades orthonormal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .algebra import (
    DimensionMismatch,
    Multivector,
    RealVector,
    add,
    blade_product,
    coeff_array,
    embed_vector,
    from_coeff_array,
    gamma,
    max_coeff_diff,
    mul,
    scale,
    sub,
)
from .subspaces import (
    EPS_ORTH,
    EPS_RANK,
    Subspace,
    orthocomplement,
    project_subspace,
    subspace_contains,
)

EPS_EQ = 1e-8
REP_DIM_CAP = 8  # 2^8 x 2^8 matrices by default; pass max_dim to override


def _check_rep_dim(dim: int, max_dim: int) -> None:
    if dim > max_dim:
        raise ValueError(
            f"ambient dimension {dim} above representation cap {max_dim}; "
            "pass max_dim to override"
        )


@lru_cache(maxsize=None)
def _popcounts(dim: int) -> np.ndarray:
    masks = np.arange(1 << dim)
    pop = np.zeros(1 << dim, dtype=np.int64)
    for i in range(dim):
        pop += (masks >> i) & 1
    pop.flags.writeable = False
    return pop


@lru_cache(maxsize=None)
def _gamma_signs(dim: int) -> np.ndarray:
    signs = np.where(_popcounts(dim) & 1, -1.0, 1.0)
    signs.flags.writeable = False
    return signs


@lru_cache(maxsize=None)
def _sign_table(dim: int) -> np.ndarray:
    """Full 2^n x 2^n table of blade-product signs, batching blade_product."""
    size = 1 << dim
    table = np.empty((size, size), dtype=np.int8)
    for a in range(size):
        table[a] = [blade_product(a, b)[1] for b in range(size)]
    table.flags.writeable = False
    return table


def _vector_left_apply(dim: int, v: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficients of (sum_i v_i e_i) * x for x given as a coefficient vector."""
    masks = np.arange(1 << dim)
    table = _sign_table(dim)
    out = np.zeros_like(coeffs)
    for i, comp in enumerate(v):
        if comp != 0:
            bit = 1 << i
            out[masks ^ bit] += comp * table[bit, masks] * coeffs
    return out


def _vector_right_apply(dim: int, v: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficients of x * (sum_i v_i e_i) for x given as a coefficient vector."""
    masks = np.arange(1 << dim)
    table = _sign_table(dim)
    out = np.zeros_like(coeffs)
    for i, comp in enumerate(v):
        if comp != 0:
            bit = 1 << i
            out[masks ^ bit] += comp * table[masks, bit] * coeffs
    return out


def _vector_mult_matrices(dim: int, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dense matrices of left and right multiplication by a real vector."""
    size = 1 << dim
    masks = np.arange(size)
    table = _sign_table(dim)
    left = np.zeros((size, size))
    right = np.zeros((size, size))
    for i, comp in enumerate(v):
        if comp != 0:
            bit = 1 << i
            left[masks ^ bit, masks] += comp * table[bit, masks]
            right[masks ^ bit, masks] += comp * table[masks, bit]
    return left, right


@dataclass(frozen=True, eq=False)
class SubalgebraBasis:
    """A linear span inside C(V): elements plus their blade-coefficient rows."""

    dim_ambient: int
    elements: tuple[Multivector, ...]
    coeff_matrix: np.ndarray  # shape (len(elements), 2^n)

    def __post_init__(self) -> None:
        matrix = np.array(self.coeff_matrix, dtype=complex)
        size = 1 << self.dim_ambient
        if matrix.size == 0:
            matrix = matrix.reshape(0, size)
        if matrix.ndim != 2 or matrix.shape != (len(self.elements), size):
            raise ValueError(
                f"coefficient matrix shape {matrix.shape} does not match "
                f"{len(self.elements)} elements in dimension {self.dim_ambient}"
            )
        if len(self.elements) and _numerical_rank(matrix) != len(self.elements):
            raise ValueError("elements are not linearly independent at EPS_RANK")
        matrix.flags.writeable = False
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "coeff_matrix", matrix)

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def from_elements(
        cls, dim_ambient: int, elements: Sequence[Multivector]
    ) -> "SubalgebraBasis":
        matrix = np.array(
            [coeff_array(e) for e in elements], dtype=complex
        ).reshape(len(elements), 1 << dim_ambient)
        return cls(dim_ambient, tuple(elements), matrix)

    @classmethod
    def from_coeff_matrix(cls, dim_ambient: int, matrix: np.ndarray) -> "SubalgebraBasis":
        matrix = np.asarray(matrix, dtype=complex)
        elements = tuple(from_coeff_array(dim_ambient, row) for row in matrix)
        return cls(dim_ambient, elements, matrix)


def _numerical_rank(matrix: np.ndarray, eps_rank: float = EPS_RANK) -> int:
    if matrix.shape[0] == 0:
        return 0
    # fast path: both construction routes here produce orthonormal rows
    gram = matrix @ matrix.conj().T
    if np.abs(gram - np.eye(len(matrix))).max() <= EPS_EQ:
        return len(matrix)
    svals = np.linalg.svd(matrix, compute_uv=False)
    return int(np.count_nonzero(svals > eps_rank * max(1.0, svals[0])))


def _orthonormal_rows(matrix: np.ndarray, eps_rank: float = EPS_RANK) -> np.ndarray:
    """Orthonormal basis of the row span (Hermitian inner product)."""
    if matrix.shape[0] == 0:
        return matrix
    gram = matrix @ matrix.conj().T
    if np.abs(gram - np.eye(len(matrix))).max() <= EPS_EQ:
        return matrix
    _, svals, vh = np.linalg.svd(matrix, full_matrices=False)
    return vh[svals > eps_rank * max(1.0, svals[0])]


def _row_span_complement(matrix: np.ndarray, size: int) -> np.ndarray:
    """Orthonormal basis of the Hermitian orthocomplement of the row span."""
    if matrix.shape[0] == 0:
        return np.eye(size, dtype=complex)
    _, svals, vh = np.linalg.svd(matrix, full_matrices=True)
    rank = int(np.count_nonzero(svals > EPS_RANK * max(1.0, svals[0])))
    return vh[rank:]


def expect_unit(u: RealVector, c: Multivector) -> Multivector:
    """Projector onto C(u-perp) along u C(u-perp): (c + u gamma(c) u) / 2."""
    arr = np.asarray(u, dtype=float)
    if abs(np.linalg.norm(arr) - 1.0) > EPS_ORTH:
        raise ValueError("u must be a unit vector")
    u_mv = embed_vector(arr)
    return scale(0.5, add(c, mul(mul(u_mv, gamma(c)), u_mv)))


def decompose_along(u: RealVector, c: Multivector) -> tuple[Multivector, Multivector]:
    """Split c = a + u b with a, b in C(u-perp); returns (a, b)."""
    a = expect_unit(u, c)
    b = mul(embed_vector(np.asarray(u, dtype=float)), sub(c, a))
    return a, b


def expect_subspace(z: Subspace, c: Multivector) -> Multivector:
    """Conditional expectation onto C(Z-perp): the product of the E_u over
    an orthonormal basis of Z (the projectors commute, so order is moot)."""
    if z.dim_ambient != c.dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {z.dim_ambient} vs {c.dim}"
        )
    out = c
    for row in z.basis:
        out = expect_unit(row, out)
    return out


def generated_subalgebra(
    z: Subspace, *, max_dim: int = REP_DIM_CAP
) -> SubalgebraBasis:
    """The 2^k products of subsets of Z's orthonormal basis (k = dim Z)."""
    n = z.dim_ambient
    _check_rep_dim(n, max_dim)
    k = z.dim
    size = 1 << n
    rows = np.zeros((1 << k, size), dtype=complex)
    rows[0, 0] = 1.0
    for subset in range(1, 1 << k):
        low = (subset & -subset).bit_length() - 1
        rows[subset] = _vector_left_apply(n, z.basis[low], rows[subset & (subset - 1)])
    return SubalgebraBasis.from_coeff_matrix(n, rows)


def supercommutant(
    z: Subspace, *, eps_rank: float = EPS_RANK, max_dim: int = REP_DIM_CAP
) -> SubalgebraBasis:
    """Basis of {a : z a = gamma(a) z for all z in Z}.

    Solves the stacked linear constraints over the 2^n coefficient space
    through the eigendecomposition of their Gram matrix. The Gram is four
    times a sum of commuting orthogonal projections, so its spectrum is
    contained in {0, 4, 8, ...}: the kernel is separated from the rest by
    a gap of at least 4, which makes the eps_rank cutoff exact.
    """
    n = z.dim_ambient
    _check_rep_dim(n, max_dim)
    size = 1 << n
    if z.dim == 0:
        return SubalgebraBasis.from_coeff_matrix(n, np.eye(size, dtype=complex))
    gam = _gamma_signs(n)
    gram = np.zeros((size, size))
    for row in z.basis:
        left, right = _vector_mult_matrices(n, row)
        constraint = left - right * gam[np.newaxis, :]
        gram += constraint.T @ constraint
    eigvals, eigvecs = np.linalg.eigh(gram)
    kernel = eigvecs[:, eigvals <= eps_rank]
    return SubalgebraBasis.from_coeff_matrix(n, kernel.T.astype(complex))


def span_containment_residual(
    a: SubalgebraBasis, b: SubalgebraBasis, eps_rank: float = EPS_RANK
) -> float:
    """Largest residual of B's basis after projection onto the span of A."""
    if a.dim_ambient != b.dim_ambient:
        raise ValueError("ambient dimensions differ")
    if len(b) == 0:
        return 0.0
    qa = _orthonormal_rows(a.coeff_matrix, eps_rank)
    rows = b.coeff_matrix / np.linalg.norm(b.coeff_matrix, axis=1, keepdims=True)
    residual = rows - (rows @ qa.conj().T) @ qa
    return float(np.linalg.norm(residual, axis=1).max())


def span_contains(
    a: SubalgebraBasis, b: SubalgebraBasis, eps_rank: float = EPS_RANK
) -> bool:
    return span_containment_residual(a, b, eps_rank) <= eps_rank


def span_equal(
    a: SubalgebraBasis, b: SubalgebraBasis, eps_rank: float = EPS_RANK
) -> bool:
    """Mutual containment of the row spans of the coefficient matrices."""
    return span_contains(a, b, eps_rank) and span_contains(b, a, eps_rank)


def span_intersect(
    bases: Sequence[SubalgebraBasis], *, dim_ambient: int | None = None
) -> SubalgebraBasis:
    """Intersection of spans in coefficient space by complement-of-sum."""
    bases = list(bases)
    if not bases:
        if dim_ambient is None:
            raise ValueError("dim_ambient is required for an empty intersection")
        return SubalgebraBasis.from_coeff_matrix(
            dim_ambient, np.eye(1 << dim_ambient, dtype=complex)
        )
    n = bases[0].dim_ambient
    for b in bases[1:]:
        if b.dim_ambient != n:
            raise ValueError("ambient dimensions differ")
    size = 1 << n
    complements = np.vstack([_row_span_complement(b.coeff_matrix, size) for b in bases])
    summed = _orthonormal_rows(complements)
    return SubalgebraBasis.from_coeff_matrix(n, _row_span_complement(summed, size))


def left_regular(c: Multivector, *, max_dim: int = REP_DIM_CAP) -> np.ndarray:
    """Matrix of x -> c x in blade coordinates; a faithful star-preserving
    representation whose operator norm is the C* norm."""
    _check_rep_dim(c.dim, max_dim)
    size = 1 << c.dim
    masks = np.arange(size)
    table = _sign_table(c.dim)
    matrix = np.zeros((size, size), dtype=complex)
    for mask, coeff in c.coeffs.items():
        matrix[mask ^ masks, masks] += coeff * table[mask, masks]
    return matrix


def norm(c: Multivector, *, max_dim: int = REP_DIM_CAP) -> float:
    """The C* norm: largest singular value of the left-regular matrix."""
    if not c.coeffs:
        return 0.0
    svals = np.linalg.svd(left_regular(c, max_dim=max_dim), compute_uv=False)
    return float(svals[0])


def is_positive(
    c: Multivector, eps: float = EPS_EQ, *, max_dim: int = REP_DIM_CAP
) -> bool:
    """Positivity in C(V): the representation matrix is Hermitian within
    eps with minimum eigenvalue >= -eps."""
    matrix = left_regular(c, max_dim=max_dim)
    if np.abs(matrix - matrix.conj().T).max() > eps:
        return False
    eigvals = np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)
    return bool(eigvals[0] >= -eps)


def support_space(c: Multivector, eps_rank: float = EPS_RANK) -> Subspace:
    """Smallest subspace M with c in C(M).

    A direction v satisfies v c = gamma(c) v exactly when c lies in
    C(v-perp); those directions form the kernel of a linear map on V, and
    the support is its orthocomplement.
    """
    n = c.dim
    if not c.coeffs or n == 0:
        return Subspace.zero(n)
    coeffs = coeff_array(c)
    coeffs = coeffs / np.linalg.norm(coeffs)
    gam_coeffs = coeffs * _gamma_signs(n)
    columns = np.empty((1 << n, n), dtype=complex)
    for i in range(n):
        basis_vec = np.zeros(n)
        basis_vec[i] = 1.0
        columns[:, i] = _vector_left_apply(n, basis_vec, coeffs) - _vector_right_apply(
            n, basis_vec, gam_coeffs
        )
    stacked = np.vstack([columns.real, columns.imag])
    _, svals, vh = np.linalg.svd(stacked, full_matrices=True)
    rank = int(np.count_nonzero(svals > eps_rank * max(1.0, svals[0])))
    commuting_directions = Subspace(n, vh[rank:])
    return orthocomplement(commuting_directions)


def verify_net_stabilization(
    c: Multivector, chain: Sequence[Subspace], tol: float = EPS_EQ
) -> bool:
    """Check that E_N(c) is constant along an ascending chain once N
    contains the projection onto the chain's top of the support of c."""
    chain = list(chain)
    for prev, nxt in zip(chain, chain[1:]):
        if not subspace_contains(nxt, prev):
            raise ValueError("chain is not ascending under containment")
    if not chain:
        return True
    top = chain[-1]
    threshold = project_subspace(top, support_space(c))
    reference = expect_subspace(threshold, c)
    for n_sub in chain:
        if subspace_contains(n_sub, threshold):
            if max_coeff_diff(expect_subspace(n_sub, c), reference) > tol:
                return False
    return True
