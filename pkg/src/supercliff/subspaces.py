"""The lattice of subspaces of R^n, each stored as an orthonormal basis.

Finite dimension makes every subspace closed, so complements, sums and
intersections are exact lattice operations here. Intersections reuse the
Hilbert-space identity: the intersection is the orthocomplement of the
sum of orthocomplements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import RealVector

EPS_ORTH = 1e-10  # orthonormality tolerance for stored bases
EPS_RANK = 1e-9  # Gram-Schmidt pivot acceptance / rank threshold
EPS_EQ = 1e-8  # projector-matrix comparison tolerance


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of R^n given by rows of a pairwise-orthonormal basis."""

    dim_ambient: int
    basis: np.ndarray  # shape (k, n)

    def __post_init__(self) -> None:
        basis = np.array(self.basis, dtype=float)
        if basis.size == 0:
            basis = basis.reshape(0, self.dim_ambient)
        if basis.ndim != 2 or basis.shape[1] != self.dim_ambient:
            raise ValueError(
                f"basis shape {basis.shape} does not match ambient dimension "
                f"{self.dim_ambient}"
            )
        if basis.shape[0] > self.dim_ambient:
            raise ValueError("more basis vectors than ambient dimensions")
        if basis.shape[0]:
            gram = basis @ basis.T
            if np.abs(gram - np.eye(len(basis))).max() > EPS_ORTH:
                raise ValueError("basis rows are not orthonormal within EPS_ORTH")
        basis.flags.writeable = False
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @classmethod
    def zero(cls, dim_ambient: int) -> "Subspace":
        return cls(dim_ambient, np.zeros((0, dim_ambient)))

    @classmethod
    def full(cls, dim_ambient: int) -> "Subspace":
        return cls(dim_ambient, np.eye(dim_ambient))

    @classmethod
    def span(cls, *vectors: RealVector) -> "Subspace":
        return from_spanning(list(vectors))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.dim_ambient != b.dim_ambient:
        raise ValueError(
            f"ambient dimensions differ: {a.dim_ambient} vs {b.dim_ambient}"
        )


def from_spanning(
    vectors: Sequence[RealVector],
    eps_rank: float = EPS_RANK,
    *,
    dim_ambient: int | None = None,
) -> Subspace:
    """Orthonormalize a spanning list by modified Gram-Schmidt with pivoting.

    At each step the remaining vector with the largest residual norm is
    accepted; once the largest residual drops to ``eps_rank`` the rest are
    dropped. Empty input yields the zero subspace (``dim_ambient`` is then
    required).
    """
    rows = [np.asarray(v, dtype=float) for v in vectors]
    if not rows:
        if dim_ambient is None:
            raise ValueError("dim_ambient is required for an empty spanning list")
        return Subspace.zero(dim_ambient)
    n = rows[0].shape[0] if dim_ambient is None else dim_ambient
    work = np.array(rows, dtype=float)
    if work.ndim != 2 or work.shape[1] != n:
        raise ValueError("spanning vectors must share one ambient dimension")
    accepted: list[np.ndarray] = []
    active = np.ones(len(work), dtype=bool)
    while active.any():
        norms = np.linalg.norm(work, axis=1)
        norms[~active] = -1.0
        pick = int(np.argmax(norms))
        if norms[pick] <= eps_rank:
            break
        q = work[pick] / norms[pick]
        # one reorthogonalization pass keeps the basis orthonormal to
        # machine precision instead of EPS-ish drift
        for b in accepted:
            q -= (b @ q) * b
        q /= np.linalg.norm(q)
        accepted.append(q)
        active[pick] = False
        work = work - np.outer(work @ q, q)
    if not accepted:
        return Subspace.zero(n)
    return Subspace(n, np.array(accepted))


def projector(z: Subspace) -> np.ndarray:
    """The n x n orthogonal projector matrix onto the subspace."""
    return z.basis.T @ z.basis


def orthocomplement(z: Subspace) -> Subspace:
    """The orthogonal complement, with dim Z + dim Z-perp = n exactly."""
    n = z.dim_ambient
    if z.dim == 0:
        return Subspace.full(n)
    _, _, vh = np.linalg.svd(z.basis, full_matrices=True)
    return Subspace(n, vh[z.dim :])


def project(z: Subspace, v: RealVector) -> np.ndarray:
    """Orthogonal projection of a vector onto the subspace."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (z.dim_ambient,):
        raise ValueError("vector length does not match ambient dimension")
    return z.basis.T @ (z.basis @ arr)


def project_subspace(z: Subspace, m: Subspace, eps_rank: float = EPS_RANK) -> Subspace:
    """Orthogonal projection of the subspace M onto Z."""
    _check_ambient(z, m)
    projected = [project(z, row) for row in m.basis]
    return from_spanning(projected, eps_rank, dim_ambient=z.dim_ambient)


def sum_subspaces(
    subspaces: Sequence[Subspace], *, dim_ambient: int | None = None
) -> Subspace:
    """Span of the union; the empty sum is the zero subspace."""
    subspaces = list(subspaces)
    if not subspaces:
        if dim_ambient is None:
            raise ValueError("dim_ambient is required for an empty sum")
        return Subspace.zero(dim_ambient)
    n = subspaces[0].dim_ambient
    for s in subspaces[1:]:
        _check_ambient(subspaces[0], s)
    stacked = np.vstack([s.basis for s in subspaces])
    return from_spanning(stacked, dim_ambient=n)


def intersect(
    subspaces: Sequence[Subspace], *, dim_ambient: int | None = None
) -> Subspace:
    """Intersection via the complement-of-sum identity.

    The empty intersection is all of R^n.
    """
    subspaces = list(subspaces)
    if not subspaces:
        if dim_ambient is None:
            raise ValueError("dim_ambient is required for an empty intersection")
        return Subspace.full(dim_ambient)
    complements = [orthocomplement(s) for s in subspaces]
    return orthocomplement(sum_subspaces(complements))


def subspace_equal(a: Subspace, b: Subspace, tol: float = EPS_EQ) -> bool:
    """Entrywise comparison of the orthogonal projector matrices."""
    _check_ambient(a, b)
    return bool(np.abs(projector(a) - projector(b)).max() <= tol)


def subspace_contains(a: Subspace, b: Subspace, tol: float = EPS_EQ) -> bool:
    """True when B is a subspace of A (projecting B's projector is a no-op)."""
    _check_ambient(a, b)
    pa, pb = projector(a), projector(b)
    return bool(np.abs(pa @ pb - pb).max() <= tol)
