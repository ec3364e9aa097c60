import numpy as np
import pytest

from supercliff import (
    EPS_ORTH,
    Subspace,
    from_spanning,
    intersect,
    orthocomplement,
    project,
    project_subspace,
    projector,
    subspace_contains,
    subspace_equal,
    sum_subspaces,
)


def rank_revealing_projector(vectors):
    """SVD-based oracle for the projector onto a span."""
    matrix = np.atleast_2d(np.array(vectors, dtype=float))
    u, s, vh = np.linalg.svd(matrix, full_matrices=False)
    basis = vh[s > 1e-9]
    return basis.T @ basis


def test_from_spanning_keeps_orthonormal_input():
    z = from_spanning([[1.0, 0.0], [0.0, 1.0]])
    assert z.dim == 2
    assert np.allclose(z.basis @ z.basis.T, np.eye(2))


def test_from_spanning_drops_dependent_vectors():
    z = from_spanning([[1.0, 1.0, 0.0], [2.0, 2.0, 0.0]])
    assert z.dim == 1
    assert np.allclose(np.abs(z.basis[0]), np.array([1.0, 1.0, 0.0]) / np.sqrt(2))


def test_from_spanning_matches_svd_oracle():
    vectors = [[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]]
    z = from_spanning(vectors)
    assert z.dim == 2
    assert np.abs(projector(z) - rank_revealing_projector(vectors)).max() < 1e-12


def test_from_spanning_empty_input():
    assert from_spanning([], dim_ambient=3).dim == 0
    with pytest.raises(ValueError):
        from_spanning([])


def test_orthocomplement_examples():
    z = from_spanning([[1.0, 0.0]])
    assert subspace_equal(orthocomplement(z), from_spanning([[0.0, 1.0]]))
    assert subspace_equal(orthocomplement(Subspace.zero(3)), Subspace.full(3))
    diag = from_spanning([[1.0, 1.0]])
    assert subspace_equal(orthocomplement(diag), from_spanning([[1.0, -1.0]]))


def test_project_examples():
    z = from_spanning([[1.0, 0.0]])
    assert np.allclose(project(z, [3.0, 4.0]), [3.0, 0.0])
    plane = from_spanning([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    assert subspace_equal(project_subspace(plane, plane), plane)
    line = from_spanning([[1.0, 0.0, 1.0]])
    projected = project_subspace(plane, line)
    assert subspace_equal(projected, from_spanning([[1.0, 0.0, 0.0]]))
    assert np.abs(projector(projected) - rank_revealing_projector([[1, 0, 0]])).max() < 1e-12


def test_intersect_and_sum_examples():
    a = from_spanning([[1.0, 0, 0], [0, 1.0, 0]])
    b = from_spanning([[0, 1.0, 0], [0, 0, 1.0]])
    assert subspace_equal(intersect([a, b]), from_spanning([[0, 1.0, 0]]))
    e1 = from_spanning([[1.0, 0]])
    e2 = from_spanning([[0, 1.0]])
    assert subspace_equal(sum_subspaces([e1, e2]), Subspace.full(2))


def test_intersect_generic_planes_dimension_formula():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = from_spanning(rng.standard_normal((2, 3)))
        b = from_spanning(rng.standard_normal((2, 3)))
        both = intersect([a, b])
        expected_dim = a.dim + b.dim - sum_subspaces([a, b]).dim
        assert both.dim == expected_dim == 1


def test_empty_family_conventions():
    assert intersect([], dim_ambient=3).dim == 3
    assert sum_subspaces([], dim_ambient=3).dim == 0


def test_subspace_equal_and_contains():
    assert subspace_equal(from_spanning([[1.0, 1.0]]), from_spanning([[2.0, 2.0]]))
    assert subspace_contains(Subspace.full(2), from_spanning([[1.0, 0.0]]))
    assert not subspace_equal(from_spanning([[1.0, 0.0]]), from_spanning([[0.0, 1.0]]))


def test_orthonormality_invariant_enforced():
    with pytest.raises(ValueError):
        Subspace(2, np.array([[1.0, 1.0]]))
    with pytest.raises(ValueError):
        Subspace(2, np.array([[1.0, 0.0], [1.0, 0.0]]))


@pytest.mark.parametrize("seed", range(5))
def test_complement_involution_and_dimension_sum(seed):
    rng = np.random.default_rng(seed)
    n = 6
    for k in range(n + 1):
        z = from_spanning(rng.standard_normal((k, n)), dim_ambient=n)
        comp = orthocomplement(z)
        assert z.dim + comp.dim == n
        assert subspace_equal(orthocomplement(comp), z)
        if z.dim and comp.dim:
            assert np.abs(z.basis @ comp.basis.T).max() <= EPS_ORTH


@pytest.mark.parametrize("seed", range(5))
def test_hilbert_identity_on_random_families(seed):
    rng = np.random.default_rng(100 + seed)
    n = 5
    family = [
        from_spanning(rng.standard_normal((rng.integers(0, n + 1), n)), dim_ambient=n)
        for _ in range(rng.integers(2, 4))
    ]
    lhs = sum_subspaces([orthocomplement(z) for z in family])
    rhs = orthocomplement(intersect(family))
    assert subspace_equal(lhs, rhs)


@pytest.mark.parametrize("seed", range(5))
def test_from_spanning_span_contains_inputs(seed):
    rng = np.random.default_rng(200 + seed)
    n = 6
    vectors = rng.standard_normal((rng.integers(1, n + 3), n))
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)
    z = from_spanning(vectors)
    gram = z.basis @ z.basis.T
    assert np.abs(gram - np.eye(z.dim)).max() <= EPS_ORTH
    residuals = vectors - vectors @ projector(z)
    assert np.linalg.norm(residuals, axis=1).max() <= 1e-9
