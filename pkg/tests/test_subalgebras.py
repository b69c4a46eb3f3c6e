import numpy as np
import pytest
from scipy.linalg import expm

from polarcheck.embeddings import cartan_subalgebra, corner_so
from polarcheck.errors import ClosureError, InvalidInputError
from polarcheck.lie_algebras import (build_classical, identity_automorphism,
                                     make_automorphism)
from polarcheck.subalgebras import (Subalgebra, adjoint_matrix,
                                    conjugated_pair_subalgebra,
                                    conjugated_subalgebra, diagonal_sigma,
                                    full_subalgebra, product, split_ideals,
                                    zero_subalgebra)


class TestConstruction:
    def test_orthonormalized(self, tol):
        algebra = build_classical("su", 3)
        vecs = np.random.default_rng(0).standard_normal((3, algebra.dim))
        sub = Subalgebra.from_vectors(algebra, vecs, tol, check_closure=False)
        assert sub.gram_residual() < 1e-10

    def test_closure_enforced(self, tol):
        algebra = build_classical("su", 2)
        # two coordinate directions of su(2) never close
        with pytest.raises(ClosureError) as err:
            Subalgebra.from_vectors(algebra, np.eye(algebra.dim)[:2], tol)
        assert err.value.residual is not None
        assert err.value.residual > 0.1

    def test_from_matrices_roundtrip(self, tol):
        algebra = build_classical("so", 4)
        corner = corner_so(algebra, 3, tol)
        rebuilt = Subalgebra.from_matrices(algebra, list(corner.matrices()),
                                           tol)
        assert rebuilt.dim == corner.dim
        for v in corner.basis:
            assert rebuilt.contains_residual(v) < 1e-10

    def test_zero_and_full(self, tol):
        algebra = build_classical("so", 5)
        assert zero_subalgebra(algebra).dim == 0
        assert full_subalgebra(algebra, tol).dim == algebra.dim


class TestDiagonalAndProduct:
    def test_diagonal_dimension(self, tol):
        algebra = build_classical("su", 3)
        h = diagonal_sigma(algebra, identity_automorphism(algebra), tol)
        assert h.parent is algebra.double()
        assert h.dim == algebra.dim
        assert h.closure_residual() < 1e-10

    def test_twisted_diagonal(self, tol):
        algebra = build_classical("so", 8)
        sigma = make_automorphism(algebra, "outer_so_even", tol=tol)
        h = diagonal_sigma(algebra, sigma, tol)
        assert h.dim == algebra.dim

    def test_product_dimensions(self, tol):
        algebra = build_classical("so", 5)
        h1 = corner_so(algebra, 4, tol)
        h2 = corner_so(algebra, 3, tol)
        h = product(h1, h2, tol)
        assert h.dim == h1.dim + h2.dim

    def test_product_rejects_mixed_parents(self, tol):
        a = build_classical("so", 4)
        b = build_classical("so", 5)
        with pytest.raises(InvalidInputError):
            product(corner_so(a, 3, tol), corner_so(b, 3, tol), tol)


class TestSplitIdeals:
    def test_pure_product(self, tol):
        algebra = build_classical("su", 3)
        h1 = cartan_subalgebra(algebra, tol)
        h2 = full_subalgebra(algebra, tol)
        h = product(h1, h2, tol)
        p1, p2, delta = split_ideals(h, tol)
        assert (p1.dim, p2.dim, delta.dim) == (h1.dim, h2.dim, 0)

    def test_pure_diagonal(self, tol):
        algebra = build_classical("su", 3)
        h = diagonal_sigma(algebra, identity_automorphism(algebra), tol)
        p1, p2, delta = split_ideals(h, tol)
        assert (p1.dim, p2.dim, delta.dim) == (0, 0, algebra.dim)

    def test_mixed(self, tol):
        # graph of one torus direction plus a second direction in the right
        # factor only: h1' = 0, h2' = 1-dimensional, diagonal part 1
        algebra = build_classical("su", 3)
        torus = cartan_subalgebra(algebra, tol)
        t1, t2 = torus.basis
        n = algebra.dim
        vecs = np.zeros((2, 2 * n))
        vecs[0, :n] = t1
        vecs[0, n:] = t1
        vecs[1, n:] = t2
        h = Subalgebra.from_vectors(algebra.double(), vecs, tol)
        p1, p2, delta = split_ideals(h, tol)
        assert (p1.dim, p2.dim, delta.dim) == (0, 1, 1)

    def test_diagonal_su2_plus_right_u1(self, tol):
        # diagonal su(2) corner plus the centralizing u(1) in the right
        # factor only: h1' = 0, h2' = u(1), diagonal part = su(2)
        from polarcheck.embeddings import su_corner_in_su
        from polarcheck.lie_algebras import realify_complex
        algebra = build_classical("su", 3)
        su2 = su_corner_in_su(algebra, 2, tol)
        u1 = algebra.coords_of(realify_complex(
            1j * np.diag([1.0, 1.0, -2.0]) / np.sqrt(6)))
        n = algebra.dim
        vecs = np.zeros((su2.dim + 1, 2 * n))
        vecs[:su2.dim, :n] = su2.basis
        vecs[:su2.dim, n:] = su2.basis
        vecs[su2.dim, n:] = u1
        h = Subalgebra.from_vectors(algebra.double(), vecs, tol)
        p1, p2, delta = split_ideals(h, tol)
        assert (p1.dim, p2.dim, delta.dim) == (0, 1, 3)

    def test_parts_sum_to_h_and_are_orthogonal(self, tol):
        algebra = build_classical("so", 5)
        h1 = corner_so(algebra, 4, tol)
        h2 = corner_so(algebra, 3, tol)
        h = product(h1, h2, tol)
        parts = split_ideals(h, tol)
        assert sum(p.dim for p in parts) == h.dim
        form = algebra.double().form
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                if a.dim and b.dim:
                    assert np.abs(a.basis @ form @ b.basis.T).max() < 1e-9

    def test_parts_are_ideals(self, tol):
        algebra = build_classical("so", 5)
        h1 = corner_so(algebra, 4, tol)
        h2 = corner_so(algebra, 3, tol)
        h = product(h1, h2, tol)
        p1, p2, _ = split_ideals(h, tol)
        # [h, p1] stays in p1
        double = algebra.double()
        for u in h.basis:
            for v in p1.basis:
                br = double.bracket(u, v)
                assert p1.contains_residual(br) < 1e-9


class TestAdjoint:
    def test_matches_exponential_of_ad(self, tol):
        algebra = build_classical("su", 3)
        x = np.random.default_rng(1).standard_normal(algebra.dim) / 4
        g = expm(algebra.matrix_of(x))
        ad_g = adjoint_matrix(algebra, g)
        # oracle: Ad(exp X) = exp(ad X) in coordinates
        ad_x = np.einsum('ijk,i->jk', algebra.structure_constants, x).T
        assert np.abs(ad_g - expm(ad_x)).max() < 1e-10

    def test_preserves_form(self, tol):
        algebra = build_classical("so", 5)
        x = np.random.default_rng(2).standard_normal(algebra.dim) / 4
        ad_g = adjoint_matrix(algebra, expm(algebra.matrix_of(x)))
        g = algebra.form
        assert np.abs(ad_g.T @ g @ ad_g - g).max() < 1e-9

    def test_rejects_non_normalizing_element(self, tol):
        algebra = build_classical("su", 2)
        bad = np.diag([1.0, -1.0, 1.0, 1.0])  # not in the represented group
        with pytest.raises(ClosureError):
            adjoint_matrix(algebra, bad)


class TestConjugation:
    def test_conjugated_subalgebra_keeps_dim(self, tol):
        algebra = build_classical("so", 5)
        h = corner_so(algebra, 4, tol)
        x = np.random.default_rng(3).standard_normal(algebra.dim) / 4
        moved = conjugated_subalgebra(h, expm(algebra.matrix_of(x)), tol)
        assert moved.dim == h.dim
        assert moved.closure_residual() < 1e-9

    def test_conjugated_pair_subalgebra(self, tol):
        algebra = build_classical("su", 3)
        h = diagonal_sigma(algebra, identity_automorphism(algebra), tol)
        rng = np.random.default_rng(4)
        a = expm(algebra.matrix_of(rng.standard_normal(algebra.dim) / 4))
        b = expm(algebra.matrix_of(rng.standard_normal(algebra.dim) / 4))
        moved = conjugated_pair_subalgebra(h, algebra, a, b, tol)
        assert moved.dim == h.dim
        assert moved.closure_residual() < 1e-9
