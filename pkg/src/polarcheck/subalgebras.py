"""Subalgebras of l and of l(+)l: diagonals, products, spans, ideal splitting.

A Subalgebra stores an orthonormalized coefficient basis with respect to its
parent's invariant form, so residual thresholds have a uniform meaning.
"""

import numpy as np

from .errors import (ClosureError, DimensionMismatchError,
                     InternalConsistencyError, InvalidInputError)
from .numerics import (as_vector_matrix, nullspace, orthogonal_complement,
                       orthonormal_basis, rank_of)


class Subalgebra:
    """A bracket-closed subspace of a LieAlgebra, orthonormalized."""

    def __init__(self, parent, basis, name=""):
        self.parent = parent
        self.basis = np.asarray(basis, dtype=float).reshape(-1, parent.dim)
        self.basis.flags.writeable = False
        self.dim = self.basis.shape[0]
        self.name = name

    @classmethod
    def from_vectors(cls, parent, vectors, tol, name="", check_closure=True):
        """Orthonormalize coefficient vectors and verify bracket closure."""
        vecs = as_vector_matrix(vectors, ambient_dim=parent.dim)
        onb = orthonormal_basis(vecs, tol, chol=parent.chol)
        sub = cls(parent, onb, name=name)
        if check_closure:
            residual = sub.closure_residual()
            if residual > tol.residual_tol:
                raise ClosureError(
                    f"span {name or '<anonymous>'} is not bracket-closed",
                    residual=residual)
        return sub

    @classmethod
    def from_matrices(cls, parent, matrices, tol, name="", check_closure=True):
        """Build from ambient matrices that must lie in the parent algebra."""
        vecs = [parent.coords_of(m, member_tol=tol.residual_tol)
                for m in matrices]
        return cls.from_vectors(parent, vecs, tol, name=name,
                                check_closure=check_closure)

    def closure_residual(self):
        """Largest form-norm of a basis bracket's component outside the span."""
        if self.dim == 0:
            return 0.0
        b = self.basis
        g = self.parent.form
        brackets = self.parent.bracket_many(b, b)
        coeffs = np.einsum('abk,kl,cl->abc', brackets, g, b, optimize=True)
        outside = brackets - np.einsum('abc,cl->abl', coeffs, b, optimize=True)
        sq = np.einsum('abl,lm,abm->ab', outside, g, outside, optimize=True)
        return float(np.sqrt(max(0.0, sq.max(initial=0.0))))

    def gram_residual(self):
        gram = self.basis @ self.parent.form @ self.basis.T
        return float(np.abs(gram - np.eye(self.dim)).max(initial=0.0))

    def matrices(self):
        """Ambient matrices of the basis vectors."""
        return np.einsum('ki,iab->kab', self.basis, self.parent.basis)

    def contains_residual(self, v):
        """Form-norm of the component of a coefficient vector outside self."""
        v = np.asarray(v, dtype=float)
        g = self.parent.form
        coeffs = self.basis @ g @ v
        rest = v - self.basis.T @ coeffs
        return float(np.sqrt(max(0.0, rest @ g @ rest)))

    def __repr__(self):
        return f"Subalgebra({self.name or '?'}, dim={self.dim}, parent={self.parent.name})"


def zero_subalgebra(parent, name="0"):
    return Subalgebra(parent, np.zeros((0, parent.dim)), name=name)


def full_subalgebra(parent, tol, name=None):
    return Subalgebra.from_vectors(parent, np.eye(parent.dim), tol,
                                   name=name or parent.name)


def diagonal_sigma(algebra, sigma, tol):
    """Twisted diagonal {(X, sigma(X))} inside l(+)l."""
    if sigma.algebra is not algebra:
        raise InvalidInputError("automorphism belongs to a different algebra")
    double = algebra.double()
    vecs = np.hstack([np.eye(algebra.dim), sigma.matrix.T])
    return Subalgebra.from_vectors(double, vecs, tol,
                                   name=f"delta^{sigma.kind}({algebra.name})")


def product(h1, h2, tol):
    """h1 x h2 = {(A, 0)} + {(0, B)} inside l(+)l."""
    if h1.parent is not h2.parent:
        raise InvalidInputError("product factors must share the parent algebra")
    algebra = h1.parent
    double = algebra.double()
    n = algebra.dim
    vecs = np.zeros((h1.dim + h2.dim, 2 * n))
    vecs[:h1.dim, :n] = h1.basis
    vecs[h1.dim:, n:] = h2.basis
    return Subalgebra.from_vectors(double, vecs, tol,
                                   name=f"{h1.name}x{h2.name}")


def split_ideals(h, tol, left_dim=None):
    """Split h into (h1', h2', h_delta) per the projection kernels.

    h1' = h intersected with the first factor, h2' with the second, and
    h_delta the orthogonal complement of their sum inside h.  Checks the
    identity pi_1(h) = pi_1(h_delta) (+) h1' numerically.
    """
    n = left_dim if left_dim is not None else h.parent.dim // 2
    if 2 * n != h.parent.dim:
        raise DimensionMismatchError("parent is not a doubled algebra")
    basis = h.basis
    in_first = nullspace(basis[:, n:].T, tol)   # coefficients killing pi_2
    in_second = nullspace(basis[:, :n].T, tol)  # coefficients killing pi_1
    inside = np.vstack([in_first, in_second])
    delta_coeffs = orthogonal_complement(inside, np.eye(h.dim), tol)

    def build(coeffs, name):
        try:
            return Subalgebra.from_vectors(h.parent, coeffs @ basis, tol,
                                           name=name)
        except ClosureError as exc:
            raise InternalConsistencyError(
                f"ideal part {name} of {h.name} is not closed: {exc}") from exc

    h1_prime = build(in_first, f"{h.name}|1'")
    h2_prime = build(in_second, f"{h.name}|2'")
    h_delta = build(delta_coeffs, f"{h.name}|delta")

    # pi_1(h) = pi_1(h_delta) (+) h1'
    r_h = rank_of(basis[:, :n], tol)
    r_delta = rank_of(h_delta.basis[:, :n], tol) if h_delta.dim else 0
    if r_h != r_delta + h1_prime.dim:
        raise InternalConsistencyError(
            f"projection split identity fails for {h.name}: "
            f"{r_h} != {r_delta} + {h1_prime.dim}")
    return h1_prime, h2_prime, h_delta


def adjoint_matrix(algebra, g, member_tol=1e-8):
    """Coordinate matrix of Ad(g): X -> g X g^{-1} on the algebra."""
    g = np.asarray(g, dtype=float)
    inv = np.linalg.inv(g)
    conjugated = np.einsum('ab,ibc,cd->iad', g, algebra.basis, inv, optimize=True)
    rhs = -algebra.trace_scale * np.einsum('kab,iba->ki', algebra.basis,
                                           conjugated, optimize=True)
    coords = np.linalg.solve(algebra.form, rhs)
    recon = np.einsum('ki,kab->iab', coords, algebra.basis)
    scale = max(1.0, float(np.abs(conjugated).max(initial=0.0)))
    residual = float(np.abs(conjugated - recon).max(initial=0.0)) / scale
    if residual > member_tol:
        raise ClosureError(
            f"element does not normalize {algebra.name}", residual=residual)
    return coords


def conjugated_subalgebra(h, a, tol):
    """Image of a subalgebra of l under Ad(a)."""
    ad = adjoint_matrix(h.parent, a, member_tol=tol.residual_tol)
    return Subalgebra.from_vectors(h.parent, h.basis @ ad.T, tol,
                                   name=f"Ad({h.name})")


def conjugated_pair_subalgebra(h, algebra, a, b, tol):
    """Image of h in l(+)l under (Ad(a), Ad(b)); `algebra` is the factor l."""
    n = algebra.dim
    if h.parent.dim != 2 * n:
        raise DimensionMismatchError("h does not live in the double of algebra")
    left = h.basis[:, :n]
    right = h.basis[:, n:]
    ad_a = adjoint_matrix(algebra, a, member_tol=tol.residual_tol)
    ad_b = adjoint_matrix(algebra, b, member_tol=tol.residual_tol)
    vecs = np.hstack([left @ ad_a.T, right @ ad_b.T])
    return Subalgebra.from_vectors(h.parent, vecs, tol, name=f"Ad({h.name})")
