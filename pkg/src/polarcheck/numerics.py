"""Deterministic dense real linear algebra with an explicit tolerance policy.

Rank decisions use singular values with a *relative* threshold (relative to
the largest singular value), so verdicts are stable under rescaling the
whole input.  Orthonormality may be taken with respect to an arbitrary
symmetric positive-definite form: vectors are mapped to Euclidean
coordinates through a Cholesky factor, processed there, and mapped back.

All functions are pure; nothing here owns randomness.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidFormError, InvalidInputError


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical policy shared by every verdict-producing routine.

    rel_rank_tol thresholds singular values relative to the largest one;
    residual_tol bounds membership/closure residuals; num_samples controls
    the principal-point search; seed feeds the single RNG.
    """

    rel_rank_tol: float = 1e-9
    residual_tol: float = 1e-8
    num_samples: int = 8
    seed: int = 0

    def __post_init__(self):
        if not self.rel_rank_tol > 0:
            raise InvalidInputError("rel_rank_tol must be positive")
        if not self.residual_tol > 0:
            raise InvalidInputError("residual_tol must be positive")
        if self.num_samples < 1:
            raise InvalidInputError("num_samples must be >= 1")


def as_vector_matrix(vectors, ambient_dim=None):
    """Stack a list of vectors into a (k, d) array, checking shapes."""
    vectors = list(vectors)
    if not vectors:
        if ambient_dim is None:
            raise DimensionMismatchError(
                "empty vector list needs an explicit ambient dimension")
        return np.zeros((0, ambient_dim))
    lengths = {np.asarray(v).shape for v in vectors}
    if len(lengths) != 1 or len(next(iter(lengths))) != 1:
        raise DimensionMismatchError(f"inconsistent vector shapes: {lengths}")
    mat = np.asarray(vectors, dtype=float)
    if ambient_dim is not None and mat.shape[1] != ambient_dim:
        raise DimensionMismatchError(
            f"vectors have length {mat.shape[1]}, expected {ambient_dim}")
    return mat


def rank_of(vectors, tol):
    """Number of singular values above rel_rank_tol times the largest."""
    mat = np.atleast_2d(np.asarray(vectors, dtype=float))
    if mat.size == 0:
        return 0
    if mat.ndim != 2:
        raise DimensionMismatchError("expected a list of equal-length vectors")
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > tol.rel_rank_tol * sv[0]))


def cholesky_factor(form):
    """Return W with form = W.T @ W, raising InvalidFormError if not SPD."""
    form = np.asarray(form, dtype=float)
    if form.ndim != 2 or form.shape[0] != form.shape[1]:
        raise InvalidFormError("form must be a square matrix")
    if not np.allclose(form, form.T, atol=1e-12 * max(1.0, np.abs(form).max())):
        raise InvalidFormError("form is not symmetric")
    try:
        lower = np.linalg.cholesky(form)
    except np.linalg.LinAlgError as exc:
        raise InvalidFormError("form is not positive definite") from exc
    return lower.T


def orthonormal_basis(vectors, tol, form=None, chol=None, scale=None):
    """Orthonormal (w.r.t. form, default Euclidean) basis of the span.

    Returns a (r, d) array of rows.  Accepts a precomputed Cholesky factor
    of the form to avoid refactorizations in hot paths.  When the caller
    knows the natural magnitude of genuine input vectors (e.g. differences
    of unit vectors), passing it as `scale` makes the cutoff absolute with
    respect to that magnitude, so an all-roundoff input yields rank zero
    instead of being renormalized into a full-rank matrix.
    """
    mat = np.atleast_2d(np.asarray(vectors, dtype=float))
    if mat.size == 0:
        return mat.reshape(0, mat.shape[-1] if mat.ndim == 2 else 0)
    if chol is None and form is not None:
        chol = cholesky_factor(form)
    euc = mat if chol is None else mat @ chol.T
    _, sv, vh = np.linalg.svd(euc, full_matrices=False)
    ref = sv[0] if sv.size else 0.0
    if scale is not None:
        ref = max(ref, float(scale))
    r = 0 if sv.size == 0 or ref == 0.0 else int(
        np.sum(sv > tol.rel_rank_tol * ref))
    onb_euc = vh[:r]
    if chol is None:
        return onb_euc
    return np.linalg.solve(chol, onb_euc.T).T


def orthogonal_complement(vectors, form, tol, chol=None):
    """Orthonormal basis (w.r.t. form) of the complement of span(vectors).

    The ambient dimension is read off the form.  An empty input yields an
    orthonormal basis of the whole space.
    """
    form = np.asarray(form, dtype=float)
    if chol is None:
        chol = cholesky_factor(form)
    d = form.shape[0]
    mat = as_vector_matrix(vectors, ambient_dim=d) if not isinstance(
        vectors, np.ndarray) else np.asarray(vectors, dtype=float).reshape(-1, d)
    euc = mat @ chol.T
    if euc.shape[0] == 0:
        comp_euc = np.eye(d)
    else:
        _, sv, vh = np.linalg.svd(euc, full_matrices=True)
        r = 0 if sv.size == 0 or sv[0] == 0.0 else int(
            np.sum(sv > tol.rel_rank_tol * sv[0]))
        comp_euc = vh[r:]
    return np.linalg.solve(chol, comp_euc.T).T


def nullspace(matrix, tol):
    """Orthonormal basis (rows) of the kernel of a real matrix."""
    mat = np.atleast_2d(np.asarray(matrix, dtype=float))
    if mat.shape[0] == 0:
        return np.eye(mat.shape[1])
    _, sv, vh = np.linalg.svd(mat, full_matrices=True)
    r = 0 if sv.size == 0 or sv[0] == 0.0 else int(
        np.sum(sv > tol.rel_rank_tol * sv[0]))
    return vh[r:]


def form_norm(v, form):
    """Norm of a coefficient vector with respect to an SPD form."""
    v = np.asarray(v, dtype=float)
    return float(np.sqrt(max(0.0, v @ form @ v)))


def residual_outside(v, onb, form):
    """Form-norm of the component of v outside the span of a form-ONB."""
    v = np.asarray(v, dtype=float)
    if onb.shape[0] == 0:
        return form_norm(v, form)
    coeffs = onb @ form @ v
    return form_norm(v - onb.T @ coeffs, form)
