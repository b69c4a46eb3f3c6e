"""Orbit tangent spaces, cohomogeneity, and the polarity criterion.

The group H with algebra h inside l(+)l acts on L by (a, b) . g = a g b^{-1}.
The tangent space of the orbit through g, left-translated to the identity,
is span{Ad(g^{-1}) X1 - X2 : (X1, X2) in h}.  Polarity is decided at a
principal point by conjugating the subalgebra back to the identity and
testing the normal space nu there: nu must be a Lie triple system whose
generated algebra nu + [nu, nu] is orthogonal to the (conjugated) h, and
the action is hyperpolar exactly when nu is abelian.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import (HypothesisViolationError, InvalidInputError,
                     NonPrincipalPointError)
from .numerics import ToleranceConfig, orthogonal_complement, \
    orthonormal_basis, rank_of
from .subalgebras import Subalgebra, adjoint_matrix, product


@dataclass(frozen=True)
class ActionSpec:
    """The action of the group of h on L by left-right translation."""

    algebra: object  # LieAlgebra, the group L
    h: Subalgebra    # subalgebra of l(+)l

    def __post_init__(self):
        if self.h.parent is not self.algebra.double():
            raise InvalidInputError(
                "h must live in the doubled algebra of the acted-on group")


@dataclass(frozen=True)
class PolarityReport:
    cohomogeneity: int
    principal_point: np.ndarray
    section_basis: np.ndarray   # coefficient vectors in l, one per row
    polar: bool
    hyperpolar: bool
    residual_triple: float
    residual_orth: float
    residual_abelian: float
    samples_used: int
    seed: int
    tolerances: ToleranceConfig


@dataclass(frozen=True)
class FlatnessDiagnostic:
    cohomogeneity: int
    principal_point: np.ndarray
    residual_section: float   # ([X,Y], -[X,Y]) back in the normal space
    residual_span: float      # [X,Y] inside span{X, Y}
    residual_abelian: float   # norm of [X,Y]


def sample_group_point(algebra, rng):
    """exp(Z1) exp(Z2) for two independent Gaussian coefficient draws."""
    z1 = rng.standard_normal(algebra.dim)
    z2 = rng.standard_normal(algebra.dim)
    return expm(algebra.matrix_of(z1)) @ expm(algebra.matrix_of(z2))


def check_group_membership(algebra, g, tol):
    """g must be orthogonal (all our representations are) and normalize l."""
    g = np.asarray(g, dtype=float)
    if g.shape != (algebra.ambient_size,) * 2:
        raise InvalidInputError("group element has the wrong ambient size")
    ortho = float(np.abs(g.T @ g - np.eye(algebra.ambient_size)).max())
    if ortho > np.sqrt(tol.residual_tol):
        raise InvalidInputError(
            f"element is not in the represented group (residual {ortho:.3e})")


def _tangent_vectors(action, g, tol):
    """Raw spanning set {Ad(g^{-1}) X1 - X2} as coefficient rows in l."""
    algebra = action.algebra
    check_group_membership(algebra, g, tol)
    ad_inv = adjoint_matrix(algebra, np.linalg.inv(g),
                            member_tol=np.sqrt(tol.residual_tol))
    n = algebra.dim
    left = action.h.basis[:, :n]
    right = action.h.basis[:, n:]
    return left @ ad_inv.T - right, ad_inv


def orbit_tangent(action, g, tol):
    """Orthonormal basis of the orbit tangent space at g, moved to e.

    The generating vectors are differences of form-unit vectors, so genuine
    tangent directions have form norm of order one; scale=1 keeps the rank
    cutoff honest when the whole orbit degenerates (fixed points).
    """
    vectors, _ = _tangent_vectors(action, g, tol)
    return orthonormal_basis(vectors, tol, chol=action.algebra.chol, scale=1.0)


def _sampled_dims(action, tol):
    rng = np.random.default_rng(tol.seed)
    out = []
    for _ in range(tol.num_samples):
        g = sample_group_point(action.algebra, rng)
        out.append((orbit_tangent(action, g, tol).shape[0], g))
    return out

def cohomogeneity(action, tol):
    """(dim L - max sampled orbit dimension, first point attaining it)."""
    dims = _sampled_dims(action, tol)
    best = max(d for d, _ in dims)
    point = next(g for d, g in dims if d == best)
    return action.algebra.dim - best, point


def _outside_residual_many(vectors, onb, form):
    """Max form-norm outside span(onb) over a stack of coefficient vectors."""
    flat = vectors.reshape(-1, vectors.shape[-1])
    if onb.shape[0]:
        coeffs = flat @ form @ onb.T
        flat = flat - coeffs @ onb
    sq = np.einsum('ak,kl,al->a', flat, form, flat, optimize=True)
    return float(np.sqrt(max(0.0, sq.max(initial=0.0))))


def polarity_check(action, g, tol, max_orbit_dim=None):
    """Evaluate the polarity criterion at a principal point g.

    If max_orbit_dim is not given, the sampler is re-run (same seed) to
    establish the principal orbit dimension; g must attain it.
    """
    algebra = action.algebra
    form = algebra.form
    if max_orbit_dim is None:
        max_orbit_dim = max(d for d, _ in _sampled_dims(action, tol))
    vectors, ad_inv = _tangent_vectors(action, g, tol)
    tangent = orthonormal_basis(vectors, tol, chol=algebra.chol, scale=1.0)
    if tangent.shape[0] < max_orbit_dim:
        raise NonPrincipalPointError(
            f"point has orbit dimension {tangent.shape[0]} < sampled maximum "
            f"{max_orbit_dim}; the criterion needs a principal point "
            "(raise num_samples / --samples if sampling looks unlucky)")
    nu = orthogonal_complement(tangent, form, tol, chol=algebra.chol)
    cohom = nu.shape[0]

    if cohom == 0:
        residual_triple = residual_orth = residual_abelian = 0.0
    else:
        brackets = algebra.bracket_many(nu, nu)            # (c, c, dim)
        flat = brackets.reshape(-1, algebra.dim)
        triples = algebra.bracket_many(flat, nu)           # [[X,Y],Z]
        residual_triple = _outside_residual_many(triples, nu, form)
        n = algebra.dim
        conj_h = action.h.basis[:, :n] @ ad_inv.T + action.h.basis[:, n:]
        pairings = np.einsum('ak,kl,hl->ah', flat, form, conj_h, optimize=True)
        residual_orth = float(np.abs(pairings).max(initial=0.0))
        sq = np.einsum('ak,kl,al->a', flat, form, flat, optimize=True)
        residual_abelian = float(np.sqrt(max(0.0, sq.max(initial=0.0))))

    polar = (residual_triple < tol.residual_tol
             and residual_orth < tol.residual_tol)
    hyperpolar = polar and residual_abelian < tol.residual_tol
    return PolarityReport(
        cohomogeneity=cohom,
        principal_point=np.asarray(g, dtype=float),
        section_basis=nu,
        polar=polar,
        hyperpolar=hyperpolar,
        residual_triple=residual_triple,
        residual_orth=residual_orth,
        residual_abelian=residual_abelian,
        samples_used=tol.num_samples,
        seed=tol.seed,
        tolerances=tol,
    )


def analyze(action, tol):
    """Cohomogeneity sampling followed by the polarity criterion."""
    dims = _sampled_dims(action, tol)
    best = max(d for d, _ in dims)
    point = next(g for d, g in dims if d == best)
    return polarity_check(action, point, tol, max_orbit_dim=best)


def is_transitive(h1, h2, algebra, tol):
    """True iff h1 + h2 spans l (orbit through e open, hence everything)."""
    if h1.parent is not algebra or h2.parent is not algebra:
        raise InvalidInputError("h1, h2 must be subalgebras of the acted-on l")
    stacked = np.vstack([h1.basis, h2.basis])
    return rank_of(stacked, tol) == algebra.dim


def product_flatness_diagnostic(h1, h2, tol):
    """Check the bracket mechanics of a cohomogeneity-two product action.

    At a principal point with normal basis {X, Y}: the bracket [X, Y] must
    land back in the normal space, hence in span{X, Y}, hence vanish (a
    two-dimensional subalgebra of a compact algebra is abelian).
    """
    algebra = h1.parent
    action = ActionSpec(algebra, product(h1, h2, tol))
    dims = _sampled_dims(action, tol)
    best = max(d for d, _ in dims)
    cohom = algebra.dim - best
    if cohom != 2:
        raise HypothesisViolationError(
            f"product action has cohomogeneity {cohom}, diagnostic needs 2")
    g = next(p for d, p in dims if d == best)
    vectors, _ = _tangent_vectors(action, g, tol)
    tangent = orthonormal_basis(vectors, tol, chol=algebra.chol, scale=1.0)
    nu = orthogonal_complement(tangent, algebra.form, tol, chol=algebra.chol)
    x, y = nu
    br = algebra.bracket(x, y)
    residual_section = _outside_residual_many(br[None, :], nu, algebra.form)
    span_xy = orthonormal_basis(np.vstack([x, y]), tol, chol=algebra.chol)
    residual_span = _outside_residual_many(br[None, :], span_xy, algebra.form)
    residual_abelian = algebra.norm(br)
    return FlatnessDiagnostic(
        cohomogeneity=cohom,
        principal_point=g,
        residual_section=residual_section,
        residual_span=residual_span,
        residual_abelian=residual_abelian,
    )
