"""Compact matrix Lie algebras: classical families, brackets, invariant form.

Every algebra is stored through an explicit real matrix basis.  Complex
entries are realified as 2x2 blocks [[a, -b], [b, a]] (coordinates
interleaved), quaternionic entries as 4x4 left-multiplication blocks; these
conventions are fixed once here and reused by every embedding builder.

The invariant inner product is <X, Y> = -tr(XY) on the realified defining
representation, optionally rescaled by a positive constant (`trace_scale`).
On a simple algebra this is a positive multiple of the Killing form, which
is all the downstream criteria need.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (ClosureError, DimensionMismatchError, InvalidFormError,
                     InvalidInputError)
from .numerics import cholesky_factor, rank_of

# ---------------------------------------------------------------------------
# realification conventions

_RE = np.eye(2)
_IM = np.array([[0.0, -1.0], [1.0, 0.0]])


def realify_complex(mat):
    """Realify a complex matrix, each entry a+bi becoming [[a,-b],[b,a]]."""
    mat = np.asarray(mat, dtype=complex)
    return np.kron(mat.real, _RE) + np.kron(mat.imag, _IM)


def quaternion_left_matrices(table):
    """4x4 matrices of left multiplication by each quaternion basis unit."""
    # table[c, b, a] is the e_a coefficient of e_c e_b
    return [np.array([[table[c, b, a] for b in range(4)] for a in range(4)],
                     dtype=float) for c in range(4)]


def quaternion_right_matrices(table):
    """4x4 matrices of right multiplication by each quaternion basis unit."""
    return [np.array([[table[b, c, a] for b in range(4)] for a in range(4)],
                     dtype=float) for c in range(4)]


def realify_quaternion(qmat, left_units):
    """Realify an (n, n, 4) quaternion-entry matrix via 4x4 left-mult blocks."""
    qmat = np.asarray(qmat, dtype=float)
    n = qmat.shape[0]
    out = np.zeros((4 * n, 4 * n))
    for i in range(n):
        for j in range(n):
            block = sum(qmat[i, j, c] * left_units[c] for c in range(4))
            out[4 * i:4 * i + 4, 4 * j:4 * j + 4] = block
    return out


# ---------------------------------------------------------------------------
# the algebra container


_CONSTRUCT_TOL = 1e-10  # relative residual allowed when fitting brackets


class LieAlgebra:
    """A compact Lie algebra given by a real matrix basis.

    Immutable after construction.  `structure_constants[i, j, :]` holds the
    coordinates of [b_i, b_j]; `form` is the Gram matrix of the invariant
    inner product trace_scale * (-tr(XY)).
    """

    def __init__(self, name, basis, structure_constants, form, trace_scale=1.0,
                 family=None, n=None):
        self.name = name
        self.basis = np.asarray(basis, dtype=float)
        self.basis.flags.writeable = False
        self.dim = self.basis.shape[0]
        self.ambient_size = self.basis.shape[1]
        self.structure_constants = np.asarray(structure_constants, dtype=float)
        self.structure_constants.flags.writeable = False
        self.form = np.asarray(form, dtype=float)
        self.form.flags.writeable = False
        self.trace_scale = float(trace_scale)
        self.family = family
        self.n = n
        self.chol = cholesky_factor(self.form)
        self._double = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_basis(cls, name, basis, trace_scale=1.0, family=None, n=None):
        """Build an algebra from matrices, fitting structure constants.

        Raises ClosureError if the span is not closed under commutators and
        InvalidFormError if -tr(XY) is not positive definite on it.
        """
        basis = np.asarray(basis, dtype=float)
        if basis.ndim != 3 or basis.shape[1] != basis.shape[2]:
            raise DimensionMismatchError("basis must be a list of square matrices")
        dim, s, _ = basis.shape
        flat = basis.reshape(dim, s * s)
        sv = np.linalg.svd(flat, compute_uv=False)
        if dim and (sv.size == 0 or sv[-1] <= 1e-12 * sv[0]):
            raise InvalidInputError(f"{name}: basis matrices are dependent")
        gram = -np.einsum('iab,jba->ij', basis, basis)
        gram = 0.5 * (gram + gram.T)
        cholesky_factor(gram)  # raises InvalidFormError when not SPD
        comms = np.einsum('iab,jbc->ijac', basis, basis, optimize=True)
        comms = comms - comms.transpose(1, 0, 2, 3)
        rhs = -np.einsum('ijab,kba->ijk', comms, basis, optimize=True)
        coeffs = np.linalg.solve(gram, rhs.reshape(dim * dim, dim).T)
        c = coeffs.T.reshape(dim, dim, dim)
        recon = np.einsum('ijk,kab->ijab', c, basis, optimize=True)
        scale = max(1.0, float(np.abs(comms).max(initial=0.0)))
        residual = float(np.abs(comms - recon).max(initial=0.0)) / scale
        if residual > _CONSTRUCT_TOL:
            raise ClosureError(f"{name}: basis span is not bracket-closed",
                               residual=residual)
        return cls(name, basis, c, trace_scale * gram, trace_scale=trace_scale,
                   family=family, n=n)

    def with_scaled_form(self, factor):
        """Same algebra with the invariant metric multiplied by factor > 0."""
        if not factor > 0:
            raise InvalidInputError("form scale factor must be positive")
        return LieAlgebra(self.name, self.basis, self.structure_constants,
                          factor * self.form,
                          trace_scale=factor * self.trace_scale,
                          family=self.family, n=self.n)

    # -- coordinates and brackets -------------------------------------------

    def matrix_of(self, v):
        """Ambient matrix of a coefficient vector."""
        return np.einsum('i,iab->ab', np.asarray(v, dtype=float), self.basis)

    def coords_of(self, mat, require_member=True, member_tol=1e-8):
        """Coefficient vector of an ambient matrix, checking membership."""
        rhs = -self.trace_scale * np.einsum('kab,ba->k', self.basis, mat)
        v = np.linalg.solve(self.form, rhs)
        if require_member:
            scale = max(1.0, float(np.abs(mat).max(initial=0.0)))
            residual = float(np.abs(mat - self.matrix_of(v)).max()) / scale
            if residual > member_tol:
                raise ClosureError(
                    f"matrix does not lie in {self.name}", residual=residual)
        return v

    def bracket(self, x, y):
        """Coordinates of [x, y] via the structure constants."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise DimensionMismatchError("coefficient vectors of wrong length")
        return np.einsum('ijk,i,j->k', self.structure_constants, x, y)

    def bracket_many(self, xs, ys):
        """Pairwise brackets of two stacks of coefficient vectors."""
        return np.einsum('ijk,ai,bj->abk', self.structure_constants, xs, ys, optimize=True)

    def inner(self, x, y):
        return float(np.asarray(x) @ self.form @ np.asarray(y))

    def norm(self, x):
        return float(np.sqrt(max(0.0, self.inner(x, x))))

    # -- direct sum ----------------------------------------------------------

    def double(self):
        """The direct sum l + l, memoized so identity is stable."""
        if self._double is None:
            self._double = direct_sum(self, self)
        return self._double


def direct_sum(first, second):
    """Block-diagonal direct sum of two algebras with matching metric scale."""
    if first.trace_scale != second.trace_scale:
        raise InvalidInputError("summands must share the metric scale")
    n1, n2 = first.dim, second.dim
    s1, s2 = first.ambient_size, second.ambient_size
    basis = np.zeros((n1 + n2, s1 + s2, s1 + s2))
    basis[:n1, :s1, :s1] = first.basis
    basis[n1:, s1:, s1:] = second.basis
    c = np.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = first.structure_constants
    c[n1:, n1:, n1:] = second.structure_constants
    form = np.zeros((n1 + n2, n1 + n2))
    form[:n1, :n1] = first.form
    form[n1:, n1:] = second.form
    return LieAlgebra(f"{first.name}(+){second.name}", basis, c, form,
                      trace_scale=first.trace_scale)


# ---------------------------------------------------------------------------
# classical families


def _so_basis(n):
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = 1.0
            m[j, i] = -1.0
            mats.append(m)
    return np.array(mats)


def _su_basis_complex(n):
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            a = np.zeros((n, n), dtype=complex)
            a[i, j] = 1.0
            a[j, i] = -1.0
            mats.append(a)
            b = np.zeros((n, n), dtype=complex)
            b[i, j] = 1j
            b[j, i] = 1j
            mats.append(b)
    for k in range(n - 1):
        d = np.zeros((n, n), dtype=complex)
        d[k, k] = 1j
        d[k + 1, k + 1] = -1j
        mats.append(d)
    return mats


def _u_basis_complex(n):
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            a = np.zeros((n, n), dtype=complex)
            a[i, j] = 1.0
            a[j, i] = -1.0
            mats.append(a)
            b = np.zeros((n, n), dtype=complex)
            b[i, j] = 1j
            b[j, i] = 1j
            mats.append(b)
    for k in range(n):
        d = np.zeros((n, n), dtype=complex)
        d[k, k] = 1j
        mats.append(d)
    return mats


def sp_basis_quaternion(n):
    """Quaternionic skew-Hermitian basis as (n, n, 4) coefficient arrays."""
    mats = []
    for i in range(n):
        for c in range(1, 4):
            q = np.zeros((n, n, 4))
            q[i, i, c] = 1.0
            mats.append(q)
    for i in range(n):
        for j in range(i + 1, n):
            for c in range(4):
                q = np.zeros((n, n, 4))
                q[i, j, c] = 1.0
                q[j, i, c] = -1.0 if c == 0 else 1.0  # -conjugate
                mats.append(q)
    return mats


@lru_cache(maxsize=None)
def build_classical(family, n):
    """Standard compact algebra su/so/sp/u(n) in its realified defining rep."""
    if family == "so":
        if n < 2:
            raise InvalidInputError("so(n) needs n >= 2")
        return LieAlgebra.from_basis(f"so({n})", _so_basis(n),
                                     family="so", n=n)
    if family == "su":
        if n < 2:
            raise InvalidInputError("su(n) needs n >= 2")
        basis = np.array([realify_complex(m) for m in _su_basis_complex(n)])
        return LieAlgebra.from_basis(f"su({n})", basis, family="su", n=n)
    if family == "u":
        if n < 1:
            raise InvalidInputError("u(n) needs n >= 1")
        basis = np.array([realify_complex(m) for m in _u_basis_complex(n)])
        return LieAlgebra.from_basis(f"u({n})", basis, family="u", n=n)
    if family == "sp":
        if n < 1:
            raise InvalidInputError("sp(n) needs n >= 1")
        from .octonions import quaternion_table
        left = quaternion_left_matrices(quaternion_table())
        basis = np.array([realify_quaternion(q, left)
                          for q in sp_basis_quaternion(n)])
        return LieAlgebra.from_basis(f"sp({n})", basis, family="sp", n=n)
    raise InvalidInputError(f"unsupported family {family!r}")


# ---------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class Automorphism:
    """Coordinate matrix of a bracket- and form-preserving map."""

    algebra: LieAlgebra
    matrix: np.ndarray
    kind: str

    def bracket_residual(self):
        c = self.algebra.structure_constants
        a = self.matrix
        lhs = np.einsum('ijk,kl->ijl', c, a.T)          # sigma([b_i, b_j])
        rhs = np.einsum('klm,ki,lj->ijm', c, a, a, optimize=True)      # [sigma b_i, sigma b_j]
        return float(np.abs(lhs - rhs).max(initial=0.0))

    def form_residual(self):
        g = self.algebra.form
        d = self.matrix.T @ g @ self.matrix - g
        return float(np.abs(d).max(initial=0.0)) / max(1.0, np.abs(g).max())


def _conjugation_automorphism(algebra, conjugator, kind, member_tol):
    inv = np.linalg.inv(conjugator)
    cols = []
    for b in algebra.basis:
        cols.append(algebra.coords_of(conjugator @ b @ inv,
                                      member_tol=member_tol))
    return Automorphism(algebra, np.array(cols).T, kind)


def make_automorphism(algebra, spec, k=None, tol=None):
    """Build an automorphism: 'inner' (with k), 'outer_su', 'outer_so_even'.

    Inner automorphisms conjugate by a group element k that must normalize
    the represented algebra; the outer specs are complex conjugation on
    su(n) and conjugation by diag(-1, 1, ..., 1) on so(2m).
    """
    member_tol = tol.residual_tol if tol is not None else 1e-8
    if spec == "inner":
        if k is None:
            raise InvalidInputError("inner automorphism needs a group element")
        k = np.asarray(k, dtype=float)
        if k.shape != (algebra.ambient_size,) * 2:
            raise DimensionMismatchError("conjugator has the wrong size")
        try:
            aut = _conjugation_automorphism(algebra, k, "inner", member_tol)
        except ClosureError as exc:
            raise InvalidInputError(
                f"element does not normalize {algebra.name}: {exc}") from exc
    elif spec == "outer_su":
        if algebra.family != "su":
            raise InvalidInputError("outer_su only applies to su(n)")
        conj = np.kron(np.eye(algebra.n), np.diag([1.0, -1.0]))
        aut = _conjugation_automorphism(algebra, conj, "outer_su", member_tol)
    elif spec == "outer_so_even":
        if algebra.family != "so" or algebra.n % 2 != 0:
            raise InvalidInputError("outer_so_even only applies to so(2m)")
        refl = np.diag([-1.0] + [1.0] * (algebra.n - 1))
        aut = _conjugation_automorphism(algebra, refl, "outer_so_even",
                                        member_tol)
    else:
        raise InvalidInputError(f"unknown automorphism spec {spec!r}")
    if aut.bracket_residual() > member_tol or aut.form_residual() > member_tol:
        raise InvalidInputError(
            f"{spec} does not define an automorphism of {algebra.name}")
    return aut


def identity_automorphism(algebra):
    return Automorphism(algebra, np.eye(algebra.dim), "inner")


# ---------------------------------------------------------------------------
# health diagnostics


def antisymmetry_residual(algebra):
    c = algebra.structure_constants
    return float(np.abs(c + c.transpose(1, 0, 2)).max(initial=0.0))


def jacobi_residual(algebra):
    """Max form-norm of the cyclic Jacobi sum over all basis triples.

    Chunked over the third index to keep memory linear in dim^3.
    """
    c = algebra.structure_constants
    g = algebra.form
    n = algebra.dim
    if n == 0:
        return 0.0
    cflat = c.reshape(n * n, n)
    worst = 0.0
    for k in range(n):
        t1 = (cflat @ c[:, k, :]).reshape(n, n, n)        # [[bi,bj],bk]
        t2 = np.einsum('jm,mil->ijl', c[:, k, :], c, optimize=True)      # [[bj,bk],bi]
        t3 = np.einsum('im,mjl->ijl', c[k, :, :], c, optimize=True)      # [[bk,bi],bj]
        jac = t1 + t2 + t3
        norms = np.einsum('ijl,lm,ijm->ij', jac, g, jac, optimize=True)
        worst = max(worst, float(norms.max(initial=0.0)))
    return float(np.sqrt(max(0.0, worst)))


def ad_invariance_residual(algebra):
    """Max |<[x,y],z> + <y,[x,z]>| over basis triples."""
    t = np.einsum('ijl,lk->ijk', algebra.structure_constants, algebra.form, optimize=True)
    return float(np.abs(t + t.transpose(0, 2, 1)).max(initial=0.0))


def killing_proportionality(algebra):
    """Least-squares fit B = -c * form; returns (c, relative residual)."""
    c = algebra.structure_constants
    killing = np.einsum('iml,jlm->ij', c, c, optimize=True)
    g = algebra.form
    denom = float(np.sum(g * g))
    factor = -float(np.sum(killing * g)) / denom
    residual = float(np.abs(killing + factor * g).max(initial=0.0))
    scale = max(1.0, float(np.abs(killing).max(initial=0.0)))
    return factor, residual / scale
