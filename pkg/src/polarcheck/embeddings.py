"""Concrete subalgebra embeddings: corners, complex/quaternionic structures,
octonion derivations (the 14-dimensional algebra inside so(7)), and spin
images built from real gamma matrices.

All builders return a Subalgebra of the ambient algebra and go through the
generic membership and closure checks, so a wrong sign or block convention
fails loudly instead of silently producing a different subspace.
"""

import numpy as np

from .errors import InvalidInputError
from .lie_algebras import (quaternion_left_matrices, quaternion_right_matrices,
                           realify_complex, realify_quaternion,
                           sp_basis_quaternion)
from .octonions import (derivation_matrices, octonion_table, quaternion_table,
                        restrict_to_imaginary)
from .subalgebras import Subalgebra, zero_subalgebra

# 2x2 building blocks for Kronecker constructions
_EPS = np.array([[0.0, -1.0], [1.0, 0.0]])
_SIG = np.array([[0.0, 1.0], [1.0, 0.0]])
_TAU = np.array([[1.0, 0.0], [0.0, -1.0]])
_ID2 = np.eye(2)


def _kron3(a, b, c):
    return np.kron(a, np.kron(b, c))


def gamma_matrices(n):
    """Real gamma matrices for n in {7, 9}.

    n=7: seven skew 8x8 matrices with g_i g_j + g_j g_i = -2 delta_ij.
    n=9: nine symmetric 16x16 matrices with anticommutator +2 delta_ij
    (a 16-dimensional real representation with negative squares does not
    exist for nine generators, so the sign flips; the spanned spin algebra
    lands in so(16) either way).
    """
    if n == 7:
        return [
            _kron3(_EPS, _EPS, _EPS),
            _kron3(_ID2, _SIG, _EPS),
            _kron3(_ID2, _TAU, _EPS),
            _kron3(_SIG, _EPS, _ID2),
            _kron3(_TAU, _EPS, _ID2),
            _kron3(_EPS, _ID2, _SIG),
            _kron3(_EPS, _ID2, _TAU),
        ]
    if n == 9:
        sevens = gamma_matrices(7)
        nine = [np.kron(_EPS, g) for g in sevens]
        nine.append(np.kron(_SIG, np.eye(8)))
        nine.append(np.kron(_TAU, np.eye(8)))
        return nine
    raise InvalidInputError("gamma matrices only provided for n in {7, 9}")


def gamma_anticommutation_residual(gammas):
    """Max deviation from g_i g_j + g_j g_i = 2 s delta_ij with fitted sign s."""
    size = gammas[0].shape[0]
    sign = float(np.sign(np.trace(gammas[0] @ gammas[0])))
    worst = 0.0
    for i, gi in enumerate(gammas):
        for j, gj in enumerate(gammas):
            target = 2.0 * sign * np.eye(size) if i == j else 0.0
            worst = max(worst, float(np.abs(gi @ gj + gj @ gi - target).max()))
    return worst


def spin_subalgebra(ambient, n, tol):
    """span{g_i g_j / 2 : i < j} inside so(8) (n=7) or so(16) (n=9)."""
    if n not in (7, 9):
        raise InvalidInputError("spin embedding only for n in {7, 9}")
    expected = {7: 8, 9: 16}[n]
    if ambient.family != "so" or ambient.n != expected:
        raise InvalidInputError(f"spin({n}) embeds into so({expected})")
    gammas = gamma_matrices(n)
    mats = [0.5 * gammas[i] @ gammas[j]
            for i in range(n) for j in range(i + 1, n)]
    return Subalgebra.from_matrices(ambient, mats, tol, name=f"spin({n})")


def corner_so(ambient, k, tol, offset=0):
    """so(k) acting on coordinates offset..offset+k-1 of so(N)."""
    size = ambient.ambient_size
    if ambient.family != "so" or offset + k > size:
        raise InvalidInputError(f"so({k}) corner does not fit in {ambient.name}")
    if k < 2:
        return zero_subalgebra(ambient, name=f"so({k})")
    mats = []
    for i in range(offset, offset + k):
        for j in range(i + 1, offset + k):
            m = np.zeros((size, size))
            m[i, j] = 1.0
            m[j, i] = -1.0
            mats.append(m)
    return Subalgebra.from_matrices(ambient, mats, tol, name=f"so({k})")


def block_so(ambient, sizes, tol):
    """so(k1)(+)so(k2)(+)... in consecutive diagonal blocks of so(N)."""
    vecs = []
    offset = 0
    for k in sizes:
        sub = corner_so(ambient, k, tol, offset=offset)
        if sub.dim:
            vecs.append(sub.basis)
        offset += k
    name = "(+)".join(f"so({k})" for k in sizes)
    if not vecs:
        return zero_subalgebra(ambient, name=name)
    return Subalgebra.from_vectors(ambient, np.vstack(vecs), tol, name=name)


def u_in_so(ambient, tol, special=False):
    """u(m) (or su(m)) of a complex structure on R^{2m} inside so(2m)."""
    if ambient.family != "so" or ambient.n % 2 != 0:
        raise InvalidInputError("u(m) embeds into so(2m)")
    m = ambient.n // 2
    from .lie_algebras import _su_basis_complex, _u_basis_complex
    source = _su_basis_complex(m) if special else _u_basis_complex(m)
    mats = [realify_complex(z) for z in source]
    name = f"su({m})" if special else f"u({m})"
    return Subalgebra.from_matrices(ambient, mats, tol, name=name)


def su_corner_in_su(ambient, k, tol):
    """su(k) in the top-left complex corner of su(N)."""
    if ambient.family != "su" or k > ambient.n or k < 2:
        raise InvalidInputError(f"su({k}) corner does not fit in {ambient.name}")
    from .lie_algebras import _su_basis_complex
    big = ambient.n
    mats = []
    for z in _su_basis_complex(k):
        zz = np.zeros((big, big), dtype=complex)
        zz[:k, :k] = z
        mats.append(realify_complex(zz))
    return Subalgebra.from_matrices(ambient, mats, tol, name=f"su({k})")


def s_u_u1_in_su(ambient, tol):
    """s(u(N-1)+u(1)): the su(N-1) corner plus the traceless i-diagonal."""
    if ambient.family != "su":
        raise InvalidInputError("s(u(k)u(1)) lives in su(N)")
    big = ambient.n
    corner = su_corner_in_su(ambient, big - 1, tol)
    extra = np.zeros((big, big), dtype=complex)
    extra[np.diag_indices(big)] = 1j
    extra[big - 1, big - 1] = 1j * (1 - big)
    vecs = np.vstack([corner.basis,
                      ambient.coords_of(realify_complex(extra))[None, :]])
    return Subalgebra.from_vectors(ambient, vecs, tol,
                                   name=f"s(u({big - 1})u(1))")


def sp_in_su(ambient, tol):
    """sp(m) = {[[A, -conj(B)], [B, conj(A)]]} inside su(2m)."""
    if ambient.family != "su" or ambient.n % 2 != 0:
        raise InvalidInputError("sp(m) embeds into su(2m)")
    m = ambient.n // 2
    mats = []
    # A skew-Hermitian, B = 0
    from .lie_algebras import _u_basis_complex
    for a in _u_basis_complex(m):
        z = np.zeros((2 * m, 2 * m), dtype=complex)
        z[:m, :m] = a
        z[m:, m:] = np.conj(a)
        mats.append(realify_complex(z))
    # A = 0, B complex symmetric
    sym = []
    for i in range(m):
        for j in range(i, m):
            b = np.zeros((m, m), dtype=complex)
            b[i, j] = b[j, i] = 1.0
            sym.append(b)
            b = np.zeros((m, m), dtype=complex)
            b[i, j] = b[j, i] = 1j
            sym.append(b)
    for b in sym:
        z = np.zeros((2 * m, 2 * m), dtype=complex)
        z[m:, :m] = b
        z[:m, m:] = -np.conj(b)
        mats.append(realify_complex(z))
    return Subalgebra.from_matrices(ambient, mats, tol, name=f"sp({m})")


def sp_in_so(ambient, tol, right_factor="none"):
    """sp(m) acting on H^m = R^{4m}, optionally extended by right scalars.

    right_factor: 'none' -> sp(m); 'u1' -> sp(m)(+)u(1); 'sp1' -> sp(m)(+)sp(1),
    the right multiplications by imaginary quaternion scalars.
    """
    if ambient.family != "so" or ambient.n % 4 != 0:
        raise InvalidInputError("sp(m) embeds into so(4m)")
    m = ambient.n // 4
    table = quaternion_table()
    left = quaternion_left_matrices(table)
    mats = [realify_quaternion(q, left) for q in sp_basis_quaternion(m)]
    name = f"sp({m})"
    if right_factor != "none":
        rights = quaternion_right_matrices(table)
        picks = [1] if right_factor == "u1" else [1, 2, 3]
        if right_factor not in ("u1", "sp1"):
            raise InvalidInputError(f"unknown right factor {right_factor!r}")
        for c in picks:
            mats.append(np.kron(np.eye(m), rights[c]))
        name += "(+)u(1)" if right_factor == "u1" else "(+)sp(1)"
    return Subalgebra.from_matrices(ambient, mats, tol, name=name)


def g2_in_so7(ambient, tol):
    """Derivations of the octonions, restricted to the imaginary part."""
    if ambient.family != "so" or ambient.n != 7:
        raise InvalidInputError("the derivation algebra g2 lives in so(7)")
    ders = restrict_to_imaginary(derivation_matrices(octonion_table(), tol))
    return Subalgebra.from_matrices(ambient, ders, tol, name="g2")


def cartan_subalgebra(ambient, tol):
    """A maximal abelian subalgebra (standard choice per family)."""
    size = ambient.ambient_size
    if ambient.family == "su":
        mats = []
        for k in range(ambient.n - 1):
            z = np.zeros((ambient.n, ambient.n), dtype=complex)
            z[k, k] = 1j
            z[k + 1, k + 1] = -1j
            mats.append(realify_complex(z))
    elif ambient.family == "so":
        mats = []
        for k in range(ambient.n // 2):
            m = np.zeros((size, size))
            m[2 * k, 2 * k + 1] = 1.0
            m[2 * k + 1, 2 * k] = -1.0
            mats.append(m)
    elif ambient.family == "sp":
        table = quaternion_table()
        left = quaternion_left_matrices(table)
        mats = []
        for k in range(ambient.n):
            q = np.zeros((ambient.n, ambient.n, 4))
            q[k, k, 1] = 1.0
            mats.append(realify_quaternion(q, left))
    else:
        raise InvalidInputError(f"no Cartan recipe for {ambient.name}")
    return Subalgebra.from_matrices(ambient, mats, tol, name="cartan")
