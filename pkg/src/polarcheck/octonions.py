"""Cayley-Dickson algebras and derivation algebras of bilinear products.

Multiplication tables are stored as tensors T with e_i e_j = sum_k T[i,j,k] e_k,
with e_0 the unit and the remaining basis elements imaginary (so conjugation
is diag(1, -1, ..., -1) at every doubling stage).
"""

from functools import lru_cache

import numpy as np

from .errors import InvalidInputError
from .numerics import ToleranceConfig, nullspace


def cayley_dickson_double(table):
    """Double an algebra: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))."""
    table = np.asarray(table, dtype=float)
    if table.ndim != 3 or len(set(table.shape)) != 1:
        raise InvalidInputError("multiplication table must be an (m,m,m) tensor")
    m = table.shape[0]
    conj = np.ones(m)
    conj[1:] = -1.0
    out = np.zeros((2 * m, 2 * m, 2 * m))
    for i in range(m):
        for j in range(m):
            out[i, j, :m] = table[i, j]
            out[i, m + j, m:] = table[j, i]
            out[m + i, j, m:] = conj[j] * table[i, j]
            out[m + i, m + j, :m] = -conj[j] * table[j, i]
    return out


@lru_cache(maxsize=None)
def real_table():
    return np.ones((1, 1, 1))


@lru_cache(maxsize=None)
def complex_table():
    return cayley_dickson_double(real_table())


@lru_cache(maxsize=None)
def quaternion_table():
    return cayley_dickson_double(complex_table())


@lru_cache(maxsize=None)
def octonion_table():
    return cayley_dickson_double(quaternion_table())


def derivation_matrices(table, tol=None):
    """Basis of {D : D(xy) = D(x)y + x D(y)} as a (k, m, m) array.

    Computed as the nullspace of the linear Leibniz constraint system; an
    empty result is legal (e.g. the complex numbers).
    """
    if tol is None:
        tol = ToleranceConfig()
    table = np.asarray(table, dtype=float)
    if table.ndim != 3 or len(set(table.shape)) != 1:
        raise InvalidInputError("multiplication table must be an (m,m,m) tensor")
    m = table.shape[0]
    eye = np.eye(m)
    # coefficient of D[p, q] in the (i, j, l) Leibniz constraint
    a1 = np.einsum('ijq,lp->ijlpq', table, eye)
    a2 = np.einsum('pjl,qi->ijlpq', table, eye)
    a3 = np.einsum('ipl,qj->ijlpq', table, eye)
    system = (a1 - a2 - a3).reshape(m ** 3, m ** 2)
    kernel = nullspace(system, tol)
    return kernel.reshape(-1, m, m)


def restrict_to_imaginary(derivations, residual_tol=1e-10):
    """Drop the unit coordinate: derivations annihilate e_0 and fix its span."""
    derivations = np.asarray(derivations, dtype=float)
    if derivations.size:
        border = max(float(np.abs(derivations[:, :, 0]).max()),
                     float(np.abs(derivations[:, 0, :]).max()))
        if border > residual_tol:
            raise InvalidInputError(
                f"derivations do not preserve the imaginary part ({border:.3e})")
    return derivations[:, 1:, 1:]
