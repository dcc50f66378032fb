"""Arithmetic of the complexified octonion algebra.

Elements are plain numpy arrays of 8 complex coefficients over a fixed
basis e0=1, e1..e7.  The multiplication table is generated by
Cayley-Dickson doubling R -> C -> H -> O, stored as a rank-3 structure
tensor, and never hardcoded: downstream code relies only on the algebra
identities, which the test suite checks against the generated table.

All functions broadcast over leading axes, so a stack of octonions is an
array of shape (..., 8).
"""

from __future__ import annotations

import numpy as np

DIM = 8


def _double_table(table: np.ndarray) -> np.ndarray:
    """Cayley-Dickson double of a signed basis multiplication table.

    ``table[i, j, k]`` is the coefficient of e_k in e_i * e_j.  The
    doubled algebra multiplies pairs by (a,b)(c,d) = (ac - d~b, da + bc~)
    with ~ the conjugation fixing e_0 and negating the rest.
    """
    n = table.shape[0]
    conj = np.ones(n)
    conj[1:] = -1.0
    out = np.zeros((2 * n, 2 * n, 2 * n))
    # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
    out[:n, :n, :n] = table
    # (e_i, 0)(0, e_j) = (0, e_j e_i)
    out[:n, n:, n:] = np.swapaxes(table, 0, 1)
    # (0, e_i)(e_j, 0) = (0, e_i e_j~)
    out[n:, :n, n:] = table * conj[None, :, None]
    # (0, e_i)(0, e_j) = (-e_j~ e_i, 0)
    out[n:, n:, :n] = -np.swapaxes(table, 0, 1) * conj[None, :, None]
    return out


def _build_structure_tensor() -> np.ndarray:
    table = np.ones((1, 1, 1))  # the reals
    for _ in range(3):
        table = _double_table(table)
    return table


# MUL_TABLE[i, j, k] = coefficient of e_k in e_i e_j; entries in {0, +1, -1}
MUL_TABLE = _build_structure_tensor()
MUL_TABLE.setflags(write=False)

_CONJ_SIGNS = np.ones(DIM)
_CONJ_SIGNS[1:] = -1.0
_CONJ_SIGNS.setflags(write=False)


def basis(i: int) -> np.ndarray:
    e = np.zeros(DIM, dtype=complex)
    e[i] = 1.0
    return e


def scalar(z: complex) -> np.ndarray:
    """Embed a complex number as z * e0."""
    out = np.zeros(DIM, dtype=complex)
    out[0] = z
    return out


ZERO = scalar(0.0)
ONE = scalar(1.0)
ZERO.setflags(write=False)
ONE.setflags(write=False)


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("ijk,...i,...j->...k", MUL_TABLE, a, b)


def conj(a: np.ndarray) -> np.ndarray:
    return a * _CONJ_SIGNS


def real_part(a: np.ndarray) -> np.ndarray:
    """The e0 coefficient, a complex scalar (R (x) C identified with C)."""
    return np.asarray(a)[..., 0]


def norm(a: np.ndarray) -> np.ndarray:
    """Complex-valued quadratic form N(a), the e0 coefficient of a * conj(a).

    In the orthonormal Cayley-Dickson basis this is the sum of squared
    coefficients; the equality with the product form is a test oracle.
    """
    a = np.asarray(a)
    return np.einsum("...i,...i->...", a, a)


def bilinear(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """<x, y> = N(x+y) - N(x) - N(y), the double of the polar form of N."""
    x = np.asarray(x)
    y = np.asarray(y)
    return 2.0 * np.einsum("...i,...i->...", x, y)


def associator(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    return multiply(multiply(u, v), w) - multiply(u, multiply(v, w))


def left_mul_matrix(u: np.ndarray) -> np.ndarray:
    """8x8 matrix of v -> u v.  Note L_u L_v != L_{uv} in general."""
    return np.einsum("i,ijk->kj", u, MUL_TABLE)


def oct_to_json(a: np.ndarray) -> list:
    return [[float(c.real), float(c.imag)] for c in np.asarray(a, dtype=complex)]


def oct_from_json(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.shape != (DIM, 2):
        raise ValueError(f"octonion JSON must be 8 [re, im] pairs, got shape {arr.shape}")
    return arr[:, 0] + 1j * arr[:, 1]
