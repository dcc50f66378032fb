import numpy as np
import pytest

from octf4 import octonion as oc
from octf4.jordan import (HermMat3, NotOnVarietyError, cone_membership,
                          decompose, differential_kernel, jordan_mult_operator,
                          jordan_product, recompose, square, trace)
from octf4.normalize import canonical_complex, sample_orbit


def random_herm(rng) -> HermMat3:
    def o():
        return rng.standard_normal(8) + 1j * rng.standard_normal(8)
    return HermMat3(rng.standard_normal(3) + 1j * rng.standard_normal(3), o(), o(), o())


def test_vector_roundtrip():
    rng = np.random.default_rng(0)
    a = random_herm(rng)
    assert a.allclose(HermMat3.from_vector(a.to_vector()))
    assert a.allclose(HermMat3.from_mat3(a.to_mat3(), check=True))


def test_from_mat3_rejects_non_hermitian():
    rng = np.random.default_rng(1)
    m = rng.standard_normal((3, 3, 8)) + 1j * rng.standard_normal((3, 3, 8))
    with pytest.raises(ValueError):
        HermMat3.from_mat3(m, check=True)


def test_jordan_product_commutative_not_associative():
    rng = np.random.default_rng(2)
    a, b, c = (random_herm(rng) for _ in range(3))
    assert jordan_product(a, b).allclose(jordan_product(b, a), tol=1e-10)
    left = jordan_product(jordan_product(a, b), c)
    right = jordan_product(a, jordan_product(b, c))
    assert (left - right).norm() > 1e-6


def test_jordan_identity():
    # (a o b) o (a o a) = a o (b o (a o a))
    rng = np.random.default_rng(3)
    a, b = random_herm(rng), random_herm(rng)
    asq = jordan_product(a, a)
    lhs = jordan_product(jordan_product(a, b), asq)
    rhs = jordan_product(a, jordan_product(b, asq))
    assert (lhs - rhs).norm() <= 1e-9 * max(a.norm() ** 3 * b.norm(), 1.0)


def test_trace_of_multiplication_operator():
    # tr(B -> A o B) = 9 tr(A) on the 27-dim space
    rng = np.random.default_rng(4)
    a = random_herm(rng)
    op_trace = np.trace(jordan_mult_operator(a))
    assert abs(op_trace - 9.0 * trace(a)) < 1e-9 * max(a.norm(), 1.0)


def test_decompose_recompose():
    rng = np.random.default_rng(5)
    a = random_herm(rng)
    assert recompose(decompose(a)).allclose(a, tol=1e-12)


def test_decompose_canonical():
    d = decompose(canonical_complex())
    assert abs(d.scalar_top - (-0.5j)) < 1e-12
    assert abs(d.vector.s - (-0.5j)) < 1e-12
    assert np.abs(d.spinor[0] - oc.ONE).max() < 1e-12
    assert np.abs(d.spinor[1]).max() < 1e-12
    assert np.abs(d.vector.x).max() < 1e-12
    assert abs(d.trace_part) < 1e-12


def test_canonical_on_cone():
    a = canonical_complex()
    assert np.abs(square(a)).max() == 0.0
    assert trace(a) == 0.0
    rep = cone_membership(a)
    assert rep.member


def test_cone_membership_rejects():
    assert not cone_membership(HermMat3.zero()).member
    assert not cone_membership(HermMat3.identity()).member
    # traceless but not square-zero
    a = HermMat3.diagonal(1.0, -1.0, 0.0)
    assert not cone_membership(a).member


def test_kernel_dimension_at_canonical():
    dim, kernel, sv = differential_kernel(canonical_complex())
    assert dim == 16
    assert len(kernel) == 16
    assert sv[9] / sv[10] > 1e3  # rank 10 with a hard spectral gap
    a = canonical_complex()
    for k in kernel:
        assert jordan_product(a, k).norm() < 1e-9
        assert abs(trace(k)) < 1e-9


def test_kernel_dimension_on_orbit():
    for a in sample_orbit(seed=11, n=5):
        dim, _, sv = differential_kernel(a)
        assert dim == 16


def test_kernel_requires_cone_point():
    with pytest.raises(NotOnVarietyError):
        differential_kernel(HermMat3.identity())


def test_json_roundtrip():
    rng = np.random.default_rng(6)
    a = random_herm(rng)
    assert HermMat3.from_json(a.to_json()).allclose(a, tol=1e-12)
