import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from octf4 import octonion as oc

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


def coct():
    re = arrays(float, 8, elements=finite)
    im = arrays(float, 8, elements=finite)
    return st.builds(lambda a, b: a + 1j * b, re, im)


def test_structure_tensor_shape_and_entries():
    assert oc.MUL_TABLE.shape == (8, 8, 8)
    assert set(np.unique(oc.MUL_TABLE)) <= {-1.0, 0.0, 1.0}
    # each product e_i e_j is a single signed basis element
    assert np.all(np.abs(oc.MUL_TABLE).sum(axis=2) == 1)


def test_unit_element():
    rng = np.random.default_rng(0)
    a = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    assert np.allclose(oc.multiply(oc.ONE, a), a)
    assert np.allclose(oc.multiply(a, oc.ONE), a)


def test_quaternion_subalgebra_relations():
    e1, e2, e3 = oc.basis(1), oc.basis(2), oc.basis(3)
    assert np.allclose(oc.multiply(e1, e1), -oc.ONE)
    assert np.allclose(oc.multiply(e1, e2), e3)
    assert np.allclose(oc.multiply(e2, e1), -e3)


def test_not_associative():
    worst = 0.0
    for i in range(1, 8):
        for j in range(1, 8):
            for k in range(1, 8):
                worst = max(worst, np.abs(oc.associator(
                    oc.basis(i), oc.basis(j), oc.basis(k))).max())
    assert worst > 1.0


def test_left_mul_not_multiplicative():
    e1, e2 = oc.basis(1), oc.basis(2)
    l1 = oc.left_mul_matrix(e1)
    l2 = oc.left_mul_matrix(e2)
    l12 = oc.left_mul_matrix(oc.multiply(e1, e2))
    assert np.abs(l1 @ l2 - l12).max() > 1.0


@settings(max_examples=50, deadline=None)
@given(coct(), coct())
def test_composition_algebra(x, y):
    scale = max(float(np.abs(oc.norm(x) * oc.norm(y))), 1.0)
    assert abs(oc.norm(oc.multiply(x, y)) - oc.norm(x) * oc.norm(y)) <= 1e-9 * scale


@settings(max_examples=50, deadline=None)
@given(coct(), coct())
def test_conjugation_identity(x, y):
    # x (x~ y) = N(x) y
    scale = max(float(np.abs(x).max() ** 2 * np.abs(y).max()), 1.0)
    lhs = oc.multiply(x, oc.multiply(oc.conj(x), y))
    assert np.abs(lhs - oc.norm(x) * y).max() <= 1e-9 * scale


@settings(max_examples=50, deadline=None)
@given(coct(), coct(), coct())
def test_moufang(x, y, z):
    scale = max(float(np.abs(x).max() ** 2 * np.abs(y).max() * np.abs(z).max()), 1.0)
    lhs = oc.multiply(oc.multiply(x, y), oc.multiply(z, x))
    rhs = oc.multiply(x, oc.multiply(oc.multiply(y, z), x))
    assert np.abs(lhs - rhs).max() <= 1e-9 * scale


def test_norm_equals_product_form():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((100, 8)) + 1j * rng.standard_normal((100, 8))
    via_product = oc.multiply(a, oc.conj(a))[..., 0]
    assert np.abs(via_product - oc.norm(a)).max() < 1e-12 * np.abs(a).max() ** 2
    assert np.abs(oc.multiply(a, oc.conj(a))[..., 1:]).max() < 1e-12 * np.abs(a).max() ** 2


def test_bilinear_polarizes_norm():
    rng = np.random.default_rng(2)
    x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    y = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    assert abs(oc.bilinear(x, y) - (oc.norm(x + y) - oc.norm(x) - oc.norm(y))) < 1e-12


def test_broadcasting():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 7, 8))
    b = rng.standard_normal((5, 7, 8))
    out = oc.multiply(a, b)
    assert out.shape == (5, 7, 8)
    assert np.allclose(out[2, 3], oc.multiply(a[2, 3], b[2, 3]))


def test_json_roundtrip():
    rng = np.random.default_rng(4)
    a = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    assert np.allclose(oc.oct_from_json(oc.oct_to_json(a)), a)
    with pytest.raises(ValueError):
        oc.oct_from_json([[1.0, 0.0]] * 7)
