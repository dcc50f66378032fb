import numpy as np
import pytest

from octf4 import octonion as oc
from octf4.config import DEFAULT_TOL
from octf4.jordan import HermMat3, NotOnVarietyError, cone_membership, decompose
from octf4.normalize import (ISOTROPIC, NONISOTROPIC, ZERO_VECTOR,
                             OppositeHalfConeError, RealHermMat3,
                             ReductionError, branch_samples, canonical_complex,
                             canonical_real, classify, real_cone_membership,
                             real_corner_conjugator, reduce_real,
                             reduce_to_canonical, sample_orbit,
                             sample_real_orbit, spin9_transport, verify_trace)
from octf4.spin import SpinGenerator, Vector9, apply_generator


def test_canonical_matches_display():
    a = canonical_complex()
    assert a.diag[0] == 1j and a.diag[1] == -1j and a.diag[2] == 0
    assert np.allclose(a.x1, oc.ONE)
    assert np.abs(a.x2).max() == 0 and np.abs(a.x3).max() == 0


def test_classify_branches():
    samples = branch_samples()
    assert classify(samples[NONISOTROPIC]) == NONISOTROPIC
    assert classify(samples[ISOTROPIC]) == ISOTROPIC
    assert classify(samples[ZERO_VECTOR]) == ZERO_VECTOR
    assert classify(samples[ZERO_VECTOR + "-x1-only"]) == ZERO_VECTOR


def test_classify_rejects_off_cone():
    with pytest.raises(NotOnVarietyError):
        classify(HermMat3.identity())


def test_branch_samples_are_cone_points():
    for a in branch_samples().values():
        assert cone_membership(a).member


def test_transport_nonisotropic():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = Vector9(rng.standard_normal() + 1j * rng.standard_normal(),
                    rng.standard_normal(8) + 1j * rng.standard_normal(8))
        # rotate the coords by a random complex-orthogonal-ish target:
        # use any vector of the same quadratic norm
        u = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        r2 = a.nprime() - oc.norm(u)
        b = Vector9(np.sqrt(r2), u)
        word = spin9_transport(a, b)
        assert len(word.letters) <= 4


def test_transport_isotropic():
    a = Vector9(1j, oc.ONE)
    b = Vector9(2j, 2.0 * oc.basis(3))
    assert abs(a.nprime()) < 1e-12 and abs(b.nprime()) < 1e-12
    word = spin9_transport(a, b)
    assert len(word.letters) <= 4


def test_transport_rejects_norm_mismatch():
    with pytest.raises(ValueError):
        spin9_transport(Vector9(1.0, oc.ZERO), Vector9(2.0, oc.ZERO))
    with pytest.raises(ValueError):
        spin9_transport(Vector9(0.0, oc.ZERO), Vector9(1.0, oc.ZERO))


def test_reduce_branch_samples():
    for name, a in branch_samples().items():
        tr = reduce_to_canonical(a)
        assert tr.residual < 1e-8, name
        assert verify_trace(tr) < 1e-8, name
        assert tr.final.allclose(canonical_complex(), tol=1e-8)


def test_reduce_orbit_samples():
    for a in sample_orbit(seed=3, n=25):
        tr = reduce_to_canonical(a)
        assert tr.residual < 1e-8
        assert verify_trace(tr) < 1e-7


def test_reduce_rejects_off_cone():
    with pytest.raises(NotOnVarietyError):
        reduce_to_canonical(HermMat3.identity())
    with pytest.raises(NotOnVarietyError):
        reduce_to_canonical(HermMat3.zero())


def test_reduce_scaled_input_reports_scale():
    a = canonical_complex() * 3.7
    tr = reduce_to_canonical(a)
    # scaling is absorbed either by the conjugator or the scale report
    assert tr.residual < 1e-8
    assert verify_trace(tr) < 1e-8


def test_reduce_extreme_scale_falls_back():
    a = canonical_complex() * 1e9
    tr = reduce_to_canonical(a)
    assert tr.residual < 1e-6
    assert verify_trace(tr) < 1e-8 * abs(tr.scale)


def test_trace_invariants():
    a = sample_orbit(seed=5, n=1)[0]
    tr = reduce_to_canonical(a)
    # word letters all validate, steps stay on the cone
    for g in tr.word.letters:
        g.validate()
    for st in tr.steps:
        assert cone_membership(st.matrix).member


def test_isotropy_equivalences_on_cone():
    # for cone points: vector part isotropic iff t = 0 iff both spinor
    # components isotropic
    for a in list(sample_orbit(seed=6, n=30)) + list(branch_samples().values()):
        d = decompose(a)
        nrm = a.norm()
        t_zero = abs(d.scalar_top) < 1e-7 * nrm
        vec_iso = abs(d.vector.quad()) < 1e-7 * nrm ** 2
        spinor_iso = (abs(oc.norm(d.spinor[0])) < 1e-7 * nrm ** 2
                      and abs(oc.norm(d.spinor[1])) < 1e-7 * nrm ** 2)
        assert t_zero == vec_iso == spinor_iso


# -- real form ------------------------------------------------------------

def test_real_embedding_lands_on_cone():
    d = canonical_real()
    assert real_cone_membership(d)[0]
    assert cone_membership(d.to_complex()).member
    assert RealHermMat3.from_complex(d.to_complex()).allclose(d)


def test_real_from_complex_rejects():
    with pytest.raises(ValueError):
        RealHermMat3.from_complex(canonical_complex())


def test_real_corner_conjugators_are_lorentz():
    i1 = np.diag([-1.0, 1.0, 1.0])
    for x in (0.2, 1.0, 5.0, -0.3, -4.0):
        c = real_corner_conjugator(x)
        assert np.abs(c @ i1 @ c.T - i1).max() < 1e-10
    assert np.abs(real_corner_conjugator(1.0) - np.eye(3)).max() < 1e-12


def test_real_negative_corner_conjugator():
    # [[x, x, 0], [-x, -x, 0], [0, 0, 0]] with x < 0 is the r = -x case
    x = -2.5
    corner = RealHermMat3(np.array([x, -x, 0.0]), x * oc.ONE.real,
                          np.zeros(8), np.zeros(8))
    assert real_cone_membership(corner)[0]
    g = SpinGenerator.lorentz3(real_corner_conjugator(x))
    out = RealHermMat3.from_complex(apply_generator(g, corner.to_complex()))
    assert out.allclose(canonical_real(), tol=1e-10)


def test_reduce_real_orbit():
    for d in sample_real_orbit(seed=9, n=25):
        tr = reduce_real(d)
        assert tr.residual < 1e-8
        assert verify_trace(tr) < 1e-8
        for g in tr.word.letters:
            if g.kind == "spin9":
                assert abs(complex(g.r).imag) < 1e-12
                assert np.abs(g.u.imag).max() < 1e-12
            elif g.kind == "spin8":
                assert np.abs(g.u.imag).max() < 1e-12
                assert np.abs(g.v.imag).max() < 1e-12
            else:
                assert np.abs(np.imag(g.m)).max() < 1e-12


def test_reduce_real_rejects_opposite_half_cone():
    c = canonical_real()
    flipped = RealHermMat3(-c.diag, c.x1, c.x2, c.x3)
    assert real_cone_membership(flipped)[0]
    with pytest.raises(OppositeHalfConeError):
        reduce_real(flipped)


def test_reduce_real_rejects_off_cone():
    with pytest.raises(NotOnVarietyError):
        reduce_real(RealHermMat3(np.array([1.0, 1.0, 1.0]),
                                 np.zeros(8), np.zeros(8), np.zeros(8)))


def test_real_json_roundtrip():
    d = sample_real_orbit(seed=10, n=1)[0]
    assert RealHermMat3.from_json(d.to_json()).allclose(d, tol=1e-12)


def test_sampling_is_deterministic():
    a = sample_orbit(seed=42, n=3)
    b = sample_orbit(seed=42, n=3)
    for x, y in zip(a, b):
        assert x.allclose(y, tol=0.0 + 1e-15)
    assert not sample_orbit(seed=43, n=1)[0].allclose(a[0], tol=1e-6)
