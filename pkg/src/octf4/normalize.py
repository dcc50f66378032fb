"""Constructive reduction of cone points to the canonical form.

The complex reducer follows the transitivity proof case by case: kill
the off-diagonal octonion of the vector block with a Spin(9) transport,
collapse the nonisotropic spinor component to a scalar with a Spin(8)
letter, fix signs with signed permutations, and finish with an explicit
w-dependent complex orthogonal conjugator.  Isotropic and zero vector
parts are first converted to the nonisotropic case by a transport plus
the (12)-swap.

Transport on generalized spheres is done by Cartan-Dieudonne: a point
with the same (complex) norm is reached by at most two reflections, each
reflection pair becoming two Spin(9) letters; isotropic vectors are
routed through an auxiliary isotropic vector with nonzero pairings.

The real form variant reduces elements of the twisted-hermitian model to
[[-1,1,0],[-1,1,0],[0,0,0]] using real letters only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import octonion as oc
from .config import DEFAULT_TOL, Tolerances
from .jordan import (HermMat3, NotOnVarietyError, TraceZeroHermitian2,
                     cone_membership, decompose, mat3_mul, trace)
from .spin import (GeneratorWord, SpinGenerator, Vector9, apply_generator, I1)

NONISOTROPIC = "nonisotropic-vector"
ISOTROPIC = "isotropic-nonzero-vector"
ZERO_VECTOR = "zero-vector"

# |w| range inside which the explicit w-conjugator is numerically safe;
# outside it the trace reports a scale factor instead (division by w is
# exact where the conjugator squares its 1/sqrt(w) entries).
W_SAFE_MIN = 1e-2
W_SAFE_MAX = 1e2


class ReductionError(RuntimeError):
    def __init__(self, message: str, trace_so_far=None):
        super().__init__(message)
        self.trace = trace_so_far


def canonical_complex() -> HermMat3:
    """The canonical cone point [[i,1,0],[1,-i,0],[0,0,0]]."""
    return HermMat3(np.array([1j, -1j, 0.0]), oc.ONE, oc.ZERO, oc.ZERO)


def _perm_matrix(perm, signs=(1, 1, 1)) -> np.ndarray:
    m = np.zeros((3, 3))
    for i, p in enumerate(perm):
        m[i, p] = signs[i]
    return m

P12 = _perm_matrix((1, 0, 2))
P13 = _perm_matrix((2, 1, 0))
P23 = _perm_matrix((0, 2, 1))


def classify(a: HermMat3, tol: Tolerances = DEFAULT_TOL) -> str:
    """Branch label of a cone point by the isotropy of its vector part."""
    report = cone_membership(a, tol)
    if not report.member:
        raise NotOnVarietyError("classify requires a cone point "
                                f"(square residual {report.square_residual:.3e}, "
                                f"trace residual {report.trace_residual:.3e})")
    d = decompose(a)
    scale = report.norm
    vec_size = float(np.linalg.norm(d.vector.coords()))
    if abs(d.vector.quad()) > tol.classify * scale ** 2:
        return NONISOTROPIC
    if vec_size <= tol.classify * scale:
        return ZERO_VECTOR
    return ISOTROPIC


# ---------------------------------------------------------------------------
# Witt transport via reflections
# ---------------------------------------------------------------------------

def _bform(a: np.ndarray, b: np.ndarray) -> complex:
    """Polar form with B(v, v) = N'(v) on 9-coordinate vectors."""
    return complex(np.sum(a * b))


def _reflect(w: np.ndarray, v: np.ndarray) -> np.ndarray:
    return v - (2.0 * _bform(v, w) / _bform(w, w)) * w


def _orthogonal_nonisotropic(b: np.ndarray) -> np.ndarray:
    """A vector c with B(c, b) = 0 and N'(c) bounded away from zero."""
    i0 = int(np.argmax(np.abs(b)))
    ratios = -b / b[i0]
    candidates = []
    for j in range(9):
        if j == i0:
            continue
        c = np.zeros(9, dtype=complex)
        c[j] = 1.0
        c[i0] = ratios[j]
        candidates.append(c)
    best = max(candidates, key=lambda c: abs(_bform(c, c)))
    if abs(_bform(best, best)) > 0.5:
        return best
    # every single candidate is near-isotropic (ratios close to +-i);
    # a pair then has pairing ~ +-2
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            c = candidates[i] + candidates[j]
            if abs(_bform(c, c)) > abs(_bform(best, best)):
                best = c
    return best


def _bridge_points(a: np.ndarray, b: np.ndarray) -> list:
    """Candidates m with Q(m) = Q(a), reachable by well-conditioned
    reflections: R_{a-m} swaps a and m whenever Q(a) = Q(m)."""
    q = _bform(a, a)
    out = []
    scale = max(np.linalg.norm(a), np.linalg.norm(b), 1.0)
    probes = []
    for i in range(9):
        p = np.zeros(9, dtype=complex)
        p[i] = scale
        probes.append(p)
    # combined directions for when no single axis pairs with both a and b
    ia = np.argsort(-np.abs(a))[:2]
    ib = np.argsort(-np.abs(b))[:2]
    for i in ia:
        for j in ib:
            for t in (1.0, 2.0):
                p = np.zeros(9, dtype=complex)
                p[i] += scale
                p[j] += t * scale
                probes.append(p)
    for p in probes:
        ba = _bform(p, a)
        if abs(ba) < 1e-3 * scale ** 2:
            continue
        # solve Q(p + lam a) = Q(a) for lam, stable root
        disc = np.sqrt(ba ** 2 - q * (_bform(p, p) - q))
        denom = ba + disc if abs(ba + disc) > abs(ba - disc) else ba - disc
        lam = (q - _bform(p, p)) / denom
        out.append(p + lam * a)
    return out


def _reflection_score(w: np.ndarray, scale: float) -> float:
    """Error amplification proxy of R_w on vectors of size scale."""
    qw = abs(_bform(w, w))
    if qw == 0.0:
        return np.inf
    nw = float(np.linalg.norm(w))
    return max(nw * scale, nw ** 2) / qw


def _transport_reflections(a: np.ndarray, b: np.ndarray, tol: Tolerances) -> list:
    """Even-length reflection list w with R_{w1} o ... o R_{wk} mapping a to b.

    Several two-reflection candidates exist for each pair with equal Q;
    the best-conditioned one is chosen.
    """
    scale = max(np.linalg.norm(a), np.linalg.norm(b))
    if np.abs(a - b).max() <= tol.abs_tol * scale:
        return []
    candidates = []
    d_minus, d_plus = a - b, a + b
    if abs(_bform(d_minus, d_minus)) > 0:
        # R_{a-b}: a -> b, then a reflection fixing b to restore parity
        candidates.append([scale * _orthogonal_nonisotropic(b), d_minus])
    if abs(_bform(d_plus, d_plus)) > 0 and abs(_bform(b, b)) > 0:
        # R_{a+b}: a -> -b, then R_b: -b -> b
        candidates.append([b, d_plus])
    for m in _bridge_points(a, b):
        # R_{a-m}: a -> m, R_{m-b}: m -> b
        candidates.append([m - b, a - m])

    def score(pair):
        return max(_reflection_score(w, scale) for w in pair)

    best = None
    for pair in sorted(candidates, key=score):
        if not np.isfinite(score(pair)):
            break
        moved = _reflect(pair[0], _reflect(pair[1], a))
        if np.linalg.norm(moved - b) <= tol.classify * scale:
            best = pair
            break
    if best is None:
        raise ReductionError("no well-conditioned reflection pair found for transport")
    return best


def _reflections_to_letters(refls: list) -> list:
    """Reflection pairs to spin9 letters.

    The vector action of g_{r,u} is R_{(r,u)} R_{e0}, so R_{w1} R_{w2}
    equals the action of g_{w1-hat} followed first by its inverse pattern
    g_{w2-hat}^{-1} = g_{r2, -u2}: the e0 reflections cancel pairwise.
    """
    letters = []
    for idx, w in enumerate(refls):
        wn = w / np.sqrt(_bform(w, w))
        if idx % 2 == 1:
            letters.append(SpinGenerator.spin9(wn[0], -wn[1:]))
        else:
            letters.append(SpinGenerator.spin9(wn[0], wn[1:]))
    return letters


def spin9_transport(a: Vector9, b: Vector9, tol: Tolerances = DEFAULT_TOL) -> GeneratorWord:
    """A word of spin9 letters whose vector action maps a to b.

    Requires N'(a) = N'(b) and both nonzero vectors; emits at most 4
    letters and verifies the transport before returning.
    """
    ca, cb = a.coords(), b.coords()
    scale = max(np.linalg.norm(ca), np.linalg.norm(cb))
    if scale == 0.0:
        raise ValueError("cannot transport the zero vector")
    if np.linalg.norm(ca) <= tol.abs_tol * scale or np.linalg.norm(cb) <= tol.abs_tol * scale:
        raise ValueError("cannot transport the zero vector")
    if abs(a.nprime() - b.nprime()) > tol.classify * scale ** 2:
        raise ValueError(f"norm mismatch: N'(a)={a.nprime():.6g}, N'(b)={b.nprime():.6g}")
    word = GeneratorWord(_reflections_to_letters(_transport_reflections(ca, cb, tol)))
    moved = TraceZeroHermitian2(a.r, a.u)
    for g in reversed(word.letters):
        moved = _xi_vector_letter(g, moved)
    residual = np.linalg.norm(moved.coords() - cb)
    if residual > tol.classify * scale:
        raise ReductionError(f"transport failed to reach target (residual {residual:.3e})")
    return word


def _xi_vector_letter(g, tz):
    from .spin import xi_vector
    return xi_vector(g, tz)


# ---------------------------------------------------------------------------
# The complex reducer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionStep:
    letters: tuple            # letters of this step, application order
    branch: str               # case label from the proof
    matrix: object            # intermediate HermMat3 / RealHermMat3


@dataclass(frozen=True)
class ReductionTrace:
    input: object
    steps: tuple
    word: GeneratorWord
    final: object
    residual: float
    scale: complex = 1.0      # realize(word)(input) = scale * final


def _w_conjugator(w: complex) -> np.ndarray:
    """Complex orthogonal matrix sending [[iw,w,0],[w,-iw,0],[0,0,0]] to w=1."""
    sw = np.sqrt(w + 0j)
    s1w = np.sqrt(1.0 - w + 0j)
    return np.array([
        [1.0 / sw, 0.0, -1j * s1w / sw],
        [-1j * (1.0 - w) / sw, sw, -s1w / sw],
        [1j * s1w, s1w, 1.0],
    ])


def _corner_form(w: complex) -> HermMat3:
    return HermMat3(np.array([1j * w, -1j * w, 0.0]), oc.scalar(w), oc.ZERO, oc.ZERO)


class _Reducer:
    """Stateful driver that accumulates steps; word letters apply left-to-right."""

    def __init__(self, a: HermMat3, tol: Tolerances):
        self.tol = tol
        self.input = a
        self.work = a
        self.steps = []
        self.letters = []  # application order

    def push(self, letters, branch):
        for g in letters:
            g.validate(self.tol)
            self.work = apply_generator(g, self.work)
        self.letters.extend(letters)
        self.steps.append(ReductionStep(tuple(letters), branch, self.work))

    def word(self) -> GeneratorWord:
        return GeneratorWord(tuple(reversed(self.letters)))


def reduce_to_canonical(a: HermMat3, tol: Tolerances = DEFAULT_TOL) -> ReductionTrace:
    report = cone_membership(a, tol)
    if not report.member:
        raise NotOnVarietyError("input is not on the variety "
                                f"(square residual {report.square_residual:.3e}, "
                                f"trace residual {report.trace_residual:.3e}, norm {report.norm:.3e})")
    scale0 = report.norm
    red = _Reducer(a, tol)

    label = classify(red.work, tol)
    if label == ZERO_VECTOR:
        # only the spinor block is populated; a swap creates a vector part
        swap = P12 if np.linalg.norm(red.work.x2) > np.linalg.norm(red.work.x1) else P13
        red.push([SpinGenerator.orth3(swap)], ZERO_VECTOR)
        label = classify(red.work, tol)

    if label == ISOTROPIC:
        d = decompose(red.work)
        v = Vector9(d.vector.s, d.vector.x)
        w0 = float(np.linalg.norm(v.coords())) / np.sqrt(2.0)
        target = Vector9(1j * w0, oc.scalar(w0))
        transport = spin9_transport(v, target, tol)
        red.push(list(reversed(transport.letters)), ISOTROPIC)
        red.push([SpinGenerator.orth3(P12)], ISOTROPIC)
        label = classify(red.work, tol)
        if label != NONISOTROPIC:
            raise ReductionError("isotropic branch did not produce a nonisotropic "
                                 f"vector part (got {label})", red.steps)

    # main branch: nonisotropic vector part
    d = decompose(red.work)
    v = Vector9(d.vector.s, d.vector.x)
    target = Vector9(np.sqrt(v.nprime()), oc.ZERO)
    if np.linalg.norm(v.coords() - target.coords()) > tol.abs_tol * scale0:
        transport = spin9_transport(v, target, tol)
        red.push(list(reversed(transport.letters)), NONISOTROPIC)

    n1 = complex(oc.norm(red.work.x1))
    n2 = complex(oc.norm(red.work.x2))
    if abs(n1) <= tol.classify * scale0 ** 2:
        if abs(n2) <= tol.classify * scale0 ** 2:
            raise ReductionError("both spinor components isotropic after transport; "
                                 "contradicts the cone equations", red.steps)
        red.push([SpinGenerator.orth3(P23)], NONISOTROPIC)
        n1 = complex(oc.norm(red.work.x1))

    x1hat = red.work.x1 / np.sqrt(n1)
    red.push([SpinGenerator.spin8(-oc.ONE, -x1hat)], NONISOTROPIC)

    # should now be [[+-iw, w, 0], [w, -+iw, 0], [0, 0, 0]]
    w = complex(red.work.x1[0])
    r1 = complex(red.work.diag[0])
    stray = float(np.linalg.norm(np.concatenate([
        red.work.x1[1:], red.work.x2, red.work.x3, [red.work.diag[2]]])))
    if stray > tol.classify * scale0:
        raise ReductionError(f"corner form not reached (stray mass {stray:.3e})", red.steps)
    if abs(r1 + 1j * w) < abs(r1 - 1j * w):
        red.push([SpinGenerator.orth3(P12)], NONISOTROPIC)
        w = complex(red.work.x1[0])

    scale = 1.0 + 0.0j
    if abs(w - 1.0) > tol.accept:
        if W_SAFE_MIN <= abs(w) <= W_SAFE_MAX:
            m = _w_conjugator(w)
            defect = np.abs(m @ m.T - np.eye(3)).max()
            if defect > tol.classify * max(1.0, np.abs(m).max() ** 2):
                raise ReductionError(f"w-conjugator failed orthogonality check "
                                     f"(defect {defect:.3e}, w={w:.6g})", red.steps)
            red.push([SpinGenerator.orth3(m)], NONISOTROPIC)
        else:
            # conditioning guard: report the scale instead of conjugating
            scale = w

    final = red.work * (1.0 / scale)
    residual = (final - canonical_complex()).norm()
    trace_obj = ReductionTrace(a, tuple(red.steps), red.word(), final,
                               float(residual), complex(scale))
    if residual > tol.accept * max(1.0, scale0 / abs(scale)):
        raise ReductionError(f"residual {residual:.3e} above tolerance", trace_obj)
    return trace_obj


def verify_trace(tr: ReductionTrace, tol: Tolerances = DEFAULT_TOL) -> float:
    """Recompute realize(word)(input) and compare with scale * final.

    Independent of how the word was found.  Returns the defect.
    """
    if isinstance(tr.input, RealHermMat3):
        start = tr.input.to_complex()
        end = tr.final.to_complex() if isinstance(tr.final, RealHermMat3) else tr.final
    else:
        start, end = tr.input, tr.final
    got = tr.word.realize(tol).apply(start)
    return (got - end * tr.scale).norm()


# ---------------------------------------------------------------------------
# Orbit sampling
# ---------------------------------------------------------------------------

def _random_unit_oct(rng, min_norm=0.3) -> np.ndarray:
    while True:
        u = (rng.standard_normal(8) + 1j * rng.standard_normal(8)) / 4.0
        if abs(oc.norm(u)) > min_norm:
            return u / np.sqrt(oc.norm(u))


def _random_letter(rng) -> SpinGenerator:
    kind = rng.integers(0, 3)
    if kind == 0:
        u = (rng.standard_normal(8) + 1j * rng.standard_normal(8)) / 5.0
        r = np.sqrt(1.0 - oc.norm(u))
        return SpinGenerator.spin9(r, u)
    if kind == 1:
        return SpinGenerator.spin8(_random_unit_oct(rng), _random_unit_oct(rng))
    perm = rng.permutation(3)
    signs = rng.choice([-1.0, 1.0], size=3)
    return SpinGenerator.orth3(_perm_matrix(perm, signs))


def random_word(rng, length: int = 6) -> GeneratorWord:
    return GeneratorWord(tuple(_random_letter(rng) for _ in range(length)))


def sample_orbit(seed: int, n: int, word_length: int = 6) -> list:
    """n seeded orbit points realize(word)(canonical); deterministic in seed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(np.random.PCG64(seed))
    base = canonical_complex()
    return [random_word(rng, word_length).apply(base) for _ in range(n)]


def branch_samples() -> dict:
    """Deterministic cone points hitting each classify branch."""
    canon = canonical_complex()
    iso = apply_generator(SpinGenerator.orth3(P13), canon)
    u = oc.basis(1) + 1j * oc.basis(2)  # isotropic octonion
    zero_vec = HermMat3(np.zeros(3), u, 2.0 * u, oc.ZERO)
    zero_vec_single = HermMat3(np.zeros(3), u, oc.ZERO, oc.ZERO)
    return {
        NONISOTROPIC: canon,
        ISOTROPIC: iso,
        ZERO_VECTOR: zero_vec,
        ZERO_VECTOR + "-x1-only": zero_vec_single,
    }


# ---------------------------------------------------------------------------
# The real form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealHermMat3:
    """Element of the twisted real model: [[r1,x1,x2],[-x1~,r2,x3],[-x2~,x3~,r3]].

    Satisfies I1 conj(A)^T I1 = A with I1 = diag(-1,1,1); diag real,
    off-diagonal entries real octonions.
    """
    diag: np.ndarray
    x1: np.ndarray
    x2: np.ndarray
    x3: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "diag", np.asarray(self.diag, dtype=float).reshape(3))
        for name in ("x1", "x2", "x3"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float).reshape(8))

    def to_mat3(self) -> np.ndarray:
        m = np.zeros((3, 3, 8))
        for i in range(3):
            m[i, i, 0] = self.diag[i]
        m[0, 1] = self.x1
        m[1, 0] = -oc.conj(self.x1).real
        m[0, 2] = self.x2
        m[2, 0] = -oc.conj(self.x2).real
        m[1, 2] = self.x3
        m[2, 1] = oc.conj(self.x3).real
        return m

    def norm(self) -> float:
        return float(np.linalg.norm(np.concatenate([self.diag, self.x1, self.x2, self.x3])))

    def to_complex(self) -> HermMat3:
        """Embed via T = diag(i,1,1): A = T D T^{-1} is octonion-hermitian."""
        return HermMat3(self.diag.astype(complex),
                        1j * oc.conj(self.x1), 1j * oc.conj(self.x2),
                        self.x3.astype(complex))

    @classmethod
    def from_complex(cls, a: HermMat3, tol: float = 1e-8) -> "RealHermMat3":
        x1 = oc.conj(-1j * a.x1)
        x2 = oc.conj(-1j * a.x2)
        defect = max(np.abs(a.diag.imag).max(), np.abs(x1.imag).max(),
                     np.abs(x2.imag).max(), np.abs(a.x3.imag).max())
        scale = max(a.norm(), 1.0)
        if defect > tol * scale:
            raise ValueError(f"matrix is not in the real model (imaginary mass {defect:.3e})")
        return cls(a.diag.real, x1.real, x2.real, a.x3.real)

    def allclose(self, other: "RealHermMat3", tol: float = 1e-9) -> bool:
        d = max(np.abs(self.diag - other.diag).max(), np.abs(self.x1 - other.x1).max(),
                np.abs(self.x2 - other.x2).max(), np.abs(self.x3 - other.x3).max())
        return bool(d <= tol)

    def to_json(self) -> dict:
        return {
            "real": True,
            "diag": [float(c) for c in self.diag],
            "x1": [float(c) for c in self.x1],
            "x2": [float(c) for c in self.x2],
            "x3": [float(c) for c in self.x3],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RealHermMat3":
        return cls(np.asarray(data["diag"], dtype=float),
                   np.asarray(data["x1"], dtype=float),
                   np.asarray(data["x2"], dtype=float),
                   np.asarray(data["x3"], dtype=float))


def canonical_real() -> RealHermMat3:
    return RealHermMat3(np.array([-1.0, 1.0, 0.0]), oc.ONE.real, oc.ZERO.real, oc.ZERO.real)


def real_cone_membership(d: RealHermMat3, tol: Tolerances = DEFAULT_TOL):
    m = d.to_mat3()
    sq = float(np.linalg.norm(mat3_mul(m, m)))
    tr = abs(float(d.diag.sum()))
    nrm = d.norm()
    member = nrm > tol.abs_tol and sq <= tol.classify * nrm ** 2 and tr <= tol.classify * nrm
    return member, sq, tr, nrm


def real_corner_conjugator(x: float) -> np.ndarray:
    """Lorentz conjugator finishing the real reduction.

    For the corner form [[-r, x, 0], [-x, r, 0], [0, 0, 0]]: the x > 0
    matrix handles r = x, the x < 0 one handles r = -x.
    """
    if x > 0:
        c = 0.5 * np.sqrt(1.0 / x) * np.array([
            [x + 1.0, 1.0 - x, 0.0],
            [1.0 - x, x + 1.0, 0.0],
            [0.0, 0.0, 2.0 * np.sqrt(x)],
        ])
    else:
        c = 0.5 * np.sqrt(-1.0 / x) * np.array([
            [x - 1.0, x + 1.0, 0.0],
            [-(x + 1.0), 1.0 - x, 0.0],
            [0.0, 0.0, 2.0 * np.sqrt(-x)],
        ])
    return c


class OppositeHalfConeError(NotOnVarietyError):
    """The real cone splits into two halves; only one contains the canonical form."""


def reduce_real(d: RealHermMat3, tol: Tolerances = DEFAULT_TOL) -> ReductionTrace:
    member, sq, tr, nrm = real_cone_membership(d, tol)
    if not member:
        raise NotOnVarietyError(f"input is not on the real variety "
                                f"(square residual {sq:.3e}, trace residual {tr:.3e}, norm {nrm:.3e})")
    t = -d.diag[0] / 2.0
    if t <= tol.classify * nrm:
        raise OppositeHalfConeError(
            "point lies in the opposite half-cone (t <= 0); the connected group "
            "reaches only the half containing the canonical form")

    red = _Reducer(d.to_complex(), tol)
    real_steps = []

    def push(letters, branch):
        red.push(letters, branch)
        real_steps.append(ReductionStep(tuple(letters), branch,
                                        RealHermMat3.from_complex(red.work)))

    # 1. kill x3 with a real rotation of the vector part
    dec = decompose(red.work)
    v = Vector9(dec.vector.s, dec.vector.x)
    sigma = float(np.sqrt(abs(v.nprime())))
    s_target = sigma if (abs(v.r.real) <= tol.abs_tol * nrm or v.r.real > 0) else -sigma
    target = Vector9(s_target, oc.ZERO)
    if np.linalg.norm(v.coords() - target.coords()) > tol.abs_tol * nrm:
        transport = spin9_transport(v, target, tol)
        push(list(reversed(transport.letters)), "real-transport")

    # 2. branch on t = +-s; the (23)-swap moves t = -s to t = s
    dec = decompose(red.work)
    s_now = complex(dec.vector.s).real
    if abs(t + s_now) < abs(t - s_now):
        push([SpinGenerator.orth3(P23)], "real-swap-t-equals-minus-s")
    model = RealHermMat3.from_complex(red.work)
    tau = -model.diag[0] / 2.0

    # 3. collapse x1 to the positive scalar 2*tau with a real Spin(8) letter
    n1 = float(oc.norm(model.x1).real)
    if n1 <= (tol.classify * nrm) ** 2:
        raise ReductionError("x1 vanished in the t = s branch; not a cone point", red.steps)
    x1hat = (model.x1 / np.sqrt(n1)).astype(complex)
    # complex-layout letter: model x1 maps to (x1 v) u~ for spin8(u, v)
    push([SpinGenerator.spin8(-oc.ONE, -oc.conj(x1hat))], "real-spin8")
    model = RealHermMat3.from_complex(red.work)
    x = float(model.x1[0])

    # 4. finish with the explicit Lorentz conjugator (r = x = 2*tau > 0)
    if abs(x - 1.0) > tol.accept:
        push([SpinGenerator.lorentz3(real_corner_conjugator(x))], "real-conjugator")

    final = RealHermMat3.from_complex(red.work)
    residual = float(np.linalg.norm(np.concatenate([
        final.diag - canonical_real().diag, final.x1 - canonical_real().x1,
        final.x2, final.x3])))
    trace_obj = ReductionTrace(d, tuple(real_steps), red.word(), final,
                               residual, 1.0 + 0.0j)
    if residual > tol.accept * max(1.0, nrm):
        raise ReductionError(f"real residual {residual:.3e} above tolerance", trace_obj)
    return trace_obj


def _random_real_letter(rng) -> SpinGenerator:
    kind = rng.integers(0, 3)
    if kind == 0:
        while True:
            u = rng.standard_normal(8) / 5.0
            if oc.norm(u).real < 0.9:
                break
        r = float(np.sqrt(1.0 - oc.norm(u).real))
        return SpinGenerator.spin9(r, u.astype(complex))
    if kind == 1:
        def unit(rng):
            u = rng.standard_normal(8)
            return (u / np.sqrt(oc.norm(u).real)).astype(complex)
        return SpinGenerator.spin8(unit(rng), unit(rng))
    # random Lorentz letter: boost in the (1,2) plane, rotation in (2,3)
    phi = rng.uniform(-0.8, 0.8)
    theta = rng.uniform(0.0, 2 * np.pi)
    boost = np.array([[np.cosh(phi), np.sinh(phi), 0.0],
                      [np.sinh(phi), np.cosh(phi), 0.0],
                      [0.0, 0.0, 1.0]])
    rot = np.array([[1.0, 0.0, 0.0],
                    [0.0, np.cos(theta), np.sin(theta)],
                    [0.0, -np.sin(theta), np.cos(theta)]])
    return SpinGenerator.lorentz3(boost @ rot)


def sample_real_orbit(seed: int, n: int, word_length: int = 6) -> list:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(np.random.PCG64(seed))
    base = canonical_real().to_complex()
    out = []
    for _ in range(n):
        word = GeneratorWord(tuple(_random_real_letter(rng) for _ in range(word_length)))
        out.append(RealHermMat3.from_complex(word.apply(base)))
    return out
