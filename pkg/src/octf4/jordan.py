"""The complex exceptional Jordan algebra: hermitian 3x3 octonionic matrices.

A matrix is stored by its 27 complex coordinates: three diagonal scalars
(r1, r2, r3) and three octonions placed as

    ( r1   x1~   x2~ )
    ( x1   r2    x3  )        (~ is octonion conjugation)
    ( x2   x3~   r3  )

so hermiticity is structural.  The module also provides the block
decomposition C + O^2 + Herm0(2, O) + C used by the spin actions, cone
membership for the variety {A^2 = 0, tr A = 0, A != 0}, and the tangent
space computation at a cone point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import octonion as oc
from .config import DEFAULT_TOL, Tolerances

NCOORD = 27


class NotOnVarietyError(ValueError):
    """Raised when an operation requires a point of the cone."""


@dataclass(frozen=True)
class HermMat3:
    diag: np.ndarray  # (3,) complex
    x1: np.ndarray    # (8,) complex, entry (2,1)
    x2: np.ndarray    # (8,) complex, entry (3,1)
    x3: np.ndarray    # (8,) complex, entry (2,3)

    def __post_init__(self):
        object.__setattr__(self, "diag", np.asarray(self.diag, dtype=complex).reshape(3))
        for name in ("x1", "x2", "x3"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=complex).reshape(8))

    # -- linear structure ------------------------------------------------
    def __add__(self, other: "HermMat3") -> "HermMat3":
        return HermMat3(self.diag + other.diag, self.x1 + other.x1,
                        self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "HermMat3") -> "HermMat3":
        return HermMat3(self.diag - other.diag, self.x1 - other.x1,
                        self.x2 - other.x2, self.x3 - other.x3)

    def __mul__(self, z: complex) -> "HermMat3":
        return HermMat3(self.diag * z, self.x1 * z, self.x2 * z, self.x3 * z)

    __rmul__ = __mul__

    def __neg__(self) -> "HermMat3":
        return self * (-1.0)

    # -- coordinates -----------------------------------------------------
    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.diag, self.x1, self.x2, self.x3])

    @classmethod
    def from_vector(cls, v: np.ndarray) -> "HermMat3":
        v = np.asarray(v, dtype=complex).reshape(NCOORD)
        return cls(v[:3], v[3:11], v[11:19], v[19:27])

    def to_mat3(self) -> np.ndarray:
        """Full (3, 3, 8) array of octonion entries."""
        m = np.zeros((3, 3, 8), dtype=complex)
        for i in range(3):
            m[i, i] = oc.scalar(self.diag[i])
        m[1, 0] = self.x1
        m[0, 1] = oc.conj(self.x1)
        m[2, 0] = self.x2
        m[0, 2] = oc.conj(self.x2)
        m[1, 2] = self.x3
        m[2, 1] = oc.conj(self.x3)
        return m

    @classmethod
    def from_mat3(cls, m: np.ndarray, check: bool = False, tol: float = 1e-9) -> "HermMat3":
        m = np.asarray(m, dtype=complex)
        if check:
            herm = np.stack([[oc.conj(m[j, i]) for j in range(3)] for i in range(3)])
            err = np.abs(m - herm).max()
            offdiag = max(np.abs(m[i, i][1:]).max() for i in range(3))
            if err > tol or offdiag > tol:
                raise ValueError(f"matrix is not octonion-hermitian (residual {max(err, offdiag):.3e})")
        return cls(np.array([m[0, 0][0], m[1, 1][0], m[2, 2][0]]), m[1, 0], m[2, 0], m[1, 2])

    # -- misc ------------------------------------------------------------
    def norm(self) -> float:
        """Frobenius norm over the 27 complex coordinates."""
        return float(np.linalg.norm(self.to_vector()))

    @classmethod
    def zero(cls) -> "HermMat3":
        return cls(np.zeros(3), oc.ZERO, oc.ZERO, oc.ZERO)

    @classmethod
    def identity(cls) -> "HermMat3":
        return cls(np.ones(3), oc.ZERO, oc.ZERO, oc.ZERO)

    @classmethod
    def diagonal(cls, r1: complex, r2: complex, r3: complex) -> "HermMat3":
        return cls(np.array([r1, r2, r3], dtype=complex), oc.ZERO, oc.ZERO, oc.ZERO)

    def allclose(self, other: "HermMat3", tol: float = 1e-9) -> bool:
        return bool(np.abs(self.to_vector() - other.to_vector()).max() <= tol)

    def to_json(self) -> dict:
        return {
            "diag": [[float(c.real), float(c.imag)] for c in self.diag],
            "x1": oc.oct_to_json(self.x1),
            "x2": oc.oct_to_json(self.x2),
            "x3": oc.oct_to_json(self.x3),
        }

    @classmethod
    def from_json(cls, data: dict) -> "HermMat3":
        diag = np.asarray(data["diag"], dtype=float)
        if diag.shape != (3, 2):
            raise ValueError("diag must be 3 [re, im] pairs")
        return cls(diag[:, 0] + 1j * diag[:, 1],
                   oc.oct_from_json(data["x1"]),
                   oc.oct_from_json(data["x2"]),
                   oc.oct_from_json(data["x3"]))


@dataclass(frozen=True)
class TraceZeroHermitian2:
    """Trace-free hermitian 2x2 block [[s, x], [x~, -s]]; the vector part."""
    s: complex
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=complex).reshape(8))

    def quad(self) -> complex:
        """The quadratic invariant s^2 + N(x)."""
        return complex(self.s ** 2 + oc.norm(self.x))

    def coords(self) -> np.ndarray:
        return np.concatenate([[self.s], self.x])


@dataclass(frozen=True)
class Decomposition:
    scalar_top: complex          # t, with r1 = -2t after removing the trace part
    spinor: tuple                # (x1, x2) octonion pair
    vector: TraceZeroHermitian2  # (s, x3)
    trace_part: complex          # tr(A) / 3


def mat3_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Octonionic product of two (3, 3, 8) matrices, entrywise single products."""
    return np.einsum("ipa,pjb,abc->ijc", a, b, oc.MUL_TABLE)


def jordan_product(a: HermMat3, b: HermMat3) -> HermMat3:
    am, bm = a.to_mat3(), b.to_mat3()
    sym = 0.5 * (mat3_mul(am, bm) + mat3_mul(bm, am))
    return HermMat3.from_mat3(sym)


def square(a: HermMat3) -> np.ndarray:
    """A * A as a full (3, 3, 8) octonionic matrix (no hermitization)."""
    am = a.to_mat3()
    return mat3_mul(am, am)


def trace(a: HermMat3) -> complex:
    return complex(a.diag.sum())


def decompose(a: HermMat3) -> Decomposition:
    t_trace = trace(a) / 3.0
    r1, r2, r3 = a.diag - t_trace
    t = -r1 / 2.0
    s = (r2 - r3) / 2.0
    return Decomposition(scalar_top=complex(t), spinor=(a.x1.copy(), a.x2.copy()),
                         vector=TraceZeroHermitian2(complex(s), a.x3), trace_part=complex(t_trace))


def recompose(d: Decomposition) -> HermMat3:
    t, s, tt = d.scalar_top, d.vector.s, d.trace_part
    diag = np.array([-2 * t + tt, t + s + tt, t - s + tt], dtype=complex)
    return HermMat3(diag, d.spinor[0], d.spinor[1], d.vector.x)


@dataclass(frozen=True)
class ConeReport:
    member: bool
    square_residual: float
    trace_residual: float
    norm: float


def cone_membership(a: HermMat3, tol: Tolerances = DEFAULT_TOL) -> ConeReport:
    """Membership in {A^2 = 0, tr A = 0, A != 0}, with the three residuals."""
    nrm = a.norm()
    sq = float(np.linalg.norm(square(a)))
    tr = abs(trace(a))
    member = nrm > tol.abs_tol and sq <= tol.classify * nrm ** 2 and tr <= tol.classify * nrm
    return ConeReport(member, sq, tr, nrm)


def jordan_mult_operator(a: HermMat3) -> np.ndarray:
    """27x27 matrix of B -> A o B in the coordinate basis."""
    cols = []
    for k in range(NCOORD):
        e = np.zeros(NCOORD, dtype=complex)
        e[k] = 1.0
        cols.append(jordan_product(a, HermMat3.from_vector(e)).to_vector())
    return np.stack(cols, axis=1)


def _trace_free_basis() -> np.ndarray:
    """27x26 matrix whose columns span the trace-free subspace."""
    cols = []
    d1 = np.zeros(NCOORD, dtype=complex)
    d1[0], d1[1] = 1.0, -1.0
    d2 = np.zeros(NCOORD, dtype=complex)
    d2[1], d2[2] = 1.0, -1.0
    cols.extend([d1, d2])
    for k in range(3, NCOORD):
        e = np.zeros(NCOORD, dtype=complex)
        e[k] = 1.0
        cols.append(e)
    return np.stack(cols, axis=1)


def differential_kernel(a: HermMat3, tol: Tolerances = DEFAULT_TOL,
                        rank_rtol: float = 1e-7):
    """Kernel of B -> A o B on the 26-dim trace-free space, A on the cone.

    Returns (complex dimension, list of HermMat3 kernel basis elements,
    singular values).  Singular values below rank_rtol times the largest
    one count as zero.
    """
    report = cone_membership(a, tol)
    if not report.member:
        raise NotOnVarietyError("not on the variety: "
                                f"square residual {report.square_residual:.3e}, "
                                f"trace residual {report.trace_residual:.3e}, norm {report.norm:.3e}")
    basis26 = _trace_free_basis()
    op = jordan_mult_operator(a) @ basis26  # 27 x 26
    u, sv, vh = np.linalg.svd(op)
    cutoff = rank_rtol * sv[0]
    rank = int((sv > cutoff).sum())
    kernel_coeffs = vh[rank:].conj().T  # 26 x (26 - rank)
    kernel = [HermMat3.from_vector(basis26 @ kernel_coeffs[:, j])
              for j in range(kernel_coeffs.shape[1])]
    return 26 - rank, kernel, sv
