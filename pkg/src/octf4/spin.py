"""Explicit Spin(9, C) and Spin(8, C) generators and their 27-dim lift.

The spin group of C + O sits inside End(O^2) (x) C; its generators
g_{r,u} act on Herm(3, O) blockwise: by the vector formula on the
trace-free 2x2 block, by the spinor formula on the octonion pair, and
trivially on both scalar blocks.  Together with 3x3 complex orthogonal
conjugations this generates the automorphism group of the Jordan
algebra, realized here as dense 27x27 matrices.

Letter kinds:
  spin9(r, u)    r^2 + N(u) = 1
  spin8(u, v)    N(u) = N(v) = 1; equals the word [spin9(0,u), spin9(0,-v)]
  orth3(m)       m complex 3x3, m m^T = 1, acting by A -> m A m^T
  lorentz3(m)    m real 3x3 with m I1 m^T = I1, I1 = diag(-1,1,1); the
                 conjugators of the real form, acting on complex
                 coordinates as the complex orthogonal T m T^-1 with
                 T = diag(i,1,1)
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import octonion as oc
from .config import DEFAULT_TOL, Tolerances
from .jordan import (Decomposition, HermMat3, TraceZeroHermitian2, decompose,
                     mat3_mul, recompose)

I1 = np.diag([-1.0, 1.0, 1.0])
_T_EMBED = np.diag([1j, 1.0, 1.0])
_T_EMBED_INV = np.diag([-1j, 1.0, 1.0])


@dataclass(frozen=True)
class Vector9:
    """An element (r, u) of the 9-dim quadratic space C + O."""
    r: complex
    u: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "r", complex(self.r))
        object.__setattr__(self, "u", np.asarray(self.u, dtype=complex).reshape(8))

    def nprime(self) -> complex:
        return complex(self.r ** 2 + oc.norm(self.u))

    def coords(self) -> np.ndarray:
        return np.concatenate([[self.r], self.u])

    @classmethod
    def from_coords(cls, c: np.ndarray) -> "Vector9":
        c = np.asarray(c, dtype=complex).reshape(9)
        return cls(c[0], c[1:])


def mu(u: np.ndarray) -> np.ndarray:
    """16x16 block matrix [[0, L_u], [-L_u~, 0]]; mu(u)^2 = -N(u) Id."""
    out = np.zeros((16, 16), dtype=complex)
    out[:8, 8:] = oc.left_mul_matrix(u)
    out[8:, :8] = -oc.left_mul_matrix(oc.conj(u))
    return out


@dataclass(frozen=True)
class TaggedEnd:
    """Element of End(O^2) (x) C: a 16x16 matrix times i^flag."""
    matrix: np.ndarray
    flag: int = 0  # power of the tensor factor i, mod 2

    def __matmul__(self, other: "TaggedEnd") -> "TaggedEnd":
        sign = -1.0 if (self.flag and other.flag) else 1.0
        return TaggedEnd(sign * self.matrix @ other.matrix, (self.flag + other.flag) % 2)

    def untagged(self) -> np.ndarray:
        if self.flag:
            raise ValueError("element carries a nontrivial (x) i factor")
        return self.matrix


def kappa(v: Vector9) -> TaggedEnd:
    """[[r, L_u], [L_u~, -r]] (x) i; squares to -N'(v) Id."""
    m = np.zeros((16, 16), dtype=complex)
    m[:8, :8] = v.r * np.eye(8)
    m[8:, 8:] = -v.r * np.eye(8)
    m[:8, 8:] = oc.left_mul_matrix(v.u)
    m[8:, :8] = oc.left_mul_matrix(oc.conj(v.u))
    return TaggedEnd(m, 1)


def spin9_matrix(r: complex, u: np.ndarray) -> np.ndarray:
    """The generator g_{r,u} = [[r, -L_u], [L_u~, r]] = kappa(r,u) kappa(-1,0)."""
    m = np.zeros((16, 16), dtype=complex)
    m[:8, :8] = r * np.eye(8)
    m[8:, 8:] = r * np.eye(8)
    m[:8, 8:] = -oc.left_mul_matrix(u)
    m[8:, :8] = oc.left_mul_matrix(oc.conj(u))
    return m


class InvalidGeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class SpinGenerator:
    kind: str
    r: complex = 0.0
    u: np.ndarray | None = None
    v: np.ndarray | None = None
    m: np.ndarray | None = None

    @classmethod
    def spin9(cls, r: complex, u: np.ndarray) -> "SpinGenerator":
        return cls("spin9", r=complex(r), u=np.asarray(u, dtype=complex).reshape(8))

    @classmethod
    def spin9_from_vector(cls, v: Vector9) -> "SpinGenerator":
        return cls.spin9(v.r, v.u)

    @classmethod
    def spin8(cls, u: np.ndarray, v: np.ndarray) -> "SpinGenerator":
        return cls("spin8", u=np.asarray(u, dtype=complex).reshape(8),
                   v=np.asarray(v, dtype=complex).reshape(8))

    @classmethod
    def orth3(cls, m: np.ndarray) -> "SpinGenerator":
        return cls("orth3", m=np.asarray(m, dtype=complex).reshape(3, 3))

    @classmethod
    def lorentz3(cls, m: np.ndarray) -> "SpinGenerator":
        return cls("lorentz3", m=np.asarray(m, dtype=float).reshape(3, 3))

    def validate(self, tol: Tolerances = DEFAULT_TOL) -> None:
        if self.kind == "spin9":
            defect = abs(self.r ** 2 + oc.norm(self.u) - 1.0)
            if defect > tol.classify:
                raise InvalidGeneratorError(f"spin9 letter is not unit norm (defect {defect:.3e})")
        elif self.kind == "spin8":
            du = abs(oc.norm(self.u) - 1.0)
            dv = abs(oc.norm(self.v) - 1.0)
            if max(du, dv) > tol.classify:
                raise InvalidGeneratorError(f"spin8 letter has non-unit factor (defect {max(du, dv):.3e})")
        elif self.kind == "orth3":
            defect = np.abs(self.m @ self.m.T - np.eye(3)).max()
            if defect > tol.classify:
                raise InvalidGeneratorError(f"orth3 letter is not orthogonal (defect {defect:.3e})")
        elif self.kind == "lorentz3":
            if np.abs(np.imag(self.m)).max() > 0:
                raise InvalidGeneratorError("lorentz3 letter must be real")
            defect = np.abs(self.m @ I1 @ self.m.T - I1).max()
            if defect > tol.classify:
                raise InvalidGeneratorError(f"lorentz3 letter is not I1-orthogonal (defect {defect:.3e})")
        else:
            raise InvalidGeneratorError(f"unknown generator kind {self.kind!r}")

    def to_json(self) -> dict:
        if self.kind == "spin9":
            return {"kind": "spin9", "r": [self.r.real, self.r.imag], "u": oc.oct_to_json(self.u)}
        if self.kind == "spin8":
            return {"kind": "spin8", "u": oc.oct_to_json(self.u), "v": oc.oct_to_json(self.v)}
        mat = [[[complex(c).real, complex(c).imag] for c in row] for row in self.m]
        return {"kind": self.kind, "m": mat}

    @classmethod
    def from_json(cls, data: dict) -> "SpinGenerator":
        kind = data["kind"]
        if kind == "spin9":
            r = complex(data["r"][0], data["r"][1])
            return cls.spin9(r, oc.oct_from_json(data["u"]))
        if kind == "spin8":
            return cls.spin8(oc.oct_from_json(data["u"]), oc.oct_from_json(data["v"]))
        if kind in ("orth3", "lorentz3"):
            m = np.asarray(data["m"], dtype=float)
            mat = m[..., 0] + 1j * m[..., 1]
            return cls.orth3(mat) if kind == "orth3" else cls.lorentz3(mat.real)
        raise ValueError(f"unknown generator kind {kind!r}")


def xi_vector(g: SpinGenerator, tz: TraceZeroHermitian2) -> TraceZeroHermitian2:
    """Vector action of a spin letter on the trace-free 2x2 block."""
    s, x = tz.s, tz.x
    if g.kind == "spin9":
        r, u = g.r, g.u
        s_new = s * (r ** 2 - oc.norm(u)) - r * oc.bilinear(x, u)
        x_new = 2 * r * s * u + r ** 2 * x - oc.multiply(u, oc.multiply(oc.conj(x), u))
        return TraceZeroHermitian2(complex(s_new), x_new)
    if g.kind == "spin8":
        u, v = g.u, g.v
        inner = oc.multiply(oc.conj(v), oc.multiply(x, oc.conj(v)))
        return TraceZeroHermitian2(s, oc.multiply(u, oc.multiply(inner, u)))
    raise InvalidGeneratorError(f"xi_vector requires a spin letter, got {g.kind!r}")


def xi_spinor(g: SpinGenerator, x1: np.ndarray, x2: np.ndarray):
    """Spinor action of a spin letter on the octonion pair."""
    if g.kind == "spin9":
        r, u = g.r, g.u
        return (r * x1 - oc.multiply(u, x2), oc.multiply(oc.conj(u), x1) + r * x2)
    if g.kind == "spin8":
        u, v = g.u, g.v
        return (oc.multiply(u, oc.multiply(oc.conj(v), x1)),
                oc.multiply(oc.conj(u), oc.multiply(v, x2)))
    raise InvalidGeneratorError(f"xi_spinor requires a spin letter, got {g.kind!r}")


def _orth3_conjugate(m: np.ndarray, a: HermMat3) -> HermMat3:
    full = a.to_mat3()
    out = np.einsum("ip,pqa,jq->ija", m, full, m)
    return HermMat3.from_mat3(out)


def apply_generator(g: SpinGenerator, a: HermMat3) -> HermMat3:
    if g.kind in ("spin9", "spin8"):
        d = decompose(a)
        x1, x2 = xi_spinor(g, *d.spinor)
        vec = xi_vector(g, d.vector)
        return recompose(Decomposition(d.scalar_top, (x1, x2), vec, d.trace_part))
    if g.kind == "orth3":
        return _orth3_conjugate(g.m, a)
    if g.kind == "lorentz3":
        mc = _T_EMBED @ g.m.astype(complex) @ _T_EMBED_INV
        return _orth3_conjugate(mc, a)
    raise InvalidGeneratorError(f"unknown generator kind {g.kind!r}")


@dataclass(frozen=True)
class F4Element:
    """A 27x27 complex matrix acting on the coordinates of HermMat3."""
    matrix: np.ndarray

    def apply(self, a: HermMat3) -> HermMat3:
        return HermMat3.from_vector(self.matrix @ a.to_vector())

    def __matmul__(self, other: "F4Element") -> "F4Element":
        return F4Element(self.matrix @ other.matrix)


def realize_letter(g: SpinGenerator, tol: Tolerances = DEFAULT_TOL) -> F4Element:
    g.validate(tol)
    cols = []
    for k in range(27):
        e = np.zeros(27, dtype=complex)
        e[k] = 1.0
        cols.append(apply_generator(g, HermMat3.from_vector(e)).to_vector())
    return F4Element(np.stack(cols, axis=1))


@dataclass(frozen=True)
class GeneratorWord:
    """Ordered product of elementary letters; letters[-1] acts first."""
    letters: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + other.letters)

    def realize(self, tol: Tolerances = DEFAULT_TOL) -> F4Element:
        out = F4Element(np.eye(27, dtype=complex))
        for g in self.letters:
            out = out @ realize_letter(g, tol)
        return out

    def apply(self, a: HermMat3) -> HermMat3:
        for g in reversed(self.letters):
            a = apply_generator(g, a)
        return a

    def to_json(self) -> list:
        return [g.to_json() for g in self.letters]

    @classmethod
    def from_json(cls, data: list) -> "GeneratorWord":
        return cls(tuple(SpinGenerator.from_json(d) for d in data))


def conjugation_oracle(r: complex, u: np.ndarray, a: HermMat3,
                       tol: Tolerances = DEFAULT_TOL) -> HermMat3:
    """G_{r,u} A G_{r,u}^{-1} with G_{r,u} = [[1,0,0],[0,r,-u],[0,u~,r]].

    Independent of the blockwise action; G^{-1} = G_{r,-u}.  Both
    bracketings of the triple product are computed and must agree.
    """
    u = np.asarray(u, dtype=complex).reshape(8)
    defect = abs(r ** 2 + oc.norm(u) - 1.0)
    if defect > tol.classify:
        raise InvalidGeneratorError(f"(r, u) is not unit norm (defect {defect:.3e})")

    def gmat(rr, uu):
        m = np.zeros((3, 3, 8), dtype=complex)
        m[0, 0] = oc.ONE
        m[1, 1] = oc.scalar(rr)
        m[2, 2] = oc.scalar(rr)
        m[1, 2] = -uu
        m[2, 1] = oc.conj(uu)
        return m

    g = gmat(r, u)
    ginv = gmat(r, -u)
    am = a.to_mat3()
    left = mat3_mul(mat3_mul(g, am), ginv)
    right = mat3_mul(g, mat3_mul(am, ginv))
    gap = np.abs(left - right).max()
    scale = max(a.norm(), 1.0)
    if gap > tol.classify * scale:
        raise ArithmeticError(f"bracketings of G A G^-1 disagree by {gap:.3e}")
    return HermMat3.from_mat3(left)
