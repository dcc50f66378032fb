"""The F4 root system, fundamental weights, and Weyl dimension counts.

Everything here is exact rational arithmetic over the 4-dim Euclidean
weight space in the epsilon basis.  Roots are generated by closing the
simple system under its own reflections, not listed by hand; the
expected multiset (24 long, 24 short, 48 total) is a test oracle.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

Weight = tuple  # 4 Fractions in the epsilon basis

SIMPLE_ROOTS = (
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
)


def dot(a: Weight, b: Weight) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def reflect(alpha: Weight, v: Weight) -> Weight:
    c = 2 * dot(v, alpha) / dot(alpha, alpha)
    return tuple(x - c * y for x, y in zip(v, alpha))


def generate_roots() -> tuple:
    """Close the simple system under reflections in all known roots."""
    roots = set(SIMPLE_ROOTS)
    while True:
        new = {reflect(a, b) for a in roots for b in roots} - roots
        if not new:
            return tuple(sorted(roots))
        roots |= new


ROOTS = generate_roots()
LONG_ROOTS = tuple(a for a in ROOTS if dot(a, a) == 2)
SHORT_ROOTS = tuple(a for a in ROOTS if dot(a, a) == 1)


def positive_roots() -> tuple:
    """Roots with positive coefficients in the simple-root expansion."""
    out = []
    for a in ROOTS:
        coeffs = simple_coefficients(a)
        if all(c >= 0 for c in coeffs) and any(c > 0 for c in coeffs):
            out.append(a)
    return tuple(out)


def simple_coefficients(a: Weight) -> tuple:
    """Exact expansion of a weight in the simple roots (solve 4x4)."""
    # Gaussian elimination over Fraction; columns are the simple roots
    m = [[SIMPLE_ROOTS[j][i] for j in range(4)] + [a[i]] for i in range(4)]
    for col in range(4):
        piv = next(r for r in range(col, 4) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / Fraction(m[col][col])
        m[col] = [x * inv for x in m[col]]
        for r in range(4):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][4] for r in range(4))


POSITIVE_ROOTS = positive_roots()


def coroot_pairing(lam: Weight, alpha: Weight) -> Fraction:
    """<lam, alpha-check> = 2 (lam, alpha) / (alpha, alpha)."""
    return 2 * dot(lam, alpha) / dot(alpha, alpha)


def _solve_fundamental_weights() -> tuple:
    """omega_i with <omega_i, alpha_j-check> = delta_ij, by exact solve."""
    # rows of the system: the coroots 2 alpha_j / (alpha_j, alpha_j)
    rows = [tuple(2 * x / dot(a, a) for x in a) for a in SIMPLE_ROOTS]
    weights = []
    for i in range(4):
        m = [list(rows[r]) + [Fraction(1 if r == i else 0)] for r in range(4)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / Fraction(m[col][col])
            m[col] = [x * inv for x in m[col]]
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        weights.append(tuple(m[r][4] for r in range(4)))
    return tuple(weights)


FUNDAMENTAL_WEIGHTS = _solve_fundamental_weights()
RHO = tuple(sum(a[i] for a in POSITIVE_ROOTS) / 2 for i in range(4))


def weyl_dim(coeffs) -> int:
    """dim of the irrep with highest weight sum_i coeffs[i] omega_i.

    The quotient prod <lam + rho, alpha> / prod <rho, alpha> over positive
    roots is invariant under rescaling the inner product, so the plain
    epsilon-basis dot product is used.
    """
    lam = tuple(sum(Fraction(c) * w[i] for c, w in zip(coeffs, FUNDAMENTAL_WEIGHTS))
                for i in range(4))
    num = Fraction(1)
    den = Fraction(1)
    for a in POSITIVE_ROOTS:
        num *= dot(tuple(l + r for l, r in zip(lam, RHO)), a)
        den *= dot(RHO, a)
    d = num / den
    if d.denominator != 1 or d <= 0:
        raise ArithmeticError(f"Weyl dimension came out non-integral: {d}")
    return int(d)


def parabolic_dims(sigma) -> dict:
    """Dimensions attached to a subset sigma of simple-root indices (1-based).

    The parabolic subalgebra keeps the Cartan and every root whose
    coefficients on the members of sigma are all >= 0; the nilradical is
    the set of roots with at least one such coefficient > 0.
    """
    sigma = frozenset(sigma)
    if not sigma <= {1, 2, 3, 4}:
        raise ValueError("sigma must be a subset of {1, 2, 3, 4}")
    parabolic = 4  # Cartan
    nilradical = 0
    levi = 4
    for a in ROOTS:
        coeffs = simple_coefficients(a)
        marked = [coeffs[i - 1] for i in sigma]
        if all(c >= 0 for c in marked):
            parabolic += 1
            if any(c > 0 for c in marked):
                nilradical += 1
            else:
                levi += 1
    return {"parabolic": parabolic, "nilradical": nilradical, "levi": levi}


def unique_small_irrep_check(bound: int = 26, coeff_sum: int = 2) -> list:
    """All dominant weights with coefficient sum <= coeff_sum whose irrep
    dimension is <= bound and nontrivial.  Monotonicity of weyl_dim in each
    coefficient justifies the small search box."""
    hits = []
    for coeffs in product(range(coeff_sum + 1), repeat=4):
        if sum(coeffs) == 0 or sum(coeffs) > coeff_sum:
            continue
        if weyl_dim(coeffs) <= bound:
            hits.append(coeffs)
    return hits
