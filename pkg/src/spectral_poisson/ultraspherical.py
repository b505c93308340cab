"""The normalized degree-3/2 ultraspherical basis and its operator calculus.

The solution basis for the square-type solvers is (1-x^2) * Ct_j(x), where
Ct_j is the ultraspherical polynomial of parameter 3/2 normalized so that
int_{-1}^{1} Ct_j(x)^2 (1-x^2) dx = 1.  Its key property: (1-x^2)*Ct_j is an
eigenfunction of u -> d^2/dx^2[(1-x^2) u] with eigenvalue -(j(j+3)+2), which
turns the Laplacian into a diagonal-plus-banded Sylvester operator.

This module provides pointwise evaluation, the banded operator matrices
(multiplication by 1-x^2, by x, and the weighted first derivative), and the
coefficient conversions Chebyshev <-> Legendre <-> ultraspherical.
"""

import numpy as np
from scipy.linalg import solve_banded

from .banded import BandedMatrix, identity

__all__ = [
    "CHEBYSHEV", "LEGENDRE", "ULTRA", "FOURIER",
    "norm_factor",
    "ultra_value", "ultra_series_value",
    "diff_diagonal", "weight_mult_matrix", "x_mult_matrix",
    "weighted_diff_matrix",
    "legendre_to_ultra_matrix", "legendre_to_chebyshev_matrix",
    "convert",
]

# basis tags used in file headers and conversion dispatch
CHEBYSHEV = "chebyshev_t"
LEGENDRE = "legendre_p"
ULTRA = "ultra_c32"
FOURIER = "fourier"


def norm_factor(j):
    """nu_j with Ct_j = C_j / nu_j; nu_j = sqrt((j+1)(j+2)/(j+3/2))."""
    j = np.asarray(j, dtype=float)
    return np.sqrt((j + 1.0) * (j + 2.0) / (j + 1.5))


def ultra_value(j, x):
    """Value of the normalized basis polynomial of degree j at x in [-1, 1].

    Three-term recurrence on the unnormalized family, then normalization.
    """
    x = np.asarray(x, dtype=float)
    if np.any((x < -1.0) | (x > 1.0)):
        raise ValueError("evaluation points must lie in [-1, 1]")
    if j < 0:
        raise ValueError(f"degree must be nonnegative, got {j}")
    pm, p = np.zeros_like(x), np.ones_like(x)
    for i in range(j):
        # (i+1) C_{i+1} = (2i+3) x C_i - (i+2) C_{i-1}
        pm, p = p, ((2 * i + 3) * x * p - (i + 2) * pm) / (i + 1)
    return p / norm_factor(j)


def ultra_series_value(coeffs, x):
    """Clenshaw evaluation of sum_j coeffs[j] * Ct_j(x)."""
    coeffs = np.asarray(coeffs)
    x = np.asarray(x, dtype=float)
    if np.any((x < -1.0) | (x > 1.0)):
        raise ValueError("evaluation points must lie in [-1, 1]")
    n = len(coeffs)
    if n == 0:
        return np.zeros_like(x)
    c = coeffs / norm_factor(np.arange(n))  # unnormalized-family coefficients
    bk1 = np.zeros(np.shape(x), dtype=c.dtype)
    bk2 = np.zeros_like(bk1)
    for j in range(n - 1, 0, -1):
        # alpha_j(x) = (2j+3)/(j+1) x, beta_{j+1} = -(j+2)/(j+1) scaled back
        bk1, bk2 = c[j] + (2 * j + 3) / (j + 1.0) * x * bk1 - \
            (j + 2.0) / (j + 1.0) * bk2, bk1
    return c[0] + 3.0 * x * bk1 - 1.5 * bk2


def diff_diagonal(n):
    """Eigenvalues -(j(j+3)+2) of u -> d^2/dx^2[(1-x^2) u] on the basis."""
    j = np.arange(n, dtype=float)
    return -(j * (j + 3.0) + 2.0)


def weight_mult_matrix(n):
    """Multiplication by (1-x^2): symmetric pentadiagonal, zero first
    off-diagonals.

    Diagonal 2(j+1)(j+2)/((2j+1)(2j+5)); second superdiagonal
    -sqrt((j+1)(j+2)(j+3)(j+4)(2j+3)/(2j+7)) / ((2j+3)(2j+5)).
    """
    j = np.arange(n, dtype=float)
    d0 = 2.0 * (j + 1) * (j + 2) / ((2 * j + 1) * (2 * j + 5))
    diags = {0: d0}
    if n > 2:
        j2 = j[:-2]
        d2 = -np.sqrt((j2 + 1) * (j2 + 2) * (j2 + 3) * (j2 + 4) *
                      (2 * j2 + 3) / (2 * j2 + 7)) / ((2 * j2 + 3) * (2 * j2 + 5))
        diags[2] = d2
        diags[-2] = d2.copy()
    return BandedMatrix(n, diags)


def x_mult_matrix(n):
    """Multiplication by x: symmetric tridiagonal with zero diagonal,
    off-diagonal sqrt((j+1)(j+3)/((2j+3)(2j+5)))."""
    diags = {0: np.zeros(n)}
    if n > 1:
        j = np.arange(n - 1, dtype=float)
        d1 = np.sqrt((j + 1) * (j + 3) / ((2 * j + 3) * (2 * j + 5)))
        diags[1] = d1
        diags[-1] = d1.copy()
    return BandedMatrix(n, diags)


def weighted_diff_matrix(n):
    """(1-x^2) d/dx as a tridiagonal matrix on the basis, assembled directly.

    From (1-x^2) C_j' = [(j+2)(j+3) C_{j-1} - j(j+1) C_{j+1}] / (2j+3):
    entry (j-1, j) is (j+3) sqrt(j(j+2)/((2j+1)(2j+3))) and entry (j+1, j)
    is -j sqrt((j+1)(j+3)/((2j+3)(2j+5))); the diagonal vanishes by parity.
    """
    diags = {0: np.zeros(n)}
    if n > 1:
        j = np.arange(1, n, dtype=float)        # column index for entry (j-1, j)
        up = (j + 3) * np.sqrt(j * (j + 2) / ((2 * j + 1) * (2 * j + 3)))
        jl = np.arange(0, n - 1, dtype=float)   # column index for entry (j+1, j)
        lo = -jl * np.sqrt((jl + 1) * (jl + 3) / ((2 * jl + 3) * (2 * jl + 5)))
        diags[1] = up
        diags[-1] = lo
    return BandedMatrix(n, diags)


def legendre_to_ultra_matrix(n):
    """Upper-triangular banded map from Legendre coefficients to normalized
    ultraspherical coefficients.

    Built from (2j+1) P_j = nu_j Ct_j - nu_{j-2} Ct_{j-2}: the matrix has
    diagonal nu_i/(2i+1) and second superdiagonal -nu_i/(2i+5).  Its inverse
    (the reverse conversion) is applied by banded back-substitution.
    """
    i = np.arange(n, dtype=float)
    nu = norm_factor(i)
    diags = {0: nu / (2 * i + 1)}
    if n > 2:
        diags[2] = -nu[:-2] / (2 * i[:-2] + 5)
    return BandedMatrix(n, diags)


def legendre_to_chebyshev_matrix(n):
    """Dense upper-triangular map from Legendre to Chebyshev coefficients.

    Column j holds the Chebyshev coefficients of P_j, generated by the
    three-term recurrence with multiplication-by-x applied in Chebyshev
    coefficient space; O(n^2) to build and to apply per vector.
    """
    lam = np.zeros((n, n))
    lam[0, 0] = 1.0
    if n > 1:
        lam[1, 1] = 1.0
    for j in range(1, n - 1):
        # (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
        xc = _cheb_mult_x(lam[:j + 2, j])
        lam[:j + 2, j + 1] = ((2 * j + 1) * xc - j * lam[:j + 2, j - 1]) / (j + 1)
    return lam


def _cheb_mult_x(c):
    # multiplication by x in Chebyshev coefficients, output one degree longer
    m = len(c)
    out = np.zeros(m + 1)
    out[1:] += 0.5 * c
    out[:m - 1] += 0.5 * c[1:]
    out[1] += 0.5 * c[0]  # x*T_0 = T_1 (undo the halved first column rule)
    return out[:m + 1]


def _apply_ultra_from_legendre(c):
    u = legendre_to_ultra_matrix(len(c))
    return u.apply(c)


def _apply_legendre_from_ultra(c):
    u = legendre_to_ultra_matrix(len(c))
    l, ubw, ab = u.scipy_ab()
    if np.iscomplexobj(c):
        return solve_banded((l, ubw), ab, c.real) + 1j * solve_banded((l, ubw), ab, c.imag)
    return solve_banded((l, ubw), ab, c)


def _apply_cheb_from_legendre(c):
    return legendre_to_chebyshev_matrix(len(c)) @ c


def _apply_legendre_from_cheb(c):
    from scipy.linalg import solve_triangular
    lam = legendre_to_chebyshev_matrix(len(c))
    return solve_triangular(lam, c, lower=False)


_STEPS = {
    (LEGENDRE, ULTRA): _apply_ultra_from_legendre,
    (ULTRA, LEGENDRE): _apply_legendre_from_ultra,
    (LEGENDRE, CHEBYSHEV): _apply_cheb_from_legendre,
    (CHEBYSHEV, LEGENDRE): _apply_legendre_from_cheb,
}


def convert(coeffs, frm, to, axis=None):
    """Convert a coefficient vector (or tensor, one axis at a time) between
    the Chebyshev, Legendre, and ultraspherical bases.

    Routing always passes through Legendre, which neighbours both other
    bases.  The Legendre <-> ultraspherical hop is banded (O(n) per vector);
    Chebyshev <-> Legendre is triangular (O(n^2) per vector).
    """
    coeffs = np.asarray(coeffs)
    for tag in (frm, to):
        if tag not in (CHEBYSHEV, LEGENDRE, ULTRA):
            raise ValueError(f"unsupported basis tag {tag!r}")
    if frm == to:
        return coeffs.copy()
    path = [frm]
    if LEGENDRE not in (frm, to):
        path.append(LEGENDRE)
    path.append(to)

    def apply_1d(vec):
        for src, dst in zip(path[:-1], path[1:]):
            vec = _STEPS[(src, dst)](vec)
        return vec

    if coeffs.ndim == 1:
        return apply_1d(coeffs)
    if axis is None:
        raise ValueError("tensor input needs an explicit axis")
    return np.apply_along_axis(apply_1d, axis, coeffs)
