"""Optimal shift schedules for alternating-direction solves.

Given two disjoint real intervals [a, b] and [c, d] enclosing the spectra of
the two operators of a Sylvester equation AX - XB = F, the machinery here
produces the shift parameters p_j, q_j and the iteration count J that make
the alternating iteration converge to a prescribed relative accuracy.  The
shifts are Mobius transplants of Jacobi dn values; the count comes from the
relaxed cross-ratio bound.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .elliptic import (
    ellipk_from_complement,
    jacobi_dn_from_complement,
    zolotarev_bound,
)

__all__ = [
    "SpectralIntervals",
    "ShiftSchedule",
    "cross_ratio_gamma",
    "alpha_from_gamma",
    "mobius_map",
    "mobius_eval",
    "adi_shifts",
    "adi_shifts_symmetric",
    "iteration_count",
]


@dataclass(frozen=True)
class SpectralIntervals:
    """Disjoint real intervals [a, b] and [c, d] with b < c (or a degenerate
    touching pair a = b < c = d).  The first interval encloses the spectrum
    of the left operator, the second that of the right operator."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"interval endpoints must be finite, got {vals}")
        if not (self.a <= self.b < self.c <= self.d or
                (self.a == self.b and self.c == self.d and self.b < self.c)):
            raise ValueError(
                f"intervals must satisfy a <= b < c <= d, got {vals}")

    def negated(self):
        """Intervals for the sign-flipped equation (-A)X - X(-B) = -F."""
        return SpectralIntervals(-self.d, -self.c, -self.b, -self.a)


@dataclass
class ShiftSchedule:
    """Shift parameters for J double-sweeps: p lives in [a, b], q in [c, d]."""

    p: np.ndarray
    q: np.ndarray
    intervals: SpectralIntervals | None = None
    gamma: float = field(default=float("nan"))

    @property
    def J(self):
        return len(self.p)

    def __post_init__(self):
        self.p = np.asarray(self.p, dtype=float)
        self.q = np.asarray(self.q, dtype=float)
        if self.p.shape != self.q.shape:
            raise ValueError("shift lists p and q must have equal length")


def cross_ratio_gamma(iv):
    """Absolute cross-ratio |c-a||d-b| / (|c-b||d-a|) of the four endpoints.

    Equals 1 for touching point spectra and grows as the intervals separate
    relative to their lengths; always >= 1 for disjoint intervals.
    """
    a, b, c, d = iv.a, iv.b, iv.c, iv.d
    if a == b and c == d:
        return 1.0
    return abs(c - a) * abs(d - b) / (abs(c - b) * abs(d - a))


def alpha_from_gamma(gamma):
    """Map the cross-ratio to the endpoint ratio alpha >= 1 of the canonical
    intervals [-alpha, -1] and [1, alpha] with the same cross-ratio."""
    if gamma < 1.0:
        raise ValueError(f"cross-ratio must be >= 1, got {gamma!r}")
    return -1.0 + 2.0 * gamma + 2.0 * math.sqrt(gamma * gamma - gamma)


def _mobius_from_triple(z1, z2, z3):
    # 2x2 coefficient matrix of the Mobius map sending (z1, z2, z3) to
    # (0, 1, oo): M(z) = (z - z1)(z2 - z3) / ((z - z3)(z2 - z1))
    return np.array([
        [z2 - z3, -z1 * (z2 - z3)],
        [z2 - z1, -z3 * (z2 - z1)],
    ])


def mobius_map(iv):
    """Coefficients (w1, w2, w3, w4) of the Mobius map T(t) = (w1*t + w2) /
    (w3*t + w4) taking the canonical points {-alpha, -1, 1, alpha} to
    {a, b, c, d}.

    The map is built from three interpolation conditions; the fourth holds
    automatically because the cross-ratios agree, and is verified to 1e-12
    relative.  Coefficients are normalized so the largest magnitude is 1,
    which keeps them representable when the endpoints are huge.
    """
    gamma = cross_ratio_gamma(iv)
    if gamma == 1.0:
        raise ValueError("point spectra have no four-point Mobius transplant")
    alpha = alpha_from_gamma(gamma)
    a, b, c, d = iv.a, iv.b, iv.c, iv.d
    if a == b or c == d or b == c:
        raise ValueError(f"degenerate interval data {(a, b, c, d)}")
    # T = M2^{-1} o M1 with M1: (-alpha,-1,1) -> (0,1,oo), M2: (a,b,c) -> (0,1,oo)
    m1 = _mobius_from_triple(-alpha, -1.0, 1.0)
    m2 = _mobius_from_triple(a, b, c)
    det = m2[0, 0] * m2[1, 1] - m2[0, 1] * m2[1, 0]
    m2inv = np.array([[m2[1, 1], -m2[0, 1]], [-m2[1, 0], m2[0, 0]]]) / det
    t = m2inv @ m1
    w = np.array([t[0, 0], t[0, 1], t[1, 0], t[1, 1]])
    w /= np.abs(w).max()
    # fourth interpolation condition certifies the construction
    d_check = mobius_eval(w, alpha)
    scale = max(abs(d), 1.0)
    if not abs(d_check - d) <= 1e-12 * scale:
        raise ValueError(
            f"Mobius transplant failed the fourth condition: T(alpha)={d_check!r} "
            f"vs d={d!r}")
    return w


def mobius_eval(w, t):
    """Evaluate T(t) = (w1*t + w2)/(w3*t + w4)."""
    return (w[0] * t + w[1]) / (w[2] * t + w[3])


def iteration_count(variant, n=None, eps=None, gamma=None):
    """Number of double-sweeps J for a target relative accuracy.

    Variants:

    * ``"general"``     ceil(log(16*gamma) * log(4/eps) / pi^2); needs gamma.
      This is the count implied by the relaxed cross-ratio bound and is the
      one used by every solver in this package.
    * ``"fd"``          ceil(log(2*n) * log(4/eps) / pi^2); the published
      count for the five-point finite-difference discretization.  Note: this
      undercounts by a factor ~2 (see ``zolotarev_bound_symmetric``); it is
      reproduced verbatim because downstream comparisons pin it.
    * ``"square"``      ceil(log(120*n^4) * log(4/eps) / pi^2); the general
      count evaluated with the certified spectral intervals of the square
      solver, for which 16*gamma ~= 120*n^4.
    * ``"square_paper"`` ceil(log(120*n^4) * log(1/eps) / (2*pi^2)); the
      published square-solver count, exposed verbatim for reference.

    Every variant is floored at J = 1: zero sweeps would return the zero
    matrix regardless of the data.
    """
    if eps is None or not 0.0 < eps <= 1.0:
        raise ValueError(f"accuracy must satisfy 0 < eps <= 1, got {eps!r}")
    pi2 = math.pi ** 2
    if variant == "general":
        if gamma is None or gamma < 1.0:
            raise ValueError("general variant needs a cross-ratio gamma >= 1")
        val = math.log(16.0 * gamma) * math.log(4.0 / eps) / pi2
    elif variant == "fd":
        if n is None or n < 1:
            raise ValueError("fd variant needs a grid parameter n >= 1")
        val = math.log(2.0 * n) * math.log(4.0 / eps) / pi2
    elif variant == "square":
        if n is None or n < 1:
            raise ValueError("square variant needs a size n >= 1")
        val = math.log(120.0 * n ** 4) * math.log(4.0 / eps) / pi2
    elif variant == "square_paper":
        if n is None or n < 1:
            raise ValueError("square_paper variant needs a size n >= 1")
        val = math.log(120.0 * n ** 4) * math.log(1.0 / eps) / (2.0 * pi2)
    else:
        raise ValueError(f"unknown iteration-count variant {variant!r}")
    return max(1, math.ceil(val - 1e-12))


def _dn_nodes(J, alpha):
    # dn((2j+1)/(2J) * K, kappa) with kappa' = 1/alpha, j = 0..J-1
    kc = 1.0 / alpha
    K = ellipk_from_complement(kc)
    return np.array([
        jacobi_dn_from_complement((2 * j + 1) / (2.0 * J) * K, kc)
        for j in range(J)
    ])


def adi_shifts(iv, eps=None, J=None):
    """Optimal shift schedule for spectra in ``iv`` and accuracy ``eps``.

    When ``J`` is omitted it is taken from the general iteration count.  The
    shifts are p_j = T(-alpha * dn_j) and q_j = T(alpha * dn_j) where dn_j
    runs over the quarter-period nodes and T is the Mobius transplant of the
    canonical intervals onto ``iv``.  Guarantees p_j in [a, b], q_j in
    [c, d], and relative iteration error at most the relaxed bound.
    """
    gamma = cross_ratio_gamma(iv)
    if J is None:
        if eps is None or not 0.0 < eps < 1.0:
            raise ValueError(f"accuracy must satisfy 0 < eps < 1, got {eps!r}")
        J = iteration_count("general", eps=eps, gamma=gamma)
    if J < 1:
        raise ValueError(f"schedule needs at least one sweep, got J={J}")
    alpha = alpha_from_gamma(gamma)
    if alpha - 1.0 < 1e-14:
        # touching/point spectra: T(-1) = b and T(1) = c in the limit
        p = np.full(J, iv.b)
        q = np.full(J, iv.c)
        return ShiftSchedule(p, q, iv, gamma)
    w = mobius_map(iv)
    dn = _dn_nodes(J, alpha)
    p = mobius_eval(w, -alpha * dn)
    q = mobius_eval(w, alpha * dn)
    return ShiftSchedule(p, q, iv, gamma)


def adi_shifts_symmetric(a, b, J):
    """Shift schedule specialised to mirrored intervals [-b, -a] and [a, b].

    p_j = -b * dn((2j+1)/(2J) * K(kappa), kappa) with kappa = sqrt(1 -
    (a/b)^2), and q_j = -p_j.  Agrees with the general construction to
    roundoff; kept as an independent arithmetic path for cross-checking.
    """
    if not 0.0 < a <= b:
        raise ValueError(f"need 0 < a <= b, got {(a, b)!r}")
    if J < 1:
        raise ValueError(f"schedule needs at least one sweep, got J={J}")
    iv = SpectralIntervals(-b, -a, a, b)
    if a == b:
        return ShiftSchedule(np.full(J, -a), np.full(J, a), iv, 1.0)
    kc = a / b
    K = ellipk_from_complement(kc)
    dn = np.array([
        jacobi_dn_from_complement((2 * j + 1) / (2.0 * J) * K, kc)
        for j in range(J)
    ])
    p = -b * dn
    return ShiftSchedule(p, -p, iv, cross_ratio_gamma(iv))
