"""Complete elliptic integrals, the Jacobi dn function, and rational
approximation error bounds.

These scalar routines feed the shift-schedule machinery: the optimal shifts
for the alternating-direction solves are values of dn at equispaced fractions
of the quarter period, and the a-priori error bounds involve the Grotzsch
ring function.

All public routines take the elliptic *modulus* k, never the squared modulus
m = k**2.  (MATLAB's ellipke/ellipj take m; translating code between the two
conventions is a classic source of silent errors, so the convention is pinned
here and tested.)  Routines with a ``_from_complement`` suffix take the
complementary modulus k' = sqrt(1 - k**2) directly, which avoids cancellation
when k is within roundoff of 1.
"""

import math

__all__ = [
    "ellipk",
    "ellipk_from_complement",
    "jacobi_dn",
    "jacobi_dn_from_complement",
    "grotzsch_mu",
    "zolotarev_bound",
    "zolotarev_bound_symmetric",
]

# Below this complementary parameter the AGM for K is replaced by the
# logarithmic asymptote; corresponds to k**2 > 1 - 1e-12.
_KC2_ASYMPTOTE = 1e-12


def _check_modulus(k):
    if not 0.0 <= k < 1.0:
        raise ValueError(f"elliptic modulus must satisfy 0 <= k < 1, got {k!r}")


def ellipk(k):
    """Complete elliptic integral of the first kind K(k).

    Uses the arithmetic-geometric mean, accurate to ~1e-15 relative for
    0 <= k < 1.  Raises ValueError outside that range.
    """
    _check_modulus(k)
    return ellipk_from_complement(math.sqrt((1.0 - k) * (1.0 + k)))


def ellipk_from_complement(kc):
    """K as a function of the complementary modulus kc = sqrt(1-k^2).

    Stable for tiny kc (modulus near 1), where K grows like log(4/kc).
    """
    if not 0.0 < kc <= 1.0:
        raise ValueError(f"complementary modulus must be in (0, 1], got {kc!r}")
    if kc * kc < _KC2_ASYMPTOTE:
        # K = log(4/kc) + (kc^2/4)(log(4/kc) - 1) + O(kc^4)
        lg = math.log(4.0 / kc)
        return lg + 0.25 * kc * kc * (lg - 1.0)
    a, b = 1.0, kc
    while abs(a - b) > 1e-16 * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def jacobi_dn(z, k):
    """Jacobi elliptic dn(z, k) for real z, 0 <= k < 1."""
    _check_modulus(k)
    return jacobi_dn_from_complement(z, math.sqrt((1.0 - k) * (1.0 + k)))


def jacobi_dn_from_complement(z, kc):
    """dn(z, k) parameterised by the complementary modulus kc.

    Descending Landen (AGM) recursion.  The final value is assembled as
    sqrt(kc^2 + k^2 cos^2 phi), which stays accurate near the quarter
    period where dn approaches kc.
    """
    if not 0.0 < kc <= 1.0:
        raise ValueError(f"complementary modulus must be in (0, 1], got {kc!r}")
    if kc == 1.0:  # k = 0, dn identically 1
        return 1.0
    m = 1.0 - kc * kc

    a = [1.0]
    c = [math.sqrt(m)]
    b = kc
    while abs(c[-1]) > 1e-17 * a[-1] and len(a) < 32:
        an = 0.5 * (a[-1] + b)
        c.append(0.5 * (a[-1] - b))
        b = math.sqrt(a[-1] * b)
        a.append(an)
    n = len(a) - 1
    phi = (2.0 ** n) * a[-1] * z
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, c[i] * math.sin(phi) / a[i]))))
    cos2 = math.cos(phi) ** 2
    return math.sqrt(kc * kc + m * cos2)


def grotzsch_mu(lam):
    """Grotzsch ring function mu(lam) = (pi/2) K(sqrt(1-lam^2)) / K(lam).

    Strictly decreasing on (0, 1), with mu(1/sqrt(2)) = pi/2.
    """
    if not 0.0 < lam < 1.0:
        raise ValueError(f"argument must be in (0, 1), got {lam!r}")
    # K(sqrt(1-lam^2)) is K evaluated with complementary modulus lam
    return 0.5 * math.pi * ellipk_from_complement(lam) / ellipk(lam)


def zolotarev_bound(J, gamma):
    """A-priori error bounds for J double-sweeps of the shifted iteration.

    Returns the pair ``(sharp, relaxed)``:

    * sharp   = 4 * exp(-2*J*pi^2 / (4*mu(1/sqrt(gamma))))
    * relaxed = 4 * exp(-2*J*pi^2 / (2*log(16*gamma)))

    where gamma >= 1 is the absolute cross-ratio of the two spectral
    intervals.  relaxed >= sharp always; both equal 4 at J = 0.  A measured
    iteration error (relative, 2-norm) is bounded by the sharp value, hence
    by the relaxed one.
    """
    if gamma < 1.0:
        raise ValueError(f"cross-ratio gamma must be >= 1, got {gamma!r}")
    if J < 0:
        raise ValueError(f"iteration count must be >= 0, got {J!r}")
    if J == 0:
        return 4.0, 4.0
    if gamma == 1.0:
        # touching point spectra: one shift pair annihilates the error
        return 0.0, 4.0 * math.exp(-2.0 * J * math.pi ** 2 / (2.0 * math.log(16.0)))
    mu = grotzsch_mu(1.0 / math.sqrt(gamma))
    sharp = 4.0 * math.exp(-2.0 * J * math.pi ** 2 / (4.0 * mu))
    relaxed = 4.0 * math.exp(-2.0 * J * math.pi ** 2 / (2.0 * math.log(16.0 * gamma)))
    return sharp, relaxed


def zolotarev_bound_symmetric(J, b_over_a):
    """Bound specialised to mirrored intervals [-b,-a] and [a,b], 0 < a < b.

    Evaluates 4 * exp(-2*J*pi^2 / log(4*b/a)).  Caution: measurements show
    this expression is optimistic by a factor of two in the exponent (the
    optimal degree-(J,J) rational on mirrored intervals attains the sharp
    bound of ``zolotarev_bound``, not this value), so it is exposed for
    reference only and never used to derive iteration counts.
    """
    if b_over_a < 1.0:
        raise ValueError(f"interval ratio must be >= 1, got {b_over_a!r}")
    if J == 0:
        return 4.0
    return 4.0 * math.exp(-2.0 * J * math.pi ** 2 / math.log(4.0 * b_over_a))
