"""Banded matrices stored by diagonals, with the structured solves the
alternating-direction sweeps rely on.

The operators that arise here are banded with *even* offsets only (their odd
diagonals vanish identically because the basis functions have definite
parity).  Shifting by a scalar keeps that structure, so every shifted solve
splits into two independent systems of half the size and half the bandwidth
— tridiagonal in the most common case — and costs O(n).
"""

import numpy as np
from scipy.linalg import solve_banded as _scipy_solve_banded

__all__ = [
    "BandedMatrix",
    "identity",
    "diagonal_matrix",
    "solve_banded_matrix",
    "solve_evenodd",
    "SingularOperatorError",
]


class SingularOperatorError(np.linalg.LinAlgError):
    """A shifted banded system turned out numerically singular."""

    def __init__(self, message, pivot_index=None):
        super().__init__(message)
        self.pivot_index = pivot_index


class BandedMatrix:
    """Square matrix stored by diagonals.

    ``diags`` maps an offset k to the array of entries on that diagonal
    (length n - |k|); offset 0 is the main diagonal, positive offsets sit
    above it.  Entries outside the stored diagonals are exactly zero.
    """

    def __init__(self, n, diags):
        self.n = int(n)
        self.diags = {}
        for k, v in diags.items():
            v = np.asarray(v, dtype=float)
            if v.shape != (self.n - abs(k),):
                raise ValueError(
                    f"diagonal {k} must have length {self.n - abs(k)}, got {v.shape}")
            self.diags[int(k)] = v

    # -- structure ---------------------------------------------------------

    @property
    def offsets(self):
        return sorted(self.diags)

    @property
    def lower_bandwidth(self):
        return max((-k for k in self.diags if k < 0), default=0)

    @property
    def upper_bandwidth(self):
        return max((k for k in self.diags if k > 0), default=0)

    def has_even_offsets_only(self):
        return all(k % 2 == 0 for k in self.diags)

    def diagonal(self, k=0):
        if k in self.diags:
            return self.diags[k]
        return np.zeros(self.n - abs(k))

    @classmethod
    def from_dense(cls, a, tol=0.0):
        a = np.asarray(a, dtype=float)
        n = a.shape[0]
        diags = {}
        for k in range(-(n - 1), n):
            d = np.diagonal(a, k)
            if np.any(np.abs(d) > tol):
                diags[k] = d.copy()
        return cls(n, diags)

    def to_dense(self):
        a = np.zeros((self.n, self.n))
        for k, d in self.diags.items():
            a += np.diag(d, k)
        return a

    def transpose(self):
        return BandedMatrix(self.n, {-k: d.copy() for k, d in self.diags.items()})

    @property
    def T(self):
        return self.transpose()

    # -- algebra -----------------------------------------------------------

    def scaled(self, s):
        return BandedMatrix(self.n, {k: s * d for k, d in self.diags.items()})

    def plus(self, other, scale=1.0):
        diags = {k: d.copy() for k, d in self.diags.items()}
        for k, d in other.diags.items():
            if k in diags:
                diags[k] = diags[k] + scale * d
            else:
                diags[k] = scale * d
        return BandedMatrix(self.n, diags)

    def __add__(self, other):
        return self.plus(other)

    def __sub__(self, other):
        return self.plus(other, -1.0)

    def shifted(self, sigma):
        """self - sigma * I (the shift enters only the main diagonal)."""
        diags = {k: d.copy() for k, d in self.diags.items()}
        diags[0] = diags.get(0, np.zeros(self.n)) - sigma
        return BandedMatrix(self.n, diags)

    def scale_rows(self, r):
        r = np.asarray(r, dtype=float)
        return BandedMatrix(self.n, {
            k: d * (r[:-k] if k > 0 else r[-k:] if k < 0 else r)
            for k, d in self.diags.items()})

    def scale_cols(self, c):
        c = np.asarray(c, dtype=float)
        return BandedMatrix(self.n, {
            k: d * (c[k:] if k > 0 else c[:self.n + k] if k < 0 else c)
            for k, d in self.diags.items()})

    def __matmul__(self, other):
        if isinstance(other, BandedMatrix):
            return self._matmul_banded(other)
        return self.apply(other)

    def _matmul_banded(self, other):
        n = self.n
        out = {}
        for k1, d1 in self.diags.items():
            for k2, d2 in other.diags.items():
                k = k1 + k2
                if abs(k) >= n:
                    continue
                # (AB)[i, i+k] += A[i, i+k1] * B[i+k1, i+k]
                lo = max(0, -k1, -k)
                hi = min(n, n - k1, n - k)
                if hi <= lo:
                    continue
                i = np.arange(lo, hi)
                contrib = d1[i if k1 >= 0 else i + k1] * \
                    d2[(i + k1) if k2 >= 0 else (i + k)]
                tgt = out.setdefault(k, np.zeros(n - abs(k)))
                tgt[i if k >= 0 else i + k] += contrib
        out = {k: d for k, d in out.items() if np.any(d)}
        if not out:
            out = {0: np.zeros(n)}
        return BandedMatrix(n, out)

    def apply(self, x):
        """self @ x for a vector or a matrix of column vectors."""
        x = np.asarray(x)
        vec = x.ndim == 1
        if vec:
            x = x[:, None]
        out = np.zeros((self.n, x.shape[1]), dtype=np.result_type(x, float))
        for k, d in self.diags.items():
            if k >= 0:
                out[:self.n - k] += d[:, None] * x[k:]
            else:
                out[-k:] += d[:, None] * x[:self.n + k]
        return out[:, 0] if vec else out

    def apply_right(self, x):
        """x @ self for a matrix of row vectors."""
        x = np.asarray(x)
        out = np.zeros_like(x, dtype=np.result_type(x, float))
        for k, d in self.diags.items():
            if k >= 0:
                out[:, k:] += x[:, :self.n - k] * d[None, :]
            else:
                out[:, :self.n + k] += x[:, -k:] * d[None, :]
        return out

    # -- solves ------------------------------------------------------------

    def scipy_ab(self):
        """(l, u, ab) layout for scipy.linalg.solve_banded."""
        l, u = self.lower_bandwidth, self.upper_bandwidth
        ab = np.zeros((l + u + 1, self.n))
        for k in range(-l, u + 1):
            d = self.diagonal(k)
            if k >= 0:
                ab[u - k, k:] = d
            else:
                ab[u - k, :self.n + k] = d
        return l, u, ab


def identity(n):
    return BandedMatrix(n, {0: np.ones(n)})


def diagonal_matrix(d):
    d = np.asarray(d, dtype=float)
    return BandedMatrix(len(d), {0: d.copy()})


def solve_banded_matrix(bm, rhs):
    """Solve bm @ x = rhs with banded LU (partial pivoting within the band).

    rhs may be a vector or a matrix of columns.  Raises
    SingularOperatorError on numerical singularity.
    """
    l, u, ab = bm.scipy_ab()
    rhs = np.asarray(rhs)
    try:
        if np.iscomplexobj(rhs):
            re = _scipy_solve_banded((l, u), ab, rhs.real)
            im = _scipy_solve_banded((l, u), ab, rhs.imag)
            return re + 1j * im
        return _scipy_solve_banded((l, u), ab, rhs)
    except np.linalg.LinAlgError as exc:
        idx = _locate_zero_pivot(bm)
        raise SingularOperatorError(
            f"singular banded system (pivot index {idx}): {exc}", idx) from exc


def _locate_zero_pivot(bm):
    # unpivoted elimination scan, used only to label error messages
    a = bm.to_dense() if bm.n <= 2048 else None
    if a is None:
        return None
    n = bm.n
    for i in range(n):
        piv = a[i, i]
        if abs(piv) < 1e-300:
            return i
        w = min(n, i + 1 + bm.lower_bandwidth)
        for r in range(i + 1, w):
            if a[r, i] != 0.0:
                a[r, i:] -= (a[r, i] / piv) * a[i, i:]
    return None


def solve_evenodd(bm, rhs, shift=0.0):
    """Solve (bm - shift*I) @ x = rhs exploiting vanishing odd diagonals.

    Requires every stored offset of ``bm`` to be even.  The even- and
    odd-indexed unknowns then decouple into two banded systems of half the
    size and half the bandwidth, each solved in O(n) by banded elimination
    (the classic tridiagonal sweep when ``bm`` has offsets {0, +-2}).
    """
    if not bm.has_even_offsets_only():
        raise ValueError(
            f"even/odd decoupling needs even offsets only, got {bm.offsets}")
    n = bm.n
    rhs = np.asarray(rhs)
    vec = rhs.ndim == 1
    if vec:
        rhs = rhs[:, None]
    out = np.empty_like(rhs, dtype=np.result_type(rhs, float))
    for parity in (0, 1):
        sel = np.arange(parity, n, 2)
        m = len(sel)
        if m == 0:
            continue
        diags = {}
        for k, d in bm.diags.items():
            kk = k // 2
            diags[kk] = d[parity::2][:m - abs(kk)]
        block = BandedMatrix(m, diags)
        if shift != 0.0:
            block = block.shifted(shift)
        out[sel] = solve_banded_matrix(block, rhs[sel])
    return out[:, 0] if vec else out
