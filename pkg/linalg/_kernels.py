"""
Compiled inner loops.

Every kernel returns a status code instead of raising, so the Python wrappers
decide how failures surface. Status 0 means success; a positive status is the
1-based index of the offending pivot. ``hqr`` reports a converged flag instead.
"""

import math

import numpy as np
from numba import njit

_EPS = 2.220446049250313e-16


@njit(cache=True, nogil=True)
def thomas(lower, diag, upper, rhs, tol):  # pragma: no cover - compiled
    # lower[i] = M[i, i-1], upper[i] = M[i, i+1]; lower[0], upper[n-1] unused
    n = diag.shape[0]
    cp = np.empty(n)
    dp = np.empty(n)
    x = np.zeros(n)

    b = diag[0]
    if abs(b) <= tol:
        return x, 1
    cp[0] = upper[0] / b
    dp[0] = rhs[0] / b
    for i in range(1, n):
        b = diag[i] - lower[i] * cp[i - 1]
        if abs(b) <= tol:
            return x, i + 1
        cp[i] = upper[i] / b
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / b

    x[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = dp[i] - cp[i] * x[i + 1]
    return x, 0


@njit(cache=True, nogil=True)
def band_factor(band, kl, ku, tol):  # pragma: no cover - compiled
    # band: (kl+ku+1, n) with M[i, j] at band[ku+i-j, j].
    # ab:   (2kl+ku+1, n) with M[i, j] at ab[kv+i-j, j], kv = kl+ku; the top kl
    #       rows take the fill-in produced by row interchanges.
    n = band.shape[1]
    kv = kl + ku
    ab = np.zeros((2 * kl + ku + 1, n))
    ab[kl:, :] = band
    ipiv = np.zeros(n, dtype=np.int64)

    ju = 0
    for j in range(n):
        km = min(kl, n - 1 - j)

        jp = 0
        best = abs(ab[kv, j])
        for r in range(1, km + 1):
            v = abs(ab[kv + r, j])
            if v > best:
                best = v
                jp = r
        ipiv[j] = j + jp
        if best <= tol:
            return ab, ipiv, j + 1

        ju = max(ju, min(j + ku + jp, n - 1))
        if jp != 0:
            for c in range(j, ju + 1):
                tmp = ab[kv + j - c, c]
                ab[kv + j - c, c] = ab[kv + j + jp - c, c]
                ab[kv + j + jp - c, c] = tmp

        pivot = ab[kv, j]
        for r in range(1, km + 1):
            ab[kv + r, j] /= pivot

        for c in range(j + 1, ju + 1):
            ujc = ab[kv + j - c, c]
            if ujc != 0.0:
                for r in range(1, km + 1):
                    ab[kv + j + r - c, c] -= ab[kv + r, j] * ujc
    return ab, ipiv, 0


@njit(cache=True, nogil=True)
def band_solve(ab, ipiv, kl, ku, rhs):  # pragma: no cover - compiled
    n = ab.shape[1]
    kv = kl + ku
    x = rhs.copy()

    # L y = P b
    for j in range(n):
        p = ipiv[j]
        if p != j:
            tmp = x[j]
            x[j] = x[p]
            x[p] = tmp
        xj = x[j]
        km = min(kl, n - 1 - j)
        for r in range(1, km + 1):
            x[j + r] -= ab[kv + r, j] * xj

    # U x = y, U has upper bandwidth kv
    for j in range(n - 1, -1, -1):
        x[j] /= ab[kv, j]
        xj = x[j]
        for i in range(max(0, j - kv), j):
            x[i] -= ab[kv + i - j, j] * xj
    return x


@njit(cache=True, nogil=True)
def band_matvec(band, kl, ku, v):  # pragma: no cover - compiled
    n = band.shape[1]
    y = np.zeros(n)
    for j in range(n):
        vj = v[j]
        for i in range(max(0, j - ku), min(n - 1, j + kl) + 1):
            y[i] += band[ku + i - j, j] * vj
    return y


@njit(cache=True, nogil=True)
def _sign(a, b):  # pragma: no cover - compiled
    return abs(a) if b >= 0.0 else -abs(a)


@njit(cache=True, nogil=True)
def hqr(a, n, max_iterations):  # pragma: no cover - compiled
    """Francis double-shift QR on an upper Hessenberg matrix.

    ``a`` is a 1-based (n+1, n+1) array and is destroyed. Returns the real and
    imaginary parts (1-based), the total iteration count and a converged flag;
    on exhaustion the eigenvalues not yet deflated are NaN.
    """
    wr = np.zeros(n + 1)
    wi = np.zeros(n + 1)

    anorm = 0.0
    for i in range(1, n + 1):
        for j in range(max(i - 1, 1), n + 1):
            anorm += abs(a[i, j])

    nn = n
    t = 0.0
    total = 0
    x = 0.0
    y = 0.0
    z = 0.0
    w = 0.0
    p = 0.0
    q = 0.0
    r = 0.0
    while nn >= 1:
        its = 0
        while True:
            # look for a single small subdiagonal element
            lo = nn
            while lo >= 2:
                s = abs(a[lo - 1, lo - 1]) + abs(a[lo, lo])
                if s == 0.0:
                    s = anorm
                if abs(a[lo, lo - 1]) <= _EPS * s:
                    a[lo, lo - 1] = 0.0
                    break
                lo -= 1

            x = a[nn, nn]
            if lo == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
            else:
                y = a[nn - 1, nn - 1]
                w = a[nn, nn - 1] * a[nn - 1, nn]
                if lo == nn - 1:
                    p = 0.5 * (y - x)
                    q = p * p + w
                    z = math.sqrt(abs(q))
                    x += t
                    if q >= 0.0:
                        z = p + _sign(z, p)
                        wr[nn - 1] = x + z
                        wr[nn] = x + z
                        if z != 0.0:
                            wr[nn] = x - w / z
                        wi[nn - 1] = 0.0
                        wi[nn] = 0.0
                    else:
                        wr[nn - 1] = x + p
                        wr[nn] = x + p
                        wi[nn - 1] = -z
                        wi[nn] = z
                    nn -= 2
                else:
                    if total >= max_iterations:
                        for i in range(1, nn + 1):
                            wr[i] = np.nan
                            wi[i] = np.nan
                        return wr, wi, total, False
                    if its > 0 and its % 10 == 0:
                        # exceptional shift
                        t += x
                        for i in range(1, nn + 1):
                            a[i, i] -= x
                        s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                        x = 0.75 * s
                        y = x
                        w = -0.4375 * s * s
                    its += 1
                    total += 1

                    m = nn - 2
                    while m >= lo:
                        z = a[m, m]
                        r = x - z
                        s = y - z
                        p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                        q = a[m + 1, m + 1] - z - r - s
                        r = a[m + 2, m + 1]
                        s = abs(p) + abs(q) + abs(r)
                        p /= s
                        q /= s
                        r /= s
                        if m == lo:
                            break
                        u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                        v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                        if u <= _EPS * v:
                            break
                        m -= 1

                    for i in range(m + 2, nn + 1):
                        a[i, i - 2] = 0.0
                        if i != m + 2:
                            a[i, i - 3] = 0.0

                    for k in range(m, nn):
                        if k != m:
                            p = a[k, k - 1]
                            q = a[k + 1, k - 1]
                            r = 0.0
                            if k != nn - 1:
                                r = a[k + 2, k - 1]
                            x = abs(p) + abs(q) + abs(r)
                            if x != 0.0:
                                p /= x
                                q /= x
                                r /= x
                        s = _sign(math.sqrt(p * p + q * q + r * r), p)
                        if s != 0.0:
                            if k == m:
                                if lo != m:
                                    a[k, k - 1] = -a[k, k - 1]
                            else:
                                a[k, k - 1] = -s * x
                            p += s
                            x = p / s
                            y = q / s
                            z = r / s
                            q /= p
                            r /= p
                            for j in range(k, nn + 1):
                                p = a[k, j] + q * a[k + 1, j]
                                if k != nn - 1:
                                    p += r * a[k + 2, j]
                                    a[k + 2, j] -= p * z
                                a[k + 1, j] -= p * y
                                a[k, j] -= p * x
                            mmin = nn if nn < k + 3 else k + 3
                            for i in range(lo, mmin + 1):
                                p = x * a[i, k] + y * a[i, k + 1]
                                if k != nn - 1:
                                    p += z * a[i, k + 2]
                                    a[i, k + 2] -= p * r
                                a[i, k + 1] -= p * q
                                a[i, k] -= p
            if not lo < nn - 1:
                break
    return wr, wi, total, True
