"""Independent reference computations used only by the tests.

Nothing here imports the code under test's numerical paths; everything runs
in mpmath at high precision or by brute force.
"""
import mpmath as mp


def moments_mp(n, a, b, dps=60):
    """Jacobi-weight moments via the binomial/Beta expansion at high precision."""
    with mp.workdps(dps):
        a, b = mp.mpf(a), mp.mpf(b)
        out = []
        for m in range(n):
            s = mp.mpf(0)
            for i in range(m + 1):
                s += mp.binomial(m, i) * 2 ** i * (-1) ** (m - i) * mp.beta(b + i + 1, a + 1)
            out.append(2 ** (a + b + 1) * s)
        return out


def moment_quad_mp(m, a, b, dps=30):
    """Moment by tanh-sinh quadrature.

    Each half of the interval is measured from its nearby endpoint, and the
    substitution ``s = u^(1/(1+e))`` absorbs the ``s^e`` singularity, leaving
    smooth integrands.
    """
    with mp.workdps(dps):
        a, b = mp.mpf(a), mp.mpf(b)

        def half(e_sing, e_other, sign):
            p = 1 / (1 + e_sing)

            def g(u):
                s = u ** p
                return p * (sign * (1 - s)) ** m * (2 - s) ** e_other

            return mp.quad(g, [0, 1])

        # t = -1 + s on the left (weight s^b), t = 1 - s on the right (s^a)
        return half(b, a, -1) + half(a, b, 1)


def stieltjes_recurrence(k, a, b, dps=60):
    """Monic recurrence coefficients from moments (Stieltjes on monomial coefficients)."""
    mom = moments_mp(2 * k + 2, a, b, dps)
    with mp.workdps(dps):
        def ip(p, q):
            return sum(pi * qj * mom[i + j] for i, pi in enumerate(p) for j, qj in enumerate(q))

        def tmul(p):
            return [mp.mpf(0)] + list(p)

        def axpy(alpha_, x, y):
            n = max(len(x), len(y))
            x = list(x) + [0] * (n - len(x))
            y = list(y) + [0] * (n - len(y))
            return [alpha_ * xi + yi for xi, yi in zip(x, y)]

        diag, beta = [], [mom[0]]
        prev, cur = [mp.mpf(0)], [mp.mpf(1)]
        nrm_prev = None
        for n in range(k):
            nrm = ip(cur, cur)
            an = ip(tmul(cur), cur) / nrm
            diag.append(an)
            if n > 0:
                beta.append(nrm / nrm_prev)
            bn = beta[n] if n > 0 else 0
            nxt = axpy(-an, cur, tmul(cur))
            nxt = axpy(-bn, prev, nxt)
            prev, cur, nrm_prev = cur, nxt, nrm
        return [float(x) for x in diag], [float(x) for x in beta]


def pade_value(k, alpha, x, dps=50):
    """(k-1, k) Pade approximant of x^(-alpha) about x = 1, evaluated at x."""
    with mp.workdps(dps):
        al = mp.mpf(alpha)
        coeffs = [mp.binomial(-al, n) for n in range(2 * k)]
        p, q = mp.pade(coeffs, k - 1, k)
        u = mp.mpf(x) - 1
        return mp.polyval(p[::-1], u) / mp.polyval(q[::-1], u)


def lambert_w_mp(x):
    with mp.workdps(40):
        return float(mp.lambertw(x))


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
