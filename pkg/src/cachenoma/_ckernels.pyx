# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels: twin of cachenoma._kernels_py.

Modified Bessel K for real order (Temme series below x=2, Steed continued
fraction above) and the density / CDF / survival function of the product of
two Gamma variables, with the adaptive Gauss-Kronrod scheme running entirely
in C so the quadrature never crosses back into Python per node.
"""
from libc.math cimport (M_PI, cosh, exp, fabs, lgamma, log, sin, sinh, sqrt)

from .errors import QuadratureAccuracyError

cdef double _EPS = 1e-16
cdef int _MAXIT = 30000

cdef double _ABS_TOL = 1e-10
cdef double _REL_TOL = 1e-9
cdef int _MAX_SUBDIV = 400
cdef int _MAX_SEGS = 512

TAIL_SWITCH = 1.0 - 1e-4
cdef double _TAIL_SWITCH = 1.0 - 1e-4

# Odd Taylor coefficients of 1/Gamma(1+z): z^1, z^3, ..., z^11.
cdef double[6] _G1_ODD = [
    0.5772156649015329,
    -0.0420026350340952,
    -0.0421977345555443,
    0.0072189432466630,
    -0.0002152416741149,
    -0.0000201348547807,
]

# Gauss-Kronrod 7-15 nodes (positive half) and weights.
cdef double[8] _XGK = [
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0,
]
cdef double[8] _WGK = [
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278,
]
cdef double[4] _WG = [
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694,
]


cdef void _gamma_pair(double mu, double* g1, double* g2,
                      double* inv_p, double* inv_m) noexcept nogil:
    cdef double mu2, acc
    cdef int i
    inv_p[0] = exp(-lgamma(1.0 + mu))
    inv_m[0] = exp(-lgamma(1.0 - mu))
    if fabs(mu) <= 0.1:
        mu2 = mu * mu
        acc = 0.0
        for i in range(5, -1, -1):
            acc = acc * mu2 + _G1_ODD[i]
        g1[0] = -acc
    else:
        g1[0] = (inv_m[0] - inv_p[0]) / (2.0 * mu)
    g2[0] = 0.5 * (inv_m[0] + inv_p[0])


cdef void _temme_series(double mu, double x, double* kmu, double* kmu1) noexcept nogil:
    cdef double x2, pimu, fact, d, e, fact2, g1, g2, inv_p, inv_m
    cdef double ff, total, ee, p, q, c, x2sq, total1, mu2, delta
    cdef int i
    x2 = 0.5 * x
    pimu = M_PI * mu
    fact = pimu / sin(pimu) if fabs(pimu) >= 1e-15 else 1.0
    d = -log(x2)
    e = mu * d
    fact2 = sinh(e) / e if fabs(e) >= 1e-15 else 1.0
    _gamma_pair(mu, &g1, &g2, &inv_p, &inv_m)
    ff = fact * (g1 * cosh(e) + g2 * fact2 * d)
    total = ff
    ee = exp(e)
    p = 0.5 * ee / inv_p
    q = 0.5 / (ee * inv_m)
    c = 1.0
    x2sq = x2 * x2
    total1 = p
    mu2 = mu * mu
    for i in range(1, _MAXIT + 1):
        ff = (i * ff + p + q) / (i * i - mu2)
        c *= x2sq / i
        p /= (i - mu)
        q /= (i + mu)
        delta = c * ff
        total += delta
        total1 += c * (p - i * ff)
        if fabs(delta) < fabs(total) * _EPS:
            break
    kmu[0] = total
    kmu1[0] = total1 * (2.0 / x)


cdef void _cf2(double mu, double x, double* kmu, double* kmu1) noexcept nogil:
    cdef double b, d, h, delh, q1, q2, a1, q, c, a, s, qnew, dels
    cdef int i
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d
    delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25 - mu * mu
    q = a1
    c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _MAXIT + 1):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if fabs(dels / s) < _EPS:
            break
    h = a1 * h
    kmu[0] = sqrt(M_PI / (2.0 * x)) * exp(-x) / s
    kmu1[0] = kmu[0] * (mu + x + 0.5 - h) / x


cdef double _bessel_k(double nu, double x) noexcept nogil:
    cdef double anu, mu, k0, k1, k2, xi
    cdef int nl, l
    anu = fabs(nu)
    nl = <int>(anu + 0.5)
    mu = anu - nl
    if x <= 2.0:
        _temme_series(mu, x, &k0, &k1)
    else:
        _cf2(mu, x, &k0, &k1)
    xi = 2.0 / x
    for l in range(1, nl):
        k2 = k0 + (mu + l) * xi * k1
        k0 = k1
        k1 = k2
    return k1 if nl > 0 else k0


cdef double _pdf_w(double w, double m1, double m2, double r, double lg) noexcept nogil:
    """Density at w > 0; lg = lgamma(m1) + lgamma(m2) precomputed."""
    cdef double h, k
    h = 0.5 * (m1 + m2)
    k = _bessel_k(m1 - m2, 2.0 * sqrt(r * w))
    if k == 0.0:
        return 0.0
    return 2.0 * exp(h * log(r) + (h - 1.0) * log(w) - lg) * k


cdef double _integrand(int kind, double t, double m1, double m2,
                       double r, double lg, double x) noexcept nogil:
    cdef double p
    if kind == 0:
        # CDF after w = t^2: 2 t pdf(t^2) on (0, sqrt(x))
        return 2.0 * t * _pdf_w(t * t, m1, m2, r, lg)
    else:
        # upper tail after w = x / t: pdf(x/t) x / t^2 on (0, 1]
        p = _pdf_w(x / t, m1, m2, r, lg)
        if p == 0.0:
            return 0.0
        return p * x / (t * t)


cdef void _gk15(int kind, double a, double b, double m1, double m2,
                double r, double lg, double x,
                double* out_val, double* out_err) noexcept nogil:
    cdef double center, half, fc, resk, resg, dx, f1, f2, s
    cdef int j
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = _integrand(kind, center, m1, m2, r, lg, x)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        f1 = _integrand(kind, center - dx, m1, m2, r, lg, x)
        f2 = _integrand(kind, center + dx, m1, m2, r, lg, x)
        s = f1 + f2
        resk += _WGK[j] * s
        if j % 2 == 1:
            resg += _WG[j // 2] * s
    out_val[0] = resk * half
    out_err[0] = fabs((resk - resg) * half)


cdef int _adapt(int kind, double a, double b, double m1, double m2,
                double r, double lg, double x,
                double* out_val, double* out_err) noexcept nogil:
    """Globally adaptive bisection.  Returns 0 on convergence, 1 on budget."""
    cdef double[512] seg_a
    cdef double[512] seg_b
    cdef double[512] seg_v
    cdef double[512] seg_e
    cdef int nseg, used, worst, i
    cdef double total_val, total_err, werr, sa, sb, sv, se, mid
    cdef double lv, le, rv, re
    _gk15(kind, a, b, m1, m2, r, lg, x, &seg_v[0], &seg_e[0])
    seg_a[0] = a
    seg_b[0] = b
    nseg = 1
    total_val = seg_v[0]
    total_err = seg_e[0]
    used = 0
    while total_err > max(_ABS_TOL, _REL_TOL * fabs(total_val)):
        if used >= _MAX_SUBDIV or nseg + 1 >= _MAX_SEGS:
            out_val[0] = total_val
            out_err[0] = total_err
            return 1
        worst = 0
        werr = seg_e[0]
        for i in range(1, nseg):
            if seg_e[i] > werr:
                worst = i
                werr = seg_e[i]
        sa = seg_a[worst]
        sb = seg_b[worst]
        sv = seg_v[worst]
        se = seg_e[worst]
        mid = 0.5 * (sa + sb)
        _gk15(kind, sa, mid, m1, m2, r, lg, x, &lv, &le)
        _gk15(kind, mid, sb, m1, m2, r, lg, x, &rv, &re)
        seg_a[worst] = sa
        seg_b[worst] = mid
        seg_v[worst] = lv
        seg_e[worst] = le
        seg_a[nseg] = mid
        seg_b[nseg] = sb
        seg_v[nseg] = rv
        seg_e[nseg] = re
        nseg += 1
        total_val += lv + rv - sv
        total_err += le + re - se
        used += 1
    out_val[0] = total_val
    out_err[0] = total_err
    return 0


def ln_gamma(double x):
    return lgamma(x)


def bessel_k(double nu, double x):
    return _bessel_k(nu, x)


def pdf_w(double w, double m1, double m2, double r):
    return _pdf_w(w, m1, m2, r, lgamma(m1) + lgamma(m2))


def cdf_w(double x, double m1, double m2, double r):
    cdef double lg, val, err
    cdef int status
    if x <= 0.0:
        return 0.0
    lg = lgamma(m1) + lgamma(m2)
    status = _adapt(0, 0.0, sqrt(x), m1, m2, r, lg, x, &val, &err)
    if status != 0:
        raise QuadratureAccuracyError(
            f"cdf: quadrature did not converge (error estimate {err:.3e})",
            val, err)
    return min(max(val, 0.0), 1.0)


def sf_w(double x, double m1, double m2, double r):
    cdef double lg, val, err, c
    cdef int status
    if x <= 0.0:
        return 1.0
    c = cdf_w(x, m1, m2, r)
    if c <= _TAIL_SWITCH:
        return 1.0 - c
    lg = lgamma(m1) + lgamma(m2)
    status = _adapt(1, 0.0, 1.0, m1, m2, r, lg, x, &val, &err)
    if status != 0:
        raise QuadratureAccuracyError(
            f"survival tail: quadrature did not converge (error estimate {err:.3e})",
            val, err)
    return min(max(val, 0.0), 1.0)
