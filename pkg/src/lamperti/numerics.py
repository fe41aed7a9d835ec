"""Shared numerical machinery.

Adaptive quadrature on finite and semi-infinite intervals, alternating-series
summation with tail control, complex log-gamma, characteristic-function
inversion, empirical characteristic functions, Kolmogorov-Smirnov statistics
and numerical Laplace transforms.  Everything here is stateless and safe to
call from several threads as long as integrand closures are read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import loggamma as _scipy_loggamma

__all__ = [
    "QuadratureResult",
    "KSResult",
    "IntegrationError",
    "SeriesError",
    "integrate",
    "sum_series",
    "complex_log_gamma",
    "cf_invert",
    "empirical_cf",
    "ks_one_sample",
    "ks_two_sample",
    "laplace_transform",
]

DEFAULT_TOL = 1e-9
MAX_PANELS = 10_000


class IntegrationError(RuntimeError):
    """Quadrature did not converge within the subdivision budget.

    Carries the partial estimate and its error estimate so callers can decide
    whether the partial answer is still usable.
    """

    def __init__(self, message, value, error_estimate, evaluations):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class SeriesError(RuntimeError):
    """Series summation failed (divergence or no tail control)."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0 or self.evaluations <= 0:
            raise ValueError("invalid quadrature result bookkeeping")


@dataclass(frozen=True)
class KSResult:
    """Kolmogorov-Smirnov sup-distance with an asymptotic threshold.

    ``m`` is 0 for a one-sample test.  ``passed`` is True exactly when
    ``statistic < threshold``.
    """

    statistic: float
    n: int
    m: int
    threshold: float
    passed: bool


# 15/7 embedded Gauss-Legendre pair.  The 15-point rule supplies the value,
# the 7-point rule only the error estimate |G15 - G7|.
_X15, _W15 = leggauss(15)
_X7, _W7 = leggauss(7)


def _panel(f, a, b):
    """One embedded-rule pass over [a, b]: (value, error, evaluations)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    y15 = 0.0
    for x, w in zip(_X15, _W15):
        y15 += w * f(c + h * x)
    y7 = 0.0
    for x, w in zip(_X7, _W7):
        y7 += w * f(c + h * x)
    v15 = h * y15
    v7 = h * y7
    return v15, abs(v15 - v7), 22


def _integrate_finite(f, a, b, tol, limit):
    value, err, neval = _panel(f, a, b)
    panels = [(err, a, b, value)]
    total_err = err
    while total_err > tol and len(panels) < limit:
        # split the panel with the largest error estimate
        idx = max(range(len(panels)), key=lambda i: panels[i][0])
        e0, pa, pb, pv = panels.pop(idx)
        mid = 0.5 * (pa + pb)
        if mid <= pa or mid >= pb:
            # interval no longer splittable in double precision
            panels.append((e0, pa, pb, pv))
            break
        v1, e1, n1 = _panel(f, pa, mid)
        v2, e2, n2 = _panel(f, mid, pb)
        neval += n1 + n2
        panels.append((e1, pa, mid, v1))
        panels.append((e2, mid, pb, v2))
        total_err += e1 + e2 - e0
    value = math.fsum(p[3] for p in panels)
    total_err = math.fsum(p[0] for p in panels)
    if total_err > max(tol, 1e-7 * max(1.0, abs(value))) and len(panels) >= limit:
        raise IntegrationError(
            "quadrature did not converge within %d panels (err=%.3g)"
            % (limit, total_err),
            value,
            total_err,
            neval,
        )
    return QuadratureResult(value, total_err, neval)


def integrate(f, a, b, tol=DEFAULT_TOL, limit=MAX_PANELS):
    """Adaptive quadrature of ``f`` over (a, b).

    ``b`` (or ``a``) may be ``math.inf`` / ``-math.inf``; semi-infinite ranges
    are mapped to (0, 1) with x = a + t/(1-t).  Doubly infinite ranges are
    split at zero.  Raises IntegrationError (carrying the partial estimate)
    if the subdivision budget is exhausted before the tolerance is met.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 1)
    if a > b:
        r = integrate(f, b, a, tol=tol, limit=limit)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations)
    a_inf = math.isinf(a)
    b_inf = math.isinf(b)
    if a_inf and b_inf:
        left = integrate(f, a, 0.0, tol=0.5 * tol, limit=limit)
        right = integrate(f, 0.0, b, tol=0.5 * tol, limit=limit)
        return QuadratureResult(
            left.value + right.value,
            left.error_estimate + right.error_estimate,
            left.evaluations + right.evaluations,
        )
    if a_inf:
        r = integrate(lambda x: f(-x), -b, math.inf, tol=tol, limit=limit)
        return r
    if b_inf:
        # Split at a+1: the finite piece keeps full float resolution around a
        # (integrable endpoint singularities), while x = a + 1/t maps the
        # tail to (0, 1] and reaches x ~ 1e280 before t underflows, so heavy
        # power-law tails keep their representable mass too.
        def g(t):
            if t < 1e-280:
                return 0.0
            return f(a + 1.0 / t) / (t * t)

        head = _integrate_finite(f, a, a + 1.0, 0.5 * tol, limit)
        tail = _integrate_finite(g, 0.0, 1.0, 0.5 * tol, limit)
        return QuadratureResult(
            head.value + tail.value,
            head.error_estimate + tail.error_estimate,
            head.evaluations + tail.evaluations,
        )
    return _integrate_finite(f, a, b, tol, limit)


def sum_series(term, tol=1e-12, max_terms=100_000, min_terms=8):
    """Sum term(0) + term(1) + ... until a ratio-test tail bound is below tol.

    The stopping rule requires the last few |terms| to be decreasing with
    ratio r < 1 and bounds the tail by |t_k| * r / (1 - r).  Raises
    SeriesError when no such regime is reached within ``max_terms``.
    """
    total = 0.0
    prev = None
    decreasing = 0
    for k in range(max_terms):
        t = term(k)
        total += t
        at = abs(t)
        if prev is not None and prev > 0:
            ratio = at / prev
            if ratio < 1.0:
                decreasing += 1
                if decreasing >= min_terms:
                    tail = at * ratio / (1.0 - ratio)
                    if tail <= tol:
                        return total
            else:
                decreasing = 0
        prev = at
    raise SeriesError("series tail bound not reached after %d terms" % max_terms)


def complex_log_gamma(z):
    """Principal branch of log Gamma(z) for complex (or real) z.

    Raises ValueError at the poles (nonpositive integers).
    """
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise ValueError("log-gamma pole at z=%g" % z.real)
    return complex(_scipy_loggamma(z))


def _scan_cutoff(phi, floor=1e-10, lam_max=2.0**40):
    """Smallest lambda on a geometric grid with |phi(lambda)| below floor."""
    lam = 1.0
    while lam < lam_max:
        if abs(phi(lam)) < floor and abs(phi(-lam)) < floor:
            return lam
        lam *= 2.0
    return lam_max


def cf_invert(phi, x, cutoff=None, tol=1e-8):
    """Density value at x from a characteristic function.

    Computes (1/2pi) * int_{-L}^{L} exp(-i lam x) phi(lam) d lam (real part)
    with L chosen adaptively so |phi| < 1e-10 beyond it when ``cutoff`` is
    not given.  The error estimate includes a tail term |phi(L)| * L / pi,
    which is how an undersized cutoff is reported.
    """
    if cutoff is None:
        cutoff = _scan_cutoff(phi)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")

    def g(lam):
        return (complex(phi(lam)) * complex(math.cos(lam * x), -math.sin(lam * x))).real

    r = integrate(g, -cutoff, cutoff, tol=tol)
    tail = abs(complex(phi(cutoff))) * cutoff / math.pi
    return QuadratureResult(
        r.value / (2.0 * math.pi), r.error_estimate / (2.0 * math.pi) + tail, r.evaluations
    )


def empirical_cf(xs, lam):
    """Empirical characteristic function mean(exp(i lam x)) of a sample."""
    xs = np.asarray(xs, dtype=float)
    return complex(np.mean(np.exp(1j * lam * xs)))


_KS_COEFF = {0.05: 1.358, 0.01: 1.628, 0.001: 1.949}


def _ks_coefficient(significance):
    if significance not in _KS_COEFF:
        raise ValueError(
            "significance must be one of %s" % sorted(_KS_COEFF)
        )
    return _KS_COEFF[significance]


def ks_one_sample(xs, cdf, significance=0.01):
    """One-sample KS against a CDF callable (scalar or vectorized)."""
    xs = np.sort(np.asarray(xs, dtype=float))
    n = xs.size
    if n == 0:
        raise ValueError("empty sample")
    try:
        fx = np.asarray(cdf(xs), dtype=float)
        if fx.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        fx = np.fromiter((cdf(x) for x in xs), dtype=float, count=n)
    grid = np.arange(1, n + 1) / n
    stat = float(max(np.max(grid - fx), np.max(fx - (grid - 1.0 / n))))
    threshold = _ks_coefficient(significance) / math.sqrt(n)
    return KSResult(stat, n, 0, threshold, stat < threshold)


def ks_two_sample(xs, ys, significance=0.01):
    """Two-sample KS sup-distance of the empirical CDFs."""
    xs = np.sort(np.asarray(xs, dtype=float))
    ys = np.sort(np.asarray(ys, dtype=float))
    n, m = xs.size, ys.size
    if n == 0 or m == 0:
        raise ValueError("empty sample")
    allv = np.concatenate([xs, ys])
    cdf_x = np.searchsorted(xs, allv, side="right") / n
    cdf_y = np.searchsorted(ys, allv, side="right") / m
    stat = float(np.max(np.abs(cdf_x - cdf_y)))
    threshold = _ks_coefficient(significance) * math.sqrt((n + m) / (n * m))
    return KSResult(stat, n, m, threshold, stat < threshold)


def laplace_transform(pdf, lam, tol=DEFAULT_TOL):
    """int_0^inf exp(-lam x) pdf(x) dx by adaptive quadrature."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    return integrate(lambda x: math.exp(-lam * x) * pdf(x), 0.0, math.inf, tol=tol).value
