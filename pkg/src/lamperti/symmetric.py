"""Symmetric Linnik laws for a <= 1/2 via the Fejer-de la Vallee Poussin mixture.

A symmetric stable variable of index 2a <= 1 factorizes as Y / Z^(1/2a)
where Y has the Fejer-de la Vallee Poussin density

    w(x) = (1/2pi) (sin(x/2)/(x/2))^2 = (1 - cos x)/(pi x^2)

(whose characteristic function is the triangle max(0, 1-|lam|)) and Z is a
two-atom gamma mixture.  Replacing the gamma time by a positive Linnik one
gives the symmetric Linnik variable N sqrt(2 chi_{a,theta}) = Y / W^(1/2a),
with W an explicit two-component Pareto (beta-prime) mixture.  This module
ships the mixture density of W, the resulting symmetric density, samplers
for all three layers, and the generalization of the W-density to arbitrary
Thorin log-transforms psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import betainc

from .numerics import integrate
from .samplers import LawSpec, SampleBatch, SymmetricLinnik, _batch
from .special import StabilityIndex

__all__ = [
    "PsiTriple",
    "fejer_pdf",
    "sample_fejer",
    "w_mixture_pdf",
    "w_mixture_cdf",
    "sample_w",
    "symmetric_linnik_pdf",
    "sample_symmetric_linnik",
    "eta_pdf",
    "FEJER_ACCEPTANCE",
]

# the two-piece envelope min(1/2pi, 2/(pi x^2)) has mass 4/pi
FEJER_ACCEPTANCE = math.pi / 4.0


@dataclass(frozen=True)
class PsiTriple:
    """A Thorin-measure log-transform psi with its first two derivatives.

    psi(0) = 0, psi increasing and concave on the domain of interest.
    """

    psi: Callable[[float], float]
    psi1: Callable[[float], float]
    psi2: Callable[[float], float]

    def __post_init__(self):
        if abs(self.psi(0.0)) > 1e-12:
            raise ValueError("psi(0) must be 0")
        if not self.psi1(1.0) > 0:
            raise ValueError("psi must be increasing (psi1 > 0)")


def _check(alpha, theta):
    a = StabilityIndex(float(alpha)).alpha
    if a > 0.5:
        raise ValueError("the mixture representation requires alpha <= 1/2")
    if not theta > 0:
        raise ValueError("theta must be positive")
    return a, float(theta)


def fejer_pdf(x):
    """(1 - cos x)/(pi x^2), with the removable singularity w(0) = 1/(2pi)."""
    x = abs(float(x))
    if x < 1e-4:
        # series of (sin(x/2)/(x/2))^2 / (2 pi)
        return (1.0 - x * x / 12.0 + x**4 / 360.0) / (2.0 * math.pi)
    return (1.0 - math.cos(x)) / (math.pi * x * x)


def sample_fejer(stream, n):
    """Rejection from the envelope min(1/(2pi), 2/(pi x^2)) (crossover |x|=2).

    The envelope has mass 4/pi, so the acceptance probability is pi/4.
    """
    out = np.empty(n)
    filled = 0
    proposed = 0
    accepted = 0
    while filled < n:
        k = max(int((n - filled) / FEJER_ACCEPTANCE * 1.1) + 16, 256)
        flat = stream.uniform(k) < 0.5  # each envelope piece carries mass 2/pi
        u = stream.uniform(k)
        x = np.where(flat, (2.0 * u - 1.0) * 2.0, 2.0 / np.maximum(u, 1e-15))
        x = np.where(flat | (stream.uniform(k) < 0.5), x, -x)
        ratio = np.where(
            flat,
            np.square(np.sinc(x / (2.0 * math.pi))),  # w(x) / (1/2pi)
            0.5 * (1.0 - np.cos(x)),  # w(x) / (2/(pi x^2))
        )
        acc = x[stream.uniform(k) < ratio]
        proposed += k
        accepted += acc.size
        take = min(acc.size, n - filled)
        out[filled : filled + take] = acc[:take]
        filled += take
    return SampleBatch(
        out,
        LawSpec(),
        stream.seed,
        {"kind": "fejer", "acceptance_rate": accepted / proposed},
    )


def w_mixture_pdf(alpha, theta, w):
    """Density of the Pareto mixture W:

        theta [ (1+2 theta) w + (1-2 a) ] / ( a (1+w)^(2+theta/a) ),  w > 0,

    i.e. gamma_1/gamma_(theta/a) with probability 1-2a and
    gamma_2/gamma_(theta/a) with probability 2a.  At a = 1/2 the first
    component vanishes and the pure beta-prime(2, 2 theta) form remains.
    """
    a, th = _check(alpha, theta)
    if not w > 0:
        raise ValueError("w must be positive")
    return th * ((1.0 + 2.0 * th) * w + (1.0 - 2.0 * a)) / (
        a * (1.0 + w) ** (2.0 + th / a)
    )


def w_mixture_cdf(alpha, theta, w):
    """CDF of W from the regularized incomplete beta of each component."""
    a, th = _check(alpha, theta)
    if w <= 0:
        return 0.0
    z = w / (1.0 + w)
    return float(
        (1.0 - 2.0 * a) * betainc(1.0, th / a, z) + 2.0 * a * betainc(2.0, th / a, z)
    )


def sample_w(stream, alpha, theta, n):
    """Exact draw of W: pick the beta-prime component by a Bernoulli(2a) flag."""
    a, th = _check(alpha, theta)
    heavy = stream.uniform(n) < 2.0 * a
    num = np.where(heavy, stream.gamma(2.0, n), stream.exponential(n))
    return num / stream.gamma(th / a, n)


def _mixture_kernel(a, th, y):
    """Integrand weight 2 theta y^2a [(1+2 theta) y^2a + (1-2a)] / (1+y^2a)^(2+theta/a),
    the pushforward of the W-density under w = y^(2a)."""
    ya = y ** (2.0 * a)
    return 2.0 * th * ya * ((1.0 + 2.0 * th) * ya + (1.0 - 2.0 * a)) / (
        (1.0 + ya) ** (2.0 + th / a)
    )


def _euler_sum(terms):
    """Repeated averaging of partial sums: accurate limits of alternating
    panel sums from oscillatory integrals."""
    s = np.cumsum(terms)
    while s.size > 1:
        s = 0.5 * (s[:-1] + s[1:])
    return float(s[0])


def symmetric_linnik_pdf(alpha, theta, x, tol=1e-8):
    """Density of the symmetric Linnik variable N sqrt(2 chi_{a,theta}):

        Phi(x) = int_0^inf w(x y) 2 theta y^2a [(1+2 theta) y^2a + (1-2a)]
                      / (1 + y^2a)^(2+theta/a) dy.

    For |x| < 1 a plain adaptive pass suffices; beyond that the cosine part
    is integrated between consecutive zeros of cos(x y) and the alternating
    panel sums are accelerated by repeated averaging.
    """
    a, th = _check(alpha, theta)
    x = abs(float(x))
    if x < 1.0:
        return integrate(
            lambda y: fejer_pdf(x * y) * _mixture_kernel(a, th, y), 0.0, math.inf, tol=tol
        ).value
    # w(x y) = (1 - cos(x y)) / (pi x^2 y^2); split at y = 1
    head = integrate(
        lambda y: fejer_pdf(x * y) * _mixture_kernel(a, th, y), 0.0, 1.0, tol=tol
    ).value
    smooth = integrate(
        lambda y: _mixture_kernel(a, th, y) / (y * y), 1.0, math.inf, tol=tol
    ).value / (math.pi * x * x)

    def g(y):
        return math.cos(x * y) * _mixture_kernel(a, th, y) / (y * y)

    # zeros of cos(x y) at y = (pi/2 + k pi)/x
    k0 = 0
    while (math.pi / 2.0 + k0 * math.pi) / x <= 1.0:
        k0 += 1
    edges = [1.0]
    for j in range(48):
        edges.append((math.pi / 2.0 + (k0 + j) * math.pi) / x)
    panels = [
        integrate(g, lo, hi, tol=max(tol * 1e-2, 1e-14), limit=200).value
        for lo, hi in zip(edges[:-1], edges[1:])
    ]
    oscillatory = (panels[0] + _euler_sum(np.asarray(panels[1:]))) / (math.pi * x * x)
    return head + smooth - oscillatory


def sample_symmetric_linnik(stream, alpha, theta, n):
    """Devroye-style mixture draw: fejer variate divided by W^(1/2a)."""
    law = SymmetricLinnik(float(alpha), float(theta))
    a, th = law.alpha, law.theta
    y = sample_fejer(stream, n)
    w = sample_w(stream, a, th, n)
    values = y.values / w ** (1.0 / (2.0 * a))
    return _batch(values, law, stream, fejer_acceptance=y.info["acceptance_rate"])


def eta_pdf(alpha, theta, psi, x):
    """Density of the generalized mixture weight for a Thorin transform psi:

        (theta/a) e^(-(theta/a) psi(x))
            [ psi'(x)(1-2a) + 2 a x ( (psi'(x))^2 theta/a - psi''(x) ) ].

    With psi(x) = log(1+x) this reduces exactly to ``w_mixture_pdf``.
    """
    a, th = _check(alpha, theta)
    if not isinstance(psi, PsiTriple):
        raise TypeError("psi must be a PsiTriple")
    if not x > 0:
        raise ValueError("x must be positive")
    r = th / a
    p1 = psi.psi1(x)
    p2 = psi.psi2(x)
    return r * math.exp(-r * psi.psi(x)) * (
        p1 * (1.0 - 2.0 * a) + 2.0 * a * x * (p1 * p1 * r - p2)
    )
