"""Beta-gamma product representations for rational stability index a = m/n.

For a = m/n (reduced) and theta > -m/n the tilted stable variable satisfies

    (m / S_{m/n,theta})^m  =  n^n * prod_{k=1}^{m-1} beta(theta/m + k/n, k(1/m - 1/n))
                                  * prod_{k=m}^{n-1} gamma(theta/m + k/n)

and the tilted ratio admits

    (X_{m/n,theta})^m = prod_{k=1}^{m-1} beta(theta/m + k/n, .) / beta(k/n, .)
                      * prod_{k=m}^{n-1} gamma(theta/m + k/n) / gamma(k/n),

all factors independent.  This module builds those parameter lists, and the
negative-moment oracle E[S^{-s}] used by the identity suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln

__all__ = ["RationalAlpha", "ProductParams", "product_params", "tilted_negative_moment"]


@dataclass(frozen=True)
class RationalAlpha:
    """Reduced fraction m/n in (0, 1).  (2, 4) is silently reduced to (1, 2)."""

    m: int
    n: int

    def __post_init__(self):
        if self.m <= 0 or self.n <= 0:
            raise ValueError("m and n must be positive integers")
        g = math.gcd(self.m, self.n)
        object.__setattr__(self, "m", self.m // g)
        object.__setattr__(self, "n", self.n // g)
        if not self.m < self.n:
            raise ValueError("need m < n so that alpha = m/n < 1")

    def alpha(self):
        return self.m / self.n


@dataclass(frozen=True)
class ProductParams:
    """Factor lists of the product representations for (m, n, theta).

    ``betas`` holds (a, b) pairs for k = 1..m-1 with a = theta/m + k/n and
    b = k(1/m - 1/n); ``gammas`` holds the shapes theta/m + k/n for
    k = m..n-1.  ``scale`` is n^n.  The theta = 0 lists parameterize the
    plain stable denominator, so the ratio representation of X_{m/n,theta}
    divides factor by factor.
    """

    m: int
    n: int
    theta: float
    betas: tuple
    gammas: tuple
    scale: float


def product_params(r, theta):
    """Parameter lists for (m / S_{m/n,theta})^m = n^n * prod beta * prod gamma."""
    if not isinstance(r, RationalAlpha):
        raise TypeError("r must be a RationalAlpha")
    m, n = r.m, r.n
    if not theta > -r.alpha():
        raise ValueError("theta must exceed -m/n")
    betas = tuple(
        (theta / m + k / n, k * (1.0 / m - 1.0 / n)) for k in range(1, m)
    )
    gammas = tuple(theta / m + k / n for k in range(m, n))
    return ProductParams(m, n, float(theta), betas, gammas, float(n) ** n)


def _log_beta_moment(a, b, s):
    """log E[beta(a,b)^s]; beta(a, 0) is the constant 1."""
    if b == 0.0:
        return 0.0
    if a + s <= 0:
        raise ValueError("moment of order %g does not exist for beta(%g,%g)" % (s, a, b))
    return gammaln(a + s) - gammaln(a) + gammaln(a + b) - gammaln(a + b + s)


def _log_gamma_moment(a, s):
    if a + s <= 0:
        raise ValueError("moment of order %g does not exist for gamma(%g)" % (s, a))
    return gammaln(a + s) - gammaln(a)


def tilted_negative_moment(r, theta, s):
    """E[S_{m/n,theta}^{-s}] for s >= 0, from the factor moments.

    At theta = 0 this must reduce to the classical stable moment
    Gamma(s/a + 1) / Gamma(s + 1); the test suite cross-checks that.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    if s == 0:
        return 1.0
    p = product_params(r, theta)
    order = s / p.m
    log_m = math.log(p.scale) * order - s * math.log(p.m)
    for a, b in p.betas:
        log_m += _log_beta_moment(a, b, order)
    for a in p.gammas:
        log_m += _log_gamma_moment(a, order)
    return math.exp(log_m)
