"""Occupation-time laws of p-skewed generalized Bessel bridges.

The time A+_1 spent positive on [0,1] by a p-skewed process whose excursion
lengths follow a two-parameter Poisson-Dirichlet law PD(a, theta) equals in
distribution the bridge value P_{a,theta}(p).  Its density is obtained from
the tilted-ratio density by the change of variables

    density(y) = (1-y)^theta (1-p)^(-theta/a) f_X(r_p(y)) / (c (1-y)^2),

with c^a = p/(1-p) and r_p(y) = y / (c (1-y)).  That single canonical path
serves every supported theta; the explicit displays (Carlton's a = 1/2
formula, the Omega family, the convolution forms for the time up to the
last zero) are kept alongside as cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import betaln, gammaln

from .numerics import integrate
from .special import StabilityIndex, delta_pdf, lamperti_pdf, rho, x_theta_pdf

__all__ = [
    "OccupationLaw",
    "occupation_pdf",
    "carlton_pdf",
    "omega_pdf",
    "omega_two_alpha_pdf",
    "coag_pdf",
    "bessel_bridge_pdf",
    "phylo_tree_pdf",
    "g1_pdf",
    "cauchy_stieltjes",
]


@dataclass(frozen=True)
class OccupationLaw:
    """Skewed-bridge parameters (a, theta, p) with the derived skew scale c."""

    alpha: float
    theta: float
    p: float

    def __post_init__(self):
        StabilityIndex(self.alpha)
        if not self.theta > -self.alpha:
            raise ValueError("theta must exceed -alpha")
        if not (0.0 < self.p < 1.0):
            raise ValueError("p must lie in the open interval (0, 1)")

    @property
    def q(self):
        return 1.0 - self.p

    @property
    def c(self):
        return (self.p / self.q) ** (1.0 / self.alpha)

    def pdf(self, y, tol=1e-9):
        return occupation_pdf(self.alpha, self.theta, self.p, y, tol=tol)


def _alpha(value):
    if isinstance(value, StabilityIndex):
        return value.alpha
    return StabilityIndex(float(value)).alpha


def _check_p(p):
    if not (0.0 < p < 1.0):
        raise ValueError("p must lie in the open interval (0, 1)")
    return float(p)


def _check_y(y):
    if not (0.0 < y < 1.0):
        raise ValueError("y must lie in the open interval (0, 1)")
    return float(y)


def _x_half_pdf(theta, x):
    """Density of X_{1/2,theta} = gamma(theta+1/2)/gamma(1/2): a beta prime."""
    a = theta + 0.5
    return math.exp((a - 1.0) * math.log(x) - (theta + 1.0) * math.log1p(x) - betaln(a, 0.5))


def occupation_pdf(alpha, theta, p, y, tol=1e-9):
    """Density of A+_1 under the (a, theta, p) skewed-bridge law at y in (0,1).

    Supported tilts: theta in [0, 1-a] and theta = 1 for every a (closed or
    one-integral ratio densities exist there), plus every theta > -1/2 when
    a = 1/2 (the ratio is then a beta prime).  Other theta have no closed
    ratio density; they are served by the Dirichlet convolution of bridges
    (sampling) rather than an extrapolated formula.
    """
    a = _alpha(alpha)
    p = _check_p(p)
    y = _check_y(y)
    c = (p / (1.0 - p)) ** (1.0 / a)
    r = y / (c * (1.0 - y))
    if theta == 0.0:
        fx = lamperti_pdf(a, r)
    elif theta == 1.0:
        fx = delta_pdf(a, 1.0, r)
    elif 0.0 < theta <= 1.0 - a:
        fx = x_theta_pdf(a, theta, r, tol=tol)
    elif abs(a - 0.5) < 1e-12 and theta > -0.5:
        fx = _x_half_pdf(theta, r)
    else:
        raise ValueError(
            "no closed ratio density for theta=%g at alpha=%g; use the "
            "Dirichlet convolution of bridge laws (sampling route)" % (theta, a)
        )
    jac = 1.0 / (c * (1.0 - y) ** 2)
    return (1.0 - y) ** theta * (1.0 - p) ** (-theta / a) * fx * jac


def carlton_pdf(theta, p, y):
    """Closed a = 1/2 occupation density, valid for every theta > -1/2:

        G(theta+1)/(G(1/2) G(theta+1/2)) p q [y(1-y)]^(theta-1/2)
            / (p^2 (1-y) + q^2 y)^(1+theta).
    """
    if not theta > -0.5:
        raise ValueError("theta must exceed -1/2")
    p = _check_p(p)
    y = _check_y(y)
    q = 1.0 - p
    const = math.exp(gammaln(theta + 1.0) - gammaln(0.5) - gammaln(theta + 0.5))
    return (
        const
        * p
        * q
        * (y * (1.0 - y)) ** (theta - 0.5)
        / (p * p * (1.0 - y) + q * q * y) ** (1.0 + theta)
    )


def _omega_denominator(a, p, y):
    q = 1.0 - p
    return (
        q * q * y ** (2.0 * a)
        + 2.0 * p * q * (y * (1.0 - y)) ** a * math.cos(math.pi * a)
        + p * p * (1.0 - y) ** (2.0 * a)
    )


def omega_pdf(alpha, sigma, p, y):
    """Density Omega_{a,sigma}(y) of the beta-thinned bridge value
    beta(sigma, 1-sigma) P_{a,sigma}(p); sigma = 1 gives the density of
    P_{a,1}(p) itself."""
    a = _alpha(alpha)
    if not (0.0 < sigma <= 1.0):
        raise ValueError("sigma must lie in (0, 1]")
    p = _check_p(p)
    y = _check_y(y)
    c = (p / (1.0 - p)) ** (1.0 / a)
    r = y / (c * (1.0 - y))
    return (
        y ** (sigma - 1.0)
        / math.pi
        * math.sin(rho(a, sigma, r**a))
        / _omega_denominator(a, p, y) ** (sigma / (2.0 * a))
    )


def omega_two_alpha_pdf(alpha, p, y):
    """Closed display of Omega_{a,2a} for a <= 1/2 (double-angle reduction)."""
    a = _alpha(alpha)
    if a > 0.5:
        raise ValueError("the closed display needs alpha <= 1/2")
    p = _check_p(p)
    y = _check_y(y)
    q = 1.0 - p
    num = (
        p
        * y ** (2.0 * a - 1.0)
        * (1.0 - y) ** a
        * (q * y**a + math.cos(math.pi * a) * p * (1.0 - y) ** a)
    )
    return 2.0 * math.sin(math.pi * a) / math.pi * num / _omega_denominator(a, p, y) ** 2


def _coag_integral(omega_fn, theta, y, tol):
    """int_0^1 theta omega(y/u) u^(-1) (1-u)^(theta-1) du via u = 1 - v^(1/theta),
    which removes the endpoint singularity: the integrand becomes omega(y/u)/u."""

    def integrand(v):
        u = 1.0 - v ** (1.0 / theta)
        if u <= y:
            return 0.0
        return omega_fn(y / u) / u

    return integrate(integrand, 0.0, (1.0 - y) ** theta, tol=tol).value


def coag_pdf(alpha, theta, p, y, which="g1", tol=1e-9):
    """Occupation density up to the last zero before time 1 (``which="g1"``)
    or up to time 1 (``which="a1"``), for tilts theta in [0, 1-a]:

        g1 density = int_0^1 theta Omega_{a,theta+a}(y/u) u^(-1) (1-u)^(theta-1) du,
        a1 density = (1-p)/(1-y) * g1 density.

    theta = 0 degenerates to Omega_{a,a} itself.
    """
    a = _alpha(alpha)
    if not (0.0 <= theta <= 1.0 - a):
        raise ValueError("theta must lie in [0, 1 - alpha]")
    p = _check_p(p)
    y = _check_y(y)
    if theta == 0.0:
        g1 = omega_pdf(a, a, p, y)
    else:
        sigma_star = theta + a
        g1 = _coag_integral(lambda x: omega_pdf(a, sigma_star, p, x), theta, y, tol)
    if which == "g1":
        return g1
    if which == "a1":
        return (1.0 - p) / (1.0 - y) * g1
    raise ValueError("which must be 'g1' or 'a1'")


# ---------------------------------------------------------------------------
# Bessel bridge (theta = a)

_GL_NODES, _GL_WEIGHTS = leggauss(64)


@lru_cache(maxsize=8)
def _half_tilt_grid(alpha, p, points=1536):
    """Cached grid of the A+_1 density at tilt a/2, for the convolution
    branch of the Bessel-bridge density (1/2 < a <= 2/3)."""
    ys = (np.arange(points) + 0.5) / points
    vals = np.array([occupation_pdf(alpha, alpha / 2.0, p, y, tol=1e-8) for y in ys])
    return ys, vals


def _convolved_bridge_pdf(a, p, y):
    """Density of B X1 + (1-B) X2 with B ~ beta(a/2, a/2) and X1, X2 iid
    A+_1 values at tilt a/2.  The B-integrand is symmetric about 1/2, and
    b = w^(2/a) flattens the left endpoint singularity of the beta weight."""
    ys, vals = _half_tilt_grid(a, p)

    def f1(x):
        return np.interp(x, ys, vals)

    half = a / 2.0
    log_norm = betaln(half, half)

    def inner(b):
        lo = max(0.0, (y - (1.0 - b)) / b)
        hi = min(1.0, y / b)
        if hi <= lo:
            return 0.0
        x = 0.5 * (hi + lo) + 0.5 * (hi - lo) * _GL_NODES
        g = f1(x) * f1((y - b * x) / (1.0 - b)) / (1.0 - b)
        return 0.5 * (hi - lo) * float(np.dot(_GL_WEIGHTS, g))

    w_hi = 0.5**half
    total = 0.0
    for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
        w = 0.5 * w_hi * (node + 1.0)
        b = w ** (2.0 / a)
        total += weight * (1.0 - b) ** (half - 1.0) * inner(b)
    total *= 0.5 * w_hi * (2.0 / a) * math.exp(-log_norm)
    return 2.0 * total


def bessel_bridge_pdf(alpha, p, y, tol=1e-9):
    """Density of the time spent positive by a p-skewed Bessel bridge of
    dimension 2 - 2a (tilt theta = a).

    For a <= 1/2 this is the one-integral form built on the closed
    Omega_{a,2a} display; for 1/2 < a <= 2/3 the law is the two-fold
    convolution of tilt-a/2 occupation laws (accuracy ~1e-3 there, from the
    cached-grid convolution).  a > 2/3 is not supported.
    """
    a = _alpha(alpha)
    p = _check_p(p)
    y = _check_y(y)
    if a <= 0.5:
        g1 = _coag_integral(lambda x: omega_two_alpha_pdf(a, p, x), a, y, tol)
        return (1.0 - p) / (1.0 - y) * g1
    if a <= 2.0 / 3.0:
        return _convolved_bridge_pdf(a, p, y)
    raise ValueError("alpha > 2/3 is not supported for the Bessel-bridge density")


def phylo_tree_pdf(alpha, p, y, tol=1e-9):
    """Tilt theta = 1-a occupation density up to the last zero (the law that
    arises as a limit of a phylogenetic tree model)."""
    a = _alpha(alpha)
    return coag_pdf(a, 1.0 - a, p, y, which="g1", tol=tol)


def g1_pdf(alpha, theta, p, y, tol=1e-9):
    """Density of the time spent positive up to the last zero before 1.

    Covers theta in [0, 1-a] through the coagulation integral and theta = 1
    through the closed form (1-y)/(1-p) Omega_{a,1}(y).
    """
    a = _alpha(alpha)
    if theta == 1.0:
        p = _check_p(p)
        y = _check_y(y)
        return (1.0 - y) / (1.0 - p) * omega_pdf(a, 1.0, p, y)
    return coag_pdf(a, theta, p, y, which="g1", tol=tol)


def cauchy_stieltjes(alpha, theta, p, lam, order="theta"):
    """Cauchy-Stieltjes transforms of the occupation law:

        order="theta":           (q + (1+lam)^a p)^(-theta/a),      theta > 0
        order="one-plus-theta":  ((1+lam)^(a-1) p + q)
                                   * (q + (1+lam)^a p)^(-(theta+a)/a), theta > -a
    """
    a = _alpha(alpha)
    p = _check_p(p)
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    q = 1.0 - p
    base = q + (1.0 + lam) ** a * p
    if order == "theta":
        if not theta > 0:
            raise ValueError("order-theta transform needs theta > 0")
        return base ** (-theta / a)
    if order == "one-plus-theta":
        if not theta > -a:
            raise ValueError("theta must exceed -alpha")
        return ((1.0 + lam) ** (a - 1.0) * p + q) * base ** (-(theta + a) / a)
    raise ValueError("order must be 'theta' or 'one-plus-theta'")
