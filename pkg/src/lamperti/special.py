"""Closed-form scalar functions of the Lamperti family.

The basic object is the ratio X_a = S_a / S'_a of two independent positive
a-stable variables (0 < a < 1), whose density is

    f(y) = sin(pi a)/pi * y^(a-1) / (y^(2a) + 2 y^a cos(pi a) + 1),   y > 0.

This module evaluates that density, its explicit CDF and quantile, the
log-potential Phi_a, the angle function rho_{a,tau}, the kernel family
Delta_{a,tau}, and the densities of the tilted ratios X_{a,theta} and of the
beta-scaled variants X^(sigma)_{a,1} that are available in closed or
one-integral form.

All angles are computed with the two-argument arctangent of
(sin(pi a), cos(pi a) + x^a) so they always land in (0, pi); the printed
arccot/arctan forms of these formulas are branch-ambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import integrate

__all__ = [
    "StabilityIndex",
    "TiltedLampertiLaw",
    "ScaledLampertiLaw",
    "lamperti_pdf",
    "lamperti_cdf",
    "lamperti_quantile",
    "phi_alpha",
    "rho",
    "delta_pdf",
    "x_theta_pdf",
    "x_sigma_special",
]

# alpha closer than this to {0, 1} loses too much precision in the trig
# identities; construction fails rather than degrading silently.
ALPHA_MARGIN = 1e-6


@dataclass(frozen=True)
class StabilityIndex:
    """Stability index a, strictly inside (0, 1)."""

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (ALPHA_MARGIN < a < 1.0 - ALPHA_MARGIN):
            raise ValueError(
                "alpha must lie in (%g, %g), got %r" % (ALPHA_MARGIN, 1 - ALPHA_MARGIN, a)
            )


@dataclass(frozen=True)
class TiltedLampertiLaw:
    """Parameter pair (a, theta) of the tilted ratio X_{a,theta}, theta > -a."""

    alpha: StabilityIndex
    theta: float

    def __post_init__(self):
        if not self.theta > -self.alpha.alpha:
            raise ValueError("theta must exceed -alpha")


@dataclass(frozen=True)
class ScaledLampertiLaw:
    """Parameters (a, tau, sigma) of the beta-scaled ratio, tau > 0, 0 < sigma <= 1."""

    alpha: StabilityIndex
    tau: float
    sigma: float

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError("tau must be positive")
        if not (0.0 < self.sigma <= 1.0):
            raise ValueError("sigma must lie in (0, 1]")


_ALPHA_CACHE = set()


def _alpha(value):
    """Accept a float or a StabilityIndex; validate and return the float."""
    if isinstance(value, StabilityIndex):
        return value.alpha
    v = float(value)
    if v not in _ALPHA_CACHE:
        StabilityIndex(v)
        if len(_ALPHA_CACHE) > 4096:
            _ALPHA_CACHE.clear()
        _ALPHA_CACHE.add(v)
    return v


def lamperti_pdf(alpha, y):
    """Density of X_a at y > 0."""
    a = _alpha(alpha)
    if y <= 0:
        raise ValueError("y must be positive")
    ya = y**a
    return (
        math.sin(math.pi * a)
        / math.pi
        * y ** (a - 1.0)
        / (ya * ya + 2.0 * ya * math.cos(math.pi * a) + 1.0)
    )


def lamperti_cdf(alpha, x):
    """CDF of X_a at x >= 0, via the explicit inverse-cotangent form."""
    a = _alpha(alpha)
    if x < 0:
        raise ValueError("x must be nonnegative")
    angle = math.atan2(math.sin(math.pi * a), math.cos(math.pi * a) + x**a)
    return 1.0 - angle / (math.pi * a)


def lamperti_quantile(alpha, u):
    """Quantile [sin(pi a u) / sin(pi a (1-u))]^(1/a) of X_a, 0 < u < 1."""
    a = _alpha(alpha)
    if not (0.0 < u < 1.0):
        raise ValueError("u must lie in the open interval (0, 1)")
    return (math.sin(math.pi * a * u) / math.sin(math.pi * a * (1.0 - u))) ** (1.0 / a)


def phi_alpha(alpha, x):
    """Log-potential Phi_a(x) = (1/2a) log(x^(2a) + 2 x^a cos(pi a) + 1), x >= 0."""
    a = _alpha(alpha)
    if x < 0:
        raise ValueError("x must be nonnegative")
    xa = x**a
    return math.log(xa * xa + 2.0 * xa * math.cos(math.pi * a) + 1.0) / (2.0 * a)


def rho(alpha, tau, x_pow_alpha):
    """Angle rho_{a,tau}(x^a) = (tau/a) atan2(sin(pi a), cos(pi a) + x^a).

    Lies in (0, pi tau / a); equals pi tau (1 - F(x)) for the CDF F of X_a,
    where the atan2 branch keeps the inner angle inside (0, pi).
    """
    a = _alpha(alpha)
    if tau <= 0:
        raise ValueError("tau must be positive")
    if x_pow_alpha < 0:
        raise ValueError("x_pow_alpha must be nonnegative")
    return (
        tau / a * math.atan2(math.sin(math.pi * a), math.cos(math.pi * a) + x_pow_alpha)
    )


def _delta_kernel(a, sin_pa, cos_pa, tau, x):
    """Delta_{a,tau}(x) with the trig constants precomputed (hot path)."""
    xa = x**a
    d = xa * xa + 2.0 * xa * cos_pa + 1.0
    ang = tau / a * math.atan2(sin_pa, cos_pa + xa)
    return x ** (tau - 1.0) / math.pi * math.sin(ang) / d ** (tau / (2.0 * a))


def delta_pdf(alpha, tau, x):
    """The kernel Delta_{a,tau}(x) for x > 0 and tau > 0.

    Delta is a probability density (of the beta-scaled ratio with sigma=tau)
    exactly for tau <= 1; for tau > 1 it may go negative and is only a signed
    kernel, still useful inside integral representations.
    """
    a = _alpha(alpha)
    if tau <= 0:
        raise ValueError("tau must be positive")
    if x <= 0:
        raise ValueError("x must be positive")
    return _delta_kernel(a, math.sin(math.pi * a), math.cos(math.pi * a), tau, x)


def x_theta_pdf(alpha, theta, x, tol=1e-9):
    """Density of the tilted ratio X_{a,theta} for 0 <= theta <= 1 - a.

    theta = 0 returns the Lamperti density.  For theta > 0 the density is

        theta * int_0^1 Delta_{a,theta+a}(x/u) u^(-1) (1-u)^(theta-1) du,

    evaluated after the substitution u = 1 - v^(1/theta), which removes the
    integrable endpoint singularity (the substituted integrand is just
    Delta(x/u)/u).  Other theta are served by sampling routes, not closed
    form.
    """
    a = _alpha(alpha)
    if not (0.0 <= theta <= 1.0 - a):
        raise ValueError("theta must lie in [0, 1 - alpha] for the closed form")
    if x <= 0:
        raise ValueError("x must be positive")
    if theta == 0.0:
        return lamperti_pdf(a, x)
    sigma_star = theta + a
    sin_pa = math.sin(math.pi * a)
    cos_pa = math.cos(math.pi * a)
    inv_theta = 1.0 / theta

    def integrand(v):
        u = 1.0 - v**inv_theta
        if u <= 0.0:
            return 0.0
        return _delta_kernel(a, sin_pa, cos_pa, sigma_star, x / u) / u

    # far in the tail the density is tiny; keep the tolerance proportional
    # to the local kernel scale there so tail integrals of this density
    # (normalization, transforms) are not drowned in absolute-level noise
    scale = min(1.0, 4.0 * _delta_kernel(a, sin_pa, cos_pa, sigma_star, x))
    return integrate(integrand, 0.0, 1.0, tol=max(1e-15, tol * scale)).value


def x_sigma_special(alpha, sigma, x):
    """Density of the beta-scaled ratio for sigma <= a (where it is Delta_{a,sigma}).

    In this range the variable is also the 1/a-th power of a beta times X_a;
    the mixture agrees with Delta_{a,sigma} pointwise.  For sigma > a use
    delta_pdf directly.
    """
    a = _alpha(alpha)
    if not (0.0 < sigma <= a):
        raise ValueError("sigma must lie in (0, alpha]; use delta_pdf for sigma > alpha")
    return delta_pdf(a, sigma, x)
