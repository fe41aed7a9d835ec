"""Three-parameter (Prabhakar) Mittag-Leffler evaluation on the negative axis.

The central object is

    E^(g)_(r,m)(z) = sum_k z^k / k! * (g)_k / Gamma(r k + m),        z <= 0,

summed with tail control and a loss-of-significance guard: when the largest
intermediate term exceeds 1e6 times the result, double precision no longer
carries the requested accuracy and evaluation fails over to an integral
route.  That route exists for the two sub-families used throughout the
library (g = m/r with m > 0, and g = (m-1)/r + 1), where the function is a
power-scaled positive-Linnik density.

A Monte Carlo route through the tilted-ratio sampler provides a third,
statistically independent evaluation for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import gammaln, gammasgn

from .special import StabilityIndex, lamperti_pdf
from .numerics import integrate

__all__ = [
    "PrabhakarParams",
    "PrabhakarCancellationError",
    "prabhakar",
    "prabhakar_series",
    "ml_laplace_mc",
    "ml_via_linnik",
]

# cancellation beyond this ratio leaves fewer than ~10 significant digits
GUARD_RATIO = 1e6


class PrabhakarCancellationError(ArithmeticError):
    """Series cancellation too severe and no integral route applies."""


@dataclass(frozen=True)
class PrabhakarParams:
    """(rho, mu, gamma) of the three-parameter Mittag-Leffler function."""

    rho: float
    mu: float
    gamma: float

    def __post_init__(self):
        if not self.rho > 0:
            raise ValueError("rho must be positive")


def _as_params(params):
    if isinstance(params, PrabhakarParams):
        return params
    rho, mu, gamma = params
    return PrabhakarParams(float(rho), float(mu), float(gamma))


def _log_abs_gamma(x):
    """log|Gamma(x)| and its sign; sign 0 flags a pole (term vanishes)."""
    s = float(gammasgn(x))
    if s == 0.0 or (x <= 0 and x == int(x)):
        return 0.0, 0.0
    return float(gammaln(x)) if x > 0 else math.lgamma(x), s


def prabhakar_series(params, z, tol=1e-14, max_terms=20_000):
    """Raw series value together with the largest |term| seen.

    Returns (value, max_abs_term).  Callers judge cancellation from the
    ratio; ``prabhakar`` does that automatically.
    """
    p = _as_params(params)
    if z > 0:
        raise ValueError("negative-axis evaluation only (z <= 0)")
    lg_mu, sg_mu = _log_abs_gamma(p.mu)
    if sg_mu == 0.0:
        first = 0.0
    else:
        first = sg_mu * math.exp(-lg_mu)
    if z == 0.0:
        return first, abs(first)

    log_abs_z = math.log(-z)
    total = first
    max_abs = abs(first)
    log_poch = 0.0  # log |(gamma)_k|
    sign_poch = 1.0
    below = 0
    peaked = False
    prev_abs = abs(first)
    for k in range(1, max_terms):
        factor = p.gamma + (k - 1)
        if factor == 0.0:
            # pochhammer hit zero: all further terms vanish
            break
        log_poch += math.log(abs(factor))
        sign_poch *= math.copysign(1.0, factor)
        lg, sg = _log_abs_gamma(p.rho * k + p.mu)
        if sg == 0.0:
            continue
        log_t = k * log_abs_z + log_poch - math.lgamma(k + 1) - lg
        t = ((-1.0) ** k) * sign_poch * sg * math.exp(log_t)
        total += t
        at = abs(t)
        max_abs = max(max_abs, at)
        if at < prev_abs:
            peaked = True
        prev_abs = at
        if peaked and at <= tol * max(abs(total), 1e-300):
            below += 1
            if below >= 3:
                break
        else:
            below = 0
    else:
        raise PrabhakarCancellationError(
            "series did not settle after %d terms" % max_terms
        )
    return total, max_abs


def _linnik_family_value(alpha, theta, lam, tol):
    """E^(theta/alpha)_(alpha, theta)(-lam) for theta > 0 via the identity
    with the positive-Linnik density: equals x^(1-theta) f_chi(x), x = lam^(1/alpha)."""
    from .linnik import linnik_pdf  # deferred: linnik builds on this module

    x = lam ** (1.0 / alpha)
    return x ** (1.0 - theta) * linnik_pdf(alpha, theta, x, tol=tol)


def _integral_route(p, z, tol):
    lam = -z
    if lam == 0.0:
        return math.exp(-gammaln(p.mu)) * gammasgn(p.mu)
    try:
        StabilityIndex(p.rho)
    except ValueError:
        raise PrabhakarCancellationError(
            "no integral route outside 0 < rho < 1 (rho=%g)" % p.rho
        )
    alpha = p.rho
    if abs(p.gamma - p.mu / alpha) < 1e-9 and p.mu > 0:
        return _linnik_family_value(alpha, p.mu, lam, tol)
    if abs(p.gamma - ((p.mu - 1.0) / alpha + 1.0)) < 1e-9:
        theta = p.mu - 1.0
        if theta > 0:
            # E^(th/a+1)_(a,1+th) = Gamma(th)/Gamma(1+th) E^(th/a)_(a,th)
            return math.exp(gammaln(theta) - gammaln(1.0 + theta)) * _linnik_family_value(
                alpha, theta, lam, tol
            )
        if theta == 0.0:
            # classical E_a(-lam) as the Laplace transform of the plain ratio
            s = lam ** (1.0 / alpha)
            return integrate(
                lambda x: math.exp(-s * x) * lamperti_pdf(alpha, x), 0.0, math.inf, tol=tol
            ).value
    raise PrabhakarCancellationError(
        "cancellation guard tripped and (rho=%g, mu=%g, gamma=%g) matches no "
        "integral-route family" % (p.rho, p.mu, p.gamma)
    )


def prabhakar(params, z, tol=1e-12, method="auto"):
    """E^(gamma)_(rho,mu)(z) for z <= 0.

    ``method="auto"`` runs the series and falls over to the integral route
    when cancellation exceeds the guard ratio; "series" and "integral"
    force a route.
    """
    p = _as_params(params)
    if method == "integral":
        return _integral_route(p, z, tol)
    try:
        value, max_abs = prabhakar_series(p, z)
    except (OverflowError, PrabhakarCancellationError):
        if method == "series":
            raise
        return _integral_route(p, z, tol)
    if max_abs > GUARD_RATIO * max(abs(value), 1e-300):
        if method == "series":
            raise PrabhakarCancellationError(
                "cancellation %.3g exceeds guard" % (max_abs / max(abs(value), 1e-300))
            )
        return _integral_route(p, z, tol)
    return value


def ml_laplace_mc(stream, alpha, theta, z, n):
    """Monte Carlo estimate of E[exp(-z^(1/a) X_{a,theta})], which equals
    Gamma(1+theta) E^(theta/a+1)_(a,1+theta)(-z).

    Returns (estimate, standard_error).
    """
    from .samplers import _lamperti_theta_values

    a = StabilityIndex(float(alpha)).alpha
    if z < 0:
        raise ValueError("z must be nonnegative")
    if z == 0.0:
        return 1.0, 0.0
    import numpy as np

    x = _lamperti_theta_values(stream, a, float(theta), n)
    vals = np.exp(-(z ** (1.0 / a)) * x)
    return float(np.mean(vals)), float(np.std(vals, ddof=1) / math.sqrt(n))


def ml_via_linnik(alpha, theta, x, tol=1e-9):
    """Gamma(theta) x^(1-theta) f_chi(x) = Gamma(theta) E^(theta/a)_(a,theta)(-x^a).

    Also the survival probability P(gamma_1 / X_{a,theta} > x) and the
    Laplace transform E[exp(-x X_{a,theta})].
    """
    a = StabilityIndex(float(alpha)).alpha
    if not theta > 0:
        raise ValueError("theta must be positive")
    if not x > 0:
        raise ValueError("x must be positive")
    return math.exp(gammaln(theta)) * _linnik_family_value(a, theta, x**a, tol)
