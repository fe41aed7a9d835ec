"""Characteristic functions and explicit densities of the logarithmic family.

A z-distribution is the law of pi^(-1) log(gamma_a / gamma_b) for independent
gamma variables; its characteristic function is a ratio of gamma functions,

    E exp(i lam / pi log(gamma_a/gamma_b))
        = Gamma(a + i lam/pi) Gamma(b - i lam/pi) / (Gamma(a) Gamma(b)).

Logarithms of the Lamperti-family ratios slot into this calculus: their
characteristic functions are gamma-ratio products evaluated here in
log-space (sums of complex log-gamma), and the hyperbolic special cases
(Meixner, logistic, hyperbolic-secant, the tanh-lambda-over-lambda law) come
out as elementary cosh/sinh ratios.

Each law descriptor documents the exact scaling of the underlying variable,
since the source displays mix pi^(-1) log and (a/pi) log conventions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, fields

from scipy.special import gammaln

from .numerics import complex_log_gamma
from .special import StabilityIndex, delta_pdf, rho

__all__ = [
    "ZLawSpec",
    "LogLamperti",
    "LogScaledLamperti",
    "Meixner",
    "Logistic",
    "Hyperbolic",
    "TanhT1",
    "HLaw",
    "LLaw",
    "epsilon_sigma",
    "gamma_ratio_log_cf",
    "cf",
    "pdf_log_scaled_lamperti",
    "pdf_t1",
    "T1_MASS_CONSTANT",
    "T1_PRINTED_CONSTANT",
    "pdf_log_L_half",
    "ratio_pdf_f",
    "ratio_normalizer",
    "logistic_pdf",
    "hyperbolic_pdf",
    "meixner_pdf",
]


def epsilon_sigma(sigma):
    """The Meixner tilt angle pi (sigma - 1/2)."""
    return math.pi * (sigma - 0.5)


def _check_alpha(a):
    return StabilityIndex(float(a)).alpha


@dataclass(frozen=True)
class ZLawSpec:
    def law_name(self):
        return type(self).__name__

    def params(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def describe(self):
        inner = ", ".join("%s=%s" % (k, v) for k, v in self.params().items())
        return "%s(%s)" % (self.law_name(), inner)


@dataclass(frozen=True)
class LogLamperti(ZLawSpec):
    """Law of pi^(-1) log X_{a,theta}."""

    alpha: float
    theta: float

    def __post_init__(self):
        a = _check_alpha(self.alpha)
        if not self.theta > -a:
            raise ValueError("theta must exceed -alpha")


@dataclass(frozen=True)
class LogScaledLamperti(ZLawSpec):
    """Law of log X^(sigma)_{a,1} (plain logarithm)."""

    alpha: float
    sigma: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not (0.0 < self.sigma <= 1.0):
            raise ValueError("sigma must lie in (0, 1]")


@dataclass(frozen=True)
class Meixner(ZLawSpec):
    """Law of pi^(-1) log(gamma_sigma / gamma_(1-sigma)), 0 < sigma < 1."""

    sigma: float

    def __post_init__(self):
        if not (0.0 < self.sigma < 1.0):
            raise ValueError("sigma must lie in (0, 1)")


@dataclass(frozen=True)
class Logistic(ZLawSpec):
    """Law of pi^(-1) log(U/(1-U)): characteristic function lam/sinh(lam)."""


@dataclass(frozen=True)
class Hyperbolic(ZLawSpec):
    """Law of pi^(-1) log(gamma'_(1/2)/gamma_(1/2)): cf 1/cosh(lam)."""


@dataclass(frozen=True)
class TanhT1(ZLawSpec):
    """The independent complement of the logistic law inside the hyperbolic
    one: cf tanh(lam)/lam."""


@dataclass(frozen=True)
class HLaw(ZLawSpec):
    """Law of (a/pi) log H_{a,sigma} where H is the beta-power-skewed ratio
    X^(a sigma)_{a,1} / beta(1-sigma, sigma)^(1/a)."""

    alpha: float
    sigma: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not (0.0 < self.sigma < 1.0):
            raise ValueError("sigma must lie in (0, 1)")


@dataclass(frozen=True)
class LLaw(ZLawSpec):
    """Law of (a/pi) log L^(delta)_{a,theta}, the beta-power times the ratio
    of tilted stables S_{a,1-theta}/S_{a,theta}; needs delta <= 1/2 and
    a delta <= theta <= a (1 - delta)."""

    alpha: float
    delta: float
    theta: float

    def __post_init__(self):
        a = _check_alpha(self.alpha)
        if not (0.0 < self.delta <= 0.5):
            raise ValueError("delta must lie in (0, 1/2]")
        if not (a * self.delta <= self.theta <= a * (1.0 - self.delta)):
            raise ValueError("theta must lie in [alpha delta, alpha (1-delta)]")


def gamma_ratio_log_cf(a, b, lam):
    """E exp(i lam log(gamma_a/gamma_b)) = G(a+i lam) G(b-i lam) / (G(a) G(b))."""
    if a <= 0 or b <= 0:
        raise ValueError("gamma shapes must be positive")
    return cmath.exp(
        complex_log_gamma(complex(a, lam))
        + complex_log_gamma(complex(b, -lam))
        - gammaln(a)
        - gammaln(b)
    )


def _log_cosh(z):
    """log cosh(z), overflow-safe (cosh is even, so flip to Re z >= 0)."""
    z = complex(z)
    if z.real < 0:
        z = -z
    return z + cmath.log(0.5 * (1.0 + cmath.exp(-2.0 * z)))


def cf(spec, lam):
    """Characteristic function of a z-family law at real lam.

    Closed-form throughout: gamma-function ratios are evaluated as
    exp(sum of complex log-gamma) and the hyperbolic ratios in log space,
    so large |lam| underflows cleanly instead of overflowing.
    Satisfies cf(0) = 1, |cf| <= 1 and cf(-lam) = conj(cf(lam)).
    """
    lam = float(lam)
    if isinstance(spec, Logistic):
        if lam == 0.0:
            return complex(1.0)
        x = abs(lam)
        return complex(x / math.sinh(x)) if x < 700 else complex(
            2.0 * x * math.exp(-x)
        )
    if isinstance(spec, Hyperbolic):
        return cmath.exp(-_log_cosh(complex(lam)))
    if isinstance(spec, TanhT1):
        if lam == 0.0:
            return complex(1.0)
        return complex(math.tanh(lam) / lam)
    if isinstance(spec, Meixner):
        eps = epsilon_sigma(spec.sigma)
        return math.cos(eps) * cmath.exp(-_log_cosh(complex(lam, -eps)))
    if isinstance(spec, LogLamperti):
        a, th = spec.alpha, spec.theta
        s = lam / math.pi
        return cmath.exp(
            complex_log_gamma(complex((th + a) / a, s / a))
            + complex_log_gamma(complex(1.0, -s / a))
            + gammaln(1.0 + th)
            - complex_log_gamma(complex(1.0 + th, s))
            - complex_log_gamma(complex(1.0, -s))
            - gammaln((th + a) / a)
        )
    if isinstance(spec, LogScaledLamperti):
        a, sg = spec.alpha, spec.sigma
        if lam == 0.0:
            return complex(1.0)
        x = abs(lam) * math.pi
        # sinh(pi lam)/(pi lam) in log space so large |lam| cannot overflow
        # before the decaying gamma factors come in
        log_head = x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0 * x)
        return cmath.exp(
            log_head
            + complex_log_gamma(complex(sg / a, lam / a))
            + complex_log_gamma(complex(1.0, -lam / a))
            - gammaln(sg / a)
        )
    if isinstance(spec, HLaw):
        a, eps = spec.alpha, epsilon_sigma(spec.sigma)
        if lam == 0.0:
            return complex(1.0)
        x = abs(lam) * a
        log_sinh = x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)
        return (
            math.cos(eps)
            / x
            * cmath.exp(log_sinh - _log_cosh(complex(lam, -eps)))
        )
    if isinstance(spec, LLaw):
        a = spec.alpha
        eps_d = epsilon_sigma(spec.delta)
        eps_t = epsilon_sigma(spec.theta)
        return (
            math.cos(eps_d)
            / math.cos(eps_t)
            * cmath.exp(_log_cosh(complex(lam * a, -eps_t)) - _log_cosh(complex(lam, -eps_d)))
        )
    raise TypeError("unsupported z-law %r" % (spec,))


# ---------------------------------------------------------------------------
# explicit densities


def pdf_log_scaled_lamperti(alpha, sigma, z):
    """Density of log X^(sigma)_{a,1} at real z:

        (1/pi) sin(rho_{a,sigma}(e^(z a))) / (e^(-2za) + 2 e^(-za) cos(pi a) + 1)^(sigma/2a),

    which is Delta_{a,sigma}(e^z) e^z by the change of variables x = e^z.
    """
    a = _check_alpha(alpha)
    if not (0.0 < sigma <= 1.0):
        raise ValueError("sigma must lie in (0, 1]")
    ez = math.exp(-z * a)
    d = ez * ez + 2.0 * ez * math.cos(math.pi * a) + 1.0
    return math.sin(rho(a, sigma, math.exp(z * a))) / math.pi / d ** (sigma / (2.0 * a))


# total mass of (1/pi) log coth(c|x|) is pi/(4c); this constant normalizes it
T1_MASS_CONSTANT = math.pi / 4.0
# the constant printed in the source display; mass pi^2/16, not a density
T1_PRINTED_CONSTANT = 4.0 / math.pi


def pdf_t1(x, c=T1_MASS_CONSTANT):
    """(1/pi) log coth(c |x|): the tanh(lam)/lam density for c = pi/4.

    Total mass is pi/(4c), so only c = pi/4 normalizes; the printed
    constant 4/pi is available for comparison and integrates to pi^2/16.
    """
    if c <= 0:
        raise ValueError("c must be positive")
    u = c * abs(x)
    if u == 0.0:
        return math.inf
    e = math.exp(-2.0 * u)
    # log coth(u) = log1p(e) - log1p(-e), stable for large u
    return (math.log1p(e) - math.log1p(-e)) / math.pi


def ratio_normalizer(alpha, theta):
    """The constant G(1/a+1) G(th+1) G(2-th) / (G(th/a+1) G((1-th)/a+1))
    in the density of the tilted-stable ratio S_{a,1-th}/S_{a,th}."""
    a = _check_alpha(alpha)
    return math.exp(
        gammaln(1.0 / a + 1.0)
        + gammaln(theta + 1.0)
        + gammaln(2.0 - theta)
        - gammaln(theta / a + 1.0)
        - gammaln((1.0 - theta) / a + 1.0)
    )


def ratio_pdf_f(theta, alpha, x):
    """Density of S_{a,1-theta}/S_{a,theta}: c_{a,theta} x^(theta-1) Delta_{a,1}(x)."""
    a = _check_alpha(alpha)
    if not (0.0 < theta < 1.0):
        raise ValueError("theta must lie in (0, 1)")
    if not x > 0:
        raise ValueError("x must be positive")
    return ratio_normalizer(a, theta) * x ** (-(1.0 - theta)) * delta_pdf(a, 1.0, x)


def pdf_log_L_half(alpha, z):
    """Density of log L^(1/2)_{a,a/2} (the delta = 1/2 law, theta = a/2):

        (c_{a,a/2}/pi) e^(z a/2) sin(rho_{a,1}(e^(z a)))
            / (e^(2za) + 2 e^(za) cos(pi a) + 1)^(1/2a).
    """
    a = _check_alpha(alpha)
    ez = math.exp(z * a)
    d = ez * ez + 2.0 * ez * math.cos(math.pi * a) + 1.0
    return (
        ratio_normalizer(a, a / 2.0)
        / math.pi
        * math.exp(z * a / 2.0)
        * math.sin(rho(a, 1.0, ez))
        / d ** (1.0 / (2.0 * a))
    )


def logistic_pdf(x):
    """Density pi e^(pi x)/(1+e^(pi x))^2 of pi^(-1) log(U/(1-U))."""
    t = math.pi * abs(x)
    e = math.exp(-t)
    return math.pi * e / (1.0 + e) ** 2


def hyperbolic_pdf(x):
    """Density 1/(2 cosh(pi x / 2)) of pi^(-1) log(gamma'_(1/2)/gamma_(1/2))."""
    return 0.5 / math.cosh(math.pi * x / 2.0) if abs(x) < 400 else math.exp(
        -math.pi * abs(x) / 2.0
    )


def meixner_pdf(sigma, x):
    """Density sin(pi sigma) e^(pi sigma x) / (1 + e^(pi x)) of the Meixner law."""
    if not (0.0 < sigma < 1.0):
        raise ValueError("sigma must lie in (0, 1)")
    # e^(pi sigma x)/(1+e^(pi x)) rewritten for stability at large |x|
    if x >= 0:
        return math.sin(math.pi * sigma) * math.exp(math.pi * x * (sigma - 1.0)) / (
            1.0 + math.exp(-math.pi * x)
        )
    return math.sin(math.pi * sigma) * math.exp(math.pi * x * sigma) / (
        1.0 + math.exp(math.pi * x)
    )
