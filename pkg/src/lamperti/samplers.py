"""Seedable exact and rejection samplers for the whole family of laws.

Everything is built from uniform, exponential, gamma, beta and Dirichlet
primitives plus distributional identities:

* positive stable S_a via the Kanter representation (one uniform + one
  exponential per draw),
* the plain ratio X_a by exact CDF inversion,
* the beta-scaled ratios by a beta power trick (sigma <= a) or rejection on
  the explicit (0,1) density of the inverse-CDF variable (sigma > a),
* tilted ratios X_{a,theta} by the beta-mixture identity for
  0 < theta <= 1 - a and a Dirichlet convolution for larger theta,
* tilted stables S_{m/n,theta} at rational index from beta-gamma products,
* occupation times of p-skewed bridges by rejection with acceptance weight
  (1 - R)^theta,
* Poisson-Dirichlet bridges by truncated stick breaking.

A RandomStream is single-owner: one consumer advances it.  Parallel work
should use ``split()`` streams.  Same seed means bitwise-identical batches.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field, fields
from typing import Optional

import numpy as np

from . import rational as _rational
from .special import StabilityIndex, lamperti_quantile

__all__ = [
    "RandomStream",
    "SampleBatch",
    "LawSpec",
    "PositiveStable",
    "TiltedStableRational",
    "Lamperti",
    "ScaledLamperti",
    "PositiveLinnik",
    "ParetoW",
    "SlackSigma",
    "Zeta",
    "Occupation",
    "PDBridge",
    "SymmetricLinnik",
    "sample_primitive",
    "sample_positive_stable",
    "sample_lamperti_x",
    "sample_scaled_lamperti",
    "sample_lamperti_theta",
    "sample_linnik",
    "sample_pareto_w",
    "sample_slack",
    "sample_zeta",
    "sample_tilted_stable_rational",
    "sample_occupation",
    "sample_occupation_neg_theta",
    "occupation_weighted_sample",
    "sample_pd_bridge",
    "sample_law",
]

_TINY = 1e-300


class RandomStream:
    """Deterministic random stream (PCG64) with stream splitting.

    ``split(k)`` derives k child streams whose draws are statistically
    independent of the parent and of each other; the derivation depends only
    on the root seed and the spawn history, never on how much has been drawn.
    """

    def __init__(self, seed, _seedseq=None):
        self.seed = int(seed)
        self._ss = _seedseq if _seedseq is not None else np.random.SeedSequence(self.seed)
        self.gen = np.random.Generator(np.random.PCG64(self._ss))

    def split(self, k):
        return [RandomStream(self.seed, _seedseq=ss) for ss in self._ss.spawn(k)]

    # thin vectorized primitives ------------------------------------------

    def uniform(self, n):
        return self.gen.uniform(size=n)

    def exponential(self, n):
        return self.gen.exponential(size=n)

    def gamma(self, a, n):
        if a <= 0:
            raise ValueError("gamma shape must be positive")
        return self.gen.gamma(a, size=n)

    def beta(self, a, b, n):
        # beta(a, 0) is the constant 1 by convention
        if a <= 0 or b < 0:
            raise ValueError("invalid beta parameters (%g, %g)" % (a, b))
        if b == 0:
            return np.ones(n)
        return self.gen.beta(a, b, size=n)

    def dirichlet(self, alphas, n):
        alphas = np.asarray(alphas, dtype=float)
        if np.any(alphas <= 0):
            raise ValueError("Dirichlet parameters must be positive")
        return self.gen.dirichlet(alphas, size=n)

    def bernoulli(self, p, n):
        return (self.gen.uniform(size=n) < p).astype(float)

    def normal(self, n):
        return self.gen.standard_normal(size=n)


# ---------------------------------------------------------------------------
# law descriptors


@dataclass(frozen=True)
class LawSpec:
    """Base of the tagged union of supported laws."""

    def law_name(self):
        return type(self).__name__

    def params(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def describe(self):
        inner = ", ".join("%s=%s" % (k, v) for k, v in self.params().items())
        return "%s(%s)" % (self.law_name(), inner)


def _check_alpha(a):
    StabilityIndex(float(a))
    return float(a)


@dataclass(frozen=True)
class PositiveStable(LawSpec):
    alpha: float

    def __post_init__(self):
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class TiltedStableRational(LawSpec):
    m: int
    n: int
    theta: float

    def __post_init__(self):
        r = _rational.RationalAlpha(self.m, self.n)
        if not self.theta > -r.alpha():
            raise ValueError("theta must exceed -m/n")


@dataclass(frozen=True)
class Lamperti(LawSpec):
    alpha: float
    theta: float

    def __post_init__(self):
        a = _check_alpha(self.alpha)
        if not self.theta > -a:
            raise ValueError("theta must exceed -alpha")


@dataclass(frozen=True)
class ScaledLamperti(LawSpec):
    alpha: float
    sigma: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not (0.0 < self.sigma <= 1.0):
            raise ValueError("sigma must lie in (0, 1]")


@dataclass(frozen=True)
class PositiveLinnik(LawSpec):
    alpha: float
    theta: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass(frozen=True)
class ParetoW(LawSpec):
    alpha: float
    theta: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass(frozen=True)
class SlackSigma(LawSpec):
    alpha: float
    sigma: float = 1.0

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not (0.0 < self.sigma <= 1.0):
            raise ValueError("sigma must lie in (0, 1]")


@dataclass(frozen=True)
class Zeta(LawSpec):
    alpha: float

    def __post_init__(self):
        _check_alpha(self.alpha)


@dataclass(frozen=True)
class Occupation(LawSpec):
    alpha: float
    theta: float
    p: float

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.theta >= 0:
            raise ValueError(
                "rejection sampling needs theta >= 0; "
                "see occupation_weighted_sample / sample_occupation_neg_theta"
            )
        if not (0.0 < self.p < 1.0):
            raise ValueError("p must lie in (0, 1)")


@dataclass(frozen=True)
class PDBridge(LawSpec):
    alpha: float
    theta: float
    u: float

    def __post_init__(self):
        a = _check_alpha(self.alpha)
        if not self.theta > -a:
            raise ValueError("theta must exceed -alpha")
        if not (0.0 < self.u < 1.0):
            raise ValueError("u must lie in (0, 1)")


@dataclass(frozen=True)
class SymmetricLinnik(LawSpec):
    alpha: float
    theta: float

    def __post_init__(self):
        a = _check_alpha(self.alpha)
        if a > 0.5:
            raise ValueError("the mixture representation requires alpha <= 1/2")
        if not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass(frozen=True)
class SampleBatch:
    """n draws, the generating seed, and the law descriptor that produced them."""

    values: np.ndarray
    law: LawSpec
    seed: int
    info: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.values.shape[0]

    def to_csv(self, path_or_file):
        """One value per line with '#'-prefixed provenance comments."""
        own = isinstance(path_or_file, (str, bytes))
        fh = open(path_or_file, "w") if own else path_or_file
        try:
            fh.write("# law: %s\n" % self.law.describe())
            fh.write("# seed: %d\n" % self.seed)
            fh.write("# n: %d\n" % self.n)
            for v in self.values:
                fh.write("%.17g\n" % v)
        finally:
            if own:
                fh.close()

    def to_csv_string(self):
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


def _batch(values, law, stream, **info):
    return SampleBatch(np.asarray(values, dtype=float), law, stream.seed, dict(info))


# ---------------------------------------------------------------------------
# primitives


def sample_primitive(stream, kind, n, a=None, b=None, alphas=None, p=None):
    """Draw standard building blocks: uniform, exponential, gamma(a),
    beta(a,b), dirichlet(alphas) or bernoulli(p)."""
    if kind == "uniform":
        values = stream.uniform(n)
    elif kind == "exponential":
        values = stream.exponential(n)
    elif kind == "gamma":
        values = stream.gamma(a, n)
    elif kind == "beta":
        values = stream.beta(a, b, n)
    elif kind == "dirichlet":
        values = stream.dirichlet(alphas, n)
    elif kind == "bernoulli":
        if not (0.0 <= p <= 1.0):
            raise ValueError("bernoulli p must lie in [0, 1]")
        values = stream.bernoulli(p, n)
    else:
        raise ValueError("unknown primitive kind %r" % kind)
    law = LawSpec()
    batch = SampleBatch(np.asarray(values, dtype=float), law, stream.seed,
                        {"kind": kind, "a": a, "b": b, "alphas": alphas, "p": p})
    return batch


# ---------------------------------------------------------------------------
# positive stable and plain Lamperti ratio


def _kanter_values(stream, a, n):
    """Kanter: S = (A(pi U)/E)^((1-a)/a) with
    A(u) = sin((1-a)u) sin(a u)^(a/(1-a)) / sin(u)^(1/(1-a))."""
    u = np.clip(stream.uniform(n), 1e-15, 1.0 - 1e-15) * math.pi
    e = np.maximum(stream.exponential(n), _TINY)
    ratio = a / (1.0 - a)
    log_a = (
        np.log(np.sin((1.0 - a) * u))
        + ratio * np.log(np.sin(a * u))
        - (1.0 + ratio) * np.log(np.sin(u))
    )
    return np.exp((log_a - np.log(e)) * (1.0 - a) / a)


def sample_positive_stable(stream, alpha, n):
    a = _check_alpha(alpha)
    return _batch(_kanter_values(stream, a, n), PositiveStable(a), stream)


def _lamperti_x_values(stream, a, n):
    u = np.clip(stream.uniform(n), 1e-15, 1.0 - 1e-15)
    sa = math.pi * a
    return (np.sin(sa * u) / np.sin(sa * (1.0 - u))) ** (1.0 / a)


def sample_lamperti_x(stream, alpha, n):
    """X_a by exact quantile inversion."""
    a = _check_alpha(alpha)
    return _batch(_lamperti_x_values(stream, a, n), Lamperti(a, 0.0), stream)


# ---------------------------------------------------------------------------
# beta-scaled ratios X^(sigma)_{a,1}


def u_sigma_density(alpha, sigma, u):
    """Density on (0,1) of U_{a,sigma} = F_{X_a}(X^(sigma)_{a,1}); vectorized."""
    a = _check_alpha(alpha)
    u = np.asarray(u, dtype=float)
    sa = math.pi * a
    return (math.sin(sa) / np.sin(sa * u)) ** ((a - sigma) / a) * np.sin(
        math.pi * sigma * (1.0 - u)
    ) / np.sin(sa * (1.0 - u))


def _u_sigma_envelope(a, sigma, grid_points=10_000):
    """Uniform-envelope constant: 1.05 x max of the density over a grid.

    The density is bounded on (0,1) with limits 0 at u=0 (sigma > a) and
    sigma/a at u=1, so the endpoint limit joins the grid maximum.
    """
    u = np.linspace(1e-9, 1.0 - 1e-9, grid_points)
    peak = float(np.max(u_sigma_density(a, sigma, u)))
    peak = max(peak, sigma / a)
    if not math.isfinite(peak) or peak <= 0:
        raise ValueError("envelope search failed for sigma=%g, alpha=%g" % (sigma, a))
    return 1.05 * peak


def _scaled_lamperti_values(stream, a, sigma, n, info=None):
    if abs(sigma - a) < 1e-12:
        return _lamperti_x_values(stream, a, n)
    if sigma < a:
        w = stream.beta(sigma / a, (a - sigma) / a, n) ** (1.0 / a)
        return w * _lamperti_x_values(stream, a, n)
    m = _u_sigma_envelope(a, sigma)
    out = np.empty(n)
    filled = 0
    proposed = 0
    accepted = 0
    while filled < n:
        k = max(int((n - filled) * m * 1.2) + 16, 256)
        u = np.clip(stream.uniform(k), 1e-15, 1.0 - 1e-12)
        v = stream.uniform(k)
        acc = u[v * m < u_sigma_density(a, sigma, u)]
        proposed += k
        accepted += acc.size
        take = min(acc.size, n - filled)
        out[filled : filled + take] = acc[:take]
        filled += take
    if info is not None:
        info["acceptance_rate"] = accepted / proposed
        info["envelope"] = m
    sa = math.pi * a
    return (np.sin(sa * out) / np.sin(sa * (1.0 - out))) ** (1.0 / a)


def sample_scaled_lamperti(stream, alpha, sigma, n):
    """X^(sigma)_{a,1}: exact beta power for sigma <= a, rejection above."""
    law = ScaledLamperti(float(alpha), float(sigma))
    info = {}
    values = _scaled_lamperti_values(stream, law.alpha, law.sigma, n, info=info)
    return _batch(values, law, stream, **info)


# ---------------------------------------------------------------------------
# tilted ratios X_{a,theta}


def _lamperti_theta_values(stream, a, theta, n, parts=None):
    if not theta > -a:
        raise ValueError("theta must exceed -alpha")
    if theta < 0.0:
        # lift into the positive range: X_{a,th} = beta(th+a, 1-a) X_{a,th+a}
        b = stream.beta(theta + a, 1.0 - a, n)
        return b * _lamperti_theta_values(stream, a, theta + a, n)
    if theta == 0.0:
        return _lamperti_x_values(stream, a, n)
    if abs(theta - 1.0) < 1e-12 and parts is None:
        return _scaled_lamperti_values(stream, a, 1.0, n)
    k = parts if parts is not None else math.ceil(theta / (1.0 - a) - 1e-12)
    k = max(int(k), 1)
    tj = theta / k
    if tj > 1.0 - a + 1e-12:
        raise ValueError("parts=%d leaves components above 1 - alpha" % k)
    tj = min(tj, 1.0 - a)

    def component():
        b = stream.beta(1.0, tj, n)
        return b * _scaled_lamperti_values(stream, a, tj + a, n)

    if k == 1:
        return component()
    weights = stream.dirichlet([tj] * k, n)
    total = np.zeros(n)
    for j in range(k):
        total += weights[:, j] * component()
    return total


def sample_lamperti_theta(stream, alpha, theta, n, parts=None):
    """X_{a,theta} for any theta > -alpha.

    ``parts`` forces the number of Dirichlet components in the convolution
    route (each component tilt theta/parts must stay at or below 1 - alpha);
    the default splits theta into ceil(theta/(1-alpha)) equal parts.
    """
    law = Lamperti(float(alpha), float(theta))
    return _batch(
        _lamperti_theta_values(stream, law.alpha, law.theta, n, parts=parts),
        law,
        stream,
        parts=parts,
    )


# ---------------------------------------------------------------------------
# Linnik, Pareto, Slack, zeta


def sample_linnik(stream, alpha, theta, n, route="stable"):
    """Positive Linnik chi_{a,theta} via either exact construction.

    route="stable":   gamma(theta/a)^(1/a) * S_a
    route="lamperti": gamma(theta) * X_{a,theta}
    """
    law = PositiveLinnik(float(alpha), float(theta))
    a, th = law.alpha, law.theta
    if route == "stable":
        values = stream.gamma(th / a, n) ** (1.0 / a) * _kanter_values(stream, a, n)
    elif route == "lamperti":
        values = stream.gamma(th, n) * _lamperti_theta_values(stream, a, th, n)
    else:
        raise ValueError("route must be 'stable' or 'lamperti'")
    return _batch(values, law, stream, route=route)


def sample_pareto_w(stream, alpha, theta, n):
    """W^(1/a)_{a,theta} = (U^(a/theta) / (1 - U^(a/theta)))^(1/a), exact inversion."""
    law = ParetoW(float(alpha), float(theta))
    u = np.clip(stream.uniform(n), 1e-15, 1.0 - 1e-15) ** (law.alpha / law.theta)
    return _batch((u / (1.0 - u)) ** (1.0 / law.alpha), law, stream)


def sample_slack(stream, alpha, n, sigma=1.0):
    """Sigma_{a,sigma} = gamma(1) / X^(sigma)_{a,1}; sigma=1 is the
    conditioned-branching limit law."""
    law = SlackSigma(float(alpha), float(sigma))
    e = stream.exponential(n)
    return _batch(e / _scaled_lamperti_values(stream, law.alpha, law.sigma, n), law, stream)


def sample_zeta(stream, alpha, n):
    """zeta_a = gamma(2) X_{a,1}, the size-biased companion of the Slack law."""
    law = Zeta(float(alpha))
    g = stream.gamma(2.0, n)
    return _batch(g * _scaled_lamperti_values(stream, law.alpha, 1.0, n), law, stream)


# ---------------------------------------------------------------------------
# rational-index tilted stable


def _tilted_stable_values(stream, r, theta, n):
    p = _rational.product_params(r, theta)
    log_prod = np.full(n, math.log(p.scale))
    for a_, b_ in p.betas:
        log_prod += np.log(stream.beta(a_, b_, n))
    for a_ in p.gammas:
        log_prod += np.log(np.maximum(stream.gamma(a_, n), _TINY))
    # (m/S)^m = scale * prod  =>  S = m * prod^(-1/m)
    return p.m * np.exp(-log_prod / p.m)


def sample_tilted_stable_rational(stream, m, n, theta, count):
    """S_{m/n,theta} from the beta-gamma product representation."""
    law = TiltedStableRational(int(m), int(n), float(theta))
    r = _rational.RationalAlpha(law.m, law.n)
    return _batch(_tilted_stable_values(stream, r, law.theta, count), law, stream)


# ---------------------------------------------------------------------------
# occupation times and bridges


def _occupation_values(stream, a, theta, p, n):
    """A+_1 under the (a, theta, p) skewed-bridge law, theta >= 0.

    Rejection: R = cX/(cX+1) for X ~ X_{a,theta}, accepted with probability
    (1-R)^theta; the overall acceptance rate converges to (1-p)^(theta/a).
    ``p`` may be an array of length n giving each output slot its own skew.
    """
    p_arr = np.broadcast_to(np.asarray(p, dtype=float), (n,))
    if np.any((p_arr <= 0.0) | (p_arr >= 1.0)):
        raise ValueError("p must lie in (0, 1)")
    c = (p_arr / (1.0 - p_arr)) ** (1.0 / a)
    out = np.empty(n)
    unfilled = np.arange(n)
    proposed = 0
    accepted = 0
    while unfilled.size:
        k = unfilled.size
        x = _lamperti_theta_values(stream, a, theta, k)
        r = c[unfilled] * x / (c[unfilled] * x + 1.0)
        if theta == 0.0:
            ok = np.ones(k, dtype=bool)
        else:
            ok = stream.uniform(k) < (1.0 - r) ** theta
        out[unfilled[ok]] = r[ok]
        proposed += k
        accepted += int(ok.sum())
        unfilled = unfilled[~ok]
    return out, accepted / proposed


def sample_occupation(stream, alpha, theta, p, n):
    """Occupation time A+_1, exact for theta >= 0 (rejection)."""
    law = Occupation(float(alpha), float(theta), float(p))
    values, rate = _occupation_values(stream, law.alpha, law.theta, law.p, n)
    return _batch(values, law, stream, acceptance_rate=rate)


def sample_occupation_neg_theta(stream, alpha, theta, p, n):
    """Occupation time for -alpha < theta < 0 via the exact lift

        A+_1(theta) = beta(theta+a, 1-a) A+_1(theta+a) + (1 - beta) xi_p,

    which moves the tilt into [0, a) where rejection applies.  The direct
    rejection weight (1-R)^theta is unbounded for theta < 0, so this route
    replaces it; weighted estimation is also available through
    ``occupation_weighted_sample``.
    """
    a = _check_alpha(alpha)
    if not (-a < theta < 0.0):
        raise ValueError("this lift is for -alpha < theta < 0")
    if not (0.0 < p < 1.0):
        raise ValueError("p must lie in (0, 1)")
    b = stream.beta(theta + a, 1.0 - a, n)
    inner, _ = _occupation_values(stream, a, theta + a, p, n)
    values = b * inner + (1.0 - b) * stream.bernoulli(p, n)
    law = PDBridge(a, float(theta), float(p))
    return _batch(values, law, stream, route="neg-theta-lift")


def occupation_weighted_sample(stream, alpha, theta, p, n):
    """Importance-weighted draws of A+_1 for -alpha < theta < 0.

    Returns (values, normalized weights, effective sample size).  The weight
    (1-R)^theta is unbounded near R = 1, so no rejection sampler is claimed;
    the ESS quantifies how usable the weighted sample is.
    """
    a = _check_alpha(alpha)
    if not (-a < theta < 0.0):
        raise ValueError("weighted estimation is for -alpha < theta < 0")
    c = (p / (1.0 - p)) ** (1.0 / a)
    x = _lamperti_theta_values(stream, a, theta, n)
    r = c * x / (c * x + 1.0)
    w = (1.0 - r) ** theta
    w = w / w.sum()
    ess = 1.0 / float(np.sum(w * w))
    return r, w, ess


def _pd_bridge_values(stream, a, theta, u, n, eps, max_sticks):
    total = np.zeros(n)
    residual = np.ones(n)
    active = np.arange(n)
    j = 0
    while active.size:
        j += 1
        if j > max_sticks:
            raise RuntimeError(
                "stick budget %d exhausted before residual < %g "
                "(polynomial decay is slow for large alpha; relax eps)" % (max_sticks, eps)
            )
        v = stream.beta(1.0 - a, theta + j * a, active.size)
        hit = stream.uniform(active.size) < u
        total[active] += residual[active] * v * hit
        residual[active] *= 1.0 - v
        active = active[residual[active] >= eps]
    return total


def sample_pd_bridge(stream, alpha, theta, u, n, truncation_eps=1e-4, max_sticks=400_000):
    """Bridge value P_{a,theta}(u) by stick breaking, truncated when the
    undistributed stick mass drops below ``truncation_eps``.

    The residual mass after j sticks decays like j^(-(1-a)/a), so the stick
    count scales like eps^(-a/(1-a)); keep eps moderate for alpha >= 1/2.
    Discarding the residual biases each value downward by less than eps.
    """
    law = PDBridge(float(alpha), float(theta), float(u))
    if truncation_eps <= 0:
        raise ValueError("truncation_eps must be positive")
    values = _pd_bridge_values(
        stream, law.alpha, law.theta, law.u, n, truncation_eps, max_sticks
    )
    return _batch(values, law, stream, truncation_eps=truncation_eps)


# ---------------------------------------------------------------------------
# dispatch by law descriptor (CLI entry point)


def sample_law(stream, law, n, **options):
    if isinstance(law, PositiveStable):
        return sample_positive_stable(stream, law.alpha, n)
    if isinstance(law, TiltedStableRational):
        return sample_tilted_stable_rational(stream, law.m, law.n, law.theta, n)
    if isinstance(law, Lamperti):
        return sample_lamperti_theta(stream, law.alpha, law.theta, n, **options)
    if isinstance(law, ScaledLamperti):
        return sample_scaled_lamperti(stream, law.alpha, law.sigma, n)
    if isinstance(law, PositiveLinnik):
        return sample_linnik(stream, law.alpha, law.theta, n, **options)
    if isinstance(law, ParetoW):
        return sample_pareto_w(stream, law.alpha, law.theta, n)
    if isinstance(law, SlackSigma):
        return sample_slack(stream, law.alpha, n, sigma=law.sigma)
    if isinstance(law, Zeta):
        return sample_zeta(stream, law.alpha, n)
    if isinstance(law, Occupation):
        return sample_occupation(stream, law.alpha, law.theta, law.p, n)
    if isinstance(law, PDBridge):
        return sample_pd_bridge(stream, law.alpha, law.theta, law.u, n, **options)
    if isinstance(law, SymmetricLinnik):
        from .symmetric import sample_symmetric_linnik

        return sample_symmetric_linnik(stream, law.alpha, law.theta, n)
    raise TypeError("unsupported law %r" % (law,))
