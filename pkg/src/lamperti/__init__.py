"""Lamperti-type laws: densities, CDFs, quantiles, exact samplers,
generalized Mittag-Leffler functions, the stable-CSBP jump density,
occupation times of skewed Bessel bridges and z-distribution
characteristic functions, with a built-in verification harness."""

from .special import (
    StabilityIndex,
    TiltedLampertiLaw,
    ScaledLampertiLaw,
    lamperti_pdf,
    lamperti_cdf,
    lamperti_quantile,
    phi_alpha,
    rho,
    delta_pdf,
    x_theta_pdf,
    x_sigma_special,
)
from .numerics import (
    QuadratureResult,
    KSResult,
    IntegrationError,
    integrate,
    sum_series,
    complex_log_gamma,
    cf_invert,
    empirical_cf,
    ks_one_sample,
    ks_two_sample,
    laplace_transform,
)
from .samplers import (
    RandomStream,
    SampleBatch,
    LawSpec,
    PositiveStable,
    TiltedStableRational,
    Lamperti,
    ScaledLamperti,
    PositiveLinnik,
    ParetoW,
    SlackSigma,
    Zeta,
    Occupation,
    PDBridge,
    SymmetricLinnik,
    sample_positive_stable,
    sample_lamperti_x,
    sample_scaled_lamperti,
    sample_lamperti_theta,
    sample_linnik,
    sample_pareto_w,
    sample_slack,
    sample_zeta,
    sample_tilted_stable_rational,
    sample_occupation,
    sample_occupation_neg_theta,
    occupation_weighted_sample,
    sample_pd_bridge,
    sample_law,
)
from .rational import RationalAlpha, product_params, tilted_negative_moment
from .mittag import (
    PrabhakarParams,
    PrabhakarCancellationError,
    prabhakar,
    ml_laplace_mc,
    ml_via_linnik,
)
from .linnik import (
    LinnikLaw,
    CsbpTime,
    linnik_pdf,
    pareto_pdf,
    pareto_cdf,
    slack_survival,
    slack_pdf,
    slack_laplace,
    csbp_levy_density,
    csbp_exponent,
    csbp_immigration_lt,
    csbp_exponent_check,
)
from .occupation import (
    OccupationLaw,
    occupation_pdf,
    carlton_pdf,
    omega_pdf,
    omega_two_alpha_pdf,
    coag_pdf,
    bessel_bridge_pdf,
    phylo_tree_pdf,
    g1_pdf,
    cauchy_stieltjes,
)
from .zdist import (
    ZLawSpec,
    LogLamperti,
    LogScaledLamperti,
    Meixner,
    Logistic,
    Hyperbolic,
    TanhT1,
    HLaw,
    LLaw,
    cf,
    gamma_ratio_log_cf,
    pdf_log_scaled_lamperti,
    pdf_t1,
    pdf_log_L_half,
    ratio_pdf_f,
)
from .symmetric import (
    PsiTriple,
    fejer_pdf,
    sample_fejer,
    w_mixture_pdf,
    sample_w,
    symmetric_linnik_pdf,
    sample_symmetric_linnik,
    eta_pdf,
)
from .verify import VerificationReport, run_suite, SUITES

__version__ = "0.1.0"
