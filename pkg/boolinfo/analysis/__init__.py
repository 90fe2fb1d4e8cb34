"""
boolinfo Analysis Module
========================

Exact quantities for one Boolean function.

Modules:
- hypercube: BooleanFunction, Fourier-Walsh transform, noise operator
- channel: posteriors through BSC(alpha), exact MI, even moments, entropy Taylor bound
- bounds: closed-form MI and moment bounds with premise checks
"""

from boolinfo.analysis.hypercube import (
    BooleanFunction,
    RealHypercubeFunction,
    FourierSpectrum,
    make_function,
    named_family,
    is_balanced,
    is_dictator,
    fourier_transform,
    fourier_transform_direct,
    inverse_transform,
    noise_operator,
    noise_stability,
    weight_profile,
)
from boolinfo.analysis.channel import (
    NoiseParameter,
    PosteriorTable,
    MomentReport,
    HypercontractivityCheck,
    binary_entropy,
    bsc_capacity,
    taylor_coefficient,
    taylor_weights,
    entropy_taylor_lower_bound,
    posterior_table,
    conditional_entropy,
    mutual_information,
    even_moment,
    moment_report,
    second_moment_spectral,
    max_posterior_deviation,
    mi_upper_from_moments,
    hypercontractive_check,
)
from boolinfo.analysis.bounds import (
    BoundReport,
    bound_report,
    conjectured_bound,
    quadratic_bound,
    theorem1_bound,
    theorem1_threshold,
    general_t_bound,
    general_t_threshold,
    moment_bound,
    moment_bound_ratio,
    moment_premise,
    corollary_threshold,
    nondictator_mi_bound,
)

__all__ = [
    'BooleanFunction',
    'RealHypercubeFunction',
    'FourierSpectrum',
    'make_function',
    'named_family',
    'is_balanced',
    'is_dictator',
    'fourier_transform',
    'fourier_transform_direct',
    'inverse_transform',
    'noise_operator',
    'noise_stability',
    'weight_profile',
    'NoiseParameter',
    'PosteriorTable',
    'MomentReport',
    'HypercontractivityCheck',
    'binary_entropy',
    'bsc_capacity',
    'taylor_coefficient',
    'taylor_weights',
    'entropy_taylor_lower_bound',
    'posterior_table',
    'conditional_entropy',
    'mutual_information',
    'even_moment',
    'moment_report',
    'second_moment_spectral',
    'max_posterior_deviation',
    'mi_upper_from_moments',
    'hypercontractive_check',
    'BoundReport',
    'bound_report',
    'conjectured_bound',
    'quadratic_bound',
    'theorem1_bound',
    'theorem1_threshold',
    'general_t_bound',
    'general_t_threshold',
    'moment_bound',
    'moment_bound_ratio',
    'moment_premise',
    'corollary_threshold',
    'nondictator_mi_bound',
]
