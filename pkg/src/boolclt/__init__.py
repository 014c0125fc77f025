"""Boolean convolution of finitely supported measures and numerical checks of
the Boolean central limit theorem's Lévy-distance rates."""
from .clt import (ConvergenceRow, StructureReport, clt_iterate, convergence_table,
                  static_levy_bound, thm1_bound, thm2_structure)
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .measure import (AtomicMeasure, StepCdf, bernoulli, boolean_cumulants, cdf, dilate, dirac,
                      example_measure, kolmogorov_distance, levy_distance, make_measure, moment,
                      moments_from_cumulants, sharpness_measure, square_pushforward, standardize,
                      variance)
from .poly import (Polynomial, RationalFn, poly_add, poly_derivative, poly_mul, poly_scale_arg,
                   rational_add, rational_eval, real_roots)
from .transforms import (TransformBundle, auxiliary_measure, boolean_convolve, boolean_power,
                         cauchy_transform, f_transform, k_transform, recover_measure,
                         stieltjes_density_sample, transform_bundle)

__version__ = "0.1.0"
