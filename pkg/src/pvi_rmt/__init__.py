"""Random-matrix generating functions and Painleve VI.

Three independent numerical routes (Toeplitz determinants, sigma-form
integration from boundary series, Fredholm determinants of the Jacobi
kernel) together with monodromy-data checks for the spectrum singularity
ensemble.
"""
from .errors import *  # noqa: F401,F403
from .toeplitz import EnsembleParameters, eval_AN, eval_AN_logderiv
from .sigma_pvi import PVIParameters, SigmaState, integrate_sigma
from .fredholm_jacobi import JacobiWeightParams, fredholm_det
from .monodromy import ThetaSet, build_monodromy

__version__ = "0.1.0"
