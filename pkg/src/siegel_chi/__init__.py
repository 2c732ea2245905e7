"""Exact Euler characteristics of moduli of abelian varieties and the lambda-class
intersection numbers behind them."""

from .exactnum import bernoulli, zeta_neg
from .eulerhodge import (
    HODGE,
    HodgeConstants,
    chi_gaussbonnet,
    chi_product,
    chi_recursive,
    chi_report,
    integrate_abar,
    proportionality_K,
    tau,
)
from .hodgering import build_quotient, normal_form
from .lagrangian import lg_euler_char, lg_integrate, lg_normalize
from .level import chi_level, degree_ratio, validate_type
from .symlambda import LambdaPoly, ctop_sym2, giambelli_det

__version__ = "0.1.0"
