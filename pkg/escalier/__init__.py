"""
escalier - lex Groebner escaliers and factorized bases for ideals of points
"""

__version__ = "1.0.0"
__author__ = "escalier developers"
__description__ = "Cerlienco-Mureddu escaliers, minimal bases and Axis-of-Evil factorization over Q and F_p"

from .aoe import (
    FactoredBasisElement, FactoredGroebnerBasis, LinearFactor,
    axis_of_evil, expand, interpolate_factor, n_m_set, reduce_basis,
)
from .cemu import Escalier, cemu, cemu_trace, sigma_value
from .config import SessionConfig
from .poly import Polynomial, normal_form
from .potexp import minimal_basis, potential_expansion_step
from .runner import EscalierRunner, run
from .scalars import QQ, prime_field
from .verify import check_vanishing, gb_certificate, moeller_gb

__all__ = [
    'Escalier',
    'EscalierRunner',
    'FactoredBasisElement',
    'FactoredGroebnerBasis',
    'LinearFactor',
    'Polynomial',
    'QQ',
    'SessionConfig',
    'axis_of_evil',
    'cemu',
    'cemu_trace',
    'check_vanishing',
    'expand',
    'gb_certificate',
    'interpolate_factor',
    'minimal_basis',
    'moeller_gb',
    'n_m_set',
    'normal_form',
    'potential_expansion_step',
    'prime_field',
    'reduce_basis',
    'run',
    'sigma_value',
]
