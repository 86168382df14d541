"""Exact rooted hypermap numbers by three independent computations.

The three engines are a direct permutation enumeration, topological
recursion on the spectral curve x = z^(N-1) + 1/z, and coefficient
extraction from a hypergeometric tau function.  All arithmetic is exact:
rationals, cyclotomic field elements, and structured polar values.
"""

from .config import RunConfig, build_config, parse_config_file
from .checks import run_crosscheck, stable_profiles
from .frobenius import (
    canonical_frame,
    eta,
    mu_charge,
    s_matrix,
    unstable01,
    unstable02,
)
from .oracle import Profile, enumerate_rhm, rhm01_closed
from .pluecker import pluecker_check
from .polar import ExactPolar
from .recursion import Recursion, rhm01_from_curve, rhm02_from_curve
from .report import Report, emit
from .tau import TauTruncation, osmh_from_tau, rhm_from_tau, tau_Z

__all__ = [
    "ExactPolar",
    "Profile",
    "Recursion",
    "Report",
    "RunConfig",
    "TauTruncation",
    "build_config",
    "canonical_frame",
    "emit",
    "enumerate_rhm",
    "eta",
    "mu_charge",
    "osmh_from_tau",
    "parse_config_file",
    "pluecker_check",
    "rhm01_closed",
    "rhm01_from_curve",
    "rhm02_from_curve",
    "rhm_from_tau",
    "run_crosscheck",
    "s_matrix",
    "stable_profiles",
    "tau_Z",
    "unstable01",
    "unstable02",
]

__version__ = "1.0.0"
