"""Robin Laplacian eigenvalues on balls and annuli."""

import json

from ._core import (
    ConfigError,
    Domain,
    SolverError,
    bessel_i,
    bessel_i_prime,
    bessel_k,
    bessel_k_prime,
    eigenpairs,
    first_eigenvalue,
    hadamard_outer,
    locate_stationary_alpha,
    spectrum,
    stationarity_G,
    suite_names,
)
from ._core import verify as _verify


def verify(suite="all", config=None):
    """Run a verification suite; returns the parsed summary records."""
    return json.loads(_verify(suite, json.dumps(config or {})))


__all__ = [
    "ConfigError",
    "Domain",
    "SolverError",
    "bessel_i",
    "bessel_i_prime",
    "bessel_k",
    "bessel_k_prime",
    "eigenpairs",
    "first_eigenvalue",
    "hadamard_outer",
    "locate_stationary_alpha",
    "spectrum",
    "stationarity_G",
    "suite_names",
    "verify",
]
