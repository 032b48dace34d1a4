"""PT-symmetric one-dimensional Coulomb model."""

from ._core import *  # noqa: F401,F403
from ._core import (
    Admissibility,
    ModelParams,
    StateLabel,
    energy,
    list_spectrum,
    pseudo_norm_closed,
    pseudo_norm_quadrature,
    wavefunction,
)

__version__ = "0.1.0"
