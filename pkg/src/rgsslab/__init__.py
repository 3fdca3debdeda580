"""rgsslab: a numerical laboratory for renormalization-group symmetries.

Vector-field flows on extended variable spaces (independents, dependents
and equation parameters together), invariance residuals in canonical
form, and perturbation-theory-to-exact-solution reconstructions for four
boundary-value models: a polynomial first-order ODE, the modified Burgers
equation, collimated nonlinear-optics beams, and plasma-resonance fields.
Every reconstruction ships with an independent brute-force oracle.
"""

from .core import (
    IntegratorConfig,
    NumDiffConfig,
    Point,
    SolutionSampler,
    VectorField,
    canonical_residual,
    compose_residual,
    covariant_residual,
    flow,
    numdiff,
    rk4_flow,
)

__version__ = "0.1.0"

__all__ = [
    "IntegratorConfig",
    "NumDiffConfig",
    "Point",
    "SolutionSampler",
    "VectorField",
    "canonical_residual",
    "compose_residual",
    "covariant_residual",
    "flow",
    "numdiff",
    "rk4_flow",
]
