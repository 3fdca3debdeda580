from .points import Point
from .fields import VectorField, constant_field, translation
from .flows import IntegratorConfig, flow, rk4_flow, compose_residual
from .numdiff import NumDiffConfig, numdiff, diff_scalar
from .sampling import SolutionSampler
from .residuals import canonical_residual, covariant_residual

__all__ = [
    "Point",
    "VectorField",
    "constant_field",
    "translation",
    "IntegratorConfig",
    "flow",
    "rk4_flow",
    "compose_residual",
    "NumDiffConfig",
    "numdiff",
    "diff_scalar",
    "SolutionSampler",
    "canonical_residual",
    "covariant_residual",
]
