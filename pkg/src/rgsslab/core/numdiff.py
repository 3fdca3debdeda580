"""Central-difference differentiation with optional Richardson polish.

Error model: a scheme of order q has truncation error O(h^q); each
Richardson level cancels the leading term and raises the order by 2.
The default (4th order, one level, h ~ 1e-4 relative) keeps derivative
noise near 1e-8 on O(1) data, which is what the invariance-residual
tolerances downstream assume.
"""

import math
from dataclasses import dataclass

from ..errors import StencilOutOfDomain

# (offsets, weights, h-power) for first and second derivatives
_STENCILS = {
    (1, 2): ((-1, 1), (-0.5, 0.5), 1),
    (1, 4): ((-2, -1, 1, 2), (1 / 12, -2 / 3, 2 / 3, -1 / 12), 1),
    (2, 2): ((-1, 0, 1), (1.0, -2.0, 1.0), 2),
    (2, 4): ((-2, -1, 0, 1, 2), (-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12), 2),
}


@dataclass(frozen=True)
class NumDiffConfig:
    scheme_order: int = 4
    base_step: float = 1e-4
    richardson_levels: int = 1

    def __post_init__(self):
        if self.scheme_order not in (2, 4):
            raise ValueError("scheme_order must be 2 or 4")
        if self.base_step <= 0:
            raise ValueError("base_step must be positive")
        if self.richardson_levels < 0:
            raise ValueError("richardson_levels must be >= 0")

    def step_at(self, x):
        """Step scaled to the coordinate magnitude, never below base_step."""
        return self.base_step * max(1.0, abs(x))


def _apply_stencil(g, x0, h, order, scheme_order):
    offsets, weights, hpow = _STENCILS[(order, scheme_order)]
    acc = 0.0
    for o, w in zip(offsets, weights):
        v = g(x0 + o * h)
        if not math.isfinite(v):
            raise StencilOutOfDomain(
                f"non-finite value at stencil point {x0 + o * h!r}"
            )
        acc += w * v
    return acc / h**hpow


def diff_scalar(g, x0, order=1, nd=None):
    """Derivative of a scalar callable g at x0 (order 1 or 2)."""
    nd = nd or NumDiffConfig()
    h = nd.step_at(x0)
    q = nd.scheme_order
    estimate = _apply_stencil(g, x0, h, order, q)
    for _ in range(nd.richardson_levels):
        h /= 2.0
        finer = _apply_stencil(g, x0, h, order, nd.scheme_order)
        estimate = (2**q * finer - estimate) / (2**q - 1)
        q += 2
    return estimate


def numdiff(f, p, var, order=1, nd=None):
    """Partial derivative of f(Point) with respect to one coordinate.

    order 1 or 2; central differences of the configured scheme order,
    with nd.richardson_levels rounds of extrapolation.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")

    def g(x):
        return f(p.replace({var: x}))

    return diff_scalar(g, p[var], order=order, nd=nd)
