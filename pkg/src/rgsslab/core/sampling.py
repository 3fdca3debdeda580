"""Samplers for candidate boundary-value-problem solutions.

A SolutionSampler evaluates the dependent variables of a (candidate)
solution at a Point and supplies partial derivatives up to second order,
either from user-provided analytic formulas or by central differences.
"""

import numpy as np

from ..errors import DerivativeUnavailable
from .numdiff import NumDiffConfig, numdiff


class SolutionSampler:
    """Wraps u = U(point) together with a partial-derivative oracle.

    Parameters
    ----------
    value : callable Point -> float or sequence of floats
    dependents : names of the dependent variables, in value() order
    partial : optional callable (Point, var, dep_index, order) -> float;
        when given the sampler is 'analytic', otherwise partials fall
        back to central differences of value()
    nd : NumDiffConfig for the numeric fallback
    """

    def __init__(self, value, dependents=("u",), partial=None, nd=None):
        self._value = value
        self.dependents = tuple(dependents)
        self._partial = partial
        self.mode = "analytic" if partial is not None else "numeric"
        self.nd = nd or NumDiffConfig()

    def value(self, p):
        v = self._value(p)
        arr = np.atleast_1d(np.asarray(v, dtype=float))
        if arr.shape != (len(self.dependents),):
            raise ValueError(
                f"sampler returned {arr.shape}, expected ({len(self.dependents)},)"
            )
        return arr

    def component(self, p, dep=0):
        return float(self.value(p)[dep])

    def partial(self, p, var, dep=0, order=1):
        if order not in (1, 2):
            raise DerivativeUnavailable(f"order {order} not supported")
        if self._partial is not None:
            return float(self._partial(p, var, dep, order))
        return numdiff(lambda q: self.component(q, dep), p, var, order, self.nd)
