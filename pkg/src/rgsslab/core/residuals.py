"""Invariance residuals in canonical form.

For an operator with coefficients eta on the dependent variables and xi
on everything else, the canonical coordinate at a point is

    kappa_j = eta_j - sum_i xi_i * d(u_j)/d(x_i)

and kappa = 0 on a solution certifies its invariance under the operator's
finite transformations.  A covariant satisfies R C = phi * C instead.
"""

import numpy as np

from .numdiff import NumDiffConfig


def canonical_residual(field, sol, p, nd=None):
    """Canonical coordinates kappa_j of ``field`` on the sampled solution.

    The point is augmented with the sampled dependent values before the
    coefficients are evaluated, so operators may reference dependents
    (e.g. a coefficient u^2*t) even when the probe point carries only the
    independent variables.
    """
    nd = nd or NumDiffConfig()
    sol_nd = sol if sol.nd is nd else _with_nd(sol, nd)
    vals = sol.value(p)
    aug = p.replace(dict(zip(sol.dependents, vals)))
    out = []
    for j, dep in enumerate(sol.dependents):
        kappa = field.coefficient(dep)(aug) if dep in field else 0.0
        for name in field.names:
            if name in sol.dependents:
                continue
            xi = field.coefficient(name)(aug)
            if xi != 0.0:
                kappa -= xi * sol_nd.partial(p, name, dep=j, order=1)
        out.append(kappa)
    return np.asarray(out)


def covariant_residual(field, c, phi, p, nd=None):
    """R C(p) - phi(p) C(p), zero when C transforms with weight phi."""
    nd = nd or NumDiffConfig()
    c_nd = c if c.nd is nd else _with_nd(c, nd)
    rc = 0.0
    for name in field.names:
        xi = field.coefficient(name)(p)
        if xi != 0.0:
            rc += xi * c_nd.partial(p, name, dep=0, order=1)
    return rc - phi(p) * c.component(p, 0)


def _with_nd(sampler, nd):
    from .sampling import SolutionSampler

    return SolutionSampler(
        sampler._value, sampler.dependents, partial=sampler._partial, nd=nd
    )
