"""Effective-coupling flows and their functional group equations.

One coupling: gbar(x, g) solves x dgbar/dx = beta(gbar) with gbar(1, g) = g;
integration runs in l = ln x so step control is uniform across decades.
The group law gbar(x, g) = gbar(x/a, gbar(a, g)) is exposed as a residual.
Two couplings add a mass-ratio argument y that rescales together with x.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import BlowUp
from .core import IntegratorConfig, Point, VectorField, flow


@dataclass(frozen=True)
class BetaFunction1:
    """One-coupling beta function, trusted on g_domain."""

    beta: callable
    g_domain: tuple = (-10.0, 10.0)

    def bound(self):
        lo, hi = self.g_domain
        return max(abs(lo), abs(hi))


@dataclass(frozen=True)
class BetaFunction2:
    """Two-coupling beta functions beta_i(y; g, h)."""

    beta1: callable
    beta2: callable
    g_domain: tuple = (-10.0, 10.0)


class EffectiveCoupling:
    """gbar(x, g) with gbar(1, g) = g."""

    def __init__(self, gbar):
        self._gbar = gbar

    def __call__(self, x, g):
        return self._gbar(x, g)

    @classmethod
    def from_beta(cls, b, cfg=None):
        return cls(lambda x, g: effective_coupling(b, x, g, cfg))

    @classmethod
    def powerlike(cls, k):
        """Automodel coupling g * x**k (the beta = k*g special case)."""
        return cls(lambda x, g: g * x**k)


def coupling_field(b):
    """Lie field of the one-coupling flow in l = ln x coordinates."""
    return VectorField({"gbar": lambda p: b.beta(p["gbar"])}, param_name="l")


def effective_coupling(b, x, g, cfg=None):
    """gbar(x, g) by integrating dgbar/dl = beta(gbar) from l=0 to ln x.

    Raises BlowUp carrying ``singular_x`` when the coupling leaves the
    trusted domain before reaching x (a Landau-pole-type singularity).
    """
    if x <= 0:
        raise ValueError("x must be positive")
    cfg = cfg or IntegratorConfig()
    run_cfg = _domain_limited(cfg, b)
    ell = math.log(x)
    try:
        end = flow(coupling_field(b), Point(gbar=g), ell, run_cfg)
    except BlowUp as exc:
        xs = math.exp(exc.lambda_reached) if exc.lambda_reached is not None else None
        raise BlowUp(
            f"coupling left its domain before x={x:g}"
            + (f" (singular near x={xs:g})" if xs else ""),
            lambda_reached=exc.lambda_reached,
            singular_x=xs,
        ) from None
    return end["gbar"]


def functional_equation_residual(ec, x, a, g):
    """|gbar(x,g) - gbar(x/a, gbar(a,g))|, the one-coupling group law."""
    return abs(ec(x, g) - ec(x / a, ec(a, g)))


def landau_pole(b, g, cfg=None, bound=1e6, tol=1e-12):
    """Location x* of the flow singularity, refined by bisection in ln x.

    The first escape past ``bound`` gives an upper bracket; bisection on
    the reachability of ln x then pins the singular point.  With a large
    bound the gap between 'coupling reaches the bound' and the true pole
    is O(1/bound) in ln x.
    """
    cfg = cfg or IntegratorConfig()
    run_cfg = _replace_bound(cfg, bound)
    fld = coupling_field(b)
    start = Point(gbar=g)
    probe = 1.0
    reached = None
    for _ in range(200):
        try:
            flow(fld, start, probe, run_cfg)
        except BlowUp as exc:
            reached = exc.lambda_reached
            break
        probe *= 2.0
    if reached is None:
        raise ValueError("no singularity found: flow stays bounded")
    lo, hi = 0.98 * reached, min(probe, 1.02 * reached + tol)
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        try:
            flow(fld, start, mid, run_cfg)
            lo = mid
        except BlowUp:
            hi = mid
    return math.exp(0.5 * (lo + hi))


def two_coupling_flow(b, x, y, g, h, cfg=None):
    """(gbar, hbar) at scale x for the two-coupling system.

    Characteristic ODEs in s = ln x:
        dgbar/ds = beta1(y e^-s; gbar, hbar)
        dhbar/ds = beta2(y e^-s; gbar, hbar)
    with (gbar, hbar) = (g, h) at s = 0; the ratio argument y/x is
    carried analytically along the trajectory.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    cfg = cfg or IntegratorConfig()
    s_end = math.log(x)
    if s_end == 0.0:
        return g, h

    def rhs(s, st):
        r = y * math.exp(-s)
        return [b.beta1(r, st[0], st[1]), b.beta2(r, st[0], st[1])]

    def escape(_s, st):
        return cfg.blowup_bound - max(abs(st[0]), abs(st[1]))

    escape.terminal = True
    sol = solve_ivp(
        rhs,
        (0.0, s_end),
        [g, h],
        method=cfg.method,
        rtol=cfg.rel_tol,
        atol=cfg.abs_tol,
        events=escape,
    )
    if sol.status != 0:
        reached = float(sol.t_events[0][0]) if sol.status == 1 else float(sol.t[-1])
        raise BlowUp(
            f"two-coupling flow diverged at ln x = {reached:.6g}",
            lambda_reached=reached,
            singular_x=math.exp(reached),
        )
    return float(sol.y[0, -1]), float(sol.y[1, -1])


def flow_g_batch(beta_vec, g0, lam, cfg=None):
    """Flow an array of couplings by the same parameter in one system.

    ``beta_vec`` must accept numpy arrays.  Error control is applied to
    the stacked state, which is at least as strict per sample as the
    scalar route; used for randomized-sweep checks where thousands of
    scalar integrations would dominate runtime.
    """
    cfg = cfg or IntegratorConfig()
    g0 = np.asarray(g0, dtype=float)
    if lam == 0:
        return g0.copy()

    def escape(_t, y):
        return cfg.blowup_bound - np.max(np.abs(y))

    escape.terminal = True
    sol = solve_ivp(
        lambda _t, y: beta_vec(y),
        (0.0, lam),
        g0,
        method=cfg.method,
        rtol=cfg.rel_tol,
        atol=cfg.abs_tol,
        events=escape,
    )
    if sol.status != 0:
        raise BlowUp("batched coupling flow diverged", lambda_reached=float(sol.t[-1]))
    return sol.y[:, -1]


def _domain_limited(cfg, b):
    return _replace_bound(cfg, min(cfg.blowup_bound, b.bound()))


def _replace_bound(cfg, bound):
    return IntegratorConfig(
        rel_tol=cfg.rel_tol,
        abs_tol=cfg.abs_tol,
        max_step=cfg.max_step,
        max_steps=cfg.max_steps,
        blowup_bound=bound,
        method=cfg.method,
    )
