"""Reduced plasma-resonance model and its parameter-translation symmetry.

System (nondimensional units omega = L = Delta = 1, so epsilon = a):

    v_t + a v v_x - E = 0,    E_t + a v E_x + v = 0.

The exact field structure is parametric over the reference coordinate mu:

    E = -(q1 sin t + q2 cos t),  v = q1 cos t - q2 sin t,
    x = mu + a (q1 sin t + q2 cos t) = mu - a E,

i.e. the finite flow of the operator -E d/dx + d/da applied to the
linear-resonance solution.  Profile pairs: cold plasma
q = (1, mu)/(1 + mu^2); hot plasma q = pi (Ai(mu), Gi(mu)).

Physical-unit reconstruction multiplies E by (omega L)^2/Delta, v by
omega L^2/Delta and rescales x, mu by Delta.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import FoldEncountered
from ..core import NumDiffConfig, SolutionSampler, VectorField, diff_scalar
from .airy import airy_ai, airy_ai_prime, scorer_gi, scorer_gi_prime


@dataclass(frozen=True)
class PlasmaConfig:
    regime: str = "hot"
    a: float = 0.1

    def __post_init__(self):
        if self.regime not in ("cold", "hot"):
            raise ValueError("regime must be 'cold' or 'hot'")
        if self.a < 0:
            raise ValueError("a must be >= 0")


def q_cold(mu):
    """(q1, q2) = (1, mu) / (1 + mu^2)."""
    d = 1.0 + mu * mu
    return 1.0 / d, mu / d


def q_cold_prime(mu):
    d = 1.0 + mu * mu
    return -2.0 * mu / d**2, (1.0 - mu * mu) / d**2


def q_hot(mu):
    """(q1, q2) = pi (Ai(mu), Gi(mu)), the cubic-phase integrals."""
    return math.pi * airy_ai(mu), math.pi * scorer_gi(mu)


def q_hot_prime(mu):
    return math.pi * airy_ai_prime(mu), math.pi * scorer_gi_prime(mu)


def q_pair(cfg, mu):
    return q_cold(mu) if cfg.regime == "cold" else q_hot(mu)


def q_pair_prime(cfg, mu):
    return q_cold_prime(mu) if cfg.regime == "cold" else q_hot_prime(mu)


def parametric_solution(cfg, mu, t):
    """(x, v, E) at parameter mu and time t."""
    q1, q2 = q_pair(cfg, mu)
    s, c = math.sin(t), math.cos(t)
    E = -(q1 * s + q2 * c)
    v = q1 * c - q2 * s
    x = mu + cfg.a * (q1 * s + q2 * c)
    return x, v, E


def x_mu(cfg, mu, t):
    """d x / d mu at fixed t; vanishing signals breaking (a fold)."""
    q1p, q2p = q_pair_prime(cfg, mu)
    return 1.0 + cfg.a * (q1p * math.sin(t) + q2p * math.cos(t))


def pde_residual(cfg, mu, t, nd=None, fold_floor=0.1):
    """Residuals of both model equations on the parametric solution.

    Physical-space derivatives come from the chain rule through the
    mu -> x map with analytic profile derivatives:
        v_x = v_mu / x_mu,  v_t|_x = v_t|_mu - v_mu x_t|_mu / x_mu.
    """
    q1, q2 = q_pair(cfg, mu)
    q1p, q2p = q_pair_prime(cfg, mu)
    s, c = math.sin(t), math.cos(t)
    E = -(q1 * s + q2 * c)
    v = q1 * c - q2 * s
    xm = 1.0 + cfg.a * (q1p * s + q2p * c)
    if abs(xm) < fold_floor:
        raise FoldEncountered(f"x_mu = {xm:.3g} at mu={mu:g}, t={t:g}")
    v_mu = q1p * c - q2p * s
    E_mu = -(q1p * s + q2p * c)
    x_t = cfg.a * (q1 * c - q2 * s)  # = a v
    v_t_at_mu = -(q1 * s + q2 * c)  # = E
    E_t_at_mu = -(q1 * c - q2 * s)  # = -v
    v_x = v_mu / xm
    E_x = E_mu / xm
    v_t = v_t_at_mu - v_mu * x_t / xm
    E_t = E_t_at_mu - E_mu * x_t / xm
    r1 = v_t + cfg.a * v * v_x - E
    r2 = E_t + cfg.a * v * E_x + v
    return r1, r2


def invert_parametric(cfg, x, t, interval=None, scan_points=2000):
    """All roots mu of x(mu) = x in the search interval, increasing.

    Sign-scan plus bisection; an empty list means no branch crosses the
    requested x there.
    """
    if interval is None:
        pad = 4.0 * max(cfg.a, 0.25)
        interval = (x - pad, x + pad)
    lo, hi = interval
    mus = np.linspace(lo, hi, scan_points)

    def h(mu):
        q1, q2 = q_pair(cfg, mu)
        return mu + cfg.a * (q1 * math.sin(t) + q2 * math.cos(t)) - x

    vals = np.array([h(m) for m in mus])
    roots = []
    for i in range(len(mus) - 1):
        if vals[i] == 0.0:
            roots.append(mus[i])
            continue
        if vals[i] * vals[i + 1] < 0.0:
            a_, b_ = mus[i], mus[i + 1]
            fa = vals[i]
            for _ in range(80):
                m = 0.5 * (a_ + b_)
                fm = h(m)
                if fa * fm <= 0.0:
                    b_ = m
                else:
                    a_, fa = m, fm
                if b_ - a_ < 1e-14 * max(1.0, abs(m)):
                    break
            roots.append(0.5 * (a_ + b_))
    if vals[-1] == 0.0:
        roots.append(mus[-1])
    return roots


def _invert_single(cfg, x, t, fold_floor):
    """Unique off-fold root of x(mu) = x by contraction + Newton polish.

    mu = x - a (q1 sin t + q2 cos t)(mu) is a contraction whenever
    a |q'| sqrt(2) < 1, which is exactly the single-valued regime."""
    s, c = math.sin(t), math.cos(t)
    mu = x
    converged = False
    for _ in range(200):
        q1, q2 = q_pair(cfg, mu)
        nxt = x - cfg.a * (q1 * s + q2 * c)
        if abs(nxt - mu) < 1e-14 * max(1.0, abs(nxt)):
            mu = nxt
            converged = True
            break
        mu = nxt
    if not converged:
        roots = invert_parametric(cfg, x, t)
        if len(roots) != 1:
            raise FoldEncountered(f"{len(roots)} branches at x={x:g}, t={t:g}")
        mu = roots[0]
    for _ in range(3):
        q1, q2 = q_pair(cfg, mu)
        q1p, q2p = q_pair_prime(cfg, mu)
        h = mu + cfg.a * (q1 * s + q2 * c) - x
        hp = 1.0 + cfg.a * (q1p * s + q2p * c)
        if abs(hp) < fold_floor:
            raise FoldEncountered(f"near-fold (x_mu={hp:.3g}) at mu={mu:g}")
        mu -= h / hp
    return mu


def field_sampler(cfg, nd=None, fold_floor=0.1):
    """(v, E) as functions of Point(t, x, a) via parametric inversion.

    Raises FoldEncountered when the inversion is not single-valued or the
    Jacobian drops below fold_floor."""

    def value(p):
        local = PlasmaConfig(regime=cfg.regime, a=p["a"])
        mu = _invert_single(local, p["x"], p["t"], fold_floor)
        _, v, E = parametric_solution(local, mu, p["t"])
        return v, E

    return SolutionSampler(value, dependents=("v", "E"), nd=nd or NumDiffConfig())


def fs_residual_r8(cfg, sol, p, nd=None):
    """(v_a - E v_x, E_a - E E_x): invariance under -E d/dx + d/da."""
    v, E = sol.value(p)
    v_a = sol.partial(p, "a", dep=0, order=1)
    v_x = sol.partial(p, "x", dep=0, order=1)
    E_a = sol.partial(p, "a", dep=1, order=1)
    E_x = sol.partial(p, "x", dep=1, order=1)
    return v_a - E * v_x, E_a - E * E_x


def r8_field():
    """The restricted operator -E d/dx + d/da as a flowable field."""
    return VectorField({"x": lambda p: -p["E"], "a": lambda p: 1.0})


def energy_invariant(cfg, mu, t):
    """v^2 + E^2 - (q1^2 + q2^2); identically zero in exact arithmetic."""
    q1, q2 = q_pair(cfg, mu)
    _, v, E = parametric_solution(cfg, mu, t)
    return v * v + E * E - (q1 * q1 + q2 * q2)
