"""Airy Ai and Scorer Gi evaluators with independent quadrature oracles.

Ai, Bi (and derivatives) come from the convergent Maclaurin series for
|mu| <= 8 and from the standard large-|mu| expansions beyond.  Gi solves
its defining inhomogeneous equation y'' - mu y = -1/pi, integrated from
series initial data at 0.  Marching toward positive mu unavoidably picks
up a parasitic multiple of the exponentially growing homogeneous
solution; the multiple is identified at mu = 12.5 against the algebraic
tail 1/(pi mu) expansion and subtracted, which restores uniform accuracy
up to the handover point at mu = 12 where the tail expansion itself
(smallest-term truncation well below 1e-12 there) takes over.

The cross-check oracle evaluates the defining oscillatory integrals

    q1 = integral_0^inf cos(mu s + s^3/3) ds = pi Ai(mu)
    q2 = integral_0^inf sin(mu s + s^3/3) ds = pi Gi(mu)

by panelled Gauss-Legendre quadrature with an integration-by-parts tail,
optionally under exponential regularization e^(-delta s) with delta -> 0
extrapolation.

Documented accuracy window: mu in [-20, 20], absolute error ~1e-10.
"""

import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import gamma

from ..errors import AccuracyWindowExceeded

_WINDOW = 20.0
_SERIES_EDGE = 8.0
_GI_TAIL_EDGE = 12.0  # algebraic tail expansion takes over here
_NEG_FAR = 20.5  # negative-side integration endpoint
_FAR = 12.5  # parasitic-mode calibration point for the Gi march

_C1 = 3.0 ** (-2.0 / 3.0) / gamma(2.0 / 3.0)  # Ai(0)
_C2 = 3.0 ** (-1.0 / 3.0) / gamma(1.0 / 3.0)  # -Ai'(0)
_GI0 = 1.0 / (3.0 ** (7.0 / 6.0) * gamma(2.0 / 3.0))  # Gi(0)
_GI0P = 1.0 / (3.0 ** (5.0 / 6.0) * gamma(1.0 / 3.0))  # Gi'(0)

_GL_N, _GL_W = np.polynomial.legendre.leggauss(12)


def _check_window(mu):
    if abs(mu) > _WINDOW:
        raise AccuracyWindowExceeded(
            f"mu={mu:g} outside the documented window [-{_WINDOW:g}, {_WINDOW:g}]"
        )


def _maclaurin(z):
    """(f, g, f', g') of the two Airy basis series at z."""
    if z == 0.0:
        return 1.0, 0.0, 0.0, 1.0
    z3 = z**3
    f = tf = 1.0
    g = tg = z
    fp = 0.0
    gp = 1.0
    for k in range(1, 200):
        tf *= z3 / (3 * k * (3 * k - 1))
        tg *= z3 / ((3 * k + 1) * (3 * k))
        f += tf
        g += tg
        fp += tf * 3 * k / z
        gp += tg * (3 * k + 1) / z
        if abs(tf) < 1e-18 * abs(f) and abs(tg) < 1e-18 * abs(g):
            break
    return f, g, fp, gp


def _asym_uv(zeta, alternate):
    """Partial sums of the u- and v-coefficient series in 1/zeta,
    truncated at the smallest term."""
    su = sv = 1.0
    u = v = 1.0
    power = 1.0
    prev = math.inf
    for k in range(1, 40):
        u *= (6 * k - 1) * (6 * k - 3) * (6 * k - 5) / (216.0 * k * (2 * k - 1))
        v = u * (6 * k + 1) / (1.0 - 6 * k)
        power /= zeta
        term_u = u * power
        if abs(term_u) >= prev:
            break
        prev = abs(term_u)
        sign = (-1.0) ** k if alternate else 1.0
        su += sign * term_u
        sv += sign * v * power
    return su, sv


def _asym_uv_oscillatory(zeta):
    """Even/odd split of the u/v series for the oscillatory region."""
    us = [1.0]
    vs = [1.0]
    u = 1.0
    for k in range(1, 24):
        u *= (6 * k - 1) * (6 * k - 3) * (6 * k - 5) / (216.0 * k * (2 * k - 1))
        us.append(u)
        vs.append(u * (6 * k + 1) / (1.0 - 6 * k))
    se_u = so_u = se_v = so_v = 0.0
    for k in range(0, 12):
        p_even = zeta ** (-2.0 * k)
        p_odd = zeta ** (-2.0 * k - 1.0)
        if 2 * k < len(us):
            se_u += (-1.0) ** k * us[2 * k] * p_even
            se_v += (-1.0) ** k * vs[2 * k] * p_even
        if 2 * k + 1 < len(us):
            so_u += (-1.0) ** k * us[2 * k + 1] * p_odd
            so_v += (-1.0) ** k * vs[2 * k + 1] * p_odd
    return se_u, so_u, se_v, so_v


def _airy_all(z):
    """(Ai, Ai', Bi, Bi') by series or asymptotics, no window check."""
    if abs(z) <= _SERIES_EDGE:
        f, g, fp, gp = _maclaurin(z)
        ai = _C1 * f - _C2 * g
        aip = _C1 * fp - _C2 * gp
        bi = math.sqrt(3.0) * (_C1 * f + _C2 * g)
        bip = math.sqrt(3.0) * (_C1 * fp + _C2 * gp)
        return ai, aip, bi, bip
    if z > 0:
        zeta = (2.0 / 3.0) * z**1.5
        su_a, sv_a = _asym_uv(zeta, alternate=True)
        su_b, sv_b = _asym_uv(zeta, alternate=False)
        root = z**0.25
        pref = math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * root)
        ai = pref * su_a
        aip = -(root * math.exp(-zeta) / (2.0 * math.sqrt(math.pi))) * sv_a
        bi = math.exp(zeta) / (math.sqrt(math.pi) * root) * su_b
        bip = root * math.exp(zeta) / math.sqrt(math.pi) * sv_b
        return ai, aip, bi, bip
    w = -z
    zeta = (2.0 / 3.0) * w**1.5
    se_u, so_u, se_v, so_v = _asym_uv_oscillatory(zeta)
    root = w**0.25
    c = math.cos(zeta - 0.25 * math.pi)
    s = math.sin(zeta - 0.25 * math.pi)
    ai = (c * se_u + s * so_u) / (math.sqrt(math.pi) * root)
    aip = root / math.sqrt(math.pi) * (s * se_v - c * so_v)
    bi = (-s * se_u + c * so_u) / (math.sqrt(math.pi) * root)
    bip = root / math.sqrt(math.pi) * (c * se_v + s * so_v)
    return ai, aip, bi, bip


def airy_ai(mu):
    """Ai(mu) on the documented window."""
    _check_window(mu)
    return _airy_all(mu)[0]


def airy_ai_prime(mu):
    _check_window(mu)
    return _airy_all(mu)[1]


def airy_bi(mu):
    _check_window(mu)
    return _airy_all(mu)[2]


def airy_bi_prime(mu):
    _check_window(mu)
    return _airy_all(mu)[3]


def _gi_asymptotic(z):
    """(Gi, Gi') from the algebraic tail expansion, smallest-term cut."""
    s = 1.0
    sp = 1.0  # sum for the derivative carries (3k+1) weights
    term = 1.0
    prev = math.inf
    for k in range(1, 30):
        term *= (3 * k) * (3 * k - 1) * (3 * k - 2) / (3.0 * z**3 * k)
        if abs(term) >= prev:
            break
        prev = abs(term)
        s += term
        sp += term * (3 * k + 1)
    gi = s / (math.pi * z)
    gip = -sp / (math.pi * z * z)
    return gi, gip


_gi_cache = {}


def _gi_dense():
    """Dense Gi solutions on [-FAR, 0] and [0, FAR], parasitic Bi mode
    removed on the positive side."""
    if _gi_cache:
        return _gi_cache
    rhs = lambda mu, y: [y[1], mu * y[0] - 1.0 / math.pi]
    y0 = [_GI0, _GI0P]
    neg = solve_ivp(
        rhs, (0.0, -_NEG_FAR), y0, method="DOP853", rtol=1e-12, atol=1e-14,
        dense_output=True,
    )
    pos = solve_ivp(
        rhs, (0.0, _FAR), y0, method="DOP853", rtol=1e-12, atol=1e-14,
        dense_output=True,
    )
    gi_far, _gip_far = _gi_asymptotic(_FAR)
    bi_far = _airy_all(_FAR)[2]
    eps = (float(pos.sol(_FAR)[0]) - gi_far) / bi_far
    _gi_cache["neg"] = neg.sol
    _gi_cache["pos"] = pos.sol
    _gi_cache["eps"] = eps
    return _gi_cache


def scorer_gi(mu):
    """Scorer function Gi(mu): the particular solution of
    y'' - mu y = -1/pi that decays algebraically as mu -> +inf."""
    return _scorer(mu)[0]


def scorer_gi_prime(mu):
    return _scorer(mu)[1]


def _scorer(mu):
    _check_window(mu)
    if mu >= _GI_TAIL_EDGE:
        return _gi_asymptotic(mu)
    cache = _gi_dense()
    if mu < 0:
        y = cache["neg"](mu)
        return float(y[0]), float(y[1])
    y = cache["pos"](mu)
    _, aip, bi, bip = _airy_all(mu)
    eps = cache["eps"]
    return float(y[0]) - eps * bi, float(y[1]) - eps * bip


# --- quadrature oracle -------------------------------------------------


def _phase_tail(mu, X, delta):
    """Integration-by-parts tail of int_X^inf e^(i(mu s + s^3/3) - delta s)
    using two boundary terms (third-term magnitude ~ phase'^-3)."""
    phi = mu * X + X**3 / 3.0
    dphi = mu + X * X
    d2phi = 2.0 * X
    gX = math.exp(-delta * X)
    inv = 1.0 / (1j * dphi)
    a0 = gX * inv
    d_a0 = (-delta * gX - gX * d2phi / dphi) * inv  # (g/(i phi'))'
    tail = -np.exp(1j * phi) * (a0 - d_a0 * inv)
    return tail


def oscillatory_pair(mu, delta=0.0, X=45.0, panels_per_unit=None):
    """(q1, q2) = int_0^inf (cos, sin)(mu s + s^3/3) e^(-delta s) ds.

    Panelled 12-point Gauss-Legendre up to X (panel width tracks the
    local oscillation wavelength), then an integration-by-parts tail.
    """
    # panel width ~ quarter wavelength of the fastest local oscillation
    s_edges = [0.0]
    s = 0.0
    while s < X:
        dphi = abs(mu) + s * s + 1.0
        step = min(1.5 / dphi**0.5 if s * s < abs(mu) else 3.0 / dphi, 0.5)
        s = min(X, s + max(step, 1e-3))
        s_edges.append(s)
    edges = np.asarray(s_edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    ss = (mid[:, None] + half[:, None] * _GL_N[None, :]).ravel()
    ww = (half[:, None] * _GL_W[None, :]).ravel()
    phase = mu * ss + ss**3 / 3.0
    damp = np.exp(-delta * ss) if delta else 1.0
    main = np.sum(ww * damp * np.exp(1j * phase))
    total = main + _phase_tail(mu, X, delta)
    return float(total.real), float(total.imag)


def oscillatory_pair_extrapolated(mu, deltas=(0.2, 0.1, 0.05, 0.025)):
    """delta -> 0 Richardson extrapolation of the regularized integrals."""
    vals = np.array([oscillatory_pair(mu, delta=d) for d in deltas])
    out = []
    for col in range(2):
        coeffs = np.polyfit(np.asarray(deltas), vals[:, col], len(deltas) - 1)
        out.append(float(np.polyval(coeffs, 0.0)))
    return tuple(out)
