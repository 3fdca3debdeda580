"""Modified Burgers boundary-value problem u_t = a u_x^2 + nu u_xx.

The solution of the Cauchy problem with u(0, x) = f(x) is
u = (nu/a) ln <<1>>, where <<F>> convolves F with the heat kernel times
exp(a f / nu):

    <<F>>(t, x) = (4 pi nu t)^(-1/2) * integral F(y)
                  * exp(-(x-y)^2 / (4 nu t) + a f(y) / nu) dy.

Two invariance residuals certify the solution: the a-translation one
(operator R5) and the t-translation one (R6).  An explicit
finite-difference march provides the independent oracle, and the linear
parabolic equation on the infinite-ideal coordinate alpha has its own
residual check.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainTooNarrow, StabilityViolation, TruncationWarning
from .core import NumDiffConfig, SolutionSampler, diff_scalar

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


class GaussianProfile:
    """f(x) = amplitude * exp(-((x - center)/width)^2)."""

    def __init__(self, amplitude=1.0, width=1.0, center=0.0):
        self.amplitude = amplitude
        self.width = width
        self.center = center
        self.radius = abs(center) + 7.0 * width

    def __call__(self, x):
        z = (np.asarray(x) - self.center) / self.width
        return self.amplitude * np.exp(-(z**2))

    def dx(self, x):
        z = (np.asarray(x) - self.center) / self.width
        return self.amplitude * np.exp(-(z**2)) * (-2.0 * z / self.width)

    def dxx(self, x):
        z = (np.asarray(x) - self.center) / self.width
        return (
            self.amplitude
            * np.exp(-(z**2))
            * (4.0 * z**2 - 2.0)
            / self.width**2
        )


class ConstantProfile:
    """f(x) = c0."""

    def __init__(self, c0=0.0):
        self.c0 = c0
        self.radius = 0.0

    def __call__(self, x):
        return np.full_like(np.asarray(x, dtype=float), self.c0)

    def dx(self, x):
        return np.zeros_like(np.asarray(x, dtype=float))

    def dxx(self, x):
        return np.zeros_like(np.asarray(x, dtype=float))


class TableProfile:
    """Profile from sampled (x, f) pairs, cubic-spline interpolated."""

    def __init__(self, xs, fs):
        from scipy.interpolate import CubicSpline

        xs = np.asarray(xs, dtype=float)
        fs = np.asarray(fs, dtype=float)
        self._spline = CubicSpline(xs, fs, bc_type="natural")
        self._lo, self._hi = xs[0], xs[-1]
        self.radius = max(abs(self._lo), abs(self._hi))

    @classmethod
    def from_path(cls, path):
        data = np.loadtxt(path)
        return cls(data[:, 0], data[:, 1])

    def _clipped(self, x):
        return np.clip(np.asarray(x, dtype=float), self._lo, self._hi)

    def __call__(self, x):
        return self._spline(self._clipped(x))

    def dx(self, x):
        return self._spline(self._clipped(x), 1)

    def dxx(self, x):
        return self._spline(self._clipped(x), 2)


@dataclass(frozen=True)
class BurgersProblem:
    a: float
    nu: float
    f: object  # profile: callable with .dx/.dxx/.radius

    def __post_init__(self):
        if self.nu <= 0:
            raise ValueError("nu must be positive")

    def with_a(self, a):
        return BurgersProblem(a=a, nu=self.nu, f=self.f)


@dataclass(frozen=True)
class QuadratureConfig:
    half_width_sigmas: float = 10.0
    nodes: int = 512

    def __post_init__(self):
        if self.half_width_sigmas < 6:
            raise ValueError("half_width_sigmas must be >= 6")
        if self.nodes < 64:
            raise ValueError("nodes must be >= 64")


def _window(t, x, prob, q):
    sigma_part = q.half_width_sigmas * math.sqrt(2.0 * prob.nu * t)
    radius = getattr(prob.f, "radius", None)
    if radius is None:
        return sigma_part
    # the exp(a f / nu) weight can pull the integrand peak away from x
    return max(sigma_part, radius + 8.0)


def convolve(F, t, x, prob, q=None):
    """<<F>>(t, x) by composite 16-point Gauss-Legendre on a truncated
    window centered at x.

    Emits TruncationWarning when the integrand at the window edges is
    above 1e-14 of its peak.
    """
    q = q or QuadratureConfig()
    if t <= 0:
        raise ValueError("convolve needs t > 0")
    W = _window(t, x, prob, q)
    panels = max(4, q.nodes // 16)
    edges = np.linspace(x - W, x + W, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    ys = (mid[:, None] + half * _GL_NODES[None, :]).ravel()
    wts = np.tile(half * _GL_WEIGHTS, panels)

    expo = -((x - ys) ** 2) / (4.0 * prob.nu * t) + prob.a * np.asarray(
        prob.f(ys)
    ) / prob.nu
    vals = np.asarray(F(ys), dtype=float) * np.exp(expo)
    peak = np.max(np.abs(vals))
    if peak > 0:
        edge = max(abs(vals[0]), abs(vals[-1]))
        if edge > 1e-14 * peak:
            warnings.warn(
                f"integrand at window edge is {edge / peak:.2e} of peak",
                TruncationWarning,
                stacklevel=2,
            )
    norm = 1.0 / math.sqrt(4.0 * math.pi * prob.nu * t)
    return norm * float(np.dot(wts, vals))


def exact_solution(t, x, prob, q=None):
    """u(t, x) = (nu/a) ln <<1>>; f(x) itself at t = 0 (delta-kernel
    limit taken analytically), heat evolution of f in the a -> 0 limit."""
    q = q or QuadratureConfig()
    if t == 0:
        return float(prob.f(x))
    if prob.a == 0.0:
        return convolve(prob.f, t, x, prob, q)
    return (prob.nu / prob.a) * math.log(convolve(lambda y: np.ones_like(y), t, x, prob, q))


def heat_solution(t, x, nu, profile, q=None):
    """Plain heat evolution of a profile (reference for the a -> 0 limit)."""
    prob0 = BurgersProblem(a=0.0, nu=nu, f=profile)
    return exact_solution(t, x, prob0, q)


def exact_sampler(prob, q=None, nd=None):
    """SolutionSampler for u(t, x; a) built on the quadrature solution."""
    q = q or QuadratureConfig()

    def value(p):
        return exact_solution(p["t"], p["x"], prob.with_a(p["a"]), q)

    return SolutionSampler(value, dependents=("u",), nd=nd or NumDiffConfig())


class FDField:
    """Sampled explicit-scheme solution with bilinear interpolation."""

    def __init__(self, xs, ts, snapshots, nu, t_end):
        self.xs = xs
        self.ts = ts
        self.snapshots = snapshots
        self._margin = 8.0 * math.sqrt(nu * t_end) + 1.0

    def __call__(self, t, x):
        xs, ts = self.xs, self.ts
        if not (ts[0] <= t <= ts[-1] + 1e-12):
            raise ValueError(f"t={t:g} outside stored range")
        if x < xs[0] + self._margin or x > xs[-1] - self._margin:
            raise DomainTooNarrow(
                f"x={x:g} is within the boundary-influence margin "
                f"{self._margin:.3g} of the grid edge"
            )
        it = min(np.searchsorted(ts, t) if t > ts[0] else 1, len(ts) - 1)
        ix = min(np.searchsorted(xs, x) if x > xs[0] else 1, len(xs) - 1)
        wt = (t - ts[it - 1]) / (ts[it] - ts[it - 1])
        wx = (x - xs[ix - 1]) / (xs[ix] - xs[ix - 1])
        rows = self.snapshots
        v00 = rows[it - 1][ix - 1]
        v01 = rows[it - 1][ix]
        v10 = rows[it][ix - 1]
        v11 = rows[it][ix]
        return float(
            (1 - wt) * ((1 - wx) * v00 + wx * v01) + wt * ((1 - wx) * v10 + wx * v11)
        )


def fd_oracle(prob, x_span, t_end, dx, dt, snapshots=400):
    """Explicit march of u_t = a u_x^2 + nu u_xx: the brute-force oracle.

    Centered first derivative (squared) and centered second derivative;
    boundary values pinned to the initial profile.  dt must respect
    dt <= 0.4 * dx^2 / (2 nu).
    """
    bound = 0.4 * dx * dx / (2.0 * prob.nu)
    if dt > bound * (1 + 1e-12):
        raise StabilityViolation(f"dt={dt:g} exceeds stability bound {bound:g}")
    x0, x1 = x_span
    nx = int(round((x1 - x0) / dx)) + 1
    xs = np.linspace(x0, x1, nx)
    nt = int(math.ceil(t_end / dt))
    dt = t_end / nt
    u = np.asarray(prob.f(xs), dtype=float)

    stride = max(1, nt // snapshots)
    times = [0.0]
    rows = [u.copy()]
    inv_dx2 = 1.0 / (dx * dx)
    inv_2dx = 0.5 / dx
    for n in range(1, nt + 1):
        ux = (u[2:] - u[:-2]) * inv_2dx
        uxx = (u[2:] - 2.0 * u[1:-1] + u[:-2]) * inv_dx2
        u[1:-1] += dt * (prob.a * ux * ux + prob.nu * uxx)
        if n % stride == 0 or n == nt:
            times.append(n * dt)
            rows.append(u.copy())
    return FDField(xs, np.asarray(times), rows, prob.nu, t_end)


def fs_residual_r5(sol, p, prob, q=None, nd=None):
    """a-translation invariance defect:
    -u_a - u/a + (1/a) exp(-a u / nu) <<f>>."""
    q = q or QuadratureConfig()
    a = p["a"]
    prob_a = prob.with_a(a)
    u = sol.component(p)
    u_a = sol.partial(p, "a", order=1)
    conv_f = convolve(prob.f, p["t"], p["x"], prob_a, q)
    return -u_a - u / a + math.exp(-a * u / prob.nu) * conv_f / a


def fs_residual_r6(sol, p, prob, q=None, nd=None):
    """t-translation invariance defect:
    -u_t + exp(-a u / nu) <<a f_x^2 + nu f_xx>>."""
    q = q or QuadratureConfig()
    a = p["a"]
    prob_a = prob.with_a(a)
    u = sol.component(p)
    u_t = sol.partial(p, "t", order=1)
    f = prob.f

    def source(y):
        return a * np.asarray(f.dx(y)) ** 2 + prob.nu * np.asarray(f.dxx(y))

    conv = convolve(source, p["t"], p["x"], prob_a, q)
    return -u_t + math.exp(-a * u / prob.nu) * conv


def alpha_heat_residual(alpha, nu, p, nd=None):
    """alpha_t - nu alpha_xx for a candidate infinite-ideal coordinate."""
    nd = nd or NumDiffConfig()
    a_t = diff_scalar(lambda t: alpha(t, p["x"]), p["t"], order=1, nd=nd)
    a_xx = diff_scalar(lambda x: alpha(p["t"], x), p["x"], order=2, nd=nd)
    return a_t - nu * a_xx


def heat_kernel(t, x, nu):
    """Fundamental solution of alpha_t = nu alpha_xx."""
    return math.exp(-x * x / (4.0 * nu * t)) / math.sqrt(4.0 * math.pi * nu * t)
