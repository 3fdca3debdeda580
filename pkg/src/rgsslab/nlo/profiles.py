"""Transverse beam-intensity profiles and their derived quantities.

Each profile supplies N(x) (with N(0) maximal, monotone on x >= 0), the
hodograph boundary map H = N^-1 restricted to x >= 0, and the combined
refraction/diffraction source

    S(chi) = alpha N(chi) + beta / (chi sqrt(N)) d/dchi (chi d/dchi sqrt(N))

whose chi = 0 singularity is removable for smooth even profiles.  The
built-ins carry closed forms; the table profile falls back to splines,
bisection inversion and a small-|chi| Taylor patch.
"""

import math

import numpy as np

from ..errors import NotInvertible, SingularProfile
from .jets import Jet

_CHI_PATCH = 1e-3


class Sech2Beam:
    """N(x) = cosh^-2(x): the soliton-like profile."""

    name = "sech2"
    analytic_jets = True

    def N(self, x):
        return 1.0 / np.cosh(x) ** 2

    def H(self, n):
        self._check_n(n)
        return math.acosh(1.0 / math.sqrt(n))

    def H_prime(self, n):
        self._check_n(n)
        return -1.0 / (2.0 * n * math.sqrt(1.0 - n))

    def H_jet(self, n0, order):
        n = Jet.variable(n0, order)
        return (1.0 / n.sqrt() + (1.0 / n - 1.0).sqrt()).log()

    def S(self, chi, alpha, beta):
        # beta part: tanh^2 - sech^2 - tanh(chi)/chi, removable at 0
        sech2 = 1.0 / math.cosh(chi) ** 2
        if abs(chi) < _CHI_PATCH:
            ratio = 1.0 - chi**2 / 3.0 + 2.0 * chi**4 / 15.0
        else:
            ratio = math.tanh(chi) / chi
        return alpha * sech2 + beta * ((1.0 - sech2) - sech2 - ratio)

    def S_chi(self, chi, alpha, beta):
        sech2 = 1.0 / math.cosh(chi) ** 2
        th = math.tanh(chi)
        d_sech2 = -2.0 * sech2 * th
        if abs(chi) < _CHI_PATCH:
            d_ratio = -2.0 * chi / 3.0 + 8.0 * chi**3 / 15.0
        else:
            d_ratio = (sech2 * chi - th) / chi**2
        return alpha * d_sech2 + beta * (-2.0 * d_sech2 - d_ratio)

    def S_chichi(self, chi, alpha, beta):
        sech2 = 1.0 / math.cosh(chi) ** 2
        th = math.tanh(chi)
        d2_sech2 = sech2 * (4.0 * th * th - 2.0 * sech2)
        if abs(chi) < _CHI_PATCH:
            d2_ratio = -2.0 / 3.0 + 24.0 * chi**2 / 15.0
        else:
            d2_ratio = (-sech2 * 2.0 * th * chi * chi - 2.0 * chi * sech2 + 2.0 * th) / chi**3
        return alpha * d2_sech2 + beta * (-2.0 * d2_sech2 - d2_ratio)

    @staticmethod
    def _check_n(n):
        if not 0.0 < n <= 1.0:
            raise ValueError(f"intensity n={n:g} outside (0, 1]")


class GaussianBeam:
    """N(x) = exp(-x^2)."""

    name = "gaussian"
    analytic_jets = True

    def N(self, x):
        return np.exp(-np.asarray(x) ** 2)

    def H(self, n):
        Sech2Beam._check_n(n)
        return math.sqrt(-math.log(n))

    def H_prime(self, n):
        Sech2Beam._check_n(n)
        return -1.0 / (2.0 * n * math.sqrt(-math.log(n)))

    def H_jet(self, n0, order):
        n = Jet.variable(n0, order)
        return (-n.log()).sqrt()

    # sqrt(N) = exp(-chi^2/2): the diffraction term collapses to
    # beta (chi^2 - 2) with no singular part
    def S(self, chi, alpha, beta):
        return alpha * math.exp(-(chi**2)) + beta * (chi * chi - 2.0)

    def S_chi(self, chi, alpha, beta):
        return -2.0 * chi * alpha * math.exp(-(chi**2)) + 2.0 * beta * chi

    def S_chichi(self, chi, alpha, beta):
        return alpha * (4.0 * chi * chi - 2.0) * math.exp(-(chi**2)) + 2.0 * beta


class TableBeam:
    """Profile interpolated from (x, N) samples on x >= 0 (mirrored even)."""

    name = "table"
    analytic_jets = False

    def __init__(self, xs, ns):
        from scipy.interpolate import CubicSpline

        xs = np.asarray(xs, dtype=float)
        ns = np.asarray(ns, dtype=float)
        if xs[0] != 0.0:
            raise ValueError("table must start at x = 0")
        if np.any(np.diff(ns) >= 0):
            raise NotInvertible("table profile must decrease strictly on x >= 0")
        if np.any(ns <= 0):
            raise SingularProfile("table profile must stay positive")
        self._xs = xs
        self._ns = ns
        self._spline = CubicSpline(xs, ns, bc_type=((1, 0.0), "not-a-knot"))

    @classmethod
    def from_path(cls, path):
        data = np.loadtxt(path)
        return cls(data[:, 0], data[:, 1])

    def N(self, x):
        ax = np.abs(np.asarray(x, dtype=float))
        return self._spline(np.clip(ax, 0.0, self._xs[-1]))

    def H(self, n):
        if not self._ns[-1] <= n <= self._ns[0]:
            raise NotInvertible(f"n={n:g} outside the tabulated range")
        lo, hi = 0.0, self._xs[-1]
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if float(self._spline(mid)) > n:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def H_prime(self, n, h=1e-6):
        return (self.H(n + h) - self.H(n - h)) / (2.0 * h)

    def _sqrtN_derivs(self, chi):
        r = self._spline
        ax = abs(chi)
        n, n1, n2 = float(r(ax)), float(r(ax, 1)), float(r(ax, 2))
        if chi < 0:
            n1 = -n1
        s = math.sqrt(n)
        s1 = n1 / (2.0 * s)
        s2 = n2 / (2.0 * s) - n1 * n1 / (4.0 * n * s)
        return s, s1, s2

    def S(self, chi, alpha, beta):
        if abs(chi) < _CHI_PATCH:
            # even profile: sqrt(N)' vanishes at 0, patch via Taylor
            s, _s1, s2 = self._sqrtN_derivs(_CHI_PATCH)
            s0 = math.sqrt(float(self._spline(0.0)))
            return alpha * float(self.N(chi)) + beta * 2.0 * s2 / s0
        s, s1, s2 = self._sqrtN_derivs(chi)
        return alpha * float(self.N(chi)) + beta * (s2 + s1 / chi) / s

    def S_chi(self, chi, alpha, beta, h=1e-4):
        return (self.S(chi + h, alpha, beta) - self.S(chi - h, alpha, beta)) / (2 * h)

    def S_chichi(self, chi, alpha, beta, h=1e-4):
        return (
            self.S(chi + h, alpha, beta)
            - 2.0 * self.S(chi, alpha, beta)
            + self.S(chi - h, alpha, beta)
        ) / h**2


def make_profile(name, **kw):
    if name == "sech2":
        return Sech2Beam()
    if name == "gaussian":
        return GaussianBeam()
    if name == "table":
        if "path" in kw:
            return TableBeam.from_path(kw["path"])
        return TableBeam(kw["xs"], kw["ns"])
    raise ValueError(f"unknown profile {name!r}")
