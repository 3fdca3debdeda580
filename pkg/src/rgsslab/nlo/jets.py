"""Truncated Taylor-series (jet) arithmetic.

A Jet holds the coefficients of a function's Taylor expansion around a
base point.  Elementary operations propagate the coefficients exactly,
so nested closed-form expressions (arccosh(1/sqrt(n)), sqrt(-log n), ...)
yield machine-accurate high-order derivatives without symbolic algebra.
Differentiation shifts coefficients down and shortens the jet by one
order, which is exactly the bookkeeping the power-series solver needs.
"""

import math

import numpy as np


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = np.asarray(coeffs, dtype=float)

    @classmethod
    def variable(cls, x0, order):
        c = np.zeros(order + 1)
        c[0] = x0
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def const(cls, value, order):
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c)

    @property
    def order(self):
        return len(self.c) - 1

    def _coerce(self, other):
        if isinstance(other, Jet):
            m = min(len(self.c), len(other.c))
            return self.c[:m], other.c[:m]
        c = np.zeros_like(self.c)
        c[0] = float(other)
        return self.c, c

    def __add__(self, other):
        a, b = self._coerce(other)
        return Jet(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Jet(a - b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return Jet(b - a)

    def __neg__(self):
        return Jet(-self.c)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c * float(other))
        m = min(len(self.c), len(other.c))
        a, b = self.c[:m], other.c[:m]
        out = np.zeros(m)
        for i in range(m):
            if a[i] != 0.0:
                out[i:] += a[i] * b[: m - i]
        return Jet(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.c / float(other))
        m = min(len(self.c), len(other.c))
        a, b = self.c[:m], other.c[:m]
        out = np.zeros(m)
        for k in range(m):
            out[k] = (a[k] - np.dot(out[:k], b[k:0:-1])) / b[0]
        return Jet(out)

    def __rtruediv__(self, other):
        return Jet.const(float(other), self.order) / self

    def sqrt(self):
        out = np.zeros_like(self.c)
        out[0] = math.sqrt(self.c[0])
        for k in range(1, len(out)):
            s = self.c[k] - np.dot(out[1:k], out[k - 1 : 0 : -1])
            out[k] = s / (2.0 * out[0])
        return Jet(out)

    def log(self):
        out = np.zeros_like(self.c)
        out[0] = math.log(self.c[0])
        q = self.deriv() / self  # (log a)' = a'/a, one order shorter
        for k in range(1, len(out)):
            if k - 1 < len(q.c):
                out[k] = q.c[k - 1] / k
        return Jet(out)

    def exp(self):
        out = np.zeros_like(self.c)
        out[0] = math.exp(self.c[0])
        # e' = a' e: k e_k = sum_{j=1..k} j a_j e_{k-j}
        for k in range(1, len(out)):
            out[k] = (
                np.dot(np.arange(1, k + 1) * self.c[1 : k + 1], out[k - 1 :: -1][:k])
                / k
            )
        return Jet(out)

    def deriv(self):
        """Jet of the derivative (one order shorter)."""
        n = len(self.c) - 1
        return Jet(np.arange(1, n + 1) * self.c[1:])

    def value(self):
        return float(self.c[0])

    def d(self, k):
        """k-th derivative at the base point."""
        if k >= len(self.c):
            raise ValueError(f"jet order {self.order} < requested derivative {k}")
        return float(self.c[k]) * math.factorial(k)
