"""Vector fields (infinitesimal operators) on the extended group space.

A field is a list of named coefficient functions; flowing it by the group
parameter integrates the Lie equations d(coord)/dlambda = coefficient.
Coefficients are autonomous in the group parameter: they see the current
Point only.
"""

from .points import Point


class VectorField:
    """Infinitesimal operator sum_i coeff_i(point) * d/d(name_i)."""

    def __init__(self, coefficients, param_name="lambda"):
        """coefficients: mapping or iterable of (name, callable Point->float)."""
        if isinstance(coefficients, dict):
            items = list(coefficients.items())
        else:
            items = list(coefficients)
        self._coeffs = dict(items)
        self._names = [name for name, _ in items]
        self.param_name = param_name
        if param_name in self._coeffs:
            raise ValueError("field must be autonomous in its group parameter")

    @property
    def names(self):
        """Coordinate names the field moves, in declaration order."""
        return list(self._names)

    def coefficient(self, name):
        return self._coeffs[name]

    def __contains__(self, name):
        return name in self._coeffs

    def eval(self, point):
        """Coefficient values at a point, ordered like ``names``."""
        return [self._coeffs[n](point) for n in self._names]

    def apply(self, point, partials):
        """Directional derivative sum_i coeff_i(point) * partials[name_i].

        ``partials`` maps coordinate names to derivative values; names the
        field does not move are ignored by construction.
        """
        return sum(self._coeffs[n](point) * partials[n] for n in self._names)

    def __add__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        coeffs = {}
        for name in self._names + [n for n in other._names if n not in self._coeffs]:
            f = self._coeffs.get(name)
            g = other._coeffs.get(name)
            if f is None:
                coeffs[name] = g
            elif g is None:
                coeffs[name] = f
            else:
                coeffs[name] = _summed(f, g)
        return VectorField(coeffs, param_name=self.param_name)

    def scaled(self, factor):
        """Field with every coefficient multiplied by a constant."""
        return VectorField(
            {n: _scaled(c, factor) for n, c in self._coeffs.items()},
            param_name=self.param_name,
        )

    def __neg__(self):
        return self.scaled(-1.0)


def _summed(f, g):
    return lambda p: f(p) + g(p)


def _scaled(f, k):
    return lambda p: k * f(p)


def constant_field(**rates):
    """Field whose coefficients are constants (translations/scalings)."""
    return VectorField({n: (lambda p, v=v: v) for n, v in rates.items()})


def translation(name):
    """Unit translation field along one coordinate."""
    return constant_field(**{name: 1.0})
