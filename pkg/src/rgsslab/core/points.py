"""Named points of the extended group space.

A Point assigns real values to named variables.  Independent variables,
dependent variables and equation parameters all live in the same space,
so operators built by different model modules compose without any index
bookkeeping.
"""

import math
from collections.abc import Mapping


class Point(Mapping):
    """Immutable ordered map from variable name to a finite float."""

    __slots__ = ("_coords",)

    def __init__(self, coords=None, **kw):
        merged = {}
        if coords:
            merged.update(coords)
        merged.update(kw)
        for name, value in merged.items():
            value = float(value)
            if not math.isfinite(value):
                raise ValueError(f"coordinate {name!r} is not finite: {value}")
            merged[name] = value
        object.__setattr__(self, "_coords", merged)

    def __getitem__(self, name):
        return self._coords[name]

    def __iter__(self):
        return iter(self._coords)

    def __len__(self):
        return len(self._coords)

    def __repr__(self):
        inner = ", ".join(f"{k}={v:.6g}" for k, v in self._coords.items())
        return f"Point({inner})"

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self):
        return hash(tuple(self._coords.items()))

    def replace(self, updates=None, **kw):
        """New Point with some coordinates overridden (or added)."""
        coords = dict(self._coords)
        if updates:
            coords.update(updates)
        coords.update(kw)
        return Point(coords)

    def values_for(self, names):
        """Coordinate values in the order requested."""
        return [self._coords[n] for n in names]
