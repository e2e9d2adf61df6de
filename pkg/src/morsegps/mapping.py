"""Algebraic map from x in [-1, 1] to r in [0, r_max] and its derivatives.

The map r(x) = L (1 + x) / (1 - x + alpha_map), alpha_map = 2 L / r_max,
clusters nodes near r = 0 and produces the MappedGrid the solver works on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DomainError, InvalidArgumentError, NumericalError
from .lgl import LglGrid, lgl_nodes, _freeze

_VM_TOL = 1e-12


@dataclass(frozen=True)
class MapParams:
    """Map scale L and truncation radius r_max, both in bohr."""

    L: float
    r_max: float
    alpha_map: float = field(init=False)

    def __post_init__(self):
        if not (self.L > 0 and np.isfinite(self.L)):
            raise InvalidArgumentError(f"L must be positive and finite, got {self.L!r}")
        if not (self.r_max > 0 and np.isfinite(self.r_max)):
            raise InvalidArgumentError(f"r_max must be positive and finite, got {self.r_max!r}")
        object.__setattr__(self, "alpha_map", 2.0 * self.L / self.r_max)


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -1.0) or np.any(arr > 1.0):
        raise DomainError(f"x must lie in [-1, 1], got {x!r}")
    return arr


def map_x_to_r(x, map_params):
    """r(x) = L (1 + x) / (1 - x + alpha_map); monotone, r(-1)=0, r(1)=r_max."""
    arr = _check_x(x)
    r = map_params.L * (1.0 + arr) / (1.0 - arr + map_params.alpha_map)
    return float(r) if np.isscalar(x) else r


def map_derivative(x, map_params):
    """r'(x) = L (2 + alpha_map) / (1 - x + alpha_map)^2, strictly positive."""
    arr = _check_x(x)
    rp = map_params.L * (2.0 + map_params.alpha_map) / (1.0 - arr + map_params.alpha_map) ** 2
    return float(rp) if np.isscalar(x) else rp


def _map_second_derivative(x, map_params):
    arr = _check_x(x)
    return 2.0 * map_params.L * (2.0 + map_params.alpha_map) / (
        1.0 - arr + map_params.alpha_map
    ) ** 3


def _map_third_derivative(x, map_params):
    arr = _check_x(x)
    return 6.0 * map_params.L * (2.0 + map_params.alpha_map) / (
        1.0 - arr + map_params.alpha_map
    ) ** 4


def vm_from_derivatives(rp, rpp, rppp):
    """Kinetic correction term (3 r''^2 - 2 r''' r') / (8 r'^4) for any map."""
    rp = np.asarray(rp, dtype=float)
    return (3.0 * np.asarray(rpp) ** 2 - 2.0 * np.asarray(rppp) * rp) / (8.0 * rp**4)


def compute_vm(x, map_params):
    """Kinetic correction at x for the algebraic map.

    Evaluated from the analytic derivatives rather than hard-coded; for
    this map the expression cancels to zero (up to rounding), which
    make_grid asserts.
    """
    vm = vm_from_derivatives(
        map_derivative(x, map_params),
        _map_second_derivative(x, map_params),
        _map_third_derivative(x, map_params),
    )
    return float(vm) if np.isscalar(x) else vm


@dataclass(frozen=True)
class MappedGrid:
    """LGL grid pushed through the radial map.

    r, rprime, vm hold r(x_j), r'(x_j), and the kinetic correction at
    every node (the latter identically ~0 for this map).
    """

    lgl: LglGrid
    map_params: MapParams
    r: np.ndarray
    rprime: np.ndarray
    vm: np.ndarray


@lru_cache(maxsize=64)
def make_grid(N, map_params):
    """Build and validate the mapped grid of order N (cached per (N, map))."""
    grid = lgl_nodes(N)
    x = grid.nodes
    r = map_x_to_r(x, map_params)
    rprime = map_derivative(x, map_params)
    vm = compute_vm(x, map_params)
    if r[0] != 0.0:
        raise NumericalError(f"mapped grid must start at r=0, got {r[0]!r}")
    if abs(r[-1] - map_params.r_max) > 1e-12 * map_params.r_max:
        raise NumericalError(f"mapped grid must end at r_max, got {r[-1]!r}")
    if np.any(np.diff(r) <= 0):
        raise NumericalError("mapped radii are not strictly increasing")
    if np.any(rprime <= 0):
        raise NumericalError("map derivative must be positive at every node")
    if np.max(np.abs(vm)) > _VM_TOL:
        raise NumericalError(
            f"kinetic correction should vanish for this map; got {np.max(np.abs(vm)):.2e}"
        )
    return MappedGrid(
        lgl=grid, map_params=map_params, r=_freeze(r), rprime=_freeze(rprime), vm=_freeze(vm)
    )
