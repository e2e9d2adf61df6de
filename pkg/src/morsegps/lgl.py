"""Legendre-Gauss-Lobatto grids on [-1, 1].

Provides Legendre polynomial evaluation, the collocation nodes (the two
endpoints plus the roots of P'_N), quadrature weights, cardinal functions,
and dense first/second differentiation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, InvalidArgumentError, NumericalError

_NEWTON_STEP_TOL = 1e-14
_NEWTON_MAX_ITER = 100
# Accepted-root residual, measured as the Newton correction |P'/P''| (the
# distance to the root). The raw |P'| value is not a usable residual here:
# at a perfectly rounded root it still scales like eps * |P''|, which is
# ~1e-9 by N=300 because P'' grows to ~1e9 near the endpoints.
_ROOT_POSITION_TOL = 1e-13


def _check_domain(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr < -1.0) or np.any(arr > 1.0):
        raise DomainError(f"x must lie in [-1, 1], got {x!r}")
    return arr


def legendre_eval(N, x):
    """Evaluate (P_N(x), P'_N(x)) by the three-term recurrence.

    Accepts scalar or array x in [-1, 1]. The derivative recurrence
    dP_{k+1} = dP_{k-1} + (2k+1) P_k stays finite at the endpoints.
    """
    if N < 0 or int(N) != N:
        raise InvalidArgumentError(f"polynomial order must be a nonnegative integer, got {N!r}")
    N = int(N)
    scalar = np.isscalar(x)
    arr = _check_domain(x)
    p_prev = np.ones_like(arr)
    dp_prev = np.zeros_like(arr)
    if N == 0:
        return (float(p_prev), float(dp_prev)) if scalar else (p_prev, dp_prev)
    p = arr.copy()
    dp = np.ones_like(arr)
    for k in range(1, N):
        p_next = ((2 * k + 1) * arr * p - k * p_prev) / (k + 1)
        dp_next = dp_prev + (2 * k + 1) * p
        p_prev, p = p, p_next
        dp_prev, dp = dp, dp_next
    if scalar:
        return float(p), float(dp)
    return p, dp


def _freeze(arr):
    arr = np.ascontiguousarray(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class LglGrid:
    """Collocation grid of order N: N+1 nodes, P_N values, quadrature weights."""

    order: int
    nodes: np.ndarray
    pn_at_nodes: np.ndarray
    weights: np.ndarray


def _interior_roots(N):
    """Roots of P'_N by Newton iteration with a bisection safeguard.

    Initial guesses and safeguard brackets come from the Chebyshev-Lobatto
    points cos(pi k / N), which interlace the target roots.
    """
    guesses = np.cos(np.pi * np.arange(N - 1, 0, -1) / N)  # ascending interior
    xj = guesses.copy()
    lo = np.empty(N - 1)
    hi = np.empty(N - 1)
    lo[0], hi[-1] = -1.0, 1.0
    lo[1:] = guesses[:-1]
    hi[:-1] = guesses[1:]
    for iteration in range(_NEWTON_MAX_ITER):
        p, dp = legendre_eval(N, xj)
        d2p = (2 * xj * dp - N * (N + 1) * p) / (1.0 - xj * xj)
        step = dp / d2p
        xj = xj - step
        # safeguard: any iterate leaving its bracket is pulled to the midpoint
        outside = (xj <= lo) | (xj >= hi)
        if np.any(outside):
            xj[outside] = 0.5 * (lo[outside] + hi[outside])
        if np.max(np.abs(step)) < _NEWTON_STEP_TOL:
            break
    else:
        worst = int(np.argmax(np.abs(step)))
        raise NumericalError(
            f"node search did not converge after {_NEWTON_MAX_ITER} iterations "
            f"(interior root index {worst + 1})"
        )
    # symmetrize so x_j = -x_{N-j} holds exactly
    xj = 0.5 * (xj - xj[::-1])
    p, dp = legendre_eval(N, xj)
    d2p = (2 * xj * dp - N * (N + 1) * p) / (1.0 - xj * xj)
    correction = np.abs(dp / d2p)
    if np.any(correction > _ROOT_POSITION_TOL):
        worst = int(np.argmax(correction))
        raise NumericalError(
            f"root position residual {correction[worst]:.2e} exceeds "
            f"{_ROOT_POSITION_TOL:.0e} at interior root index {worst + 1}"
        )
    return xj


@lru_cache(maxsize=None)
def lgl_nodes(N):
    """Build the order-N grid: nodes, P_N at the nodes, and quadrature weights."""
    if N < 2 or int(N) != N:
        raise InvalidArgumentError(f"grid order must be an integer >= 2, got {N!r}")
    N = int(N)
    nodes = np.empty(N + 1)
    nodes[0], nodes[N] = -1.0, 1.0
    nodes[1:N] = _interior_roots(N)
    pn, _ = legendre_eval(N, nodes)
    weights = 2.0 / (N * (N + 1) * pn**2)
    return LglGrid(order=N, nodes=_freeze(nodes), pn_at_nodes=_freeze(pn), weights=_freeze(weights))


def cardinal_eval(grid, j, x):
    """Evaluate the j-th cardinal polynomial g_j at a point x.

    g_j is the unique degree-N polynomial with g_j(x_k) = delta_jk on the
    grid; the removable singularity at x = x_j returns exactly 1.
    """
    N = grid.order
    if j < 0 or j > N or int(j) != j:
        raise InvalidArgumentError(f"node index must be in 0..{N}, got {j!r}")
    x = float(x)
    _check_domain(x)
    xj = grid.nodes[j]
    if x == xj:
        return 1.0
    p, dp = legendre_eval(N, x)
    return -(1.0 - x * x) * dp / (N * (N + 1) * grid.pn_at_nodes[j] * (x - xj))


@dataclass(frozen=True)
class DiffMatrix:
    """Dense nodal differentiation matrix of a given grid order."""

    order: int
    entries: np.ndarray


def first_derivative_matrix(grid):
    """Analytic first-derivative matrix: entry (k, j) is g_j'(x_k)."""
    N = grid.order
    x = grid.nodes
    pn = grid.pn_at_nodes
    dx = x[:, None] - x[None, :]
    np.fill_diagonal(dx, 1.0)
    d = (pn[:, None] / pn[None, :]) / dx
    np.fill_diagonal(d, 0.0)
    d[0, 0] = -N * (N + 1) / 4.0
    d[N, N] = N * (N + 1) / 4.0
    return DiffMatrix(order=N, entries=_freeze(d))


def second_derivative_matrix(d1):
    """Second-derivative matrix as the square of the first-derivative matrix."""
    return DiffMatrix(order=d1.order, entries=_freeze(d1.entries @ d1.entries))
