"""Hamiltonian assembly on the mapped grid and dense bound-state solution.

The radial problem is collocated on the interior nodes (Dirichlet walls at
r = 0 and r = r_max). The kinetic operator is built in the symmetrized
representation, so the assembled matrix is symmetric to rounding before
any cleanup, and eigenvector components map back to wavefunction samples
through the node weights and P_N values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NoSuchBoundStateError, NumericalError
from .lgl import first_derivative_matrix, _freeze
from .mapping import MapParams, MappedGrid, make_grid
from .morse import EffectivePotentialSpec, effective_potential, morse_lambda

# A negative-energy eigenvector only counts as bound if its magnitude at the
# outermost interior node is below this fraction of its peak; larger tails
# mean the box at r_max is clipping the state (or it is a continuum artifact).
_TAIL_REL = 1e-8
_MAX_ESCALATIONS = 3
_RESIDUAL_REL = 1e-10
_ORTHO_TOL = 1e-10


@dataclass(frozen=True)
class HamiltonianMatrix:
    """Dense symmetric interior-node Hamiltonian and the inputs it was built from."""

    entries: np.ndarray
    potential_diagonal: np.ndarray
    grid: MappedGrid
    molecule: object
    ell: int

    @property
    def size(self):
        return self.entries.shape[0]


@lru_cache(maxsize=32)
def _kinetic_core(N, map_params):
    """Mass-independent kinetic block on interior nodes (cached per grid).

    Built from the quadrature Gram form of the first-derivative matrix,
    which equals the interior rows of the squared derivative operator with
    the 1/r' scaling applied once on each side, but is symmetric to
    rounding by construction.
    """
    grid = make_grid(N, map_params)
    d1 = first_derivative_matrix(grid.lgl).entries
    w = grid.lgl.weights
    gram = d1.T @ (w[:, None] * d1)
    scale = grid.lgl.pn_at_nodes[1:-1] / grid.rprime[1:-1]
    core = (N * (N + 1) / 4.0) * (scale[:, None] * gram[1:-1, 1:-1] * scale[None, :])
    return _freeze(core)


def assemble_hamiltonian(grid, molecule, ell):
    """Assemble the interior-node Hamiltonian for one molecule and l."""
    N = grid.lgl.order
    spec = EffectivePotentialSpec(molecule=molecule, ell=ell)
    veff = effective_potential(grid.r[1:-1], spec)
    h = _kinetic_core(N, grid.map_params) / molecule.mu
    idx = np.arange(N - 1)
    h[idx, idx] += veff + grid.vm[1:-1]
    return HamiltonianMatrix(
        entries=_freeze(h),
        potential_diagonal=_freeze(veff),
        grid=grid,
        molecule=molecule,
        ell=ell,
    )


def solve_spectrum(h):
    """Full eigendecomposition of a symmetric matrix, verified.

    Accepts a HamiltonianMatrix or a plain symmetric ndarray. Returns
    (eigenvalues ascending, eigenvectors as columns); every pair is
    checked for residual and mutual orthonormality.
    """
    matrix = h.entries if isinstance(h, HamiltonianMatrix) else np.asarray(h, dtype=float)
    try:
        values, vectors = np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    norm = float(np.max(np.abs(values))) or 1.0
    residual = matrix @ vectors - vectors * values[None, :]
    col_norms = np.linalg.norm(residual, axis=0)
    worst = int(np.argmax(col_norms))
    if col_norms[worst] > _RESIDUAL_REL * norm:
        raise NumericalError(
            f"eigenpair {worst} residual {col_norms[worst]:.2e} exceeds "
            f"{_RESIDUAL_REL:.0e} * ||H||"
        )
    gram = vectors.T @ vectors
    gram[np.diag_indices_from(gram)] -= 1.0
    dev = np.max(np.abs(gram))
    if dev > _ORTHO_TOL:
        flat = int(np.argmax(np.abs(gram)))
        raise NumericalError(
            f"eigenvectors not orthonormal: deviation {dev:.2e} at index "
            f"{np.unravel_index(flat, gram.shape)}"
        )
    return values, vectors


@dataclass(frozen=True)
class BoundState:
    """One bound level: quantum numbers, energy (hartree), and samples.

    psi_samples holds the normalized radial wavefunction at the interior
    nodes of `grid`, positive on its innermost antinode.
    """

    n: int
    ell: int
    energy: float
    psi_samples: np.ndarray
    grid: MappedGrid


@dataclass(frozen=True)
class ConvergenceReport:
    N: int
    r_max: float
    escalations: int


@dataclass(frozen=True)
class Spectrum:
    """Bound states for one (molecule, l), energies strictly increasing."""

    states: tuple
    molecule: object
    ell: int
    convergence_report: ConvergenceReport
    warning: bool = False
    note: str | None = None

    @property
    def energies(self):
        return np.array([state.energy for state in self.states])


def _select_bound(values, vectors, grid, molecule, ell):
    """Pick tail-converged E<0 eigenpairs and rebuild wavefunction samples."""
    N = grid.lgl.order
    scale = (
        grid.lgl.pn_at_nodes[1:-1]
        * math.sqrt(N * (N + 1) / 2.0)
        / np.sqrt(grid.rprime[1:-1])
    )
    w_jac = grid.lgl.weights[1:-1] * grid.rprime[1:-1]
    kept = []
    rejected = 0
    for i in range(len(values)):
        if values[i] >= 0.0:
            break
        psi = vectors[:, i] * scale
        peak = np.max(np.abs(psi))
        if abs(psi[-1]) > _TAIL_REL * peak:
            rejected += 1
            continue
        psi = psi / math.sqrt(float(np.sum(w_jac * psi * psi)))
        antinode = int(np.argmax(np.abs(psi) > 0.01 * np.max(np.abs(psi))))
        if psi[antinode] < 0.0:
            psi = -psi
        kept.append((float(values[i]), antinode, psi))
    # ascending already; exact energy ties broken by innermost antinode
    kept.sort(key=lambda item: (item[0], item[1]))
    states = tuple(
        BoundState(n=n, ell=ell, energy=energy, psi_samples=_freeze(psi), grid=grid)
        for n, (energy, _, psi) in enumerate(kept)
    )
    return states, rejected


def bound_states(eigenpairs, grid, molecule, ell):
    """Label the bound part of an eigensolution as a Spectrum."""
    values, vectors = eigenpairs
    states, rejected = _select_bound(values, vectors, grid, molecule, ell)
    note = None
    if not states:
        note = "no bound states found below E=0"
    elif rejected:
        note = f"{rejected} negative-energy candidates failed the tail check"
    report = ConvergenceReport(N=grid.lgl.order, r_max=grid.map_params.r_max, escalations=0)
    return Spectrum(
        states=states,
        molecule=molecule,
        ell=ell,
        convergence_report=report,
        warning=False,
        note=note,
    )


def default_grid_params(molecule):
    """Grid parameters (N, L, r_max) sized to the molecule's well capacity.

    Light wells use the standard (300, 25, 200); heavier wells (capacity
    above 40, i.e. many tightly spaced levels) need more nodes and a
    smaller map scale to resolve the narrow ground state.
    """
    lam = morse_lambda(molecule).value
    N = max(300, int(math.ceil(8.5 * lam)))
    L = 25.0 if lam <= 40.0 else 8.0
    return N, L, 200.0


@lru_cache(maxsize=128)
def solve(molecule, ell, map_params=None, N=None):
    """Solve one (molecule, l) channel for all bound states.

    Grid parameters default to default_grid_params(molecule). If any
    negative-energy candidate fails the tail check, r_max is doubled and
    the solve repeated, up to three times; if candidates still fail, the
    partial Spectrum is returned with the warning flag set.
    """
    default_N, default_L, default_rmax = default_grid_params(molecule)
    if N is None:
        N = default_N
    if map_params is None:
        map_params = MapParams(L=default_L, r_max=default_rmax)
    escalations = 0
    while True:
        grid = make_grid(N, map_params)
        values, vectors = solve_spectrum(assemble_hamiltonian(grid, molecule, ell))
        states, rejected = _select_bound(values, vectors, grid, molecule, ell)
        if rejected == 0 or escalations >= _MAX_ESCALATIONS:
            break
        escalations += 1
        map_params = MapParams(L=map_params.L, r_max=2.0 * map_params.r_max)
    warning = rejected > 0
    note = None
    if warning:
        note = (
            f"{rejected} candidates still fail the tail check after "
            f"{escalations} r_max escalations"
        )
    elif not states:
        note = "no bound states found below E=0"
    report = ConvergenceReport(N=N, r_max=map_params.r_max, escalations=escalations)
    return Spectrum(
        states=states,
        molecule=molecule,
        ell=ell,
        convergence_report=report,
        warning=warning,
        note=note,
    )


def convergence_study(molecule, ell, n, N_list, r_max_list):
    """Energy of state (n, l) on every (N, r_max) grid combination.

    Returns rows (N, r_max, energy in hartree). The map scale L stays at
    the molecule default.
    """
    _, L, _ = default_grid_params(molecule)
    rows = []
    for N in N_list:
        for r_max in r_max_list:
            spectrum = solve(molecule, ell, MapParams(L=L, r_max=float(r_max)), int(N))
            if n >= len(spectrum.states):
                raise NoSuchBoundStateError(
                    f"no bound state n={n} for {molecule.name} l={ell} at "
                    f"N={N}, r_max={r_max}; largest index is {len(spectrum.states) - 1}",
                    max_n=len(spectrum.states) - 1,
                )
            rows.append((int(N), float(r_max), spectrum.states[n].energy))
    return rows
