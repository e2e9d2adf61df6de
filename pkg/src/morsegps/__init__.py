"""Spectral bound-state solver for diatomic Morse oscillators.

Collocation on Legendre-Gauss-Lobatto nodes mapped onto [0, r_max] turns
the radial problem into a dense symmetric eigenproblem; an independent
Numerov shooting oracle and the closed-form l=0 energies cross-check it.
"""

from .errors import (
    BracketError,
    DomainError,
    InvalidArgumentError,
    MoleculeNotFoundError,
    MorsegpsError,
    NoSuchBoundStateError,
    NumericalError,
    ParamsFileError,
)
from .lgl import (
    DiffMatrix,
    LglGrid,
    cardinal_eval,
    first_derivative_matrix,
    legendre_eval,
    lgl_nodes,
    second_derivative_matrix,
)
from .mapping import MapParams, MappedGrid, compute_vm, make_grid, map_derivative, map_x_to_r
from .morse import (
    EffectivePotentialSpec,
    MorseLambda,
    bound_state_count,
    effective_potential,
    exact_swave_energy,
    morse_lambda,
    morse_potential,
)
from .numerov import NumerovSpec, default_numerov_spec, numerov_energy, numerov_node_count
from .solver import (
    BoundState,
    ConvergenceReport,
    HamiltonianMatrix,
    Spectrum,
    assemble_hamiltonian,
    bound_states,
    convergence_study,
    default_grid_params,
    solve,
    solve_spectrum,
)
from .units import (
    CONSTANTS,
    MoleculeParams,
    PhysicalConstants,
    amu_to_electron_masses,
    angstrom_to_bohr,
    bohr_to_angstrom,
    electron_masses_to_amu,
    ev_to_hartree,
    hartree_to_ev,
    molecule_params,
    parse_params_file,
    parse_params_text,
)

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "BracketError",
    "CONSTANTS",
    "ConvergenceReport",
    "DiffMatrix",
    "DomainError",
    "EffectivePotentialSpec",
    "HamiltonianMatrix",
    "InvalidArgumentError",
    "LglGrid",
    "MapParams",
    "MappedGrid",
    "MoleculeNotFoundError",
    "MoleculeParams",
    "MorseLambda",
    "MorsegpsError",
    "NoSuchBoundStateError",
    "NumericalError",
    "NumerovSpec",
    "ParamsFileError",
    "PhysicalConstants",
    "Spectrum",
    "amu_to_electron_masses",
    "angstrom_to_bohr",
    "assemble_hamiltonian",
    "bohr_to_angstrom",
    "bound_state_count",
    "bound_states",
    "cardinal_eval",
    "compute_vm",
    "convergence_study",
    "default_grid_params",
    "default_numerov_spec",
    "effective_potential",
    "electron_masses_to_amu",
    "ev_to_hartree",
    "exact_swave_energy",
    "first_derivative_matrix",
    "hartree_to_ev",
    "legendre_eval",
    "lgl_nodes",
    "make_grid",
    "map_derivative",
    "map_x_to_r",
    "molecule_params",
    "morse_lambda",
    "morse_potential",
    "numerov_energy",
    "numerov_node_count",
    "parse_params_file",
    "parse_params_text",
    "second_derivative_matrix",
    "solve",
    "solve_spectrum",
    "__version__",
]
