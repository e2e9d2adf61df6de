"""Morse and effective potentials, plus the closed-form l=0 energies.

The closed form is the trusted oracle for every l=0 test in the suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError, NoSuchBoundStateError


@dataclass(frozen=True)
class EffectivePotentialSpec:
    """A molecule together with a rotational quantum number l >= 0."""

    molecule: object
    ell: int

    def __post_init__(self):
        if self.ell < 0 or int(self.ell) != self.ell:
            raise InvalidArgumentError(f"ell must be a nonnegative integer, got {self.ell!r}")


@dataclass(frozen=True)
class MorseLambda:
    """Dimensionless well capacity sqrt(2 mu De) re / a.

    The number of l=0 bound states is floor(value - 1/2) + 1; every
    built-in molecule has value > 1/2 and so at least one bound state.
    """

    value: float


def _check_r(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError(f"r must be positive, got {r!r}")
    return arr


def morse_potential(r, molecule):
    """Morse well De (exp(-2 a x) - 2 exp(-a x)), x = (r - re) / re, in hartree."""
    arr = _check_r(r)
    x = (arr - molecule.re) / molecule.re
    v = molecule.de * (np.exp(-2.0 * molecule.a * x) - 2.0 * np.exp(-molecule.a * x))
    return float(v) if np.isscalar(r) else v


def effective_potential(r, spec):
    """Morse potential plus the centrifugal barrier l (l + 1) / (2 mu r^2)."""
    arr = _check_r(r)
    v = morse_potential(arr, spec.molecule)
    v = v + spec.ell * (spec.ell + 1) / (2.0 * spec.molecule.mu * arr**2)
    return float(v) if np.isscalar(r) else v


def morse_lambda(molecule):
    """Well-capacity parameter of the molecule."""
    return MorseLambda(math.sqrt(2.0 * molecule.mu * molecule.de) * molecule.re / molecule.a)


def bound_state_count(molecule):
    """Number of l=0 bound states: floor(lambda - 1/2) + 1."""
    lam = morse_lambda(molecule).value
    return int(math.floor(lam - 0.5)) + 1


def exact_swave_energy(n, molecule):
    """Closed-form l=0 bound energy -De (1 - (n + 1/2) / lambda)^2 in hartree."""
    if n < 0 or int(n) != n:
        raise InvalidArgumentError(f"n must be a nonnegative integer, got {n!r}")
    lam = morse_lambda(molecule).value
    max_n = bound_state_count(molecule) - 1
    if n + 0.5 >= lam:
        raise NoSuchBoundStateError(
            f"molecule {molecule.name!r} has no l=0 bound state n={n}; "
            f"the largest valid index is {max_n}",
            max_n=max_n,
        )
    return -molecule.de * (1.0 - (n + 0.5) / lam) ** 2
