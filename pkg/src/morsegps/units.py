"""Physical constants, unit conversions, and molecule parameter records.

Everything downstream of this module works in Hartree atomic units
(hbar = m_e = e = 1): energies in hartree, lengths in bohr, masses in
electron masses. eV, angstrom, and amu appear only at the I/O boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgumentError, MoleculeNotFoundError, ParamsFileError

BOHR_IN_ANGSTROM = 0.52917721092
HARTREE_IN_EV = 27.21138505
# CODATA 2010 electron mass in u. This is the value consistent with the
# reference eigenvalues in refdata.py at their printed precision.
ELECTRON_MASS_IN_AMU = 5.4857990946e-4


@dataclass(frozen=True)
class PhysicalConstants:
    bohr_in_angstrom: float = BOHR_IN_ANGSTROM
    hartree_in_ev: float = HARTREE_IN_EV
    electron_mass_in_amu: float = ELECTRON_MASS_IN_AMU


CONSTANTS = PhysicalConstants()


def _require_finite(value, name):
    if not math.isfinite(value):
        raise InvalidArgumentError(f"{name} must be finite, got {value!r}")


def ev_to_hartree(e):
    """Convert an energy from eV to hartree."""
    _require_finite(e, "energy")
    return e / HARTREE_IN_EV


def hartree_to_ev(e):
    """Convert an energy from hartree to eV."""
    _require_finite(e, "energy")
    return e * HARTREE_IN_EV


def angstrom_to_bohr(l):
    """Convert a length from angstrom to bohr."""
    _require_finite(l, "length")
    return l / BOHR_IN_ANGSTROM


def bohr_to_angstrom(l):
    """Convert a length from bohr to angstrom."""
    _require_finite(l, "length")
    return l * BOHR_IN_ANGSTROM


def amu_to_electron_masses(m):
    """Convert a mass from amu to electron masses. Requires m > 0."""
    _require_finite(m, "mass")
    if m <= 0:
        raise InvalidArgumentError(f"mass must be positive, got {m!r}")
    return m / ELECTRON_MASS_IN_AMU


def electron_masses_to_amu(m):
    """Convert a mass from electron masses to amu. Requires m > 0."""
    _require_finite(m, "mass")
    if m <= 0:
        raise InvalidArgumentError(f"mass must be positive, got {m!r}")
    return m * ELECTRON_MASS_IN_AMU


@dataclass(frozen=True)
class MoleculeParams:
    """Morse potential parameters for one molecule, in atomic units.

    de: well depth (hartree); re: equilibrium separation (bohr);
    mu: reduced mass (electron masses); a: dimensionless steepness of
    the exponential, acting on the scaled coordinate (r - re) / re.
    """

    name: str
    de: float
    re: float
    mu: float
    a: float

    def __post_init__(self):
        for field in ("de", "re", "mu", "a"):
            value = getattr(self, field)
            _require_finite(value, field)
            if value <= 0:
                raise InvalidArgumentError(
                    f"{field} must be positive, got {value!r} for molecule {self.name!r}"
                )

    @classmethod
    def from_input_units(cls, name, de_ev, re_angstrom, mu_amu, a):
        """Build from the customary input units (eV, angstrom, amu)."""
        return cls(
            name=name,
            de=ev_to_hartree(de_ev),
            re=angstrom_to_bohr(re_angstrom),
            mu=amu_to_electron_masses(mu_amu),
            a=float(a),
        )

    def to_input_units(self):
        """Return {de_ev, re_angstrom, mu_amu, a} in input units."""
        return {
            "de_ev": hartree_to_ev(self.de),
            "re_angstrom": bohr_to_angstrom(self.re),
            "mu_amu": electron_masses_to_amu(self.mu),
            "a": self.a,
        }


# Built-in molecules: (de in eV, re in angstrom, mu in amu, a).
_BUILTIN = {
    "H2": (4.7446, 0.7416, 0.50391, 1.440558),
    "LiH": (2.515287, 1.5956, 0.8801221, 1.7998368),
    "HCl": (4.61907, 1.2746, 0.9801045, 2.38057),
    "CO": (11.2256, 1.1283, 6.8606719, 2.59441),
}
BUILTIN_NAMES = tuple(_BUILTIN)
_BUILTIN_BY_LOWER = {name.lower(): name for name in _BUILTIN}


def molecule_params(name):
    """Look up a built-in molecule by name (case-insensitive)."""
    canonical = _BUILTIN_BY_LOWER.get(str(name).lower())
    if canonical is None:
        raise MoleculeNotFoundError(
            f"unknown molecule {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
        )
    de_ev, re_angstrom, mu_amu, a = _BUILTIN[canonical]
    return MoleculeParams.from_input_units(canonical, de_ev, re_angstrom, mu_amu, a)


_PARAM_KEYS = ("name", "de_ev", "re_angstrom", "mu_amu", "a")


def parse_params_text(text, source="<params>"):
    """Parse a molecule parameter record: one `key = value` per line.

    Keys are name, de_ev, re_angstrom, mu_amu, a; `#` starts a comment.
    """
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParamsFileError(f"{source}:{lineno}: expected `key = value`, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _PARAM_KEYS:
            raise ParamsFileError(
                f"{source}:{lineno}: unknown key {key!r}; valid keys: {', '.join(_PARAM_KEYS)}"
            )
        if key in fields:
            raise ParamsFileError(f"{source}:{lineno}: duplicate key {key!r}")
        if key == "name":
            if not value:
                raise ParamsFileError(f"{source}:{lineno}: empty molecule name")
            fields[key] = value
        else:
            try:
                fields[key] = float(value)
            except ValueError:
                raise ParamsFileError(
                    f"{source}:{lineno}: could not parse {value!r} as a number"
                ) from None
    missing = [key for key in _PARAM_KEYS if key not in fields]
    if missing:
        raise ParamsFileError(f"{source}: missing keys: {', '.join(missing)}")
    try:
        return MoleculeParams.from_input_units(
            fields["name"], fields["de_ev"], fields["re_angstrom"], fields["mu_amu"], fields["a"]
        )
    except InvalidArgumentError as exc:
        raise ParamsFileError(f"{source}: {exc}") from exc


def parse_params_file(path):
    """Read and parse a molecule parameter file."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_params_text(handle.read(), source=str(path))
