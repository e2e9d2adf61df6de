"""Command-line front end: solve, tables, sweep, and verify subcommands.

All data output is byte-deterministic for identical flags; diagnostics go
to stderr only. Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import refdata
from .errors import (
    BracketError,
    InvalidArgumentError,
    MoleculeNotFoundError,
    MorsegpsError,
    NumericalError,
    ParamsFileError,
)
from .mapping import MapParams
from .morse import exact_swave_energy
from .numerov import numerov_energy
from .solver import default_grid_params, solve
from .units import hartree_to_ev, molecule_params, parse_params_file

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

SWAVE_TOL_EV = 1e-9
NUMEROV_TOL_EV = 1e-5

_SWEEP_ELLS = (0, 5, 10, 15, 20, 25)
_SWEEP_NS = (0, 3, 6, 9, 12, 15)
# H2 has too few high-n rotational levels for the last curve
_SWEEP_NS_H2 = (0, 3, 6, 9, 12)


@dataclass
class RunConfig:
    """Resolved command options shared by the subcommands."""

    molecule: str | None = None
    params: str | None = None
    ells: list = field(default_factory=list)
    ns: list = field(default_factory=list)
    N: int | None = None
    L: float | None = None
    r_max: float | None = None
    fmt: str = "table"
    out: str | None = None
    oracle: bool = True
    mode: str | None = None
    which: int | None = None


def _int_list(text):
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected nonnegative integers, got {text!r}")
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="morsegps",
        description="Ro-vibrational bound states of diatomic Morse oscillators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_molecule_flags(p):
        p.add_argument("--molecule", help="built-in molecule name (H2, LiH, HCl, CO)")
        p.add_argument("--params", help="path to a custom molecule parameter file")

    def add_grid_flags(p):
        p.add_argument("--N", type=int, help="grid order (default: sized to the molecule)")
        p.add_argument("--L", type=float, help="map scale in bohr")
        p.add_argument("--rmax", type=float, help="truncation radius in bohr")

    def add_output_flags(p):
        p.add_argument("--out", help="output file (default: stdout)")

    p_solve = sub.add_parser("solve", help="energies of selected (n, l) states")
    add_molecule_flags(p_solve)
    p_solve.add_argument("--l", type=_int_list, default=[0], help="comma list of l values")
    p_solve.add_argument("--n", type=_int_list, default=[0], help="comma list of n values")
    add_grid_flags(p_solve)
    p_solve.add_argument("--format", choices=("table", "csv"), default="table")
    add_output_flags(p_solve)

    p_tables = sub.add_parser("tables", help="reproduce a reference eigenvalue table")
    p_tables.add_argument("which", type=int, choices=(2, 3), help="which table to emit")
    add_output_flags(p_tables)

    p_sweep = sub.add_parser("sweep", help="energy sweep data for plotting")
    add_molecule_flags(p_sweep)
    p_sweep.add_argument("--mode", choices=("vs-n", "vs-l"), required=True)
    p_sweep.add_argument("--l", type=_int_list, default=None, help="comma list of l values (vs-n)")
    p_sweep.add_argument("--n", type=_int_list, default=None, help="comma list of n values (vs-l)")
    add_grid_flags(p_sweep)
    add_output_flags(p_sweep)

    p_verify = sub.add_parser("verify", help="run the oracle comparison suites")
    p_verify.add_argument(
        "--oracle",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the shooting-oracle cross-check",
    )
    return parser


def _config_from_args(args):
    config = RunConfig()
    for name in ("molecule", "params", "N", "L", "out", "mode", "which", "oracle"):
        if hasattr(args, name):
            setattr(config, name, getattr(args, name))
    if hasattr(args, "rmax"):
        config.r_max = args.rmax
    if getattr(args, "l", None) is not None:
        config.ells = list(args.l)
    if getattr(args, "n", None) is not None:
        config.ns = list(args.n)
    if hasattr(args, "format"):
        config.fmt = args.format
    return config


def _resolve_molecule(config):
    if config.params and config.molecule:
        raise InvalidArgumentError("give either --molecule or --params, not both")
    if config.params:
        return parse_params_file(config.params)
    if config.molecule:
        return molecule_params(config.molecule)
    raise InvalidArgumentError("one of --molecule or --params is required")


def _resolve_grid(config, molecule):
    """Fill unset grid options from the molecule defaults."""
    default_N, default_L, default_rmax = default_grid_params(molecule)
    N = config.N if config.N is not None else default_N
    L = config.L if config.L is not None else default_L
    r_max = config.r_max if config.r_max is not None else default_rmax
    return N, MapParams(L=float(L), r_max=float(r_max))


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _note(message):
    print(f"note: {message}", file=sys.stderr)


def cmd_solve(config):
    molecule = _resolve_molecule(config)
    N, map_params = _resolve_grid(config, molecule)
    rows = []
    failed = False
    for ell in config.ells:
        spectrum = solve(molecule, ell, map_params, N)
        if spectrum.warning:
            failed = True
            _note(f"l={ell}: {spectrum.note}")
        status = "unconverged" if spectrum.warning else "converged"
        for n in config.ns:
            if n >= len(spectrum.states):
                failed = True
                _note(
                    f"no bound state n={n} for {molecule.name} l={ell} "
                    f"(largest index {len(spectrum.states) - 1})"
                )
                continue
            energy_ev = -hartree_to_ev(spectrum.states[n].energy)
            rows.append((molecule.name, n, ell, energy_ev, status))
    if config.fmt == "csv":
        lines = ["molecule,n,l,neg_energy_ev,status"]
        lines += [f"{m},{n},{l},{e:.8f},{s}" for m, n, l, e, s in rows]
    else:
        lines = [f"{'molecule':<10s} {'n':>3s} {'l':>3s} {'neg_energy_ev':>15s}  status"]
        lines += [f"{m:<10s} {n:>3d} {l:>3d} {e:>15.8f}  {s}" for m, n, l, e, s in rows]
    _emit(lines, config.out)
    return EXIT_NUMERICAL if failed else EXIT_OK


def _table_cells(which):
    if which == 2:
        for name in refdata.MOLECULE_ORDER:
            for n in (0, 1, 2):
                for ell in (0, 1, 2):
                    yield name, n, ell
    else:
        for name in refdata.MOLECULE_ORDER:
            for ell in (10, 20, 25):
                for n in sorted(k[0] for k in refdata.TABLE3[name] if k[1] == ell):
                    yield name, n, ell


def cmd_tables(config):
    decimals = refdata.TABLE2_DECIMALS if config.which == 2 else refdata.TABLE3_DECIMALS
    lines = ["molecule,n,l,neg_energy_ev"]
    failed = False
    for name, n, ell in _table_cells(config.which):
        molecule = molecule_params(name)
        try:
            spectrum = solve(molecule, ell)
            state = spectrum.states[n]
        except IndexError:
            failed = True
            _note(f"missing state {name} n={n} l={ell}")
            continue
        except NumericalError as exc:
            failed = True
            _note(f"solve failed for {name} l={ell}: {exc}")
            continue
        lines.append(f"{name},{n},{ell},{-hartree_to_ev(state.energy):.{decimals}f}")
    _emit(lines, config.out)
    return EXIT_NUMERICAL if failed else EXIT_OK


def cmd_sweep(config):
    molecule = _resolve_molecule(config)
    N, map_params = _resolve_grid(config, molecule)
    lines = []
    if config.mode == "vs-n":
        ells = config.ells or list(_SWEEP_ELLS)
        lines.append("l,n,energy_ev")
        for ell in ells:
            spectrum = solve(molecule, ell, map_params, N)
            for state in spectrum.states:
                lines.append(f"{ell},{state.n},{hartree_to_ev(state.energy):.7f}")
    else:
        allowed = _SWEEP_NS_H2 if molecule.name == "H2" else _SWEEP_NS
        requested = config.ns or list(allowed)
        ns = [n for n in requested if n in allowed]
        for n in requested:
            if n not in allowed:
                _note(
                    f"{molecule.name} curves are limited to n in "
                    f"{{{', '.join(str(v) for v in allowed)}}}; skipping n={n}"
                )
        lines.append("n,l,energy_ev")
        if ns:
            spectra = {ell: solve(molecule, ell, map_params, N) for ell in range(0, 26)}
            for n in ns:
                emitted = False
                for ell in range(0, 26):
                    states = spectra[ell].states
                    if n < len(states):
                        emitted = True
                        lines.append(f"{n},{ell},{hartree_to_ev(states[n].energy):.7f}")
                if not emitted:
                    _note(f"no bound state n={n} for {molecule.name} at any l; rows omitted")
    _emit(lines, config.out)
    return EXIT_OK


def _verify_swave():
    worst = 0.0
    worst_tag = ""
    for name in refdata.MOLECULE_ORDER:
        molecule = molecule_params(name)
        spectrum = solve(molecule, 0)
        for state in spectrum.states:
            dev = abs(hartree_to_ev(state.energy - exact_swave_energy(state.n, molecule)))
            if dev > worst:
                worst, worst_tag = dev, f"{name} n={state.n}"
    return worst, worst_tag


def _verify_numerov():
    worst = 0.0
    worst_tag = ""
    for name, n, ell in refdata.NUMEROV_SAMPLE:
        molecule = molecule_params(name)
        e_gps = solve(molecule, ell).states[n].energy
        e_num = numerov_energy(n, ell, molecule)
        dev = abs(hartree_to_ev(e_gps - e_num))
        if dev > worst:
            worst, worst_tag = dev, f"{name} n={n} l={ell}"
    return worst, worst_tag


def _verify_table(which):
    table = refdata.TABLE2 if which == 2 else refdata.TABLE3
    tol = refdata.TABLE2_MATCH_TOL_EV if which == 2 else refdata.TABLE3_MATCH_TOL_EV
    total = 0
    matched = 0
    worst = 0.0
    worst_tag = ""
    for name, n, ell in _table_cells(which):
        molecule = molecule_params(name)
        total += 1
        computed = -hartree_to_ev(solve(molecule, ell).states[n].energy)
        dev = abs(computed - table[name][(n, ell)])
        if dev <= tol:
            matched += 1
        if dev > worst:
            worst, worst_tag = dev, f"{name} n={n} l={ell} |dE|={dev:.2e} eV"
    return total, matched, worst, worst_tag


def cmd_verify(config):
    lines = []
    failures = []

    worst, tag = _verify_swave()
    if worst <= SWAVE_TOL_EV:
        lines.append(f"swave max |dE| = {worst:.2e} eV <= {SWAVE_TOL_EV:.0e} eV")
    else:
        lines.append(f"swave max |dE| = {worst:.2e} eV > {SWAVE_TOL_EV:.0e} eV (worst: {tag})")
        failures.append(f"swave {tag}")

    if config.oracle:
        worst, tag = _verify_numerov()
        if worst <= NUMEROV_TOL_EV:
            lines.append(f"numerov max |dE| = {worst:.2e} eV <= {NUMEROV_TOL_EV:.0e} eV")
        else:
            lines.append(
                f"numerov max |dE| = {worst:.2e} eV > {NUMEROV_TOL_EV:.0e} eV (worst: {tag})"
            )
            failures.append(f"numerov {tag}")
    else:
        lines.append("numerov check skipped")

    for which in (2, 3):
        total, matched, worst, tag = _verify_table(which)
        if matched == total:
            lines.append(f"table{which}: {matched}/{total} match at printed precision")
        else:
            lines.append(
                f"table{which}: {matched}/{total} match at printed precision (worst: {tag})"
            )
            failures.append(f"table{which} {tag}")

    lines.append("verify: PASS" if not failures else f"verify: FAIL ({'; '.join(failures)})")
    _emit(lines, None)
    return EXIT_OK if not failures else EXIT_VERIFY_FAIL


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    config = _config_from_args(args)
    handlers = {
        "solve": cmd_solve,
        "tables": cmd_tables,
        "sweep": cmd_sweep,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](config)
    except (MoleculeNotFoundError, ParamsFileError, InvalidArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, BracketError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except MorsegpsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
