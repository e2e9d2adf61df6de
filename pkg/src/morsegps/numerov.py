"""Numerov shooting oracle on a uniform radial grid.

An independent check on the collocation solver: no code or grid is shared.
Energies come from node-count bisection refined by matching inward and
outward logarithmic derivatives at the outer classical turning point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import BracketError, InvalidArgumentError
from .morse import EffectivePotentialSpec, effective_potential

_NODE_WINDOW = 1e-6  # bracket width (hartree) handed from node bisection to matching
_ENERGY_TOL = 1e-9  # final bracket width (hartree)
_RESCALE = 1e250


@dataclass(frozen=True)
class NumerovSpec:
    """Uniform-grid parameters: [r_min, r_max] in bohr, step, energy bracket."""

    r_min: float
    r_max: float
    step: float
    energy_bracket: tuple

    def __post_init__(self):
        e_lo, e_hi = self.energy_bracket
        if not (0.0 < self.r_min < self.r_max):
            raise InvalidArgumentError(
                f"need 0 < r_min < r_max, got ({self.r_min!r}, {self.r_max!r})"
            )
        if self.step <= 0.0:
            raise InvalidArgumentError(f"step must be positive, got {self.step!r}")
        if not (e_lo < e_hi < 0.0):
            raise InvalidArgumentError(
                f"energy bracket must satisfy E_lo < E_hi < 0, got {self.energy_bracket!r}"
            )


def default_numerov_spec(molecule):
    """Step and extent scaled to the molecule's equilibrium separation."""
    return NumerovSpec(
        r_min=1e-6,
        r_max=40.0 * molecule.re,
        step=2e-4 * molecule.re,
        energy_bracket=(-molecule.de, -1e-9),
    )


@njit(cache=True)
def _count_kernel(f, r, h, ell):
    """Outward Numerov sweep of y'' = f y; returns the node count.

    The recurrence starts at the first index where h^2 |f| / 12 < 0.1 so the
    denominators stay positive (the centrifugal term diverges at r -> 0),
    seeded with the regular limiting form r^(ell+1).
    """
    n = f.shape[0]
    lim = 1.2 / (h * h)
    i0 = 0
    while i0 < n and abs(f[i0]) > lim:
        i0 += 1
    if i0 + 2 >= n:
        return -1
    ym = r[i0] ** (ell + 1)
    y = r[i0 + 1] ** (ell + 1)
    nodes = 0
    c = h * h / 12.0
    fm, fc = f[i0], f[i0 + 1]
    for i in range(i0 + 2, n):
        fp = f[i]
        yp = (2.0 * (1.0 + 5.0 * c * fc) * y - (1.0 - c * fm) * ym) / (1.0 - c * fp)
        if (yp < 0.0 and y > 0.0) or (yp > 0.0 and y < 0.0):
            nodes += 1
        ay = abs(yp)
        if ay > _RESCALE:
            yp *= 1.0 / _RESCALE
            y *= 1.0 / _RESCALE
        elif 0.0 < ay < 1.0 / _RESCALE:
            yp *= _RESCALE
            y *= _RESCALE
        ym, y = y, yp
        fm, fc = fc, fp
    return nodes


@njit(cache=True)
def _match_kernel(f, r, h, ell, m):
    """Log-derivative mismatch (outward minus inward) at grid index m."""
    n = f.shape[0]
    lim = 1.2 / (h * h)
    i0 = 0
    while i0 < n and abs(f[i0]) > lim:
        i0 += 1
    c = h * h / 12.0
    ym = r[i0] ** (ell + 1)
    y = r[i0 + 1] ** (ell + 1)
    out_m1 = 0.0
    out_0 = 0.0
    out_p1 = 0.0
    if i0 == m - 1:
        out_m1 = ym
    elif i0 == m:
        out_0 = ym
    if i0 + 1 == m - 1:
        out_m1 = y
    elif i0 + 1 == m:
        out_0 = y
    fm, fc = f[i0], f[i0 + 1]
    for i in range(i0 + 2, m + 2):
        fp = f[i]
        yp = (2.0 * (1.0 + 5.0 * c * fc) * y - (1.0 - c * fm) * ym) / (1.0 - c * fp)
        ay = abs(yp)
        if ay > _RESCALE:
            yp *= 1.0 / _RESCALE
            y *= 1.0 / _RESCALE
            out_m1 *= 1.0 / _RESCALE
            out_0 *= 1.0 / _RESCALE
        ym, y = y, yp
        fm, fc = fc, fp
        if i == m - 1:
            out_m1 = y
        elif i == m:
            out_0 = y
        elif i == m + 1:
            out_p1 = y
    # inward sweep: the growing direction, so any tiny seed works
    ym2 = 0.0
    y2 = 1.0 / _RESCALE
    in_m1 = 0.0
    in_0 = 0.0
    in_p1 = 0.0
    fm2, fc2 = f[n - 1], f[n - 2]
    for i in range(n - 3, m - 2, -1):
        fp2 = f[i]
        yp2 = (2.0 * (1.0 + 5.0 * c * fc2) * y2 - (1.0 - c * fm2) * ym2) / (1.0 - c * fp2)
        ay = abs(yp2)
        if ay > _RESCALE:
            yp2 *= 1.0 / _RESCALE
            y2 *= 1.0 / _RESCALE
            in_p1 *= 1.0 / _RESCALE
            in_0 *= 1.0 / _RESCALE
        ym2, y2 = y2, yp2
        fm2, fc2 = fc2, fp2
        if i == m + 1:
            in_p1 = y2
        elif i == m:
            in_0 = y2
        elif i == m - 1:
            in_m1 = y2
    if out_0 == 0.0 or in_0 == 0.0:
        return np.nan
    dlog_out = (out_p1 - out_m1) / (2.0 * h * out_0)
    dlog_in = (in_p1 - in_m1) / (2.0 * h * in_0)
    return dlog_out - dlog_in


def _radial_grid(spec):
    return np.arange(spec.r_min, spec.r_max, spec.step)


def numerov_node_count(E, spec, potential):
    """Count sign changes of the outward solution at energy E.

    `potential` is an EffectivePotentialSpec; its l also fixes the
    near-origin seeding exponent. Overflow is rescaled internally.
    """
    r = _radial_grid(spec)
    veff = effective_potential(r, potential)
    f = 2.0 * potential.molecule.mu * (veff - E)
    return int(_count_kernel(f, r, spec.step, potential.ell))


def numerov_energy(n, ell, molecule, spec=None):
    """Bound energy (hartree) of state (n, l) by shooting.

    Bisects the bracket on node count, then refines by log-derivative
    matching at the outer turning point, falling back to pure node
    bisection if the mismatch loses its sign change. Final bracket width
    is 1e-9 hartree.
    """
    if n < 0 or int(n) != n:
        raise InvalidArgumentError(f"n must be a nonnegative integer, got {n!r}")
    if spec is None:
        spec = default_numerov_spec(molecule)
    potential = EffectivePotentialSpec(molecule=molecule, ell=ell)
    r = _radial_grid(spec)
    veff = effective_potential(r, potential)
    mu = molecule.mu
    h = spec.step

    def count(E):
        return int(_count_kernel(2.0 * mu * (veff - E), r, h, ell))

    lo, hi = spec.energy_bracket
    c_lo, c_hi = count(lo), count(hi)
    if not (c_lo <= n < c_hi):
        raise BracketError(
            f"energy bracket ({lo:.6g}, {hi:.6g}) hartree does not contain state "
            f"n={n} for l={ell} (node counts {c_lo}..{c_hi}); widen the bracket"
        )
    while hi - lo > _NODE_WINDOW:
        mid = 0.5 * (lo + hi)
        if count(mid) > n:
            hi = mid
        else:
            lo = mid

    def mismatch(E):
        turning = np.nonzero(veff <= E)[0]
        m = int(turning[-1]) if len(turning) else len(r) // 2
        m = min(max(m, 2), len(r) - 3)
        return float(_match_kernel(2.0 * mu * (veff - E), r, h, ell, m))

    def bisect_on_count(lo, hi):
        while hi - lo > _ENERGY_TOL:
            mid = 0.5 * (lo + hi)
            if count(mid) > n:
                hi = mid
            else:
                lo = mid
        return lo, hi

    f_lo, f_hi = mismatch(lo), mismatch(hi)
    if not (np.isfinite(f_lo) and np.isfinite(f_hi)) or np.sign(f_lo) == np.sign(f_hi):
        lo, hi = bisect_on_count(lo, hi)
    else:
        while hi - lo > _ENERGY_TOL:
            mid = 0.5 * (lo + hi)
            f_mid = mismatch(mid)
            if not np.isfinite(f_mid):
                lo, hi = bisect_on_count(lo, hi)
                break
            if np.sign(f_mid) == np.sign(f_lo):
                lo, f_lo = mid, f_mid
            else:
                hi, f_hi = mid, f_mid
    return 0.5 * (lo + hi)
