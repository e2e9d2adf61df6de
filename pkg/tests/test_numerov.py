"""Shooting-method oracle: node counting, matching, and convergence order."""

import pytest

from morsegps import (
    BracketError,
    EffectivePotentialSpec,
    InvalidArgumentError,
    NumerovSpec,
    default_numerov_spec,
    exact_swave_energy,
    hartree_to_ev,
    numerov_energy,
    numerov_node_count,
)
from morsegps.refdata import TABLE3


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(r_min=0.0, r_max=30.0, step=1e-3, energy_bracket=(-0.1, -1e-9)),
        dict(r_min=-1.0, r_max=30.0, step=1e-3, energy_bracket=(-0.1, -1e-9)),
        dict(r_min=31.0, r_max=30.0, step=1e-3, energy_bracket=(-0.1, -1e-9)),
        dict(r_min=1e-6, r_max=30.0, step=0.0, energy_bracket=(-0.1, -1e-9)),
        dict(r_min=1e-6, r_max=30.0, step=1e-3, energy_bracket=(-1e-9, -0.1)),
        dict(r_min=1e-6, r_max=30.0, step=1e-3, energy_bracket=(-0.1, 0.5)),
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(InvalidArgumentError):
        NumerovSpec(**kwargs)


def test_default_spec_scales_with_molecule(h2):
    spec = default_numerov_spec(h2)
    assert spec.r_min == 1e-6
    assert spec.r_max == pytest.approx(40.0 * h2.re, rel=1e-14)
    assert spec.step == pytest.approx(2e-4 * h2.re, rel=1e-14)
    assert spec.energy_bracket[0] == pytest.approx(-h2.de, rel=1e-14)
    assert spec.energy_bracket[1] < 0


def test_node_count_below_ground_state(h2):
    spec = default_numerov_spec(h2)
    pot = EffectivePotentialSpec(molecule=h2, ell=0)
    assert numerov_node_count(-h2.de * 0.999, spec, pot) == 0


def test_node_count_between_levels(h2):
    spec = default_numerov_spec(h2)
    pot = EffectivePotentialSpec(molecule=h2, ell=0)
    e_mid = 0.5 * (exact_swave_energy(0, h2) + exact_swave_energy(1, h2))
    assert numerov_node_count(e_mid, spec, pot) == 1


def test_node_count_steps_across_a_level(h2):
    spec = default_numerov_spec(h2)
    pot = EffectivePotentialSpec(molecule=h2, ell=0)
    e3 = exact_swave_energy(3, h2)
    assert numerov_node_count(e3 - 1e-6, spec, pot) == 3
    assert numerov_node_count(e3 + 1e-6, spec, pot) == 4


def test_node_count_near_threshold_counts_all_states(h2):
    spec = default_numerov_spec(h2)
    pot = EffectivePotentialSpec(molecule=h2, ell=0)
    assert numerov_node_count(-1e-9, spec, pot) == 17


@pytest.mark.parametrize("ell, count", [(10, 14), (25, 5)])
def test_node_count_rotational_channels(h2, ell, count):
    spec = default_numerov_spec(h2)
    pot = EffectivePotentialSpec(molecule=h2, ell=ell)
    assert numerov_node_count(-1e-9, spec, pot) == count


def test_node_count_co_sixth_level(co):
    spec = default_numerov_spec(co)
    pot = EffectivePotentialSpec(molecule=co, ell=0)
    assert numerov_node_count(exact_swave_energy(5, co) + 1e-6, spec, pot) == 6


def test_energy_matches_closed_form(h2):
    got = numerov_energy(0, 0, h2)
    assert abs(hartree_to_ev(got - exact_swave_energy(0, h2))) <= 1e-5


def test_energy_matches_reference_rotational_state(h2):
    got = -hartree_to_ev(numerov_energy(0, 10, h2))
    assert got == pytest.approx(TABLE3["H2"][(0, 10)], abs=1e-5)


def test_energy_matches_reference_heavy_molecule(co):
    got = -hartree_to_ev(numerov_energy(5, 20, co))
    assert got == pytest.approx(TABLE3["CO"][(5, 20)], abs=1e-5)


def test_energy_rejects_bad_n(h2):
    with pytest.raises(InvalidArgumentError):
        numerov_energy(-1, 0, h2)


def test_bracket_excluding_state_raises(h2):
    spec = default_numerov_spec(h2)
    lo = exact_swave_energy(0, h2) + 0.002
    narrowed = NumerovSpec(
        r_min=spec.r_min,
        r_max=spec.r_max,
        step=spec.step,
        energy_bracket=(lo, -1e-9),
    )
    with pytest.raises(BracketError) as exc:
        numerov_energy(0, 0, h2, narrowed)
    assert "widen" in str(exc.value)


def test_convergence_is_fourth_order(h2):
    # two coarse steps, factor two apart: a fourth-order scheme drops the
    # error by ~16x, well clear of the 1e-9 hartree bisection floor
    want = exact_swave_energy(0, h2)
    errs = []
    for factor in (3.2e-2, 1.6e-2):
        spec = NumerovSpec(
            r_min=1e-6,
            r_max=40.0 * h2.re,
            step=factor * h2.re,
            energy_bracket=(-h2.de, -1e-9),
        )
        errs.append(abs(numerov_energy(0, 0, h2, spec) - want))
    assert errs[0] <= 1e-6
    assert errs[1] <= errs[0] / 8.0
    assert errs[1] <= 1e-8
