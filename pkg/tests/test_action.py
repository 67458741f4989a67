"""Assembly of the action quadratic form and its time/load factors."""

import math
from dataclasses import replace

import numpy as np
import pytest

from paramshell import (
    FoundationModel,
    ModeIndex,
    ShellGeometry,
    assemble_by_quadrature,
    assemble_closed_form,
    medium_time_block,
    time_factors,
)
from paramshell.action import (
    _hereditary_double_integral,
    cos_kl_minus_one,
    load_linear_coefficient,
    sin_quarter_wave,
)
from paramshell.reference import reference_run_config, reference_shell_config

_SLOTS = ("l11", "l12", "l13", "l22", "l23", "l33", "phi_star")


def test_time_factors_identity():
    rng = np.random.default_rng(41)
    for _ in range(200):
        omega = float(10.0 ** rng.uniform(-1, 4))
        t = float(10.0 ** rng.uniform(-4, 1))
        tf = time_factors(omega, t)
        assert tf.s_minus + tf.s_plus == pytest.approx(t, rel=1e-14)
        assert tf.s_minus >= -1e-15 and tf.s_plus >= -1e-15


def test_exact_wave_factors():
    for m in range(1, 20):
        expected = math.cos(m * math.pi) - 1.0
        assert cos_kl_minus_one(m) == pytest.approx(expected, abs=1e-15)
        if m % 2 == 0:
            assert cos_kl_minus_one(m) == 0.0
    for n in range(1, 20):
        assert sin_quarter_wave(n) == pytest.approx(
            math.sin(n * math.pi / 4.0), abs=1e-15
        )
        if n % 4 == 0:
            assert sin_quarter_wave(n) == 0.0


def test_medium_block_vanishes_without_kernel():
    geom = ShellGeometry(radius=0.16, length=0.8, thickness=0.45e-3)
    fnd = FoundationModel(winkler=1e6, pasternak=1e4, kernel_amplitude=0.0)
    assert medium_time_block(fnd, 100.0, 0.05, geom).value == 0.0


def test_hereditary_integral_continuous_at_zero_decay():
    t = 3.0 * math.pi / 200.0
    at_zero = _hereditary_double_integral(100.0, 0.0, t)
    near_zero = _hereditary_double_integral(100.0, 1e-9, t)
    assert at_zero == pytest.approx(near_zero, rel=1e-6)


def test_hereditary_integral_against_quadrature():
    from paramshell import integrate

    rng = np.random.default_rng(42)
    for _ in range(10):
        omega = float(rng.uniform(20.0, 300.0))
        psi = float(rng.uniform(0.0, 3.0))
        t = float(rng.uniform(0.005, 0.08))

        def outer(ts):
            ts = np.atleast_1d(ts)
            vals = np.empty_like(ts)
            for i, ti in enumerate(ts):
                inner = integrate(
                    lambda tau: np.exp(-psi * (ti - tau)) * np.sin(omega * tau),
                    0.0,
                    float(ti),
                )
                vals[i] = math.sin(omega * ti) * inner
            return vals

        direct = integrate(outer, 0.0, t)
        closed = _hereditary_double_integral(omega, psi, t)
        assert closed == pytest.approx(direct, rel=1e-9, abs=1e-18)


def test_load_coefficient_zero_for_noncoupling_modes():
    shell = reference_shell_config()
    t = 3.0 * math.pi / (2.0 * shell.loading.omega)
    for n, m in ((4, 1), (8, 3), (3, 2), (5, 6), (12, 4)):
        assert load_linear_coefficient(shell, ModeIndex(n=n, m=m), t) == 0.0


def test_assembly_is_additive_over_stiffeners():
    run = reference_run_config()
    bare = replace(run, rod_spec=None, ring_spec=None).shell_config()
    rods_only = replace(run, ring_spec=None).shell_config()
    rings_only = replace(run, rod_spec=None).shell_config()
    full = run.shell_config()
    t = 3.0 * math.pi / (2.0 * full.loading.omega)
    for mode in (ModeIndex(n=5, m=1), ModeIndex(n=2, m=3)):
        f_bare = assemble_closed_form(bare, mode, t)
        f_rod = assemble_closed_form(rods_only, mode, t)
        f_ring = assemble_closed_form(rings_only, mode, t)
        f_full = assemble_closed_form(full, mode, t)
        for slot in _SLOTS:
            combined = (
                getattr(f_rod, slot)
                + getattr(f_ring, slot)
                - getattr(f_bare, slot)
            )
            assert getattr(f_full, slot) == pytest.approx(
                combined, rel=1e-12, abs=1e-30
            ), slot


def test_closed_form_matches_quadrature_oracle_spot():
    shell = reference_shell_config()
    t = 3.0 * math.pi / (2.0 * shell.loading.omega)
    mode = ModeIndex(n=5, m=1)
    form = assemble_closed_form(shell, mode, t)
    rng = np.random.default_rng(43)
    for _ in range(3):
        amps = 1e-4 * rng.standard_normal(3)
        direct = form.energy(*amps)
        oracle = assemble_by_quadrature(shell, mode, t, amps)
        # [DERIVED] oracle: independent space-time quadrature of the
        # energy functionals with the ansatz substituted
        assert direct == pytest.approx(oracle, rel=1e-8)


def test_foundation_stiffens_deflection_slot():
    run = reference_run_config()
    soft = replace(
        run, foundation=FoundationModel(winkler=0.0, pasternak=0.0)
    ).shell_config()
    hard = replace(
        run, foundation=FoundationModel(winkler=5e6, pasternak=2e4)
    ).shell_config()
    t = 3.0 * math.pi / (2.0 * soft.loading.omega)
    mode = ModeIndex(n=5, m=1)
    f_soft = assemble_closed_form(soft, mode, t)
    f_hard = assemble_closed_form(hard, mode, t)
    assert f_hard.l33 > f_soft.l33
    for slot in ("l11", "l12", "l13", "l22", "l23", "phi_star"):
        assert getattr(f_hard, slot) == getattr(f_soft, slot)
