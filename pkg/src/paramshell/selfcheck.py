"""Built-in cross-validation of the numeric core.

The fast level replays the cheap invariants: closed-form profile
integrals against adaptive quadrature, the explicit 3x3 determinant
solve against numpy's elimination, material stiffness identities, and
the exact excitability zeros of the load functional.  The full level
additionally re-derives the assembled quadratic form from the space-time
quadrature oracle on the reference configuration.

``inject_fault`` deliberately corrupts one quantity so callers can
verify the checks really bite; see ``FAULTS``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .action import (
    assemble_by_quadrature,
    assemble_closed_form,
    cos_kl_minus_one,
    sin_quarter_wave,
)
from .model import (
    InhomogeneityLaw,
    ModeIndex,
    OrthotropicMaterial,
    RodStiffener,
    ShellGeometry,
    stiffness_coefficients,
)
from .quadrature import rod_profile_integrals
from .reference import reference_shell_config
from .solver import ModalAmplitudes, solve_modal

FAULTS = ("b12_sign", "profile_scale", "determinant_offset")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_profile_integrals(rng, fault: str | None):
    worst = 0.0
    for _ in range(12):
        length = float(rng.uniform(0.3, 2.0))
        geom = ShellGeometry(radius=0.16, length=length, thickness=0.45e-3)

        def law():
            return InhomogeneityLaw(
                base=float(10.0 ** rng.uniform(6, 11)),
                slope=float(rng.uniform(-0.9, 2.0)),
                span=length,
            )

        rod = RodStiffener(
            area=5.2e-6, j_y=1.3e-12, j_z=1.3e-12, j_torsion=0.23e-12,
            modulus=law(), shear=law(), density=law(), phi=0.0,
        )
        mode = ModeIndex(n=int(rng.integers(1, 9)), m=int(rng.integers(1, 8)))
        closed = rod_profile_integrals(rod, geom, mode, method="closed")
        quad = rod_profile_integrals(rod, geom, mode, method="quadrature")
        for name in ("i1", "i2", "i3", "i3_cos", "i4", "i5"):
            a, b = getattr(closed, name), getattr(quad, name)
            if fault == "profile_scale":
                a *= 1.0 + 1e-6
            worst = max(worst, abs(a - b) / max(abs(a), abs(b), 1e-30))
    passed = worst < 1e-10
    return CheckResult(
        "profile integrals: closed form vs adaptive quadrature",
        passed,
        f"worst relative deviation {worst:.3e} (tolerance 1e-10)",
    )


def _check_cramer(rng, fault: str | None):
    worst = 0.0
    for _ in range(200):
        a = rng.standard_normal((3, 3))
        a = a + a.T + 4.0 * np.eye(3)
        scale = float(10.0 ** rng.uniform(-3, 6))
        a *= scale
        rhs = float(rng.standard_normal() * scale)
        form_kwargs = dict(
            l11=a[0, 0], l12=a[0, 1], l13=a[0, 2],
            l22=a[1, 1], l23=a[1, 2], l33=a[2, 2],
            phi_star=rhs,
        )
        if fault == "determinant_offset":
            form_kwargs["l33"] *= 1.0 + 1e-5
            amps = solve_modal(_form(**form_kwargs))
            form_kwargs["l33"] /= 1.0 + 1e-5
        else:
            amps = solve_modal(_form(**form_kwargs))
        ref = np.linalg.solve(a, np.array([0.0, 0.0, rhs]))
        got = np.array([amps.u0, amps.theta0, amps.w0])
        worst = max(
            worst,
            float(np.max(np.abs(got - ref)) / max(np.max(np.abs(ref)), 1e-30)),
        )
    passed = worst < 1e-9
    return CheckResult(
        "stationarity solve: explicit determinants vs elimination",
        passed,
        f"worst relative deviation {worst:.3e} (tolerance 1e-9)",
    )


def _form(**kwargs):
    from .action import ActionQuadraticForm

    return ActionQuadraticForm(**kwargs)


def _check_stiffness(rng, fault: str | None):
    worst = 0.0
    positive = True
    for _ in range(100):
        e1 = float(10.0 ** rng.uniform(9, 11))
        nu1 = float(rng.uniform(0.05, 0.45))
        nu2 = float(rng.uniform(0.05, 0.45))
        mat = OrthotropicMaterial(
            e1=e1, e2=nu2 * e1 / nu1, nu1=nu1, nu2=nu2,
            g=float(10.0 ** rng.uniform(8, 10)), rho0=2000.0,
        )
        b = stiffness_coefficients(mat)
        b12 = -b.b12 if fault == "b12_sign" else b.b12
        # reciprocity makes the two mixed-stiffness expressions coincide
        alt = mat.nu1 * mat.e2 / (1.0 - mat.nu1 * mat.nu2)
        worst = max(worst, abs(b12 - alt) / abs(alt))
        positive = positive and (b12 * b12 < b.b11 * b.b22)
    passed = worst < 1e-12 and positive
    return CheckResult(
        "material stiffness: mixed-coefficient identity and positivity",
        passed,
        f"worst identity deviation {worst:.3e}; "
        f"positivity {'holds' if positive else 'violated'}",
    )


def _check_excitability(fault: str | None):
    bad = []
    for m in range(1, 13):
        expected_zero = m % 2 == 0
        if (cos_kl_minus_one(m) == 0.0) != expected_zero:
            bad.append(f"m={m}")
    for n in range(1, 17):
        expected_zero = n % 4 == 0
        if (sin_quarter_wave(n) == 0.0) != expected_zero:
            bad.append(f"n={n}")
    passed = not bad
    return CheckResult(
        "load functional: exact zeros at non-coupling wave numbers",
        passed,
        "all integer-exact" if passed else f"wrong zeros at {', '.join(bad)}",
    )


def _check_action_oracle(rng):
    config = reference_shell_config()
    t_char = 1.5 * math.pi / config.loading.omega
    worst = 0.0
    for mode in (ModeIndex(n=5, m=1), ModeIndex(n=3, m=3)):
        form = assemble_closed_form(config, mode, t_char)
        for _ in range(3):
            amps = ModalAmplitudes(*(1e-4 * rng.standard_normal(3)))
            direct = form.energy(amps.u0, amps.theta0, amps.w0)
            oracle = assemble_by_quadrature(config, mode, t_char, amps)
            worst = max(
                worst, abs(direct - oracle) / max(abs(direct), abs(oracle), 1e-30)
            )
    passed = worst < 1e-6
    return CheckResult(
        "assembled action vs space-time quadrature oracle",
        passed,
        f"worst relative deviation {worst:.3e} (tolerance 1e-6)",
    )


def self_check(full: bool = False, inject_fault: str | None = None):
    """Run the internal consistency checks.

    Returns (passed, report_text).  ``inject_fault`` must be one of
    ``FAULTS`` and exists to prove the checks can fail.
    """
    if inject_fault is not None and inject_fault not in FAULTS:
        raise ValueError(f"unknown fault {inject_fault!r}; choose from {FAULTS}")
    rng = np.random.default_rng(20260826)
    results = [
        _check_profile_integrals(rng, inject_fault),
        _check_cramer(rng, inject_fault),
        _check_stiffness(rng, inject_fault),
        _check_excitability(inject_fault),
    ]
    if full:
        results.append(_check_action_oracle(rng))
    passed = all(r.passed for r in results)
    lines = [f"self-check ({'full' if full else 'fast'} level)"]
    if inject_fault:
        lines.append(f"  fault injected: {inject_fault}")
    for r in results:
        lines.append(f"  [{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    return passed, "\n".join(lines) + "\n"
