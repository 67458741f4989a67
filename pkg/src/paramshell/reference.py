"""A fully specified baseline configuration used by the self-check, the
shipped example documents, and the test suite.

Glass-epoxy-like orthotropic shell, 8 longitudinal rods, 4 rings, on a
two-parameter foundation with a decaying hereditary kernel.
"""

from __future__ import annotations

from dataclasses import replace

from .config import RingSpec, RodSpec, RunConfig
from .model import (
    DamageModel,
    FoundationModel,
    Loading,
    OrthotropicMaterial,
    ShellConfig,
    ShellGeometry,
)

_E1 = 6.67e9
_NU1 = 0.11
_NU2 = 0.19


def reference_run_config(**overrides) -> RunConfig:
    """The baseline run configuration; keyword overrides replace fields."""
    run = RunConfig(
        geometry=ShellGeometry(radius=0.16, length=0.8, thickness=0.45e-3),
        material=OrthotropicMaterial(
            e1=_E1, e2=_NU2 * _E1 / _NU1, nu1=_NU1, nu2=_NU2,
            g=3.5e9, rho0=7800.0,
        ),
        rod_spec=RodSpec(
            count=8, area=5.2e-6, j_y=1.3e-12, j_z=1.3e-12,
            j_torsion=0.23e-12, modulus=6.67e9, shear_modulus=3.5e9,
            density=7800.0,
        ),
        ring_spec=RingSpec(
            count=4, area=5.2e-6, j_in_plane=19.9e-12,
            j_out_of_plane=19.9e-12, j_torsion=0.48e-12,
            modulus=6.67e9, shear_modulus=3.5e9, density=7800.0,
        ),
        foundation=FoundationModel(
            winkler=1e6, pasternak=1e4,
            kernel_amplitude=0.0, kernel_decay=0.05,
        ),
        damage=DamageModel(),
        loading=Loading(p0=0.0, omega=100.0, omega1=200.0, w0_target=1e-4),
    )
    return replace(run, **overrides) if overrides else run


def reference_shell_config(**overrides) -> ShellConfig:
    """The baseline problem statement as an in-memory object."""
    return reference_run_config(**overrides).shell_config()
