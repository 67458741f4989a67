"""Validation and constructor behaviour of the model dataclasses."""

import math

import numpy as np
import pytest

from paramshell import (
    DomainError,
    InhomogeneityLaw,
    InvalidPoissonError,
    Loading,
    MaterialReciprocityError,
    ModeIndex,
    NonPositiveProfileError,
    OrthotropicMaterial,
    ShellGeometry,
    stiffness_coefficients,
    uniform_rings,
    uniform_rods,
)
from paramshell.reference import reference_run_config


def _material(e1=6.67e9, nu1=0.11, nu2=0.19, g=3.5e9, rho0=7800.0, e2=None):
    if e2 is None:
        e2 = nu2 * e1 / nu1
    return OrthotropicMaterial(e1=e1, e2=e2, nu1=nu1, nu2=nu2, g=g, rho0=rho0)


def test_geometry_rejects_thick_shell():
    with pytest.raises(DomainError):
        ShellGeometry(radius=0.1, length=0.5, thickness=0.05)


def test_geometry_rejects_nonpositive():
    for kwargs in (
        dict(radius=0.0, length=0.5, thickness=1e-3),
        dict(radius=0.1, length=-0.5, thickness=1e-3),
        dict(radius=0.1, length=0.5, thickness=0.0),
    ):
        with pytest.raises(DomainError):
            ShellGeometry(**kwargs)


def test_material_reciprocity_enforced():
    with pytest.raises(MaterialReciprocityError):
        OrthotropicMaterial(e1=7e9, e2=7e9, nu1=0.1, nu2=0.3, g=3e9, rho0=7800.0)


def test_material_poisson_product_bounded():
    with pytest.raises(InvalidPoissonError):
        _material(nu1=1.2, nu2=0.9)


def test_stiffness_coefficients_reference_values():
    mat = _material()
    b = stiffness_coefficients(mat)
    denom = 1.0 - mat.nu1 * mat.nu2
    # [TRIVIAL] direct definition checks
    assert b.b11 == pytest.approx(mat.e1 / denom, rel=1e-14)
    assert b.b22 == pytest.approx(mat.e2 / denom, rel=1e-14)
    assert b.b12 == pytest.approx(mat.nu2 * mat.e1 / denom, rel=1e-14)
    assert b.b66 == mat.g
    assert b.b12 * b.b12 < b.b11 * b.b22


def test_stiffness_mixed_coefficient_symmetry():
    rng = np.random.default_rng(7)
    for _ in range(50):
        nu1 = float(rng.uniform(0.05, 0.45))
        nu2 = float(rng.uniform(0.05, 0.45))
        mat = _material(nu1=nu1, nu2=nu2)
        b = stiffness_coefficients(mat)
        alt = mat.nu1 * mat.e2 / (1.0 - mat.nu1 * mat.nu2)
        assert b.b12 == pytest.approx(alt, rel=1e-12)


def test_inhomogeneity_law_values():
    law = InhomogeneityLaw(base=2.0e9, slope=0.5, span=2.0)
    # [TRIVIAL] linear law: base * (1 + slope * s / span)
    assert law(0.0) == 2.0e9
    assert law(2.0) == pytest.approx(3.0e9, rel=1e-15)
    assert law.mean == pytest.approx(2.5e9, rel=1e-15)
    xs = np.linspace(0.0, 2.0, 7)
    assert np.allclose(law(xs), 2.0e9 * (1.0 + 0.5 * xs / 2.0))


def test_inhomogeneity_law_domain_and_positivity():
    law = InhomogeneityLaw(base=1.0, slope=0.0, span=1.0)
    with pytest.raises(DomainError):
        law(1.5)
    with pytest.raises(NonPositiveProfileError):
        InhomogeneityLaw(base=1.0, slope=-1.0, span=1.0)


def test_loading_defaults_and_resonance_guard():
    ld = Loading(omega=100.0)
    assert ld.omega1 == 200.0
    with pytest.raises(DomainError):
        Loading(omega=100.0, omega1=100.0)
    with pytest.raises(DomainError):
        Loading(omega=100.0, omega1=-100.0)


def test_mode_index_wavenumber():
    mode = ModeIndex(n=5, m=3)
    assert mode.axial_wavenumber(0.8) == pytest.approx(3 * math.pi / 0.8)
    with pytest.raises(DomainError):
        ModeIndex(n=0, m=1)


def test_uniform_placement():
    geom = ShellGeometry(radius=0.16, length=0.8, thickness=0.45e-3)
    rods = uniform_rods(8, geom, 5.2e-6, 1.3e-12, 1.3e-12, 0.23e-12,
                        6.67e9, 3.5e9, 7800.0)
    assert len(rods) == 8
    assert rods[0].phi == 0.0
    assert rods[4].phi == pytest.approx(math.pi)
    rings = uniform_rings(4, geom, 5.2e-6, 19.9e-12, 19.9e-12, 0.48e-12,
                          6.67e9, 3.5e9, 7800.0)
    assert [r.x for r in rings] == pytest.approx([0.16, 0.32, 0.48, 0.64])
    assert all(0.0 < r.x < geom.length for r in rings)


def test_reference_config_materialises():
    shell = reference_run_config().shell_config()
    assert len(shell.rods) == 8
    assert len(shell.rings) == 4
    assert shell.material.nu1 * shell.material.e2 == pytest.approx(
        shell.material.nu2 * shell.material.e1, rel=1e-12
    )
