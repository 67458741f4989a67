"""Stationarity-system solution and the critical-load search.

The 3x3 linear system is solved by explicit Cramer determinants (with an
independent elimination oracle in the tests), displacements are rebuilt
from the modal amplitudes, and the critical pulsating-load amplitude is
obtained by prescribing the radial deflection and minimised over the wave
numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .action import (
    ActionQuadraticForm,
    _LOAD_SIGN,
    _load_time_bracket,
    assemble_closed_form,
    cos_kl_minus_one,
    sin_quarter_wave,
)
from .errors import (
    AllModesNonExcitableError,
    DomainError,
    NonExcitableModeError,
    SingularSystemError,
)
from .model import ModeIndex, ShellConfig, ShellGeometry

# |principal determinant| below this multiple of the matrix scale cubed is
# treated as resonance of the homogeneous problem
CONDITIONING_FLOOR = 1e-12


@dataclass(frozen=True)
class ModalAmplitudes:
    """Unknown constants of the displacement ansatz (m)."""

    u0: float
    theta0: float
    w0: float

    def __post_init__(self) -> None:
        for name in ("u0", "theta0", "w0"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")


@dataclass(frozen=True)
class AlphaCoefficients:
    """Weights mapping (p0, p1) to the load functional."""

    alpha11: float
    alpha22: float


def alpha_coefficients(
    config: ShellConfig, mode: ModeIndex, t_char: float
) -> AlphaCoefficients:
    """phi_star = alpha11*p0 + alpha22*p1, checked against the assembled
    load functional on sample loads."""
    geom = config.geometry
    n = mode.n
    k = mode.axial_wavenumber(geom.length)
    shape = cos_kl_minus_one(mode.m) * sin_quarter_wave(n)
    if shape == 0.0:
        return AlphaCoefficients(0.0, 0.0)
    f0, f1 = _load_time_bracket(config.loading, t_char)
    base = -_LOAD_SIGN * 2.0 * geom.radius / (n * k) * shape
    alpha = AlphaCoefficients(alpha11=base * f0, alpha22=base * f1)
    # algebraic identity check on sample loads
    from dataclasses import replace

    from .action import load_linear_coefficient

    for p0, p1 in ((1.0, 0.0), (0.0, 1.0), (2.5, -1.5)):
        probe = replace(config, loading=replace(config.loading, p0=p0, p1=p1))
        expected = -0.5 * load_linear_coefficient(probe, mode, t_char)
        got = alpha.alpha11 * p0 + alpha.alpha22 * p1
        scale = max(abs(expected), abs(got), 1e-300)
        if abs(expected - got) > 1e-12 * scale:
            raise AssertionError(
                "alpha decomposition disagrees with the load functional"
            )
    return alpha


def _det3(a: np.ndarray) -> float:
    return (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )


def _matrix_scale(a: np.ndarray) -> float:
    return float(np.max(np.abs(a)))


def solve_modal(form: ActionQuadraticForm) -> ModalAmplitudes:
    """Cramer solution of the stationarity system."""
    mat = form.matrix()
    rhs = form.rhs()
    det = _det3(mat)
    scale = _matrix_scale(mat)
    if abs(det) < CONDITIONING_FLOOR * scale ** 3:
        raise SingularSystemError(
            f"principal determinant {det:.6g} below conditioning floor "
            "(homogeneous-problem resonance)"
        )
    sols = []
    for col in range(3):
        aug = mat.copy()
        aug[:, col] = rhs
        sols.append(_det3(aug) / det)
    amps = ModalAmplitudes(u0=sols[0], theta0=sols[1], w0=sols[2])
    residual = mat @ np.array(sols) - rhs
    rhs_norm = float(np.linalg.norm(rhs))
    if rhs_norm > 0.0 and float(np.linalg.norm(residual)) > 1e-10 * rhs_norm:
        raise SingularSystemError(
            "Cramer residual exceeds 1e-10 of the load norm; system is "
            "too ill-conditioned"
        )
    return amps


def reconstruct_displacements(
    amps: ModalAmplitudes,
    mode: ModeIndex,
    geom: ShellGeometry,
    omega: float,
    x: float,
    phi: float,
    t: float,
):
    """Physical displacements (u, theta, w) at a shell point and time."""
    if not (0.0 <= x <= geom.length):
        raise DomainError(f"x = {x!r} outside [0, {geom.length!r}]")
    k = mode.axial_wavenumber(geom.length)
    n = mode.n
    st = math.sin(omega * t)
    return (
        amps.u0 * math.cos(n * phi) * math.cos(k * x) * st,
        amps.theta0 * math.sin(n * phi) * math.sin(k * x) * st,
        amps.w0 * math.cos(n * phi) * math.sin(k * x) * st,
    )


def critical_force_for_mode(
    config: ShellConfig, mode: ModeIndex, t_char: float
) -> float:
    """Pulsating-load amplitude driving the prescribed deflection in one mode.

    Raises NonExcitableModeError when the load functional cannot couple to
    the mode, SingularSystemError on a vanishing determinant or deflection
    cofactor."""
    form = assemble_closed_form(config, mode, t_char)
    alpha = alpha_coefficients(config, mode, t_char)
    mat = form.matrix()
    scale = _matrix_scale(mat)
    # degenerate time window: f1 of the load bracket effectively zero
    f0, f1 = _load_time_bracket(config.loading, t_char)
    bracket_scale = max(abs(f0), 1.0 / config.loading.omega)
    if alpha.alpha22 == 0.0 or abs(f1) <= 1e-14 * bracket_scale:
        raise NonExcitableModeError(
            f"mode (n={mode.n}, m={mode.m}) does not couple to the "
            "pulsating load"
        )
    det = _det3(mat)
    cofactor = form.l11 * form.l22 - form.l12 * form.l12
    if abs(det) < CONDITIONING_FLOOR * scale ** 3:
        raise SingularSystemError(
            f"singular stationarity system at mode (n={mode.n}, m={mode.m})"
        )
    if abs(cofactor) < CONDITIONING_FLOOR * scale ** 2:
        raise SingularSystemError(
            f"vanishing deflection cofactor at mode (n={mode.n}, m={mode.m})"
        )
    w0t = config.loading.w0_target
    return det * w0t / (alpha.alpha22 * cofactor) - alpha.alpha11 * config.loading.p0 / alpha.alpha22


@dataclass(frozen=True)
class ModeResult:
    """Per-mode entry of the critical-force table."""

    n: int
    m: int
    p1: float | None
    excitable: bool
    status: str


@dataclass(frozen=True)
class CriticalForceResult:
    """Per-mode critical amplitudes, the argmin mode and the minimum."""

    rows: tuple
    n_star: int
    m_star: int
    p1b: float


def find_critical_force(
    config: ShellConfig,
    n_range: tuple[int, int] = (1, 12),
    m_values: tuple[int, ...] = (1, 3, 5, 7),
    t_char: float | None = None,
) -> CriticalForceResult:
    """Evaluate the mode rectangle and minimise the positive critical
    amplitudes; ties broken by smaller n, then smaller m."""
    from .damage import characteristic_time

    if t_char is None:
        t_char = characteristic_time(config.loading.omega, config.damage.cycles)
    n_min, n_max = n_range
    if n_min < 1 or n_max < n_min or not m_values:
        raise DomainError("empty or invalid mode search rectangle")
    rows = []
    best = None
    for n in range(n_min, n_max + 1):
        for m in sorted(set(int(m) for m in m_values)):
            mode = ModeIndex(n=n, m=m)
            try:
                p1 = critical_force_for_mode(config, mode, t_char)
            except NonExcitableModeError:
                rows.append(ModeResult(n, m, None, False, "non_excitable"))
                continue
            except SingularSystemError:
                rows.append(ModeResult(n, m, None, True, "singular"))
                continue
            rows.append(ModeResult(n, m, p1, True, "ok"))
            if p1 > 0.0 and (best is None or p1 < best[0]):
                best = (p1, n, m)
    if best is None:
        raise AllModesNonExcitableError(
            "no mode in the search rectangle yields a positive critical "
            "amplitude"
        )
    return CriticalForceResult(
        rows=tuple(rows), n_star=best[1], m_star=best[2], p1b=best[0]
    )
