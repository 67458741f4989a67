"""Adaptive quadrature and the nine stiffener profile integrals.

Each profile integral is available in closed form (exact for the linear
property laws) and through the adaptive integrator, which doubles as the
independent oracle for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureConvergenceError
from .model import InhomogeneityLaw, ModeIndex, RingStiffener, RodStiffener, ShellGeometry

_GAUSS_LO = np.polynomial.legendre.leggauss(7)
_GAUSS_HI = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for the adaptive integrator."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_depth: int = 40

    def __post_init__(self) -> None:
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise ValueError("tolerances must be > 0")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


def _panel_estimates(f, lo: np.ndarray, hi: np.ndarray):
    """Low- and high-order Gauss estimates on a batch of panels."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)

    def batch(nodes, weights):
        x = mid[:, None] + half[:, None] * nodes[None, :]
        y = np.asarray(f(x.ravel()), dtype=float)
        if y.ndim == 0:
            y = np.full(x.size, float(y))
        return (y.reshape(x.shape) * weights[None, :]).sum(axis=1) * half

    return batch(*_GAUSS_LO), batch(*_GAUSS_HI)


def integrate(f, a: float, b: float, spec: QuadratureSpec | None = None) -> float:
    """Adaptive integral of f over [a, b].

    Bisects panels whose nested Gauss (7/15 point) error estimate exceeds
    the tolerance budget, evaluating all active panels in one vectorised
    call per pass.  f must accept numpy arrays (scalar returns are
    broadcast).
    """
    spec = spec or DEFAULT_SPEC
    if a == b:
        return 0.0
    if b < a:
        return -integrate(f, b, a, spec)
    if not math.isfinite(a) or not math.isfinite(b):
        raise ValueError(f"invalid interval [{a!r}, {b!r}]")
    lo = np.array([float(a)])
    hi = np.array([float(b)])
    total_accepted = 0.0
    width_total = b - a
    for _ in range(spec.max_depth):
        coarse, fine = _panel_estimates(f, lo, hi)
        err = np.abs(fine - coarse)
        running = total_accepted + float(fine.sum())
        budget = max(spec.abs_tol, spec.rel_tol * abs(running))
        ok = err <= budget * (hi - lo) / width_total
        total_accepted += float(fine[ok].sum())
        lo, hi = lo[~ok], hi[~ok]
        if lo.size == 0:
            return total_accepted
        mid = 0.5 * (lo + hi)
        lo = np.concatenate([lo, mid])
        hi = np.concatenate([mid, hi])
        order = np.argsort(lo)
        lo, hi = lo[order], hi[order]
    raise QuadratureConvergenceError(
        f"no convergence after {spec.max_depth} subdivision passes "
        f"({lo.size} panels still open)"
    )


def _linear_half_span_integral(law: InhomogeneityLaw) -> float:
    """Exact value of integral of law(s)*cos^2(q s) (== the sin^2 variant)
    over the full span, valid whenever q*span is an integer multiple of pi:
    base * span * (2 + slope) / 4."""
    return law.base * law.span * (2.0 + law.slope) / 4.0


@dataclass(frozen=True)
class RodProfileIntegrals:
    """Axial profile integrals of one rod for a given mode.

    i1/i2: modulus against cos^2/sin^2(kx); i3: shear against sin^2;
    i4/i5: density against cos^2/sin^2.  i3_cos is the shear-against-cos^2
    companion needed by the torsion slot of the assembly.
    """

    i1: float
    i2: float
    i3: float
    i4: float
    i5: float
    i3_cos: float


@dataclass(frozen=True)
class RingProfileIntegrals:
    """Circumferential profile integrals of one ring for a given mode.

    i6: modulus against cos^2(n phi); i7/i8: density against cos^2/sin^2;
    i9: shear against sin^2.  i6_sin is the modulus-against-sin^2 companion
    used by the extension sum rule.
    """

    i6: float
    i7: float
    i8: float
    i9: float
    i6_sin: float


def rod_profile_integrals(
    rod: RodStiffener,
    geom: ShellGeometry,
    mode: ModeIndex,
    spec: QuadratureSpec | None = None,
    method: str = "closed",
) -> RodProfileIntegrals:
    """The five axial profile integrals of one rod.

    method="closed" uses the exact linear-law antiderivatives;
    method="quadrature" integrates the profiles adaptively (the oracle
    path, also valid for future non-linear laws)."""
    k = mode.axial_wavenumber(geom.length)
    length = geom.length
    if method == "closed":
        e_half = _linear_half_span_integral(rod.modulus)
        g_half = _linear_half_span_integral(rod.shear)
        r_half = _linear_half_span_integral(rod.density)
        return RodProfileIntegrals(
            i1=e_half, i2=e_half, i3=g_half, i4=r_half, i5=r_half, i3_cos=g_half
        )
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")

    def quad(law, trig):
        return integrate(lambda x: law.value(x) * trig(k * x) ** 2, 0.0, length, spec)

    return RodProfileIntegrals(
        i1=quad(rod.modulus, np.cos),
        i2=quad(rod.modulus, np.sin),
        i3=quad(rod.shear, np.sin),
        i4=quad(rod.density, np.cos),
        i5=quad(rod.density, np.sin),
        i3_cos=quad(rod.shear, np.cos),
    )


def ring_profile_integrals(
    ring: RingStiffener,
    mode: ModeIndex,
    spec: QuadratureSpec | None = None,
    method: str = "closed",
) -> RingProfileIntegrals:
    """The four circumferential profile integrals of one ring."""
    n = mode.n
    if method == "closed":
        e_half = _linear_half_span_integral(ring.modulus)
        g_half = _linear_half_span_integral(ring.shear)
        r_half = _linear_half_span_integral(ring.density)
        return RingProfileIntegrals(
            i6=e_half, i7=r_half, i8=r_half, i9=g_half, i6_sin=e_half
        )
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")

    two_pi = 2.0 * math.pi

    def quad(law, trig):
        return integrate(
            lambda p: law.value(p) * trig(n * p) ** 2, 0.0, two_pi, spec
        )

    return RingProfileIntegrals(
        i6=quad(ring.modulus, np.cos),
        i7=quad(ring.density, np.cos),
        i8=quad(ring.density, np.sin),
        i9=quad(ring.shear, np.sin),
        i6_sin=quad(ring.modulus, np.sin),
    )
